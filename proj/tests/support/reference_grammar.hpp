// Copyright 2026 The Specogram Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Brute-force recognizer for the condition grammar, written directly from
// the typed context-free grammar and independent of the production parser:
//
//   O -> O or A | A                 (condition)
//   A -> A and N | N
//   N -> C | M
//   M -> not M | True | False | ( O )
//   C -> E R E                      R: < <= > >= = /=
//   E -> E + U | E - U | U          (integer)
//   U -> Q | I | ( E )              Q: root.feature..., I: digits
//
// recognize() decides membership by trying every split of every span
// (memoized), so it is exponential-free but makes no use of precedence
// climbing.

#ifndef SPECOGRAM_TESTS_REFERENCE_GRAMMAR_HPP_
#define SPECOGRAM_TESTS_REFERENCE_GRAMMAR_HPP_

#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace specogram::reference {

enum class Sym { kO, kA, kN, kM, kC, kE, kU };

class Recognizer {
 public:
  explicit Recognizer(std::vector<std::string> tokens) : t_(std::move(tokens)) {}

  bool accepts() { return !t_.empty() && derives(Sym::kO, 0, t_.size()); }

 private:
  static bool is_query(const std::string& s) {
    auto dot = s.find('.');
    return dot != std::string::npos && dot > 0 && dot + 1 < s.size();
  }
  static bool is_int(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  }
  static bool is_rel(const std::string& s) {
    return s == "<" || s == "<=" || s == ">" || s == ">=" || s == "=" || s == "/=";
  }

  bool tok(std::size_t i, const char* s) const { return t_[i] == s; }

  // Sym derives t_[i, j).
  bool derives(Sym s, std::size_t i, std::size_t j) {
    if (i >= j) return false;
    auto key = std::make_tuple(s, i, j);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = compute(s, i, j);
    memo_[key] = r;
    return r;
  }

  bool binary(Sym lhs, const char* op, Sym rhs, std::size_t i, std::size_t j) {
    for (std::size_t k = i + 1; k + 1 < j; ++k) {
      if (tok(k, op) && derives(lhs, i, k) && derives(rhs, k + 1, j)) return true;
    }
    return false;
  }

  bool parenthesized(Sym inner, std::size_t i, std::size_t j) {
    return j - i >= 3 && tok(i, "(") && tok(j - 1, ")") && derives(inner, i + 1, j - 1);
  }

  bool compute(Sym s, std::size_t i, std::size_t j) {
    switch (s) {
      case Sym::kO: return binary(Sym::kO, "or", Sym::kA, i, j) || derives(Sym::kA, i, j);
      case Sym::kA: return binary(Sym::kA, "and", Sym::kN, i, j) || derives(Sym::kN, i, j);
      case Sym::kN: return derives(Sym::kC, i, j) || derives(Sym::kM, i, j);
      case Sym::kM:
        if (j - i == 1) return tok(i, "True") || tok(i, "False");
        return (tok(i, "not") && derives(Sym::kM, i + 1, j)) || parenthesized(Sym::kO, i, j);
      case Sym::kC:
        for (std::size_t k = i + 1; k + 1 < j; ++k) {
          if (is_rel(t_[k]) && derives(Sym::kE, i, k) && derives(Sym::kE, k + 1, j)) return true;
        }
        return false;
      case Sym::kE:
        return binary(Sym::kE, "+", Sym::kU, i, j) || binary(Sym::kE, "-", Sym::kU, i, j) ||
               derives(Sym::kU, i, j);
      case Sym::kU:
        if (j - i == 1) return is_query(t_[i]) || is_int(t_[i]);
        return parenthesized(Sym::kE, i, j);
    }
    return false;
  }

  std::vector<std::string> t_;
  std::map<std::tuple<Sym, std::size_t, std::size_t>, bool> memo_;
};

inline bool accepts(std::vector<std::string> tokens) {
  return Recognizer(std::move(tokens)).accepts();
}

// The exhaustive corpus: every sequence of 1..max_tokens tokens drawn from
// `alphabet`, joined by single spaces. Calls visit(tokens, text).
template <class Visit>
std::size_t enumerate(const std::vector<std::string>& alphabet, std::size_t max_tokens,
                      Visit&& visit) {
  std::size_t count = 0;
  std::vector<std::string> seq;
  auto rec = [&](auto&& self, std::size_t remaining) -> void {
    if (!seq.empty()) {
      std::string text;
      for (const std::string& s : seq) {
        if (!text.empty()) text += ' ';
        text += s;
      }
      visit(seq, text);
      ++count;
    }
    if (remaining == 0) return;
    for (const std::string& a : alphabet) {
      seq.push_back(a);
      self(self, remaining - 1);
      seq.pop_back();
    }
  };
  rec(rec, max_tokens);
  return count;
}

inline const std::vector<std::string>& small_alphabet() {
  static const std::vector<std::string> a = {"a.x", "0",  "1",   "<", "=",
                                             "and", "or", "not", "(", ")"};
  return a;
}

}  // namespace specogram::reference

#endif  // SPECOGRAM_TESTS_REFERENCE_GRAMMAR_HPP_
