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

// Random generators shared by the unit and acceptance tests.

#ifndef SPECOGRAM_TESTS_GENERATORS_HPP_
#define SPECOGRAM_TESTS_GENERATORS_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "specogram/fragment.hpp"
#include "specogram/identifier.hpp"
#include "specogram/model.hpp"
#include "specogram/vocabulary.hpp"

namespace specogram::testgen {

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

template <class T>
const T& choose(Rng& rng, const std::vector<T>& items) {
  return items[pick(rng, items.size())];
}

// Words of the .spec and model grammars; good stress for name positions.
inline const std::vector<std::string>& keyword_names() {
  static const std::vector<std::string> words = {
      "requirement", "states", "that",       "execution", "of",        "does",
      "change", "increments", "decrements", "for",      "type",
      "if",          "in",     "the",        "beginning", "specification", "class",
      "command",     "query",  "end",        "old",       "modify"};
  return words;
}

// A well-formed identifier that is usable inside fragments.
inline std::string identifier(Rng& rng, bool allow_keywords = true) {
  if (allow_keywords && coin(rng, 0.1)) return choose(rng, keyword_names());
  static const std::string first = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  static const std::string rest = first + "0123456789_";
  for (;;) {
    std::string s(1, first[pick(rng, first.size())]);
    std::size_t n = pick(rng, 7);
    for (std::size_t i = 0; i < n; ++i) s += rest[pick(rng, rest.size())];
    if (!is_reserved_word(s)) return s;
  }
}

inline std::string type_name(Rng& rng) {
  static const std::vector<std::string> types = {"CLOCK", "ACCOUNT", "INTEGER", "COUNTER",
                                                 "SERVER", "T1", "T_2"};
  if (coin(rng, 0.7)) return choose(rng, types);
  return identifier(rng);
}

inline Identifier id(const std::string& s) { return *validate_identifier(s); }
inline TypeName tn(const std::string& s) { return *validate_type_name(s); }

inline QueryPath query(Rng& rng, const std::vector<std::string>& roots) {
  QueryPath q{id(choose(rng, roots)), {}};
  std::size_t n = 1 + pick(rng, coin(rng, 0.8) ? 1 : 3);
  for (std::size_t i = 0; i < n; ++i) q.path.push_back(id(identifier(rng, false)));
  return q;
}

inline QualifiedCall call(Rng& rng, const std::vector<std::string>& roots) {
  QueryPath q = query(rng, roots);
  return QualifiedCall{q.root, q.path};
}

inline Arith arith(Rng& rng, int depth, const std::vector<std::string>& roots) {
  std::size_t choice = depth <= 0 ? pick(rng, 2) : pick(rng, 3);
  switch (choice) {
    case 0:
      if (!roots.empty()) return Arith::query(query(rng, roots));
      [[fallthrough]];
    case 1:
      return Arith::literal(coin(rng, 0.9) ? static_cast<std::int64_t>(pick(rng, 100))
                                           : std::numeric_limits<std::int64_t>::max());
    default:
      return Arith::binary(coin(rng) ? ArithOp::kAdd : ArithOp::kSub,
                           arith(rng, depth - 1, roots), arith(rng, depth - 1, roots));
  }
}

inline RelOp relop(Rng& rng) { return static_cast<RelOp>(pick(rng, 6)); }

inline BoolExpr boolean(Rng& rng, int depth, const std::vector<std::string>& roots) {
  std::size_t choice = depth <= 0 ? pick(rng, 2) : pick(rng, 5);
  switch (choice) {
    case 0:
      return BoolExpr::comparison(arith(rng, depth - 1, roots), relop(rng),
                                  arith(rng, depth - 1, roots));
    case 1:
      if (coin(rng, 0.8)) {
        return BoolExpr::comparison(arith(rng, 0, roots), relop(rng), arith(rng, 0, roots));
      }
      return BoolExpr::constant(coin(rng));
    case 2:
      return BoolExpr::conjunction(boolean(rng, depth - 1, roots), boolean(rng, depth - 1, roots));
    case 3:
      return BoolExpr::disjunction(boolean(rng, depth - 1, roots), boolean(rng, depth - 1, roots));
    default:
      return BoolExpr::negation(boolean(rng, depth - 1, roots));
  }
}

// The inputs of one builder chain, as text.
struct Chain {
  std::string label;
  std::string action;
  EffectKind effect = EffectKind::kDoesNotChange;
  std::string target;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::optional<std::string> guard;
};

// A chain whose every root is bound.
inline Chain chain(Rng& rng, const std::string& label) {
  Chain c;
  c.label = label;
  std::set<std::string> vars;
  std::size_t n = 1 + (coin(rng, 0.75) ? 0 : pick(rng, 3));
  while (vars.size() < n) vars.insert(identifier(rng));
  std::vector<std::string> roots(vars.begin(), vars.end());
  std::shuffle(roots.begin(), roots.end(), rng);
  for (const std::string& v : roots) c.bindings.emplace_back(v, type_name(rng));
  c.action = render(call(rng, roots));
  c.effect = static_cast<EffectKind>(pick(rng, 3));
  c.target = render(query(rng, roots));
  if (coin(rng, 0.8)) c.guard = render(boolean(rng, 1 + static_cast<int>(pick(rng, 3)), roots));
  return c;
}

// Unique labels for a whole specification.
inline std::vector<Chain> chains(Rng& rng, std::size_t count) {
  std::set<std::string> labels;
  while (labels.size() < count) labels.insert(identifier(rng));
  std::vector<std::string> ordered(labels.begin(), labels.end());
  std::shuffle(ordered.begin(), ordered.end(), rng);
  std::vector<Chain> out;
  for (const std::string& l : ordered) out.push_back(chain(rng, l));
  return out;
}

// Drives the vocabulary through every phrase of `c`.
inline void run_chain(Specogram& doc, const Chain& c) {
  auto effect_stage = [&]() {
    auto action = doc.requirement(c.label).states_that_execution_of(c.action);
    switch (c.effect) {
      case EffectKind::kIncrements: return std::move(action).increments(c.target);
      case EffectKind::kDecrements: return std::move(action).decrements(c.target);
      case EffectKind::kDoesNotChange: break;
    }
    return std::move(action).does_not_change(c.target);
  }();
  auto typed = std::move(effect_stage)
                   .for_(c.bindings.front().first)
                   .of_type(c.bindings.front().second);
  for (std::size_t i = 1; i < c.bindings.size(); ++i) {
    typed = std::move(typed).for_(c.bindings[i].first).of_type(c.bindings[i].second);
  }
  if (c.guard) {
    std::move(typed).if_in_the_beginning(*c.guard).period();
  } else {
    std::move(typed).period();
  }
}

inline Specification build(const std::string& name, const std::vector<Chain>& cs) {
  auto doc = Specogram::further_referred_to_as(name);
  for (const Chain& c : cs) run_chain(doc, c);
  return doc.specification();
}

inline Specification random_spec(Rng& rng, std::size_t max_requirements = 6) {
  return build(identifier(rng), chains(rng, pick(rng, max_requirements + 1)));
}

inline std::string messy_gap(Rng& rng) {
  static const std::vector<std::string> gaps = {" ", "  ", "\n", "\n    ", "\t", " -- note\n"};
  return choose(rng, gaps);
}

// One requirement in .spec syntax with irregular layout and comments.
inline std::string messy_block(Rng& rng, const Chain& c) {
  auto gap = [&] { return messy_gap(rng); };
  std::string out = "requirement" + gap() + c.label + gap() + "states that" + gap() +
                    "execution of" + gap() + "\"" + c.action + "\"" + gap();
  switch (c.effect) {
    case EffectKind::kDoesNotChange: out += "does not" + gap() + "change"; break;
    case EffectKind::kIncrements: out += "increments"; break;
    case EffectKind::kDecrements: out += "decrements"; break;
  }
  out += gap() + "\"" + c.target + "\"";
  for (const auto& [v, t] : c.bindings) {
    out += gap() + "for" + gap() + v + gap() + "of type" + gap() + t;
  }
  if (c.guard) out += gap() + "if in" + gap() + "the beginning" + gap() + "\"" + *c.guard + "\"";
  out += coin(rng) ? "." : "\n.";
  return out + "\n";
}

// Writes `cs` as a .spec document with irregular layout and comments.
inline std::string messy_text(Rng& rng, const std::string& name, const std::vector<Chain>& cs) {
  std::string out = "-- generated\nspecification" + messy_gap(rng) + name + "\n";
  for (const Chain& c : cs) out += "\n" + messy_block(rng, c);
  return out;
}

}  // namespace specogram::testgen

#endif  // SPECOGRAM_TESTS_GENERATORS_HPP_
