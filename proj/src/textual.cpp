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

#include "specogram/textual.hpp"

#include <initializer_list>

#include "source_lexer.hpp"

namespace specogram {

using internal::SourceText;
using internal::SrcTok;
using internal::SrcToken;

namespace {

struct SyntaxError {
  Diagnostic diagnostic;
};

std::string describe(const SrcToken& t) {
  switch (t.kind) {
    case SrcTok::kEnd: return "end of file";
    case SrcTok::kString: return "string \"" + std::string(t.text) + "\"";
    default: return "'" + std::string(t.text) + "'";
  }
}

class SpecogramReader {
 public:
  SpecogramReader(std::string_view text, std::string_view file)
      : source_(text, file), tokens_(source_.tokenize()) {}

  SpecogramParse read() {
    SpecogramParse out;
    std::optional<Specification> spec = read_header();
    Specification working = spec ? *spec : Specification(*Identifier::make("unnamed"));
    while (!at(SrcTok::kEnd)) {
      std::size_t start = pos_;
      try {
        std::optional<Requirement> req = read_requirement();
        if (!req) continue;
        auto next = add_requirement(working, *std::move(req));
        if (next) {
          working = *std::move(next);
        } else {
          report(next.diagnostics());
        }
      } catch (const SyntaxError& e) {
        diagnostics_.push_back(e.diagnostic);
        recover(start);
      }
    }
    if (spec) out.specification = std::move(working);
    out.diagnostics = std::move(diagnostics_);
    return out;
  }

 private:
  const SrcToken& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool at(SrcTok kind) const { return peek().kind == kind; }
  bool at_word(std::string_view w) const { return at(SrcTok::kWord) && peek().text == w; }
  const SrcToken& advance() {
    const SrcToken& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(std::string code, std::string message, const SrcToken& at) const {
    throw SyntaxError{
        Diagnostic::error(std::move(code), std::move(message), span_of(at))};
  }

  SourceSpan span_of(const SrcToken& t) const { return source_.span(t.offset, t.length); }

  // Skips past the next `.`, always making progress.
  void recover(std::size_t start) {
    if (pos_ == start) advance();
    while (!at(SrcTok::kEnd) && !at(SrcTok::kDot)) advance();
    if (at(SrcTok::kDot)) advance();
  }

  void report(const Diagnostics& ds) {
    diagnostics_.insert(diagnostics_.end(), ds.begin(), ds.end());
  }

  void expect_words(std::initializer_list<std::string_view> words, std::string_view phrase) {
    for (std::string_view w : words) {
      if (!at_word(w)) {
        fail("UnexpectedToken",
             "expected '" + std::string(phrase) + "', found " + describe(peek()), peek());
      }
      advance();
    }
  }

  using Phrase = std::initializer_list<std::string_view>;

  bool phrase_at(std::size_t pos, Phrase phrase) const {
    for (std::string_view w : phrase) {
      if (pos >= tokens_.size() || tokens_[pos].kind != SrcTok::kWord || tokens_[pos].text != w) {
        return false;
      }
      ++pos;
    }
    return true;
  }

  // A run of words: the first word unconditionally, then up to the next
  // occurrence of one of the `stops` phrases (or any non-word). The run is
  // reported as one source slice so that "requirement 1" is judged as a
  // whole, and a name that happens to equal a keyword still reads back.
  struct Slice {
    std::size_t offset;
    std::size_t length;
    const SrcToken* first;
  };

  Slice take_words(std::initializer_list<Phrase> stops, std::string_view what) {
    if (!at(SrcTok::kWord)) {
      fail("UnexpectedToken", "expected " + std::string(what) + ", found " + describe(peek()),
           peek());
    }
    const SrcToken& first = peek();
    std::size_t end = first.offset + first.length;
    advance();
    while (at(SrcTok::kWord)) {
      bool stop = false;
      for (Phrase s : stops) stop = stop || phrase_at(pos_, s);
      if (stop) break;
      end = peek().offset + peek().length;
      advance();
    }
    return Slice{first.offset, end - first.offset, &first};
  }

  template <class T>
  T name(Result<T> result, const Slice& slice) {
    if (result) return *std::move(result);
    Diagnostic d = result.error();
    d.span = source_.span(slice.offset + d.span.offset, std::max<std::size_t>(d.span.length, 1));
    throw SyntaxError{std::move(d)};
  }

  std::optional<Specification> read_header() {
    try {
      expect_words({"specification"}, "specification <name>");
      Slice slice = take_words({{"requirement"}}, "the specification name");
      std::string_view text = source_.text().substr(slice.offset, slice.length);
      return Specification(name(validate_identifier(text), slice));
    } catch (const SyntaxError& e) {
      diagnostics_.push_back(e.diagnostic);
      while (!at(SrcTok::kEnd) && !at_word("requirement")) advance();
      return std::nullopt;
    }
  }

  // A quoted fragment; parse diagnostics are mapped into the file.
  template <class T>
  std::pair<T, SourceSpan> fragment(Result<T> (*parse)(std::string_view), std::string_view what) {
    const SrcToken& t = peek();
    if (t.kind != SrcTok::kString) {
      fail("UnexpectedToken", "expected " + std::string(what) + " in double quotes, found " +
                                  describe(t), t);
    }
    if (t.unterminated) fail("UnterminatedString", "string is not closed on this line", t);
    advance();
    Result<T> parsed = parse(t.text);
    if (!parsed) {
      Diagnostic d = parsed.error();
      d.span = source_.span(t.offset + 1 + d.span.offset, d.span.length);
      throw SyntaxError{std::move(d)};
    }
    return {*std::move(parsed), source_.span(t.offset + 1, t.text.size())};
  }

  std::optional<Requirement> read_requirement() {
    expect_words({"requirement"}, "requirement");
    RequirementOrigin origin;

    Slice label_slice = take_words({{"states", "that", "execution", "of"}}, "a requirement label");
    Identifier label = name(
        validate_identifier(source_.text().substr(label_slice.offset, label_slice.length)),
        label_slice);
    origin.label = source_.span(label_slice.offset, label_slice.length);

    expect_words({"states", "that", "execution", "of"}, "states that execution of");
    auto [action, action_span] = fragment<QualifiedCall>(&parse_call, "a call");
    origin.action = action_span;

    EffectKind kind;
    if (at_word("does")) {
      expect_words({"does", "not", "change"}, "does not change");
      kind = EffectKind::kDoesNotChange;
    } else if (at_word("increments")) {
      advance();
      kind = EffectKind::kIncrements;
    } else if (at_word("decrements")) {
      advance();
      kind = EffectKind::kDecrements;
    } else {
      fail("UnexpectedToken",
           "expected 'does not change', 'increments' or 'decrements', found " +
               describe(peek()),
           peek());
    }
    auto [target, target_span] = fragment<QueryPath>(&parse_query, "a query");
    origin.target = target_span;

    std::vector<VariableBinding> bindings;
    do {
      expect_words({"for"}, "for <variable> of type <TYPE>");
      Slice var_slice = take_words({{"of", "type"}}, "a variable name");
      Identifier var = name(
          validate_identifier(source_.text().substr(var_slice.offset, var_slice.length)),
          var_slice);
      expect_words({"of", "type"}, "of type");
      Slice type_slice = take_words({{"for"}, {"if", "in", "the", "beginning"}}, "a type name");
      TypeName type = name(
          validate_type_name(source_.text().substr(type_slice.offset, type_slice.length)),
          type_slice);
      for (const VariableBinding& b : bindings) {
        if (b.variable == var) {
          throw SyntaxError{Diagnostic::error(
              "DuplicateBinding", "variable " + var.str() + " is bound twice in " + label.str(),
              source_.span(var_slice.offset, var_slice.length))};
        }
      }
      bindings.push_back(VariableBinding{std::move(var), std::move(type)});
      origin.bindings.push_back(
          source_.span(var_slice.offset, type_slice.offset + type_slice.length - var_slice.offset));
    } while (at_word("for"));

    std::optional<BoolExpr> guard;
    if (at_word("if")) {
      expect_words({"if", "in", "the", "beginning"}, "if in the beginning");
      auto [condition, guard_span] = fragment<BoolExpr>(&parse_bool_expr, "a condition");
      guard = std::move(condition);
      origin.guard = guard_span;
    }

    if (!at(SrcTok::kDot)) {
      fail("UnexpectedToken",
           "expected '.' to end requirement " + label.str() + ", found " + describe(peek()),
           peek());
    }
    advance();
    return Requirement{std::move(label), std::move(action), Effect{kind, std::move(target)},
                       std::move(bindings), std::move(guard), std::move(origin)};
  }

  SourceText source_;
  std::vector<SrcToken> tokens_;
  std::size_t pos_ = 0;
  Diagnostics diagnostics_;
};

}  // namespace

SpecogramParse parse_specogram(std::string_view text, std::string_view file_name) {
  return SpecogramReader(text, file_name).read();
}

std::string format_specogram(const Specification& spec) {
  std::string out = "specification " + spec.name().str() + "\n";
  for (const Requirement& r : spec.requirements()) {
    out += "\nrequirement " + r.label.str() + " states that execution of \"" +
           render(r.action) + "\"\n";
    out += "  " + std::string(phrase(r.effect.kind)) + " \"" + render(r.effect.target) + "\"";
    for (const VariableBinding& b : r.bindings) {
      out += "\n  for " + b.variable.str() + " of type " + b.declared_type.str();
    }
    if (r.guard) out += "\n  if in the beginning \"" + render(*r.guard) + "\"";
    out += ".\n";
  }
  return out;
}

}  // namespace specogram
