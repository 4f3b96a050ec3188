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

// Domain fragments: the quoted snippets inside a requirement such as
// "clock.tick", "clock.hour" and "clock.minute < 59".
//
// Expression grammar, loosest to tightest:
//
//   or-expr   := and-expr { "or" and-expr }
//   and-expr  := rel-expr { "and" rel-expr }
//   rel-expr  := add-expr [ relop add-expr ]      relop: < <= > >= = /=
//   add-expr  := unary { ("+" | "-") unary }
//   unary     := "not" unary | primary
//   primary   := query | integer | "True" | "False" | "(" or-expr ")"
//
// Operands are typed: relops and +/- take integer operands, and/or/not take
// conditions. `not` binds tighter than a comparison, so negating one needs
// parentheses: "not ( a.x < 1 )". The words and/or/not/True/False are
// reserved and cannot name a variable or feature inside a fragment.

#ifndef SPECOGRAM_FRAGMENT_HPP_
#define SPECOGRAM_FRAGMENT_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "specogram/diagnostic.hpp"
#include "specogram/identifier.hpp"

namespace specogram {

// `target.call`: a command invocation. Argument lists are not part of the
// grammar.
struct QualifiedCall {
  Identifier root;
  std::vector<Identifier> path;  // at least one feature

  bool operator==(const QualifiedCall&) const = default;
};

// Same shape as QualifiedCall, but names a value-yielding query.
struct QueryPath {
  Identifier root;
  std::vector<Identifier> path;

  bool operator==(const QueryPath&) const = default;
};

enum class RelOp { kLess, kLessEqual, kGreater, kGreaterEqual, kEqual, kNotEqual };
enum class ArithOp { kAdd, kSub };

std::string_view to_string(RelOp op);
std::string_view to_string(ArithOp op);

struct ArithNode;
struct BoolNode;

// Integer-valued expression. Immutable; copies share structure.
class Arith {
 public:
  static Arith query(QueryPath path);
  // Literals are non-negative; a negative constant is written as `0 - n`.
  static Arith literal(std::int64_t value);
  static Arith binary(ArithOp op, Arith lhs, Arith rhs);

  const ArithNode& node() const { return *node_; }

  bool operator==(const Arith& other) const;

 private:
  explicit Arith(std::shared_ptr<const ArithNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ArithNode> node_;
};

// Condition over queries. Immutable; copies share structure.
class BoolExpr {
 public:
  static BoolExpr comparison(Arith lhs, RelOp op, Arith rhs);
  static BoolExpr conjunction(BoolExpr lhs, BoolExpr rhs);
  static BoolExpr disjunction(BoolExpr lhs, BoolExpr rhs);
  static BoolExpr negation(BoolExpr operand);
  static BoolExpr constant(bool value);

  const BoolNode& node() const { return *node_; }

  bool is_true() const;

  bool operator==(const BoolExpr& other) const;

 private:
  explicit BoolExpr(std::shared_ptr<const BoolNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const BoolNode> node_;
};

struct QueryRef {
  QueryPath path;
};
struct IntLiteral {
  std::int64_t value;
};
struct ArithBinary {
  ArithOp op;
  Arith lhs;
  Arith rhs;
};
struct ArithNode {
  std::variant<QueryRef, IntLiteral, ArithBinary> v;
};

struct Comparison {
  Arith lhs;
  RelOp op;
  Arith rhs;
};
struct Conjunction {
  BoolExpr lhs;
  BoolExpr rhs;
};
struct Disjunction {
  BoolExpr lhs;
  BoolExpr rhs;
};
struct Negation {
  BoolExpr operand;
};
struct BoolConstant {
  bool value;
};
struct BoolNode {
  std::variant<Comparison, Conjunction, Disjunction, Negation, BoolConstant> v;
};

// Parsers. Diagnostic spans are byte offsets into `text`.
//
// parse_call / parse_query codes: EmptyInput, MissingDot, IllegalIdentifier,
// TrailingGarbage.
// parse_bool_expr adds: UnbalancedParenthesis, UnknownOperator,
// DanglingOperand, IntegerOverflow, TypeMismatch, NestingTooDeep.
Result<QualifiedCall> parse_call(std::string_view text);
Result<QueryPath> parse_query(std::string_view text);
Result<BoolExpr> parse_bool_expr(std::string_view text);

inline constexpr std::size_t kMaxNesting = 256;

bool is_reserved_word(std::string_view word);

std::set<Identifier> free_roots(const QualifiedCall& call);
std::set<Identifier> free_roots(const QueryPath& query);
std::set<Identifier> free_roots(const BoolExpr& expr);

// Every query reference in left-to-right order.
std::vector<QueryPath> query_refs(const BoolExpr& expr);

struct RenderOptions {
  // When set, query references rooted at this variable drop the `root.`
  // prefix ("clock.minute" -> "minute").
  std::optional<Identifier> strip_root;
};

// Tokens separated by single spaces, dots unspaced, parentheses only where
// precedence or associativity demands them.
std::string render(const QualifiedCall& call);
std::string render(const QueryPath& query, const RenderOptions& options = {});
std::string render(const Arith& expr, const RenderOptions& options = {});
std::string render(const BoolExpr& expr, const RenderOptions& options = {});

}  // namespace specogram

#endif  // SPECOGRAM_FRAGMENT_HPP_
