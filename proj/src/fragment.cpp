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

#include "specogram/fragment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace specogram {

std::string_view to_string(RelOp op) {
  switch (op) {
    case RelOp::kLess: return "<";
    case RelOp::kLessEqual: return "<=";
    case RelOp::kGreater: return ">";
    case RelOp::kGreaterEqual: return ">=";
    case RelOp::kEqual: return "=";
    case RelOp::kNotEqual: return "/=";
  }
  return "?";
}

std::string_view to_string(ArithOp op) { return op == ArithOp::kAdd ? "+" : "-"; }

// ---------------------------------------------------------------------------
// AST construction and equality

Arith Arith::query(QueryPath path) {
  return Arith(std::make_shared<const ArithNode>(ArithNode{QueryRef{std::move(path)}}));
}

Arith Arith::literal(std::int64_t value) {
  if (value < 0) throw std::invalid_argument("integer literals are non-negative");
  return Arith(std::make_shared<const ArithNode>(ArithNode{IntLiteral{value}}));
}

Arith Arith::binary(ArithOp op, Arith lhs, Arith rhs) {
  return Arith(std::make_shared<const ArithNode>(
      ArithNode{ArithBinary{op, std::move(lhs), std::move(rhs)}}));
}

bool Arith::operator==(const Arith& other) const {
  if (node_ == other.node_) return true;
  const auto& a = node_->v;
  const auto& b = other.node_->v;
  if (a.index() != b.index()) return false;
  if (const auto* q = std::get_if<QueryRef>(&a)) return q->path == std::get<QueryRef>(b).path;
  if (const auto* l = std::get_if<IntLiteral>(&a)) return l->value == std::get<IntLiteral>(b).value;
  const auto& x = std::get<ArithBinary>(a);
  const auto& y = std::get<ArithBinary>(b);
  return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
}

BoolExpr BoolExpr::comparison(Arith lhs, RelOp op, Arith rhs) {
  return BoolExpr(std::make_shared<const BoolNode>(
      BoolNode{Comparison{std::move(lhs), op, std::move(rhs)}}));
}

BoolExpr BoolExpr::conjunction(BoolExpr lhs, BoolExpr rhs) {
  return BoolExpr(std::make_shared<const BoolNode>(
      BoolNode{Conjunction{std::move(lhs), std::move(rhs)}}));
}

BoolExpr BoolExpr::disjunction(BoolExpr lhs, BoolExpr rhs) {
  return BoolExpr(std::make_shared<const BoolNode>(
      BoolNode{Disjunction{std::move(lhs), std::move(rhs)}}));
}

BoolExpr BoolExpr::negation(BoolExpr operand) {
  return BoolExpr(std::make_shared<const BoolNode>(BoolNode{Negation{std::move(operand)}}));
}

BoolExpr BoolExpr::constant(bool value) {
  return BoolExpr(std::make_shared<const BoolNode>(BoolNode{BoolConstant{value}}));
}

bool BoolExpr::is_true() const {
  const auto* c = std::get_if<BoolConstant>(&node_->v);
  return c != nullptr && c->value;
}

bool BoolExpr::operator==(const BoolExpr& other) const {
  if (node_ == other.node_) return true;
  const auto& a = node_->v;
  const auto& b = other.node_->v;
  if (a.index() != b.index()) return false;
  if (const auto* c = std::get_if<Comparison>(&a)) {
    const auto& d = std::get<Comparison>(b);
    return c->op == d.op && c->lhs == d.lhs && c->rhs == d.rhs;
  }
  if (const auto* c = std::get_if<Conjunction>(&a)) {
    const auto& d = std::get<Conjunction>(b);
    return c->lhs == d.lhs && c->rhs == d.rhs;
  }
  if (const auto* c = std::get_if<Disjunction>(&a)) {
    const auto& d = std::get<Disjunction>(b);
    return c->lhs == d.lhs && c->rhs == d.rhs;
  }
  if (const auto* c = std::get_if<Negation>(&a)) return c->operand == std::get<Negation>(b).operand;
  return std::get<BoolConstant>(a).value == std::get<BoolConstant>(b).value;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  kWord,
  kDot,
  kLParen,
  kRParen,
  kRel,
  kPlus,
  kMinus,
  kUnknown,
  kEnd,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::size_t length;
  std::string_view text;
  RelOp rel = RelOp::kLess;
};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len, RelOp rel = RelOp::kLess) {
    out.push_back(Token{kind, i, len, text.substr(i, len), rel});
    i += len;
  };
  while (i < text.size()) {
    char c = text[i];
    if (is_space(c)) {
      ++i;
      continue;
    }
    if (is_name_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_name_char(text[j])) ++j;
      push(Tok::kWord, j - i);
      continue;
    }
    char next = i + 1 < text.size() ? text[i + 1] : '\0';
    switch (c) {
      case '.': push(Tok::kDot, 1); break;
      case '(': push(Tok::kLParen, 1); break;
      case ')': push(Tok::kRParen, 1); break;
      case '+': push(Tok::kPlus, 1); break;
      case '-': push(Tok::kMinus, 1); break;
      case '<':
        if (next == '=') push(Tok::kRel, 2, RelOp::kLessEqual);
        else if (next == '>') push(Tok::kUnknown, 2);
        else push(Tok::kRel, 1, RelOp::kLess);
        break;
      case '>':
        if (next == '=') push(Tok::kRel, 2, RelOp::kGreaterEqual);
        else push(Tok::kRel, 1, RelOp::kGreater);
        break;
      case '=':
        if (next == '=' || next == '>') push(Tok::kUnknown, 2);
        else push(Tok::kRel, 1, RelOp::kEqual);
        break;
      case '/':
        if (next == '=') push(Tok::kRel, 2, RelOp::kNotEqual);
        else push(Tok::kUnknown, 1);
        break;
      case '!':
      case '&':
      case '|':
        push(Tok::kUnknown, (next == '=' || next == c) ? 2 : 1);
        break;
      default: push(Tok::kUnknown, 1); break;
    }
  }
  out.push_back(Token{Tok::kEnd, text.size(), 0, {}});
  return out;
}

struct ParseFailure {
  Diagnostic diagnostic;
};

[[noreturn]] void fail(std::string code, std::string message, std::size_t offset,
                       std::size_t length) {
  throw ParseFailure{Diagnostic::error(std::move(code), std::move(message),
                                       SourceSpan::at_offset(offset, length))};
}

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

std::string describe(const Token& t) {
  return t.kind == Tok::kEnd ? std::string("end of input") : quote(t.text);
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text), tokens_(lex(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool at(Tok kind) const { return peek().kind == kind; }
  // The token consumed last, if any.
  const Token* previous() const { return pos_ == 0 ? nullptr : &tokens_[pos_ - 1]; }
  std::size_t consumed_end() const {
    return pos_ == 0 ? 0 : tokens_[pos_ - 1].offset + tokens_[pos_ - 1].length;
  }
  bool at_word(std::string_view w) const { return at(Tok::kWord) && peek().text == w; }
  std::string_view text() const { return text_; }

 private:
  std::string_view text_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Expects a feature/variable name at the cursor.
Identifier take_name(Cursor& cur, std::string_view what) {
  const Token& t = cur.peek();
  if (t.kind != Tok::kWord) {
    fail("IllegalIdentifier", "expected " + std::string(what) + ", found " + describe(t),
         t.offset, t.length);
  }
  if (is_reserved_word(t.text)) {
    fail("IllegalIdentifier", quote(t.text) + " is a reserved word", t.offset, t.length);
  }
  auto id = validate_identifier(t.text);
  if (!id) {
    fail("IllegalIdentifier", id.error().message, t.offset + id.error().span.offset,
         t.length - id.error().span.offset);
  }
  cur.take();
  return *std::move(id);
}

// root { "." name }+ ; stops before the first token that is not a dot.
std::pair<Identifier, std::vector<Identifier>> take_path(Cursor& cur) {
  Identifier root = take_name(cur, "an identifier");
  std::vector<Identifier> path;
  while (cur.at(Tok::kDot)) {
    cur.take();
    path.push_back(take_name(cur, "a feature name after '.'"));
  }
  return {std::move(root), std::move(path)};
}

template <class Path>
Result<Path> parse_path(std::string_view text, std::string_view what) {
  try {
    Cursor cur(text);
    if (cur.at(Tok::kEnd)) {
      fail("EmptyInput", "expected " + std::string(what) + " of the form target.feature",
           0, text.size());
    }
    const std::size_t start = cur.peek().offset;
    auto [root, path] = take_path(cur);
    if (path.empty() && cur.at(Tok::kEnd)) {
      fail("MissingDot",
           quote(root.str()) + " is a bare identifier; " + std::string(what) +
               " needs the form " + root.str() + ".feature",
           start, root.str().size());
    }
    if (!cur.at(Tok::kEnd)) {
      const Token& t = cur.peek();
      fail("TrailingGarbage", "unexpected " + describe(t) + " after " + std::string(what),
           t.offset, text.size() - t.offset);
    }
    return Path{std::move(root), std::move(path)};
  } catch (const ParseFailure& f) {
    return f.diagnostic;
  }
}

// Expression parser. Each level returns a typed operand; type errors are
// reported at the operator joining mismatched operands.
class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : cur_(text) {}

  BoolExpr parse() {
    if (cur_.at(Tok::kEnd)) {
      fail("EmptyInput", "expected a condition", 0, cur_.text().size());
    }
    Operand result = parse_or();
    const Token& t = cur_.peek();
    if (t.kind == Tok::kRParen) {
      fail("UnbalancedParenthesis", "')' without a matching '('", t.offset, 1);
    }
    if (t.kind == Tok::kUnknown) {
      fail("UnknownOperator", "unknown operator " + quote(t.text), t.offset, t.length);
    }
    if (t.kind != Tok::kEnd) {
      fail("TrailingGarbage", "unexpected " + describe(t), t.offset,
           cur_.text().size() - t.offset);
    }
    return as_bool(result, "a condition");
  }

 private:
  struct Operand {
    std::variant<Arith, BoolExpr> value;
    std::size_t begin;
    std::size_t end;
    std::size_t height = 1;
  };

  // Height of a node joining `lhs` and `rhs` at `op`; bounded like nesting
  // so that long operator chains cannot build unboundedly deep trees.
  std::size_t joined_height(const Operand& lhs, const Operand& rhs, const Token& op) {
    std::size_t h = std::max(lhs.height, rhs.height) + 1;
    if (h > kMaxNesting) {
      fail("NestingTooDeep",
           "expression nests deeper than " + std::to_string(kMaxNesting) + " levels", op.offset,
           op.length);
    }
    return h;
  }

  Operand parse_or() {
    Operand lhs = parse_and();
    while (cur_.at_word("or")) {
      const Token op = cur_.take();
      Operand rhs = parse_and();
      std::size_t h = joined_height(lhs, rhs, op);
      lhs = Operand{BoolExpr::disjunction(bool_operand(lhs, op), bool_operand(rhs, op)),
                    lhs.begin, rhs.end, h};
    }
    return lhs;
  }

  Operand parse_and() {
    Operand lhs = parse_rel();
    while (cur_.at_word("and")) {
      const Token op = cur_.take();
      Operand rhs = parse_rel();
      std::size_t h = joined_height(lhs, rhs, op);
      lhs = Operand{BoolExpr::conjunction(bool_operand(lhs, op), bool_operand(rhs, op)),
                    lhs.begin, rhs.end, h};
    }
    return lhs;
  }

  Operand parse_rel() {
    Operand lhs = parse_add();
    while (cur_.at(Tok::kRel)) {
      const Token op = cur_.take();
      Operand rhs = parse_add();
      std::size_t h = joined_height(lhs, rhs, op);
      lhs = Operand{BoolExpr::comparison(int_operand(lhs, op), op.rel, int_operand(rhs, op)),
                    lhs.begin, rhs.end, h};
    }
    return lhs;
  }

  Operand parse_add() {
    Operand lhs = parse_unary();
    while (cur_.at(Tok::kPlus) || cur_.at(Tok::kMinus)) {
      const Token op = cur_.take();
      Operand rhs = parse_unary();
      ArithOp kind = op.kind == Tok::kPlus ? ArithOp::kAdd : ArithOp::kSub;
      std::size_t h = joined_height(lhs, rhs, op);
      lhs = Operand{Arith::binary(kind, int_operand(lhs, op), int_operand(rhs, op)),
                    lhs.begin, rhs.end, h};
    }
    return lhs;
  }

  Operand parse_unary() {
    if (cur_.at_word("not")) {
      const Token op = cur_.take();
      Nest guard(*this, op);
      Operand operand = parse_unary();
      return Operand{BoolExpr::negation(bool_operand(operand, op)), op.offset, operand.end,
                     operand.height + 1};
    }
    return parse_primary();
  }

  Operand parse_primary() {
    const Token t = cur_.peek();
    switch (t.kind) {
      case Tok::kWord: return parse_word();
      case Tok::kLParen: {
        cur_.take();
        Nest guard(*this, t);
        Operand inner = parse_or();
        if (!cur_.at(Tok::kRParen)) {
          const Token& u = cur_.peek();
          if (u.kind == Tok::kUnknown) {
            fail("UnknownOperator", "unknown operator " + quote(u.text), u.offset, u.length);
          }
          if (u.kind == Tok::kEnd) {
            fail("UnbalancedParenthesis", "'(' is never closed", t.offset, 1);
          }
          fail("UnbalancedParenthesis", "expected ')' to close '(', found " + describe(u),
               u.offset, u.length);
        }
        const Token close = cur_.take();
        inner.begin = t.offset;
        inner.end = close.offset + 1;
        return inner;
      }
      case Tok::kUnknown:
        fail("UnknownOperator", "unknown operator " + quote(t.text), t.offset, t.length);
      default: missing_operand(t);
    }
  }

  Operand parse_word() {
    const Token t = cur_.peek();
    if (t.text == "True" || t.text == "False") {
      cur_.take();
      return Operand{BoolExpr::constant(t.text == "True"), t.offset, t.offset + t.length};
    }
    if (t.text == "and" || t.text == "or") missing_operand(t);
    if (is_digit(t.text.front())) {
      for (char c : t.text) {
        if (!is_digit(c)) {
          fail("IllegalIdentifier", quote(t.text) + " is neither a number nor an identifier",
               t.offset, t.length);
        }
      }
      cur_.take();
      return Operand{Arith::literal(to_int(t)), t.offset, t.offset + t.length};
    }
    auto [root, path] = take_path(cur_);
    if (path.empty()) {
      fail("MissingDot",
           quote(root.str()) + " is a bare identifier; queries need the form " + root.str() +
               ".feature",
           t.offset, t.length);
    }
    QueryPath query{std::move(root), std::move(path)};
    return Operand{Arith::query(std::move(query)), t.offset, cur_.consumed_end()};
  }

  std::int64_t to_int(const Token& t) {
    constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
    std::int64_t value = 0;
    for (char c : t.text) {
      int digit = c - '0';
      if (value > (kMax - digit) / 10) {
        fail("IntegerOverflow", quote(t.text) + " does not fit in a 64-bit signed integer",
             t.offset, t.length);
      }
      value = value * 10 + digit;
    }
    return value;
  }

  [[noreturn]] void missing_operand(const Token& t) {
    const Token* prev = cur_.previous();
    if (prev != nullptr && prev->kind == Tok::kLParen) {
      fail("DanglingOperand", "'(' is followed by " + describe(t) + " instead of an operand",
           prev->offset, 1);
    }
    if (prev != nullptr) {
      fail("DanglingOperand",
           "operator " + quote(prev->text) + " is missing an operand before " + describe(t),
           prev->offset, prev->length);
    }
    if (t.kind == Tok::kRParen) {
      fail("UnbalancedParenthesis", "')' without a matching '('", t.offset, 1);
    }
    fail("DanglingOperand", "expected an operand, found " + describe(t), t.offset, t.length);
  }

  BoolExpr bool_operand(const Operand& operand, const Token& op) {
    if (const auto* b = std::get_if<BoolExpr>(&operand.value)) return *b;
    fail("TypeMismatch",
         "operator " + quote(op.text) + " needs a condition, but " +
             quote(cur_.text().substr(operand.begin, operand.end - operand.begin)) +
             " is an integer expression",
         operand.begin, operand.end - operand.begin);
  }

  Arith int_operand(const Operand& operand, const Token& op) {
    if (const auto* a = std::get_if<Arith>(&operand.value)) return *a;
    fail("TypeMismatch",
         "operator " + quote(op.text) + " needs an integer expression, but " +
             quote(cur_.text().substr(operand.begin, operand.end - operand.begin)) +
             " is a condition",
         operand.begin, operand.end - operand.begin);
  }

  BoolExpr as_bool(const Operand& operand, std::string_view what) {
    if (const auto* b = std::get_if<BoolExpr>(&operand.value)) return *b;
    fail("TypeMismatch",
         "expected " + std::string(what) + ", but " +
             quote(cur_.text().substr(operand.begin, operand.end - operand.begin)) +
             " is an integer expression",
         operand.begin, operand.end - operand.begin);
  }

  // Bounds recursion so hostile input cannot exhaust the stack.
  class Nest {
   public:
    Nest(ExprParser& parser, const Token& at) : parser_(parser) {
      if (++parser_.depth_ > kMaxNesting) {
        fail("NestingTooDeep",
             "expression nests deeper than " + std::to_string(kMaxNesting) + " levels",
             at.offset, at.length);
      }
    }
    ~Nest() { --parser_.depth_; }
    Nest(const Nest&) = delete;
    Nest& operator=(const Nest&) = delete;

   private:
    ExprParser& parser_;
  };

  Cursor cur_;
  std::size_t depth_ = 0;
};

}  // namespace

bool is_reserved_word(std::string_view word) {
  return word == "and" || word == "or" || word == "not" || word == "True" ||
         word == "False";
}

Result<QualifiedCall> parse_call(std::string_view text) {
  return parse_path<QualifiedCall>(text, "a call");
}

Result<QueryPath> parse_query(std::string_view text) {
  return parse_path<QueryPath>(text, "a query");
}

Result<BoolExpr> parse_bool_expr(std::string_view text) {
  try {
    return ExprParser(text).parse();
  } catch (const ParseFailure& f) {
    return f.diagnostic;
  }
}

// ---------------------------------------------------------------------------
// Free roots and query collection

namespace {

void collect(const Arith& e, std::vector<QueryPath>& out) {
  const auto& v = e.node().v;
  if (const auto* q = std::get_if<QueryRef>(&v)) {
    out.push_back(q->path);
  } else if (const auto* b = std::get_if<ArithBinary>(&v)) {
    collect(b->lhs, out);
    collect(b->rhs, out);
  }
}

void collect(const BoolExpr& e, std::vector<QueryPath>& out) {
  const auto& v = e.node().v;
  if (const auto* c = std::get_if<Comparison>(&v)) {
    collect(c->lhs, out);
    collect(c->rhs, out);
  } else if (const auto* a = std::get_if<Conjunction>(&v)) {
    collect(a->lhs, out);
    collect(a->rhs, out);
  } else if (const auto* o = std::get_if<Disjunction>(&v)) {
    collect(o->lhs, out);
    collect(o->rhs, out);
  } else if (const auto* n = std::get_if<Negation>(&v)) {
    collect(n->operand, out);
  }
}

}  // namespace

std::vector<QueryPath> query_refs(const BoolExpr& expr) {
  std::vector<QueryPath> out;
  collect(expr, out);
  return out;
}

std::set<Identifier> free_roots(const QualifiedCall& call) { return {call.root}; }

std::set<Identifier> free_roots(const QueryPath& query) { return {query.root}; }

std::set<Identifier> free_roots(const BoolExpr& expr) {
  std::set<Identifier> out;
  for (const QueryPath& q : query_refs(expr)) out.insert(q.root);
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Binding strength, loosest first.
enum Level { kOr = 1, kAnd = 2, kRel = 3, kAdd = 4, kUnary = 5, kAtom = 6 };

int level(const Arith& e) {
  return std::holds_alternative<ArithBinary>(e.node().v) ? kAdd : kAtom;
}

int level(const BoolExpr& e) {
  const auto& v = e.node().v;
  if (std::holds_alternative<Disjunction>(v)) return kOr;
  if (std::holds_alternative<Conjunction>(v)) return kAnd;
  if (std::holds_alternative<Comparison>(v)) return kRel;
  if (std::holds_alternative<Negation>(v)) return kUnary;
  return kAtom;
}

template <class Node>
std::string wrap(const Node& e, bool parenthesize, const RenderOptions& options) {
  std::string inner = render(e, options);
  return parenthesize ? "( " + inner + " )" : inner;
}

std::string join_path(const Identifier& root, const std::vector<Identifier>& path,
                      bool keep_root) {
  std::string out = keep_root ? root.str() : std::string();
  for (const Identifier& id : path) {
    if (!out.empty()) out += '.';
    out += id.str();
  }
  return out;
}

}  // namespace

std::string render(const QualifiedCall& call) { return join_path(call.root, call.path, true); }

std::string render(const QueryPath& query, const RenderOptions& options) {
  bool keep = !options.strip_root || *options.strip_root != query.root;
  return join_path(query.root, query.path, keep);
}

std::string render(const Arith& expr, const RenderOptions& options) {
  const auto& v = expr.node().v;
  if (const auto* q = std::get_if<QueryRef>(&v)) return render(q->path, options);
  if (const auto* l = std::get_if<IntLiteral>(&v)) return std::to_string(l->value);
  const auto& b = std::get<ArithBinary>(v);
  // Left-associative: only a right operand of the same level needs parentheses.
  return wrap(b.lhs, level(b.lhs) < kAdd, options) + " " + std::string(to_string(b.op)) +
         " " + wrap(b.rhs, level(b.rhs) <= kAdd, options);
}

std::string render(const BoolExpr& expr, const RenderOptions& options) {
  const auto& v = expr.node().v;
  if (const auto* c = std::get_if<Comparison>(&v)) {
    return wrap(c->lhs, level(c->lhs) <= kRel, options) + " " +
           std::string(to_string(c->op)) + " " + wrap(c->rhs, level(c->rhs) <= kRel, options);
  }
  if (const auto* a = std::get_if<Conjunction>(&v)) {
    return wrap(a->lhs, level(a->lhs) < kAnd, options) + " and " +
           wrap(a->rhs, level(a->rhs) <= kAnd, options);
  }
  if (const auto* o = std::get_if<Disjunction>(&v)) {
    return wrap(o->lhs, level(o->lhs) < kOr, options) + " or " +
           wrap(o->rhs, level(o->rhs) <= kOr, options);
  }
  if (const auto* n = std::get_if<Negation>(&v)) {
    return "not " + wrap(n->operand, level(n->operand) < kUnary, options);
  }
  return std::get<BoolConstant>(v).value ? "True" : "False";
}

}  // namespace specogram
