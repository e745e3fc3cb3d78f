#include "nfpc/vsl.hpp"

#include <algorithm>
#include <cassert>

#include "lexer.hpp"
#include "nfpc/decimal.hpp"
#include "vsl_parse.hpp"

namespace nfpc::vsl {

std::string_view rel_op_text(RelOp op) {
  switch (op) {
    case RelOp::Eq: return "==";
    case RelOp::Ne: return "!=";
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Gt: return ">";
    case RelOp::Ge: return ">=";
  }
  return "";
}

bool rel_op_is_ordering(RelOp op) { return op != RelOp::Eq && op != RelOp::Ne; }

ExprPtr make_rel(Rel rel) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Rel;
  e->rel = std::move(rel);
  return e;
}

namespace {

ExprPtr make_node(Expr::Kind kind, std::vector<ExprPtr> children) {
  assert(!children.empty());
  std::vector<ExprPtr> flat;
  flat.reserve(children.size());
  for (auto& c : children) {
    if (c->kind == kind)
      flat.insert(flat.end(), c->children.begin(), c->children.end());
    else
      flat.push_back(std::move(c));
  }
  if (flat.size() == 1) return flat.front();
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->children = std::move(flat);
  return e;
}

}  // namespace

ExprPtr make_and(std::vector<ExprPtr> children) {
  return make_node(Expr::Kind::And, std::move(children));
}

ExprPtr make_or(std::vector<ExprPtr> children) {
  return make_node(Expr::Kind::Or, std::move(children));
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  if (a.kind == Expr::Kind::Rel) return a.rel == b.rel;
  if (a.children.size() != b.children.size()) return false;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (!expr_equal(*a.children[i], *b.children[i])) return false;
  return true;
}

std::vector<Rel> leaves_of(const Expr& expr) {
  std::vector<Rel> out;
  if (expr.kind == Expr::Kind::Rel) {
    out.push_back(expr.rel);
    return out;
  }
  for (const auto& c : expr.children) {
    auto sub = leaves_of(*c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser
//
//   expr    := orExpr
//   orExpr  := andExpr ("or" andExpr)*
//   andExpr := atom ("and" atom)*
//   atom    := NAME OP literal | "(" expr ")"
//   literal := "(" NUMBER "," STRING ")" | NUMBER | STRING | "true" | "false"

namespace {

using ParseResult = Result<ExprPtr, ParseError>;

ParseError err_at(const Token& t, std::string message) {
  return ParseError{t.pos, std::move(message)};
}

std::optional<RelOp> rel_op_from(const Token& t) {
  if (t.kind != Token::Kind::Symbol) return std::nullopt;
  if (t.text == "==") return RelOp::Eq;
  if (t.text == "!=") return RelOp::Ne;
  if (t.text == "<") return RelOp::Lt;
  if (t.text == "<=") return RelOp::Le;
  if (t.text == ">") return RelOp::Gt;
  if (t.text == ">=") return RelOp::Ge;
  return std::nullopt;
}

Result<Literal, ParseError> parse_literal(Lexer& lexer) {
  Token t = lexer.next();
  switch (t.kind) {
    case Token::Kind::Number:
      return Literal::number(std::move(t.text));
    case Token::Kind::String:
      return Literal::text(std::move(t.text));
    case Token::Kind::Name:
      if (t.text == "true" || t.text == "false") return Literal::boolean(t.text == "true");
      return err_at(t, "expected literal, found '" + t.text + "'");
    case Token::Kind::Symbol:
      if (t.text == "(") {
        Token value = lexer.next();
        if (value.kind != Token::Kind::Number)
          return err_at(value, "expected number in (value, unit) tuple");
        if (!lexer.peek().is_symbol(","))
          return err_at(lexer.peek(), "expected ',' in (value, unit) tuple");
        lexer.next();
        Token unit = lexer.next();
        if (unit.kind != Token::Kind::String)
          return err_at(unit, "expected quoted unit in (value, unit) tuple");
        if (unit.text.empty()) return err_at(unit, "unit must be non-empty");
        if (!lexer.peek().is_symbol(")"))
          return err_at(lexer.peek(), "expected ')' after unit");
        lexer.next();
        return Literal::tuple(std::move(value.text), std::move(unit.text));
      }
      [[fallthrough]];
    default:
      return err_at(t, "expected literal");
  }
}

ParseResult parse_or(Lexer& lexer);

ParseResult parse_atom(Lexer& lexer) {
  const Token& t = lexer.peek();
  if (t.is_symbol("(")) {
    lexer.next();
    auto inner = parse_or(lexer);
    if (!inner) return inner;
    if (!lexer.peek().is_symbol(")"))
      return err_at(lexer.peek(), "expected ')'");
    lexer.next();
    return inner;
  }
  if (t.kind != Token::Kind::Name || t.text == "and" || t.text == "or" ||
      t.text == "true" || t.text == "false") {
    if (t.kind == Token::Kind::End) return err_at(t, "expected expression, found end of input");
    return err_at(t, "expected NFP name or '('");
  }
  Token name = lexer.next();
  auto op = rel_op_from(lexer.peek());
  if (!op) return err_at(lexer.peek(), "expected relational operator");
  lexer.next();
  auto literal = parse_literal(lexer);
  if (!literal) return literal.error();
  return make_rel(Rel{std::move(name.text), *op, std::move(literal).value()});
}

ParseResult parse_and(Lexer& lexer) {
  auto first = parse_atom(lexer);
  if (!first) return first;
  std::vector<ExprPtr> children{std::move(first).value()};
  while (lexer.peek().is_name("and")) {
    lexer.next();
    auto next = parse_atom(lexer);
    if (!next) return next;
    children.push_back(std::move(next).value());
  }
  return make_and(std::move(children));
}

ParseResult parse_or(Lexer& lexer) {
  auto first = parse_and(lexer);
  if (!first) return first;
  std::vector<ExprPtr> children{std::move(first).value()};
  while (lexer.peek().is_name("or")) {
    lexer.next();
    auto next = parse_and(lexer);
    if (!next) return next;
    children.push_back(std::move(next).value());
  }
  return make_or(std::move(children));
}

}  // namespace

Result<ExprPtr, ParseError> parse_expression(Lexer& lexer) {
  auto expr = parse_or(lexer);
  if (!expr) return expr;
  if (lexer.error()) return *lexer.error();
  return expr;
}

Result<ExprPtr, ParseError> parse_vsl(std::string_view text) {
  Lexer lexer(text);
  if (lexer.peek().kind == Token::Kind::End) {
    if (lexer.error()) return *lexer.error();
    return ParseError{SourcePos{1, 1}, "empty expression"};
  }
  auto expr = parse_expression(lexer);
  if (!expr) return expr;
  if (lexer.peek().kind != Token::Kind::End)
    return ParseError{lexer.peek().pos, "unexpected input after expression"};
  return expr;
}

// ---------------------------------------------------------------------------
// Printer

std::string print_literal(const Literal& literal) {
  switch (literal.kind) {
    case Literal::Kind::Number:
    case Literal::Kind::Bool:
      return literal.value;
    case Literal::Kind::Text:
      return escape_string_literal(literal.value);
    case Literal::Kind::Tuple:
      return "(" + literal.value + ", " + escape_string_literal(literal.unit) + ")";
  }
  return "";
}

namespace {

void print_expr(const Expr& expr, std::string& out) {
  switch (expr.kind) {
    case Expr::Kind::Rel:
      out += expr.rel.nfp;
      out += ' ';
      out += rel_op_text(expr.rel.op);
      out += ' ';
      out += print_literal(expr.rel.value);
      return;
    case Expr::Kind::And:
      for (size_t i = 0; i < expr.children.size(); ++i) {
        if (i) out += " and ";
        const Expr& c = *expr.children[i];
        if (c.kind == Expr::Kind::Or) {
          out += '(';
          print_expr(c, out);
          out += ')';
        } else {
          print_expr(c, out);
        }
      }
      return;
    case Expr::Kind::Or:
      for (size_t i = 0; i < expr.children.size(); ++i) {
        if (i) out += " or ";
        print_expr(*expr.children[i], out);
      }
      return;
  }
}

}  // namespace

std::string print_vsl(const Expr& expr) {
  std::string out;
  print_expr(expr, out);
  return out;
}

// ---------------------------------------------------------------------------
// Disjunctive normal form

namespace {

void dedup_leaves(std::vector<Rel>& conjunct) {
  std::vector<Rel> unique;
  unique.reserve(conjunct.size());
  for (auto& rel : conjunct)
    if (std::find(unique.begin(), unique.end(), rel) == unique.end())
      unique.push_back(std::move(rel));
  conjunct = std::move(unique);
}

std::vector<std::vector<Rel>> dnf_of(const Expr& expr) {
  switch (expr.kind) {
    case Expr::Kind::Rel:
      return {{expr.rel}};
    case Expr::Kind::Or: {
      std::vector<std::vector<Rel>> out;
      for (const auto& c : expr.children) {
        auto sub = dnf_of(*c);
        out.insert(out.end(), std::make_move_iterator(sub.begin()),
                   std::make_move_iterator(sub.end()));
      }
      return out;
    }
    case Expr::Kind::And: {
      std::vector<std::vector<Rel>> acc{{}};
      for (const auto& c : expr.children) {
        auto sub = dnf_of(*c);
        std::vector<std::vector<Rel>> next;
        next.reserve(acc.size() * sub.size());
        for (const auto& left : acc)
          for (const auto& right : sub) {
            std::vector<Rel> merged = left;
            merged.insert(merged.end(), right.begin(), right.end());
            next.push_back(std::move(merged));
          }
        acc = std::move(next);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace

std::vector<std::vector<Rel>> to_dnf(const Expr& expr) {
  auto conjuncts = dnf_of(expr);
  for (auto& conjunct : conjuncts) dedup_leaves(conjunct);
  return conjuncts;
}

// ---------------------------------------------------------------------------
// Atom evaluation

namespace {

Result<bool, EvalError> compare_numbers(std::string_view lhs, std::string_view rhs, RelOp op) {
  auto a = Decimal::parse(lhs);
  auto b = Decimal::parse(rhs);
  if (!a || !b)
    return EvalError{EvalError::Kind::TypeMismatch, "value is not a finite decimal"};
  int c = a->compare(*b);
  switch (op) {
    case RelOp::Eq: return c == 0;
    case RelOp::Ne: return c != 0;
    case RelOp::Lt: return c < 0;
    case RelOp::Le: return c <= 0;
    case RelOp::Gt: return c > 0;
    case RelOp::Ge: return c >= 0;
  }
  return false;
}

EvalError type_mismatch(const Rel& rel, std::string_view expected) {
  return EvalError{EvalError::Kind::TypeMismatch,
                   "type mismatch for '" + rel.nfp + "': expected " + std::string(expected)};
}

}  // namespace

Result<bool, EvalError> eval_rel(const Rel& rel, const Literal& value,
                                 const std::optional<std::string>& unit) {
  const Literal& target = rel.value;
  switch (target.kind) {
    case Literal::Kind::Tuple: {
      if (value.kind != Literal::Kind::Number)
        return type_mismatch(rel, "numeric value");
      if (!unit || *unit != target.unit) return false;  // unit equality regardless of op
      return compare_numbers(value.value, target.value, rel.op);
    }
    case Literal::Kind::Number:
      if (value.kind != Literal::Kind::Number)
        return type_mismatch(rel, "numeric value");
      return compare_numbers(value.value, target.value, rel.op);
    case Literal::Kind::Text:
      if (value.kind != Literal::Kind::Text)
        return type_mismatch(rel, "text value");
      if (rel_op_is_ordering(rel.op))
        return EvalError{EvalError::Kind::OrderingUnsupported,
                         "ordering comparison unsupported for text"};
      return (value.value == target.value) == (rel.op == RelOp::Eq);
    case Literal::Kind::Bool:
      if (value.kind != Literal::Kind::Bool)
        return type_mismatch(rel, "boolean value");
      if (rel_op_is_ordering(rel.op))
        return EvalError{EvalError::Kind::OrderingUnsupported,
                         "ordering comparison unsupported for booleans"};
      return (value.value == target.value) == (rel.op == RelOp::Eq);
  }
  return type_mismatch(rel, "literal");
}

}  // namespace nfpc::vsl
