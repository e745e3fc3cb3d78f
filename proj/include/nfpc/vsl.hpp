#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nfpc/diagnostics.hpp"

namespace nfpc::vsl {

enum class RelOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string_view rel_op_text(RelOp op);
bool rel_op_is_ordering(RelOp op);  // <, <=, >, >=

/// Literal on the right-hand side of a relational atom. Numbers keep their
/// written spelling (`200.00` stays `200.00`) so downstream emission can
/// reproduce the source verbatim; equality is on the spelling.
struct Literal {
  enum class Kind { Number, Text, Bool, Tuple };

  Kind kind = Kind::Number;
  std::string value;  // Number/Tuple: written digits; Text: unescaped; Bool: "true"/"false"
  std::string unit;   // Tuple only, non-empty there

  static Literal number(std::string text) { return {Kind::Number, std::move(text), {}}; }
  static Literal text(std::string s) { return {Kind::Text, std::move(s), {}}; }
  static Literal boolean(bool b) { return {Kind::Bool, b ? "true" : "false", {}}; }
  static Literal tuple(std::string value, std::string unit) {
    return {Kind::Tuple, std::move(value), std::move(unit)};
  }

  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Relational atom: NFP name, operator, literal.
struct Rel {
  std::string nfp;
  RelOp op = RelOp::Eq;
  Literal value;

  friend bool operator==(const Rel&, const Rel&) = default;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Expression tree: leaves are Rel atoms, inner nodes are n-ary And/Or with
/// at least two children. And/Or never nest into a node of the same kind —
/// the factories splice such children — which keeps the canonical printer's
/// output reparsable to an equal tree.
struct Expr {
  enum class Kind { Rel, And, Or };

  Kind kind = Kind::Rel;
  Rel rel;                        // Kind::Rel only
  std::vector<ExprPtr> children;  // Kind::And/Or only, size >= 2
};

ExprPtr make_rel(Rel rel);
ExprPtr make_and(std::vector<ExprPtr> children);
ExprPtr make_or(std::vector<ExprPtr> children);

bool expr_equal(const Expr& a, const Expr& b);
inline bool expr_equal(const ExprPtr& a, const ExprPtr& b) { return expr_equal(*a, *b); }

/// Collects the Rel leaves in source (left-to-right) order.
std::vector<Rel> leaves_of(const Expr& expr);

Result<ExprPtr, ParseError> parse_vsl(std::string_view text);

/// Canonical text: `and` tighter than `or`, parentheses only around Or
/// children of And. parse_vsl(print_vsl(e)) reproduces an equal tree.
std::string print_vsl(const Expr& expr);
std::string print_literal(const Literal& literal);

/// Disjunctive normal form: one inner list per alternative, each holding its
/// Rel leaves in source order with duplicates (same nfp, op and literal
/// spelling) removed. The result is logically equivalent to `expr` under any
/// assignment of truth values to the distinct leaves.
std::vector<std::vector<Rel>> to_dnf(const Expr& expr);

struct EvalError {
  enum class Kind { TypeMismatch, OrderingUnsupported };
  Kind kind = Kind::TypeMismatch;
  std::string message;
};

/// Decides one atom against a concrete value (and, for tuple targets, the
/// concrete unit). Numeric comparison is exact decimal; tuple targets also
/// require unit string equality; EQ/NE on text compares code points.
Result<bool, EvalError> eval_rel(const Rel& rel, const Literal& value,
                                 const std::optional<std::string>& unit);

}  // namespace nfpc::vsl
