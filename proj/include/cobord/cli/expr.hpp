#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cobord/graded_poly.hpp"

namespace cobord::cli {

/// Expression tree produced by parse_expr.
///
/// Grammar (precedence high to low: power, unary minus, '*', '+'/'-'):
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' INTEGER)?
///   primary := INTEGER | INTEGER '/' INTEGER | SYMBOL | '(' expr ')'
/// A rational literal is written without spaces ("3/4"). Juxtaposition is
/// not multiplication.
struct Expr {
  enum class Kind { Integer, Rational, Symbol, Add, Sub, Mul, Neg, Pow, Paren };

  Kind kind;
  std::string text;            // literal digits or symbol name
  std::uint32_t exponent = 0;  // Pow only
  std::vector<std::shared_ptr<const Expr>> children;
  std::size_t line = 1;
  std::size_t column = 1;

  /// Structural equality; source positions are ignored.
  friend bool operator==(const Expr& lhs, const Expr& rhs);
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Throws ParseError with 1-based line and column.
ExprPtr parse_expr(std::string_view source);

/// Inverse of parse_expr: parse_expr(print_expr(e)) is structurally e.
std::string print_expr(const Expr& expr);

/// Symbol names used anywhere in the tree.
std::set<std::string> collect_symbols(const Expr& expr);

/// Evaluates the tree over `variables` with p1..p<cutoff> as Lambda
/// generators. Unknown symbols raise ParseError naming the identifier.
GradedPoly evaluate_expr(const Expr& expr, const VariablesPtr& variables, std::size_t cutoff);

}  // namespace cobord::cli
