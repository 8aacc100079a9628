#ifndef BIRATIO_EXPRESSION_HPP
#define BIRATIO_EXPRESSION_HPP

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "biratio/surface_map.hpp"

namespace biratio {

/// Syntax tree for rational expressions in x and y. Grammar, loosest first:
///   expr  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*
///   unary := ('-' | '+') unary | power
///   power := atom ('^' UINT)*        (right associative)
///   atom  := NUMBER | 'x' | 'y' | '(' expr ')'
/// NUMBER is an integer or a decimal such as 0.125; both are exact.
struct Expr {
  enum class Kind { Number, X, Y, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind = Kind::Number;
  Rational value;       // Number
  unsigned exponent = 0;  // Pow
  std::vector<std::shared_ptr<const Expr>> args;
  std::size_t position = 0;  // 0-based offset in the input text
};

using ExprPtr = std::shared_ptr<const Expr>;

/// A rational function num/den with den != 0.
struct RationalFunction {
  BiPoly<Rational> num;
  BiPoly<Rational> den{Rational(1)};
};

/// Throws Parse with "at column N" in the message.
ExprPtr parse_expression(std::string_view text);

/// Throws ZeroDenominator when a divisor is identically zero.
RationalFunction evaluate(const ExprPtr& e);

/// Value at a rational point; throws ZeroDenominator on division by 0.
Rational evaluate_at(const ExprPtr& e, const Rational& x, const Rational& y);

/// Parses "(expr1, expr2)", clearing each coordinate to a coprime pair.
SurfaceMap parse_map(std::string_view text);

/// The two coordinate trees of a map literal.
std::pair<ExprPtr, ExprPtr> parse_map_expressions(std::string_view text);

std::string to_string(const ExprPtr& e);

}  // namespace biratio

#endif  // BIRATIO_EXPRESSION_HPP
