#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ncfrieze/ring.hpp"

namespace ncfrieze {

// AST for noncommutative ring-element expressions. Product child order is
// semantic. Negative powers denote inverses. Normalization is structural only
// (flattening, scalar folding); no skew-field rewriting is ever attempted.
struct Expr {
    enum class Kind { scalar, symbol, sum, product, power };

    Kind kind = Kind::scalar;
    Rational scalar_value = Rational(0);  // scalar
    std::string symbol_name;              // symbol
    std::vector<ExprPtr> children;        // sum / product, >= 2 entries
    ExprPtr base;                         // power
    long exponent = 0;                    // power, never 0
};

ExprPtr make_scalar(Rational value);
ExprPtr make_symbol(std::string name);
// Flattens nested sums, folds scalar children together, drops zeros.
ExprPtr make_sum(std::vector<ExprPtr> children);
// Flattens nested products, folds scalar children into one leading scalar
// (scalars commute with everything), collapses on a zero factor.
ExprPtr make_product(std::vector<ExprPtr> children);
// Folds power-of-power and exact scalar powers; exponent 1 unwraps.
ExprPtr make_power(ExprPtr base, long exponent);
ExprPtr expr_neg(const ExprPtr& e);

// Grammar (ASCII, whitespace-insensitive):
//   expr   := term (("+"|"-") term)*
//   term   := ["-"] factor ("*" factor)*
//   factor := atom ["^" signedInt]
//   atom   := rational | symbol | "(" expr ")"
//   rational := int ["/" posInt] ;  symbol := letter+
// Products are left-associative, "^" binds tighter than "*", exponents are
// nonzero integers. In the quaternion ring the symbols i, j, k are reserved
// generators; in free rings only the declared variables are legal.
ExprPtr parse_expr(std::string_view text, const RingDescriptor& ring);

// Canonical rendering; parse(render(e)) evaluates identically to e.
std::string render_expr(const Expr& e);
std::string render_expr(const ExprPtr& e);

// Sorted, distinct symbols occurring in e.
std::vector<std::string> expr_symbols(const Expr& e);

using Binding = std::map<std::string, RingValue>;

// Exact structural evaluation; quaternion generators bind automatically.
// Throws UnboundSymbol, or NotInvertible naming the offending subexpression.
RingValue evaluate(const Expr& e, const RingDescriptor& ring, const Binding& binding = {});
RingValue evaluate(const ExprPtr& e, const RingDescriptor& ring, const Binding& binding = {});

}  // namespace ncfrieze
