#pragma once

#include "algint/algebra.hpp"

#include <string_view>

namespace algint {

/// Evaluates an element expression over `algebra`.
///
/// Grammar:
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | primary
///   primary := literal | label | '(' expr ')'
///   literal := digits ('/' digits)?
///
/// A literal on its own stands for that multiple of the identity. At each
/// token the longest match wins between a literal and the algebra's labels,
/// so labels may contain '*' (the tensor product labels do); on a tie the
/// literal wins.
///
/// Products reduce left to right. In a non-associative algebra a product
/// chain with three or more non-scalar factors is rejected with
/// AmbiguousProduct; parenthesize to choose an order.
///
/// Throws ParseError or AmbiguousProduct.
Element evalExpression(const AlgebraPtr& algebra, std::string_view text);

}  // namespace algint
