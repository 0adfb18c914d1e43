#pragma once

#include <string>
#include <string_view>

#include "germ/jet.hpp"

namespace germ {

/// Parses a polynomial in x and y into a jet of the given order.
///
///   expr     := term (('+' | '-') term)*
///   term     := factor ('*' factor)*
///   factor   := '-' factor | atom ('^' natural)?
///   atom     := rational | 'x' | 'y' | '(' expr ')'
///   rational := integer ('/' positive-integer)?
///
/// Whitespace is ignored. There is no implicit multiplication ("xy" is an
/// error) and no decimal literals. Throws ParseError (SyntaxError,
/// DivisionByZeroLiteral) with a byte offset, or GermError(DegreeOverflow)
/// when the expression needs degree above `order`.
Jet parse_expr(std::string_view text, int order = kDefaultOrder);

}  // namespace germ
