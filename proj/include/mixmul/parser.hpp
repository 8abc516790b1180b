#pragma once

#include <string_view>

#include "mixmul/polynomial.hpp"

namespace mixmul {

/// Parses a polynomial over `ring`.
///
/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' unary) | ('/' INT))*
///   unary  := '-' unary | power
///   power  := atom ('^' INT)?
///   atom   := INT | IDENT | '(' expr ')'
///
/// Implicit multiplication ("2x") is rejected. Division is only by a nonzero
/// integer literal, so that rational coefficients print and re-parse.
///
/// `line` is reported in ParseError (0 for standalone strings) and
/// `column_offset` is added to column numbers.
Polynomial parse_polynomial(std::string_view text, const PolyRingPtr& ring, std::size_t line = 0,
                            std::size_t column_offset = 0);

}  // namespace mixmul
