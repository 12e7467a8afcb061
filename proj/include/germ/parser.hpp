#ifndef GERM_PARSER_HPP
#define GERM_PARSER_HPP

#include <string>
#include <string_view>

#include "germ/polynomial.hpp"

namespace germ {

// Parses an expression built from integer/rational literals and the ring's
// variables with + - * ^ and parentheses. '^' binds tighter than '*', and
// multiplication must be written explicitly. Throws ParseError with a
// 1-based line/column on bad input.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

// Canonical form: terms in descending local order, leading term first,
// explicit '*', '^' only for exponents above 1, coefficient 1 omitted on
// non-constant terms. F_p coefficients print as least residues; rational
// ones as n or n/d with any sign folded into the term separator.
std::string print_polynomial(const Polynomial& f);

} // namespace germ

#endif
