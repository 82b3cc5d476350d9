#pragma once

#include <span>
#include <string>
#include <string_view>

#include "germ/polynomial.hpp"

namespace germ {

/// Parses a polynomial over the ordered variable list `vars`.
///
/// Grammar (whitespace ignored, no implicit multiplication):
///
///   sum     := product (('+' | '-') product)*
///   product := signed ('*' signed)*
///   signed  := ('+' | '-') signed | power
///   power   := atom ('^' integer)?
///   atom    := integer ('/' integer)? | name | '(' sum ')'
///
/// Throws ParseError carrying the 0-based offset of the offending character.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> vars,
                            MonomialOrder order = MonomialOrder::global());

/// Accepts only identifiers made of letters, digits and '_' not starting with a digit.
bool is_valid_variable_name(std::string_view name);

}  // namespace germ
