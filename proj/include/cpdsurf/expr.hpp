#pragma once

#include <string>

#include "cpdsurf/profile.hpp"

namespace cpdsurf {

// Parses a one-variable expression into a jet-evaluable ProfileFn.
//
// Grammar (precedence low to high):
//   expr    := term (('+' | '-') term)*
//   term    := factor (('*' | '/') factor)*
//   factor  := unary ('^' factor)?            right-associative, numeric exponent
//   unary   := '-' unary | primary
//   primary := number | var | func '(' expr ')' | '(' expr ')'
//   func    := sin cos sinh cosh tanh sqrt exp log asin asinh atanh acot acoth
//
// `var` is the single free variable (any identifier equal to `var_name`).
// Throws Error(ParseError) on malformed input.
ProfileFn parse_profile(const std::string& text, const std::string& var_name = "u");

}  // namespace cpdsurf
