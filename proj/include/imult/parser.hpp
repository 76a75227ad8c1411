#ifndef IMULT_PARSER_HPP
#define IMULT_PARSER_HPP

#include <string>

#include "imult/blowup.hpp"

namespace imult {

/// Parses a curve expression over Q. Grammar:
///   expr   := term (('+'|'-') term)*
///   term   := sign* factor ((('*'|'/') sign* factor) | factor)*
///   factor := primary ['^' positive-integer]
///   primary:= 'x' | 'y' | integer | '(' expr ')'
/// Adjacent factors multiply ("5x^2", "6xy"); '/' needs a divisor that
/// evaluates to a nonzero rational constant. Whitespace is insignificant.
/// Errors carry the byte offset of the offending character.
BiPoly parse_poly(const std::string& text);

/// "px,py" with each coordinate "num[/den]".
RatPoint parse_point(const std::string& text);

/// Canonical rendering that parse_poly accepts back (round-trips over Q).
std::string render_poly(const BiPoly& f);

}  // namespace imult

#endif
