#pragma once

#include <string_view>

namespace pwl {

// Evaluates a scalar expression in double precision:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := NUMBER | 'pi' | 'sqrt' '(' expr ')' | '-' factor | '(' expr ')'
// Whitespace is ignored. Throws SyntaxError (with byte offset) or
// Error{DomainError} for sqrt of a negative value or division by zero.
double parse_scalar(std::string_view text);

}  // namespace pwl
