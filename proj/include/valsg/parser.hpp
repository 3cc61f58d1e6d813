#pragma once

#include <string>
#include <vector>

#include "valsg/poly.hpp"

namespace valsg {

// Recursive-descent reader for polynomial text:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*      division by nonzero constants only
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' natural)?
//   primary := natural | identifier | '(' expr ')'
//
// Errors carry the byte offset of the offending token.
MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                 std::uint32_t degree_cap = MPoly::default_degree_cap);

}  // namespace valsg
