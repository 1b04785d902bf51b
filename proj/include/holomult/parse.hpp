#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "holomult/poly.hpp"

namespace hlm {

// Where a piece of text sits in its source, for error positions.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := base ('^' integer)?
// base   := number | 'i' | 'z' index | name | '(' expr ')'
// number := digits ['/' digits] | digits '.' digits
//
// Whitespace is insignificant; implicit multiplication is rejected. Errors
// are thrown as ParseError positioned relative to `at`.
CPoly parse_expr(std::string_view text, std::size_t n, SourcePos at = {});

// Same, with `names` resolving identifiers other than i and z<k>.
using NameTable = std::map<std::string, CPoly, std::less<>>;
CPoly parse_expr(std::string_view text, std::size_t n, const NameTable& names, SourcePos at = {});

// Parses an expression that must be constant.
GaussRat parse_constant(std::string_view text, SourcePos at = {});

}  // namespace hlm
