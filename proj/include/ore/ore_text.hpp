#pragma once

#include <cstddef>
#include <string_view>

#include "ore/ore_poly.hpp"

namespace ore {

/// Where a parsed fragment starts inside a larger document, for error positions.
struct TextOrigin {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parses an element of S. Grammar (products left-associative, evaluated in S):
///   expr  := term (('+' | '-') term)*
///   term  := unary ('*' unary)*
///   unary := '-' unary | power
///   power := atom ('^' INT)?
///   atom  := INT ('/' INT)? | 'X' | 'Y' | 'e' INT | 'P' INT | '(' expr ')'
/// Throws ParseError with the position of the offending character.
OrePoly parse_poly(const OreHandle& h, std::string_view text, TextOrigin origin = {});

/// Same grammar without X, evaluated in R.
RingElement parse_element(const RingDescriptor& r, std::string_view text, TextOrigin origin = {});

}  // namespace ore
