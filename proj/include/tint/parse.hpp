#pragma once

#include <cstddef>
#include <string_view>

#include "tint/polynomial.hpp"

namespace tint {

/// Parses the polynomial text grammar:
///
///   poly  := ['+'|'-'] term (('+'|'-') term)*
///   term  := coeff ['*'] mono | coeff | mono
///   mono  := factor ('*' factor)*
///   factor:= var ['^' int]
///
/// Whitespace is ignored. Variables must be declared in `ring`. Errors carry
/// the line and column of the offending character; `line` and `column_offset`
/// locate `text` inside a larger document.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring,
                            std::size_t line = 1, std::size_t column_offset = 0);

}  // namespace tint
