#pragma once

#include "nary/product.hpp"

#include <string>
#include <string_view>

namespace nary {

/// Text format:
///
///     nary v1
///     arity 3
///     dim 4
///     symmetry skew
///     [1 2 3] = 1*4
///     [1 2 4] = 1/2*3 - 2*1   # comment
///
/// Indices are 1-based. A relation's right side is a sum of `c*j` terms,
/// where a bare `j` means `1*j` and `0` means the zero vector. Blank lines
/// and `#` comments are ignored anywhere. Duplicate keys are summed.
///
/// Throws ParseError with the line and column of the problem, and
/// RepeatedIndexNonzero (with the line number in the message) for a skew
/// relation with a repeated index and a nonzero value.
NAryProduct parse_algebra(std::string_view text);

/// Canonical text: header lines, then one line per stored constant in key
/// order. parse_algebra(serialize_algebra(x)) == x.
std::string serialize_algebra(const NAryProduct& prod);

/// `c1*j1 + c2*j2 - c3*j3`, 1-based, `0` for the zero vector.
std::string format_combination(std::span<const Rational> v);

}  // namespace nary
