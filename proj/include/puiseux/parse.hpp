#pragma once

#include <cstddef>
#include <string_view>

#include "puiseux/series.hpp"

namespace puiseux {

/// Polynomial in z over Puiseux monomials in x1..xN. Grammar: rational
/// constants, x1..xN, z, + - * / ^ and parentheses. Exponents are integers or
/// parenthesized rationals such as x2^(-3/2); only monomials take rational or
/// negative exponents, and only monomials may appear as divisors.
/// n = 0 infers the dimension from the largest variable index (at least 1).
/// Throws ParseError with the offending position.
ZPolynomial parse_equation(std::string_view text, std::size_t n = 0);

/// A series in x1..xN in the same syntax (no z), optionally ending in a
/// "+ O(T)" precision term as printed by Series::to_string.
Series parse_series(std::string_view text, std::size_t n = 0);

} // namespace puiseux
