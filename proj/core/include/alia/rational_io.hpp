#pragma once

#include <string>
#include <vector>

#include "alia/function_ring.hpp"

namespace alia {

/// Expression syntax shared by scalars and rational functions:
///   ((1/2)*z^3 - 1)/((z-1)*(z+1)) + zeta5^2
/// Tokens: integers, 'z', 'zeta<n>', + - * / ^ ( ). '/' is field division;
/// '^' takes a nonnegative integer exponent. Throws ConfigError on bad input.

/// Parses an expression without 'z' into a scalar of field order
/// lcm(min_order, orders of all zeta literals).
CycScalar parse_scalar(const std::string& text, long min_order = 1);

/// Parses a rational-function expression; the result's poles must lie in
/// pole_set (checked by RationalFunction::make).
RationalFunction parse_rational(const std::string& text, std::vector<SpherePoint> pole_set,
                                long min_order = 1);

/// "inf" or a scalar expression.
SpherePoint parse_point(const std::string& text, long min_order = 1);

}  // namespace alia
