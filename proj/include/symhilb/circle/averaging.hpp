#pragma once

#include <cstddef>

#include "symhilb/exact/rational_function.hpp"
#include "symhilb/exact/reconstruct.hpp"

namespace symhilb::circle {

/// (U_a F)(x) = sum_i F_{ia} x^i. F may carry a pole at 0 (a Laurent series);
/// then U_a keeps the terms with negative i as well.
///
/// The denominator comes from the factor rule (resultant_transform for a
/// non-cyclotomic cofactor). The numerator is reconstructed from a series
/// prefix of length deg Q_a + bound + slack, where
/// bound = floor((deg N + (a - 1) deg Q - r) / a).
exact::RationalFunction u_average(const exact::RationalFunction& f, std::size_t a,
                                  std::size_t slack = exact::kDefaultVerificationSlack);

}  // namespace symhilb::circle
