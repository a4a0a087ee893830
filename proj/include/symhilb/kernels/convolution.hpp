#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symhilb/exact/rational.hpp"

// Dense exact convolution. The serial routine is the reference; the OpenMP
// routine computes every output coefficient as an independent dot product, so
// its result is bit-identical to the reference for any thread schedule.
namespace symhilb::kernels {

/// c[k] = sum_i a[i] * b[k - i] for k < limit (limit = size_a + size_b - 1 when 0).
std::vector<BigRational> convolve_serial(std::span<const BigRational> a, std::span<const BigRational> b,
                                         std::size_t limit = 0);

std::vector<BigRational> convolve_parallel(std::span<const BigRational> a, std::span<const BigRational> b,
                                           std::size_t limit = 0);

/// Picks the parallel kernel once the work exceeds a small threshold.
std::vector<BigRational> convolve(std::span<const BigRational> a, std::span<const BigRational> b,
                                  std::size_t limit = 0);

}  // namespace symhilb::kernels
