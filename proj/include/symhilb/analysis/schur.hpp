#pragma once

#include <vector>

#include "symhilb/exact/rational.hpp"

namespace symhilb::analysis {

/// Weakly decreasing parts; trailing zeros fix the number of variables.
using Partition = std::vector<long>;

/// Throws InputError unless parts are weakly decreasing and nonnegative.
void validate(const Partition& lambda);

/// s_lambda(points) through the Jacobi-Trudi determinant det(h_{lambda_i - i + j}).
/// Finite at repeated points. Throws PartitionPointsMismatch when the
/// number of points differs from the number of parts.
BigRational schur_eval(const Partition& lambda, const std::vector<BigRational>& points);

/// Ratio of alternants det(x_i^{lambda_j + n - j}) / det(x_i^{n - j}).
/// Requires pairwise distinct points (InputError otherwise).
BigRational schur_bialternant(const Partition& lambda, const std::vector<BigRational>& points);

/// Complete homogeneous symmetric polynomials h_0..h_k at the points.
std::vector<BigRational> complete_homogeneous(const std::vector<BigRational>& points, long k);

/// Determinant over Q by Gaussian elimination.
BigRational determinant(std::vector<std::vector<BigRational>> m);

/// (n-1, n-2, ..., 0)
Partition staircase(long n);

}  // namespace symhilb::analysis
