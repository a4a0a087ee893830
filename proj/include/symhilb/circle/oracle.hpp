#pragma once

#include <cstddef>
#include <vector>

#include "symhilb/circle/weights.hpp"
#include "symhilb/exact/rational.hpp"

namespace symhilb::circle {

/// Number of invariant monomials z^alpha zbar^beta of total degree k, i.e.
/// with sum a_i (alpha_i - beta_i) = 0. Counts for k = 0..max_degree, by a
/// charge/degree dynamic program.
std::vector<BigInt> oracle_series(const WeightVector& a, std::size_t max_degree);
std::vector<BigInt> oracle_series_serial(const WeightVector& a, std::size_t max_degree);
std::vector<BigInt> oracle_series_parallel(const WeightVector& a, std::size_t max_degree);

BigInt oracle_count(const WeightVector& a, std::size_t k);

}  // namespace symhilb::circle
