#pragma once

#include <cstddef>
#include <vector>

#include "symhilb/circle/weights.hpp"
#include "symhilb/exact/laurent.hpp"
#include "symhilb/exact/rational.hpp"

namespace symhilb::analysis {

struct GammaClosedForms {
  BigRational gamma0;
  BigRational gamma2;  // equals gamma3
  std::vector<std::size_t> complement_gcds;  // g_j = gcd of the weights without entry j
  BigInt sum_of_squares;
};

/// s_{(n-2, n-2, n-3, ..., 0)}(alpha) / s_{(n-1, ..., 0)}(alpha) on the
/// gcd-reduced weights. Throws UnsupportedDimension for n < 2.
BigRational gamma0_closed(const circle::WeightProfile& a);

/// Closed forms of gamma0 and gamma2 = gamma3. Throws UnsupportedDimension for n < 3.
GammaClosedForms gamma2_closed(const circle::WeightProfile& a);

/// Laurent data of the off-shell series from that of the on-shell series:
/// delta_0 = gamma_0 / 2, delta_k = (gamma_k + delta_{k-1}) / 2.
exact::LaurentExpansion off_shell_coeffs(const exact::LaurentExpansion& gammas);

struct SymplecticReport {
  std::size_t order_checked = 0;
  std::vector<std::size_t> violations;  // m with S_m != 0
  std::vector<BigRational> residuals;   // S_1 .. S_r
  bool passes() const { return violations.empty(); }
};

/// S_m = sum_{k=0}^{m-1} (-1)^k C(m-1, k) gamma_{m+k} for m = 1..r. Needs at
/// least 2r coefficients; throws InsufficientCoefficients otherwise.
SymplecticReport symplectic_check(const exact::LaurentExpansion& gammas, std::size_t r);

/// gamma_0 of A_n = (1, ..., 1) for n = 1..count, from the Laurent engine,
/// each checked against C(2n-2, n-1) / 4^{n-1}.
std::vector<BigRational> gamma0_degenerate_sequence(std::size_t count);

/// Laurent expansion of the on-shell series of A through gamma_K.
exact::LaurentExpansion laurent_for_weights(const circle::WeightVector& a, std::size_t K);

}  // namespace symhilb::analysis
