#include "symhilb/analysis/laurent_analysis.hpp"

#include <numeric>
#include <string>

#include "symhilb/analysis/schur.hpp"
#include "symhilb/circle/hilbert.hpp"
#include "symhilb/errors.hpp"

namespace symhilb::analysis {

namespace {

std::vector<BigRational> as_points(const std::vector<std::size_t>& w) {
  std::vector<BigRational> out;
  for (std::size_t a : w) out.emplace_back(static_cast<unsigned long>(a));
  return out;
}

// (top, ..., top, n-1-repeat, ..., 0) with `repeat` leading copies of `top`:
// parts k >= repeat follow the staircase n-1-k.
Partition flattened(long n, long repeat, long top) {
  Partition p;
  for (long k = 0; k < n; ++k) p.push_back(k < repeat ? top : n - 1 - k);
  return p;
}

}  // namespace

BigRational gamma0_closed(const circle::WeightProfile& profile) {
  const auto a = profile.effective();
  const long n = static_cast<long>(a.size());
  if (n < 2) throw UnsupportedDimension("gamma0_closed needs n >= 2");
  const auto alpha = as_points(a.weights());
  return schur_eval(flattened(n, 2, n - 2), alpha) / schur_eval(staircase(n), alpha);
}

GammaClosedForms gamma2_closed(const circle::WeightProfile& profile) {
  const auto a = profile.effective();
  const long n = static_cast<long>(a.size());
  if (n < 3) throw UnsupportedDimension("gamma2_closed needs n >= 3");
  const auto w = a.weights();
  const auto alpha = as_points(w);

  GammaClosedForms out;
  out.gamma0 = gamma0_closed(a);
  out.sum_of_squares = 0;
  for (std::size_t x : w) out.sum_of_squares += BigInt(static_cast<unsigned long>(x * x));

  const BigRational s_delta = schur_eval(staircase(n), alpha);
  BigRational g2 = out.gamma0 / 12;
  g2 += schur_eval(flattened(n, 3, n - 3), alpha) * BigRational(out.sum_of_squares) / (12 * s_delta);

  for (std::size_t j = 0; j < w.size(); ++j) {
    std::vector<std::size_t> rest;
    std::size_t g = 0;
    for (std::size_t k = 0; k < w.size(); ++k)
      if (k != j) {
        rest.push_back(w[k]);
        g = std::gcd(g, w[k]);
      }
    out.complement_gcds.push_back(g);
    if (g == 1) continue;
    const auto beta = as_points(rest);
    const BigRational num = schur_eval(flattened(n - 1, 2, n - 3), beta);
    const BigRational den = schur_eval(staircase(n - 1), beta);
    g2 += BigRational(static_cast<long>(g * g - 1)) * num / (12 * den);
  }
  out.gamma2 = g2;
  return out;
}

exact::LaurentExpansion off_shell_coeffs(const exact::LaurentExpansion& gammas) {
  exact::LaurentExpansion out;
  out.pole_order = gammas.pole_order + 1;
  BigRational prev = 0;
  for (const auto& g : gammas.coefficients) {
    prev = (g + prev) / 2;
    out.coefficients.push_back(prev);
  }
  return out;
}

SymplecticReport symplectic_check(const exact::LaurentExpansion& gammas, std::size_t r) {
  if (gammas.length() < 2 * r)
    throw InsufficientCoefficients("symplectic_check: order " + std::to_string(r) + " needs " +
                                   std::to_string(2 * r) + " coefficients, have " +
                                   std::to_string(gammas.length()));
  SymplecticReport rep;
  rep.order_checked = r;
  for (std::size_t m = 1; m <= r; ++m) {
    BigRational s = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const BigRational term = BigRational(exact::binomial(m - 1, k)) * gammas[m + k];
      if (k % 2 == 0)
        s += term;
      else
        s -= term;
    }
    if (sgn(s) != 0) rep.violations.push_back(m);
    rep.residuals.push_back(s);
  }
  return rep;
}

std::vector<BigRational> gamma0_degenerate_sequence(std::size_t count) {
  std::vector<BigRational> out;
  BigRational expected = 1;  // C(2n-2, n-1) / 4^{n-1}, built by its ratio recurrence
  for (std::size_t n = 1; n <= count; ++n) {
    if (n > 1) expected *= exact::make_rational(static_cast<long>(2 * n - 3), static_cast<long>(2 * n - 2));
    const auto e = exact::laurent_at_one(circle::hilbert_completely_degenerate(n).on_shell, 0);
    if (e[0] != expected)
      throw TheoremInconsistency("gamma0 of (1,...,1) with n = " + std::to_string(n) + " is " +
                                 exact::to_string(e[0]) + ", expected " + exact::to_string(expected));
    out.push_back(e[0]);
  }
  return out;
}

exact::LaurentExpansion laurent_for_weights(const circle::WeightVector& a, std::size_t K) {
  return exact::laurent_at_one(circle::hilbert_series(a).on_shell, K);
}

}  // namespace symhilb::analysis
