#include "symhilb/exact/reconstruct.hpp"

#include <numeric>
#include <string>

#include "symhilb/errors.hpp"

namespace symhilb::exact {

Polynomial rational_reconstruct(const TruncatedSeries& prefix, const FactoredDenominator& den,
                                std::size_t degree_bound, std::size_t slack) {
  const std::size_t need = den.degree() + degree_bound + slack;
  if (prefix.order() < need)
    throw InsufficientPrefix("rational_reconstruct: prefix order " + std::to_string(prefix.order()) + " < " +
                             std::to_string(need));
  TruncatedSeries prod = prefix;
  for (const auto& [m, e] : den.factors())
    for (std::size_t k = 0; k < e; ++k) prod.multiply_one_minus_x_pow(m);
  if (den.other().degree() > 0) prod.multiply(den.other());

  const std::size_t shift = den.monomial_shift();
  const auto c = prod.coefficients();
  // Coefficient j of prefix * den is c[j - shift].
  for (std::size_t j = degree_bound + 1; j <= prefix.order(); ++j) {
    if (j < shift) continue;
    if (sgn(c[j - shift]) != 0)
      throw ReconstructionMismatch("rational_reconstruct: coefficient " + std::to_string(j) +
                                   " of prefix*denominator is nonzero beyond the degree bound " +
                                   std::to_string(degree_bound));
  }
  std::vector<BigRational> num;
  if (degree_bound >= shift) {
    const std::size_t top = degree_bound - shift;
    num.assign(c.begin(), c.begin() + static_cast<long>(std::min(top + 1, c.size())));
  }
  return Polynomial(std::move(num)).shifted_up(shift);
}

namespace {

using Matrix = std::vector<std::vector<BigRational>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<BigRational>(n));
  BigRational tmp;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (sgn(a[i][k]) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(b[k][j]) == 0) continue;
        tmp = a[i][k] * b[k][j];
        c[i][j] += tmp;
      }
    }
  return c;
}

Matrix matrix_power(Matrix base, std::size_t e) {
  const std::size_t n = base.size();
  Matrix result(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i) result[i][i] = 1;
  while (e > 0) {
    if (e & 1u) result = multiply(result, base);
    e >>= 1u;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

// det(x I - M) via similarity reduction to upper Hessenberg form.
Polynomial characteristic_polynomial(Matrix h) {
  const std::size_t n = h.size();
  for (std::size_t c = 0; c + 2 < n; ++c) {
    std::size_t p = c + 1;
    while (p < n && sgn(h[p][c]) == 0) ++p;
    if (p == n) continue;
    if (p != c + 1) {
      std::swap(h[p], h[c + 1]);
      for (auto& row : h) std::swap(row[p], row[c + 1]);
    }
    for (std::size_t r = c + 2; r < n; ++r) {
      if (sgn(h[r][c]) == 0) continue;
      const BigRational f = h[r][c] / h[c + 1][c];
      for (std::size_t j = 0; j < n; ++j) h[r][j] -= f * h[c + 1][j];
      for (std::size_t i = 0; i < n; ++i) h[i][c + 1] += f * h[i][r];
    }
  }
  std::vector<Polynomial> p(n + 1);
  p[0] = Polynomial::constant(1);
  const Polynomial x = Polynomial::monomial(1, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    p[k] = poly_mul(x - Polynomial::constant(h[k - 1][k - 1]), p[k - 1]);
    BigRational prod = 1;
    for (std::size_t i = 1; i < k; ++i) {
      prod *= h[k - i][k - i - 1];
      if (sgn(prod) == 0) break;
      p[k] -= p[k - 1 - i] * BigRational(h[k - 1 - i][k - 1] * prod);
    }
  }
  return p[n];
}

}  // namespace

Polynomial resultant_transform(const Polynomial& den, std::size_t a) {
  if (a == 0) throw InputError("resultant_transform: a must be >= 1");
  if (den.is_zero() || sgn(den[0]) == 0) throw InputError("resultant_transform: den(0) must be nonzero");
  if (a == 1) return den;
  BigRational d0a = 1;
  for (std::size_t k = 0; k < a; ++k) d0a *= den[0];
  const std::size_t n = static_cast<std::size_t>(den.degree());
  if (n == 0) return Polynomial::constant(d0a);

  Matrix companion(n, std::vector<BigRational>(n));
  const BigRational lead = den.leading();
  for (std::size_t i = 0; i + 1 < n; ++i) companion[i + 1][i] = 1;
  for (std::size_t i = 0; i < n; ++i) companion[i][n - 1] = -den[i] / lead;

  Polynomial chi = characteristic_polynomial(matrix_power(std::move(companion), a));
  return chi * BigRational(d0a / chi[0]);
}

FactoredDenominator multisection_denominator(const FactoredDenominator& den, std::size_t a) {
  FactoredDenominator::FactorMap out;
  for (const auto& [m, e] : den.factors()) {
    const std::size_t g = std::gcd(a, m);
    out[std::lcm(a, m) / a] += g * e;
  }
  Polynomial other = den.other().degree() > 0 ? resultant_transform(den.other(), a) : den.other();
  return FactoredDenominator(std::move(out), 0, std::move(other));
}

}  // namespace symhilb::exact
