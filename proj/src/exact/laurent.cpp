#include "symhilb/exact/laurent.hpp"

#include "symhilb/errors.hpp"
#include "symhilb/exact/series.hpp"

namespace symhilb::exact {

LaurentExpansion laurent_at_one(const RationalFunction& f, std::size_t K) {
  if (f.is_zero()) return {0, std::vector<BigRational>(K + 1)};
  // x = 1 - u turns f into a Laurent series in u; the valuations of the two
  // reflected polynomials give the exact pole order.
  const Polynomial num = f.numerator().reflected_at_one();
  const Polynomial den = f.expanded_denominator().reflected_at_one();
  const std::size_t vn = num.valuation();
  const std::size_t vd = den.valuation();
  TruncatedSeries s = TruncatedSeries::from_polynomial(num.shifted_down(vn), K);
  s.divide(den.shifted_down(vd));
  LaurentExpansion out;
  out.pole_order = static_cast<long>(vd) - static_cast<long>(vn);
  out.coefficients.assign(s.coefficients().begin(), s.coefficients().end());
  return out;
}

LaurentExpansion laurent_prototype(const BigRational& t, std::size_t K) {
  if (sgn(t) == 0) throw InputError("laurent_prototype: t must be nonzero");
  // 1 - (1 - u)^t = u * sum_k (-1)^k C(t, k+1) u^k
  std::vector<BigRational> c(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    c[k] = binomial(t, k + 1);
    if (k % 2 == 1) c[k] = -c[k];
  }
  const TruncatedSeries inv = TruncatedSeries(std::move(c), K).inverse();
  LaurentExpansion out;
  out.pole_order = 1;
  out.coefficients.assign(inv.coefficients().begin(), inv.coefficients().end());
  return out;
}

}  // namespace symhilb::exact
