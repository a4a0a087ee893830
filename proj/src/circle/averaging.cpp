#include "symhilb/circle/averaging.hpp"

#include "symhilb/errors.hpp"

namespace symhilb::circle {

using exact::FactoredDenominator;
using exact::Polynomial;
using exact::RationalFunction;

RationalFunction u_average(const RationalFunction& f, std::size_t a, std::size_t slack) {
  if (a == 0) throw InputError("u_average: a must be positive");
  if (a == 1 || f.is_zero()) return f;

  const auto& den = f.denominator();
  const std::size_t vn = f.numerator().valuation();
  // f = x^v * n / g_den with n(0) != 0 and g_den(0) = 1
  const long v = static_cast<long>(vn) - static_cast<long>(den.monomial_shift());
  const Polynomial n = f.numerator().shifted_down(vn);
  const FactoredDenominator g_den(den.factors(), 0, den.other());

  const long sa = static_cast<long>(a);
  const long i0 = v >= 0 ? (v + sa - 1) / sa : -((-v) / sa);
  const auto r = static_cast<std::size_t>(i0 * sa - v);

  const FactoredDenominator qa = exact::multisection_denominator(g_den, a);
  const long top = n.degree() + static_cast<long>((a - 1) * g_den.degree()) - static_cast<long>(r);
  const std::size_t bound = top < 0 ? 0 : static_cast<std::size_t>(top) / a;
  const std::size_t len = qa.degree() + bound + slack;

  const auto g = exact::series_of_rational(RationalFunction(n, g_den), len * a + r);
  std::vector<BigRational> section(len + 1);
  for (std::size_t k = 0; k <= len; ++k) section[k] = g[k * a + r];
  const Polynomial p = exact::rational_reconstruct(exact::TruncatedSeries(std::move(section), len), qa, bound, slack);

  if (i0 >= 0) return RationalFunction(p.shifted_up(static_cast<std::size_t>(i0)), qa);
  return RationalFunction(p, FactoredDenominator(qa.factors(), static_cast<std::size_t>(-i0), qa.other()));
}

}  // namespace symhilb::circle
