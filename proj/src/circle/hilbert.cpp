#include "symhilb/circle/hilbert.hpp"

#include <exception>
#include <map>
#include <vector>

#include "symhilb/circle/averaging.hpp"
#include "symhilb/circle/oracle.hpp"
#include "symhilb/errors.hpp"

namespace symhilb::circle {

using exact::binomial;
using exact::FactoredDenominator;
using exact::Polynomial;
using exact::RationalFunction;

std::string to_string(Method m) {
  switch (m) {
    case Method::Generic: return "generic";
    case Method::DegenerateResidue: return "degenerate-residue";
    case Method::CompletelyDegenerate: return "completely-degenerate";
    case Method::Oracle: return "oracle";
  }
  return "unknown";
}

namespace {

const Polynomial kOneMinusXSquared = Polynomial::one_minus_x_pow(2);

WeightVector as_vector(const WeightProfile& a) {
  WeightVector out;
  for (std::size_t w : a.weights()) out.push_back(static_cast<long>(w));
  return out;
}

HilbertSeriesResult finish(RationalFunction on, WeightVector w, Method m) {
  HilbertSeriesResult r;
  r.on_shell = on.reduced();
  r.off_shell = r.on_shell.over_one_minus_x_pow(2).reduced();
  r.weights = std::move(w);
  r.method = m;
  r.palindromic = r.on_shell.numerator().is_palindromic();
  return r;
}

// Evaluates body(k) for k in [0, n) and returns the results in index order;
// the first exception thrown by any iteration is rethrown.
template <typename Body>
std::vector<RationalFunction> map_indices(std::size_t n, bool parallel, Body body) {
  std::vector<RationalFunction> out(n);
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 1) if (parallel && n > 1)
  for (long k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = body(static_cast<std::size_t>(k));
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

RationalFunction sum_in_order(const std::vector<RationalFunction>& parts) {
  RationalFunction total;
  for (const auto& p : parts) total = total + p;
  return total;
}

// Truncated power series in eps whose coefficients are polynomials in u.
using EpsSeries = std::vector<Polynomial>;

EpsSeries eps_mul(const EpsSeries& a, const EpsSeries& b) {
  EpsSeries c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; i + j < a.size(); ++j)
      if (!a[i].is_zero() && !b[j].is_zero()) c[i + j] += exact::poly_mul(a[i], b[j]);
  return c;
}

EpsSeries eps_pow(const EpsSeries& a, std::size_t e) {
  EpsSeries r(a.size());
  r[0] = Polynomial::constant(1);
  for (std::size_t k = 0; k < e; ++k) r = eps_mul(r, a);
  return r;
}

Polynomial mono(const BigRational& c, long degree) {
  return Polynomial::monomial(c, static_cast<std::size_t>(degree));
}

// z^k at z = u + eps
EpsSeries z_power(std::size_t k, std::size_t len) {
  EpsSeries s(len);
  for (std::size_t j = 0; j < len && j <= k; ++j) s[j] = mono(BigRational(binomial(k, j)), static_cast<long>(k - j));
  return s;
}

// 1 - u^a z^b
EpsSeries one_minus_ua_zb(std::size_t a, std::size_t b, std::size_t len) {
  EpsSeries s(len);
  s[0] = Polynomial::one_minus_x_pow(a + b);
  for (std::size_t j = 1; j < len && j <= b; ++j) s[j] = mono(BigRational(-binomial(b, j)), static_cast<long>(a + b - j));
  return s;
}

// z^b - u^a
EpsSeries zb_minus_ua(std::size_t a, std::size_t b, std::size_t len) {
  EpsSeries s(len);
  s[0] = mono(1, static_cast<long>(b)) - mono(1, static_cast<long>(a));
  for (std::size_t j = 1; j < len && j <= b; ++j) s[j] = mono(BigRational(binomial(b, j)), static_cast<long>(b - j));
  return s;
}

// (z^a - u^a) / (z - u)
EpsSeries divided_difference(std::size_t a, std::size_t len) {
  EpsSeries s(len);
  for (std::size_t j = 0; j < len && j + 1 <= a; ++j)
    s[j] = mono(BigRational(binomial(a, j + 1)), static_cast<long>(a - 1 - j));
  return s;
}

}  // namespace

RationalFunction phi_tilde(std::size_t i, const WeightProfile& a) {
  if (!a.is_generic()) throw DegenerateWeights("phi_tilde: weights must be pairwise distinct");
  const auto w = a.weights();
  if (i >= w.size()) throw InputError("phi_tilde: index out of range");
  FactoredDenominator::FactorMap factors;
  std::size_t shift = 0;
  BigRational sign = 1;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (j == i) continue;
    ++factors[w[i] + w[j]];
    if (w[i] > w[j]) {
      ++factors[w[i] - w[j]];
    } else {
      // 1 / (1 - x^{-m}) = -x^m / (1 - x^m)
      const std::size_t m = w[j] - w[i];
      ++factors[m];
      shift += m;
      sign = -sign;
    }
  }
  return RationalFunction(Polynomial::monomial(sign, shift), FactoredDenominator(std::move(factors)));
}

RationalFunction residue_cluster(std::size_t a, std::size_t p, const WeightProfile& rest) {
  if (a == 0 || p == 0) throw InputError("residue_cluster: a and p must be positive");
  const std::size_t len = p;

  std::size_t num_power = p * a - 1;
  for (const auto& [b, pb] : rest.distinct) num_power += b * pb;
  const EpsSeries numer = z_power(num_power, len);

  EpsSeries den = eps_pow(one_minus_ua_zb(a, a, len), p);
  den = eps_mul(den, eps_pow(divided_difference(a, len), p));
  for (const auto& [b, pb] : rest.distinct) {
    if (b == a) throw InputError("residue_cluster: rest must not contain the cluster weight");
    den = eps_mul(den, eps_pow(one_minus_ua_zb(a, b, len), pb));
    den = eps_mul(den, eps_pow(zb_minus_ua(a, b, len), pb));
  }

  // den[0] = c0 u^s0 prod (1 - u^m)^e
  BigInt c0 = 1;
  for (std::size_t k = 0; k < p; ++k) c0 *= static_cast<unsigned long>(a);
  std::size_t s0 = (a - 1) * p;
  FactoredDenominator::FactorMap d0_factors{{2 * a, p}};
  for (const auto& [b, pb] : rest.distinct) {
    if (b > a && pb % 2 == 1) c0 = -c0;
    s0 += pb * std::min(a, b);
    d0_factors[a + b] += pb;
    d0_factors[b > a ? b - a : a - b] += pb;
  }
  {
    const Polynomial expected = FactoredDenominator(d0_factors, s0).expand() * BigRational(c0);
    if (!(expected == den[0])) throw VerificationError("residue_cluster: constant eps term mismatch");
  }

  // H_k = N_k D0^k - sum_{j=1}^k D_j H_{k-j} D0^{j-1}; the residue is H_{p-1} / D0^p.
  std::vector<Polynomial> d0_pow(len + 1);
  d0_pow[0] = Polynomial::constant(1);
  for (std::size_t k = 1; k <= len; ++k) d0_pow[k] = exact::poly_mul(d0_pow[k - 1], den[0]);
  std::vector<Polynomial> h(len);
  for (std::size_t k = 0; k < len; ++k) {
    Polynomial acc = exact::poly_mul(numer[k], d0_pow[k]);
    for (std::size_t j = 1; j <= k; ++j)
      if (!den[j].is_zero()) acc -= exact::poly_mul(exact::poly_mul(den[j], h[k - j]), d0_pow[j - 1]);
    h[k] = std::move(acc);
  }

  FactoredDenominator::FactorMap factors;
  for (const auto& [m, e] : d0_factors) factors[m] = e * p;
  BigInt scale = 1;
  for (std::size_t k = 0; k < p; ++k) scale *= c0;
  return RationalFunction(h[len - 1] * exact::make_rational(1, scale),
                          FactoredDenominator(std::move(factors), s0 * p));
}

std::vector<RationalFunction> generic_terms(const WeightProfile& profile, const HilbertOptions& opts) {
  if (!profile.is_generic()) throw DegenerateWeights("generic_terms: weights must be pairwise distinct");
  const WeightProfile a = profile.effective();
  const auto w = a.weights();
  return map_indices(w.size(), opts.parallel,
                     [&](std::size_t i) { return u_average(phi_tilde(i, a), w[i], opts.slack); });
}

HilbertSeriesResult hilbert_on_generic(const WeightProfile& profile, const HilbertOptions& opts) {
  if (!profile.is_generic()) throw DegenerateWeights("hilbert_on_generic: weights must be pairwise distinct");
  return finish(sum_in_order(generic_terms(profile, opts)), as_vector(profile), Method::Generic);
}

HilbertSeriesResult hilbert_on_degenerate(const WeightProfile& profile, const HilbertOptions& opts) {
  const WeightProfile a = profile.effective();
  const auto parts = map_indices(a.distinct.size(), opts.parallel, [&](std::size_t k) {
    const auto [w, p] = a.distinct[k];
    return u_average(residue_cluster(w, p, a.without(k)), w, opts.slack) * BigRational(static_cast<long>(w));
  });
  const RationalFunction off = sum_in_order(parts).reduced();
  HilbertSeriesResult r = finish(off.times_polynomial(kOneMinusXSquared), as_vector(profile), Method::DegenerateResidue);

  if (opts.verify_degree > 0) {
    const auto counts = oracle_series(r.weights, opts.verify_degree);
    const auto series = exact::series_of_rational(r.off_shell, opts.verify_degree);
    for (std::size_t k = 0; k <= opts.verify_degree; ++k)
      if (series[k] != BigRational(counts[k]))
        throw OracleMismatch("hilbert_on_degenerate: coefficient " + std::to_string(k) + " is " +
                             exact::to_string(series[k]) + ", oracle count " + counts[k].get_str());
  }
  return r;
}

HilbertSeriesResult hilbert_completely_degenerate(std::size_t n) {
  if (n == 0) throw InputError("hilbert_completely_degenerate: n must be positive");
  std::vector<BigRational> num(2 * n - 1);
  for (std::size_t k = 0; k < n; ++k) {
    const BigInt c = binomial(n - 1, k);
    num[2 * k] = BigRational(c * c);
  }
  HilbertSeriesResult r;
  FactoredDenominator::FactorMap den;
  if (n > 1) den[2] = 2 * n - 2;
  r.on_shell = RationalFunction(Polynomial(std::move(num)), FactoredDenominator(std::move(den)));
  r.off_shell = r.on_shell.over_one_minus_x_pow(2);
  r.weights = WeightVector(n, 1);
  r.method = Method::CompletelyDegenerate;
  r.palindromic = r.on_shell.numerator().is_palindromic();
  return r;
}

HilbertSeriesResult hilbert_via_oracle(const WeightVector& a, const FactoredDenominator& off_denominator,
                                       std::size_t slack) {
  const std::size_t bound = off_denominator.degree();
  const std::size_t order = off_denominator.degree() + bound + slack;
  const auto counts = oracle_series(a, order);
  std::vector<BigRational> c(counts.begin(), counts.end());
  const Polynomial num = exact::rational_reconstruct(exact::TruncatedSeries(std::move(c), order), off_denominator, bound, slack);
  return finish(RationalFunction(num, off_denominator).times_polynomial(kOneMinusXSquared), a, Method::Oracle);
}

HilbertSeriesResult hilbert_series(const WeightVector& a, const HilbertOptions& opts) {
  const WeightProfile profile = normalize(a);
  HilbertSeriesResult r;
  if (profile.distinct.size() == 1)
    r = hilbert_completely_degenerate(profile.size());
  else if (profile.is_generic())
    r = hilbert_on_generic(profile, opts);
  else
    r = hilbert_on_degenerate(profile, opts);
  r.weights = a;
  return r;
}

}  // namespace symhilb::circle
