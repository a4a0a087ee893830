#include "symhilb/exact/rational_function.hpp"

#include <algorithm>
#include <sstream>

#include "symhilb/errors.hpp"

namespace symhilb::exact {

namespace {

Polynomial cyclotomic_product(const std::map<std::size_t, std::size_t>& exps) {
  Polynomial acc = Polynomial::constant(1);
  for (const auto& [d, e] : exps)
    if (e > 0) acc = poly_mul(acc, pow(cyclotomic(d), e));
  return acc;
}

// Remainder of p modulo x^d - 1 (exponents folded mod d), then modulo Phi_d.
bool divisible_by_cyclotomic(const Polynomial& p, std::size_t d, const Polynomial& phi) {
  std::vector<BigRational> folded(d);
  const auto c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) folded[i % d] += c[i];
  return divmod(Polynomial(std::move(folded)), phi).remainder.is_zero();
}

}  // namespace

// ---------------------------------------------------------------------------
// FactoredDenominator

FactoredDenominator::FactoredDenominator(FactorMap factors, std::size_t monomial_shift, Polynomial other)
    : shift_(monomial_shift), other_(std::move(other)) {
  for (const auto& [m, e] : factors) {
    if (m == 0) throw InputError("denominator factor 1 - x^0 vanishes identically");
    if (e > 0) factors_[m] += e;
  }
  if (other_.is_zero() || other_[0] != 1) throw InputError("denominator cofactor must have constant term 1");
}

std::size_t FactoredDenominator::degree() const {
  std::size_t d = shift_ + static_cast<std::size_t>(other_.degree());
  for (const auto& [m, e] : factors_) d += m * e;
  return d;
}

Polynomial FactoredDenominator::expand() const {
  Polynomial p = other_;
  for (const auto& [m, e] : factors_)
    for (std::size_t k = 0; k < e; ++k) p = p.times_one_minus_x_pow(m);
  return p.shifted_up(shift_);
}

FactoredDenominator FactoredDenominator::operator*(const FactoredDenominator& rhs) const {
  FactorMap f = factors_;
  for (const auto& [m, e] : rhs.factors_) f[m] += e;
  Polynomial o = other_.degree() == 0 ? rhs.other_ : (rhs.other_.degree() == 0 ? other_ : poly_mul(other_, rhs.other_));
  return FactoredDenominator(std::move(f), shift_ + rhs.shift_, std::move(o));
}

std::map<std::size_t, std::size_t> FactoredDenominator::cyclotomic_exponents() const {
  std::map<std::size_t, std::size_t> exps;
  for (const auto& [m, e] : factors_)
    for (std::size_t d : divisors(m)) exps[d] += e;
  return exps;
}

FactoredDenominator::FactorMap FactoredDenominator::cover(std::map<std::size_t, std::size_t> exponents) {
  FactorMap out;
  std::erase_if(exponents, [](const auto& kv) { return kv.second == 0; });
  while (!exponents.empty()) {
    const std::size_t d = exponents.rbegin()->first;
    ++out[d];
    for (std::size_t q : divisors(d)) {
      auto it = exponents.find(q);
      if (it != exponents.end() && --it->second == 0) exponents.erase(it);
    }
  }
  return out;
}

std::string FactoredDenominator::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&] {
    if (!first) os << "*";
    first = false;
  };
  if (shift_ > 0) {
    sep();
    os << "x^" << shift_;
  }
  for (const auto& [m, e] : factors_) {
    sep();
    os << "(1 - x" << (m > 1 ? "^" + std::to_string(m) : "") << ")";
    if (e > 1) os << "^" << e;
  }
  if (other_.degree() > 0) {
    sep();
    os << "(" << other_.to_string() << ")";
  }
  if (first) os << "1";
  return os.str();
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(Polynomial numerator, FactoredDenominator denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.is_zero()) den_ = FactoredDenominator();
}

RationalFunction RationalFunction::from_polynomials(const Polynomial& numerator, const Polynomial& denominator) {
  if (denominator.is_zero()) throw InputError("rational function with zero denominator");
  const std::size_t v = denominator.valuation();
  Polynomial rest = denominator.shifted_down(v);
  const BigRational c = rest[0];
  rest *= BigRational(1 / c);
  return RationalFunction(numerator * BigRational(1 / c), FactoredDenominator({}, v, std::move(rest)));
}

RationalFunction RationalFunction::reduced() const {
  if (num_.is_zero()) return RationalFunction();
  Polynomial num = num_;
  std::size_t shift = den_.monomial_shift();
  const std::size_t k = std::min(num.valuation(), shift);
  num = num.shifted_down(k);
  shift -= k;

  auto exps = den_.cyclotomic_exponents();
  for (auto& [d, e] : exps) {
    const Polynomial phi = cyclotomic(d);
    while (e > 0 && divisible_by_cyclotomic(num, d, phi)) {
      num = *exact_divide(num, phi);
      --e;
    }
  }

  Polynomial other = den_.other();
  if (other.degree() > 0) {
    const Polynomial g = gcd(num, other);
    if (g.degree() > 0) {
      num = *exact_divide(num, g);
      other = *exact_divide(other, g);
    }
    const BigRational c = other[0];
    if (c != 1) {
      other *= BigRational(1 / c);
      num *= BigRational(1 / c);
    }
  }

  // Rewrite the surviving Phi_d multiset as prod (1 - x^m)^e without overshoot;
  // whatever cannot be covered exactly stays in the cofactor.
  std::erase_if(exps, [](const auto& kv) { return kv.second == 0; });
  FactoredDenominator::FactorMap factors;
  Polynomial extra = Polynomial::constant(1);
  while (!exps.empty()) {
    const std::size_t d = exps.rbegin()->first;
    const auto divs = divisors(d);
    const bool coverable = std::all_of(divs.begin(), divs.end(), [&](std::size_t q) { return exps.count(q) > 0; });
    if (coverable) {
      ++factors[d];
      for (std::size_t q : divs)
        if (--exps[q] == 0) exps.erase(q);
    } else {
      extra = poly_mul(extra, cyclotomic(d));
      if (--exps[d] == 0) exps.erase(d);
    }
  }
  if (extra.degree() > 0) other = poly_mul(other, extra);
  return RationalFunction(std::move(num), FactoredDenominator(std::move(factors), shift, std::move(other)));
}

RationalFunction RationalFunction::operator+(const RationalFunction& rhs) const {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return rhs;
  const auto& d1 = den_;
  const auto& d2 = rhs.den_;
  const std::size_t shift = std::max(d1.monomial_shift(), d2.monomial_shift());
  const auto e1 = d1.cyclotomic_exponents();
  const auto e2 = d2.cyclotomic_exponents();
  std::map<std::size_t, std::size_t> lcm = e1;
  for (const auto& [d, e] : e2) lcm[d] = std::max(lcm[d], e);
  const auto factors = FactoredDenominator::cover(lcm);
  const auto cover_exps = FactoredDenominator(factors).cyclotomic_exponents();

  auto multiplier = [&](const std::map<std::size_t, std::size_t>& own) {
    std::map<std::size_t, std::size_t> diff;
    for (const auto& [d, e] : cover_exps) {
      auto it = own.find(d);
      const std::size_t have = it == own.end() ? 0 : it->second;
      if (e > have) diff[d] = e - have;
    }
    return cyclotomic_product(diff);
  };

  Polynomial other;
  Polynomial m1 = multiplier(e1);
  Polynomial m2 = multiplier(e2);
  if (d1.other() == d2.other()) {
    other = d1.other();
  } else {
    other = poly_mul(d1.other(), d2.other());
    m1 = poly_mul(m1, d2.other());
    m2 = poly_mul(m2, d1.other());
  }
  Polynomial n1 = poly_mul(num_, m1).shifted_up(shift - d1.monomial_shift());
  Polynomial n2 = poly_mul(rhs.num_, m2).shifted_up(shift - d2.monomial_shift());
  return RationalFunction(n1 + n2, FactoredDenominator(factors, shift, std::move(other)));
}

RationalFunction RationalFunction::operator-(const RationalFunction& rhs) const { return *this + rhs * BigRational(-1); }

RationalFunction RationalFunction::operator*(const RationalFunction& rhs) const {
  return RationalFunction(poly_mul(num_, rhs.num_), den_ * rhs.den_);
}

RationalFunction RationalFunction::operator*(const BigRational& s) const { return RationalFunction(num_ * s, den_); }

RationalFunction RationalFunction::times_polynomial(const Polynomial& p) const {
  return RationalFunction(poly_mul(num_, p), den_);
}

RationalFunction RationalFunction::over_one_minus_x_pow(std::size_t m, std::size_t e) const {
  return RationalFunction(num_, den_ * FactoredDenominator({{m, e}}));
}

bool RationalFunction::equals(const RationalFunction& rhs) const {
  return poly_mul(num_, rhs.den_.expand()) == poly_mul(rhs.num_, den_.expand());
}

std::string RationalFunction::to_string() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

TruncatedSeries series_of_rational(const RationalFunction& f, std::size_t order) {
  const auto& den = f.denominator();
  Polynomial num = f.numerator();
  if (den.monomial_shift() > 0) {
    if (!num.is_zero() && num.valuation() < den.monomial_shift())
      throw DenominatorVanishesAtZero("rational function has a pole at x = 0");
    num = num.shifted_down(den.monomial_shift());
  }
  TruncatedSeries s = TruncatedSeries::from_polynomial(num, order);
  for (const auto& [m, e] : den.factors())
    for (std::size_t k = 0; k < e; ++k) s.divide_one_minus_x_pow(m);
  if (den.other().degree() > 0) s.divide(den.other());
  return s;
}

}  // namespace symhilb::exact
