#include "symhilb/exact/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "symhilb/errors.hpp"
#include "symhilb/kernels/convolution.hpp"

namespace symhilb::exact {

namespace {
const BigRational kZero(0);

int moebius(std::size_t n) {
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}
}  // namespace

Polynomial::Polynomial(std::vector<BigRational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  c_.reserve(coefficients.size());
  for (long v : coefficients) c_.emplace_back(v);
  trim();
}

Polynomial Polynomial::constant(BigRational c) { return Polynomial(std::vector<BigRational>{std::move(c)}); }

Polynomial Polynomial::monomial(BigRational c, std::size_t degree) {
  std::vector<BigRational> v(degree + 1);
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::one_minus_x_pow(std::size_t m) {
  if (m == 0) return Polynomial();
  std::vector<BigRational> v(m + 1);
  v[0] = 1;
  v[m] = -1;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

std::size_t Polynomial::valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return i;
  return 0;
}

const BigRational& Polynomial::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

BigRational Polynomial::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] += other.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.c_.size() > c_.size()) c_.resize(other.c_.size());
  for (std::size_t i = 0; i < other.c_.size(); ++i) c_[i] -= other.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& s) {
  if (sgn(s) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = poly_mul(*this, other); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) { return poly_mul(a, b); }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<BigRational> v(k + c_.size());
  std::copy(c_.begin(), c_.end(), v.begin() + static_cast<long>(k));
  return Polynomial(std::move(v));
}

Polynomial Polynomial::shifted_down(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  if (valuation() < k) throw InputError("shifted_down: polynomial not divisible by x^k");
  return Polynomial(std::vector<BigRational>(c_.begin() + static_cast<long>(k), c_.end()));
}

Polynomial Polynomial::truncated(std::size_t max_degree) const {
  if (c_.size() <= max_degree + 1) return *this;
  return Polynomial(std::vector<BigRational>(c_.begin(), c_.begin() + static_cast<long>(max_degree + 1)));
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial();
  std::vector<BigRational> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
  return Polynomial(std::move(v));
}

Polynomial Polynomial::reflected_at_one() const {
  // Horner in (1 - u): r <- r * (1 - u) + c_i
  std::vector<BigRational> r;
  r.reserve(c_.size());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r.emplace_back(0);
    for (std::size_t j = r.size() - 1; j > 0; --j) r[j] -= r[j - 1];
    r[0] += *it;
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::inflated(std::size_t k) const {
  if (is_zero() || k == 1) return *this;
  std::vector<BigRational> v((c_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
  return Polynomial(std::move(v));
}

Polynomial Polynomial::times_one_minus_x_pow(std::size_t m) const {
  if (is_zero()) return *this;
  std::vector<BigRational> v(c_.size() + m);
  std::copy(c_.begin(), c_.end(), v.begin());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i + m] -= c_[i];
  return Polynomial(std::move(v));
}

bool Polynomial::is_palindromic() const {
  const std::size_t v = valuation();
  for (std::size_t i = v, j = c_.size() - 1; i < j; ++i, --j)
    if (c_[i] != c_[j]) return false;
  return true;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial r = *this;
  const BigRational inv = 1 / leading();
  return r *= inv;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const BigRational& c = c_[i];
    if (sgn(c) == 0) continue;
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const BigRational mag = abs(c);
    if (i == 0 || mag != 1) os << exact::to_string(mag);
    if (i > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  return Polynomial(kernels::convolve(a.coefficients(), b.coefficients()));
}

Polynomial poly_mul_reference(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  return Polynomial(kernels::convolve_serial(a.coefficients(), b.coefficients()));
}

Polynomial pow(const Polynomial& p, std::size_t e) {
  Polynomial result = Polynomial::constant(1);
  Polynomial base = p;
  while (e > 0) {
    if (e & 1u) result = poly_mul(result, base);
    e >>= 1u;
    if (e > 0) base = poly_mul(base, base);
  }
  return result;
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<BigRational> rem(a.coefficients().begin(), a.coefficients().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigRational> quo(rem.size() - db);
  const BigRational inv_lead = 1 / b.leading();
  BigRational tmp;
  for (std::size_t k = quo.size(); k-- > 0;) {
    BigRational& q = quo[k];
    q = rem[k + db] * inv_lead;
    if (sgn(q) == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      if (sgn(b[j]) == 0) continue;
      tmp = q * b[j];
      rem[k + j] -= tmp;
    }
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  DivMod dm = divmod(a, b);
  if (!dm.remainder.is_zero()) return std::nullopt;
  return std::move(dm.quotient);
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).remainder.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::vector<std::size_t> divisors(std::size_t n) {
  std::vector<std::size_t> small, large;
  for (std::size_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Polynomial cyclotomic(std::size_t d) {
  if (d == 0) throw InputError("cyclotomic(0)");
  if (d == 1) return Polynomial{1, -1};
  // Phi_d = prod_{e | d} (1 - x^e)^{mu(d/e)}, computed as a series truncated at
  // deg Phi_d = phi(d); every step is exact because the end result is a polynomial.
  std::size_t phi = d;
  {
    std::size_t n = d;
    for (std::size_t p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      while (n % p == 0) n /= p;
      phi -= phi / p;
    }
    if (n > 1) phi -= phi / n;
  }
  std::vector<BigInt> s(phi + 1);
  s[0] = 1;
  const auto divs = divisors(d);
  for (std::size_t e : divs)
    if (moebius(d / e) == 1)
      for (std::size_t i = phi; i >= e; --i) s[i] -= s[i - e];
  for (std::size_t e : divs)
    if (moebius(d / e) == -1)
      for (std::size_t i = e; i <= phi; ++i) s[i] += s[i - e];
  std::vector<BigRational> c(s.begin(), s.end());
  return Polynomial(std::move(c));
}

}  // namespace symhilb::exact
