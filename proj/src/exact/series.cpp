#include "symhilb/exact/series.hpp"

#include <algorithm>

#include "symhilb/errors.hpp"
#include "symhilb/kernels/convolution.hpp"

namespace symhilb::exact {

TruncatedSeries::TruncatedSeries(std::vector<BigRational> coefficients, std::size_t order)
    : c_(std::move(coefficients)) {
  c_.resize(order + 1);
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  const auto src = p.coefficients();
  std::vector<BigRational> v(src.begin(), src.begin() + static_cast<long>(std::min(src.size(), order + 1)));
  return TruncatedSeries(std::move(v), order);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
  c_.resize(std::min(c_.size(), other.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
  c_.resize(std::min(c_.size(), other.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const BigRational& s) {
  for (auto& v : c_) v *= s;
  return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  return TruncatedSeries(kernels::convolve(a.c_, b.c_, n), n - 1);
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_.empty() || sgn(c_[0]) == 0) throw DenominatorVanishesAtZero("series inverse: zero constant term");
  std::vector<BigRational> r(c_.size());
  const BigRational inv0 = 1 / c_[0];
  r[0] = inv0;
  BigRational acc, tmp;
  for (std::size_t k = 1; k < c_.size(); ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (sgn(c_[j]) == 0) continue;
      tmp = c_[j] * r[k - j];
      acc += tmp;
    }
    r[k] = -acc * inv0;
  }
  return TruncatedSeries(std::move(r), c_.size() - 1);
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  TruncatedSeries q(a.c_, n - 1);
  return q.divide(Polynomial(std::vector<BigRational>(b.c_.begin(), b.c_.begin() + static_cast<long>(n))));
}

TruncatedSeries& TruncatedSeries::multiply_one_minus_x_pow(std::size_t m) {
  for (std::size_t i = c_.size(); i-- > m;) c_[i] -= c_[i - m];
  return *this;
}

TruncatedSeries& TruncatedSeries::divide_one_minus_x_pow(std::size_t m) {
  for (std::size_t i = m; i < c_.size(); ++i) c_[i] += c_[i - m];
  return *this;
}

TruncatedSeries& TruncatedSeries::multiply(const Polynomial& p) {
  const std::size_t n = c_.size();
  c_ = kernels::convolve(c_, p.coefficients(), n);
  c_.resize(n);
  return *this;
}

TruncatedSeries& TruncatedSeries::divide(const Polynomial& p) {
  if (sgn(p[0]) == 0) throw DenominatorVanishesAtZero("series division by a polynomial vanishing at 0");
  const BigRational inv0 = 1 / p[0];
  const auto pc = p.coefficients();
  BigRational tmp;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const std::size_t top = std::min(k, pc.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      if (sgn(pc[j]) == 0) continue;
      tmp = pc[j] * c_[k - j];
      c_[k] -= tmp;
    }
    if (inv0 != 1) c_[k] *= inv0;
  }
  return *this;
}

}  // namespace symhilb::exact
