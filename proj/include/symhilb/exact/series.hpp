#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "symhilb/exact/polynomial.hpp"
#include "symhilb/exact/rational.hpp"

namespace symhilb::exact {

/// Power-series prefix c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
/// Binary arithmetic truncates to the smaller of the two orders.
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  /// Pads with zeros or drops terms so that exactly order+1 coefficients are kept.
  TruncatedSeries(std::vector<BigRational> coefficients, std::size_t order);
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const { return c_.empty() ? 0 : c_.size() - 1; }
  const BigRational& operator[](std::size_t i) const { return c_.at(i); }
  std::span<const BigRational> coefficients() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& other);
  TruncatedSeries& operator-=(const TruncatedSeries& other);
  TruncatedSeries& operator*=(const BigRational& s);
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inverse() const;

  // Sparse in-place updates used by the cyclotomic kernels.
  TruncatedSeries& multiply_one_minus_x_pow(std::size_t m);
  TruncatedSeries& divide_one_minus_x_pow(std::size_t m);
  /// Multiplies by a polynomial, keeping the current order.
  TruncatedSeries& multiply(const Polynomial& p);
  /// Divides by a polynomial with nonzero constant term, keeping the current order.
  TruncatedSeries& divide(const Polynomial& p);

  Polynomial to_polynomial() const { return Polynomial(c_); }

 private:
  std::vector<BigRational> c_;
};

}  // namespace symhilb::exact
