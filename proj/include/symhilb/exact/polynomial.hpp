#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symhilb/exact/rational.hpp"

namespace symhilb::exact {

/// Dense univariate polynomial over Q, coefficients indexed by degree.
/// Trailing zeros are trimmed, so the leading coefficient is nonzero unless
/// the polynomial is zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial constant(BigRational c);
  static Polynomial monomial(BigRational c, std::size_t degree);
  /// 1 - x^m
  static Polynomial one_minus_x_pow(std::size_t m);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient; 0 for the zero polynomial.
  std::size_t valuation() const;
  std::size_t size() const { return c_.size(); }

  /// Coefficient of x^i (zero beyond the degree).
  const BigRational& operator[](std::size_t i) const;
  std::span<const BigRational> coefficients() const { return c_; }
  const BigRational& leading() const { return (*this)[c_.empty() ? 0 : c_.size() - 1]; }

  BigRational evaluate(const BigRational& x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const BigRational& s);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const BigRational& s) { return a *= s; }
  friend Polynomial operator*(const BigRational& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// x^k * p
  Polynomial shifted_up(std::size_t k) const;
  /// p / x^k; requires valuation() >= k.
  Polynomial shifted_down(std::size_t k) const;
  Polynomial truncated(std::size_t max_degree) const;
  Polynomial derivative() const;
  /// p(1 - u) as a polynomial in u.
  Polynomial reflected_at_one() const;
  /// p(x^k)
  Polynomial inflated(std::size_t k) const;
  /// p * (1 - x^m), sparse update.
  Polynomial times_one_minus_x_pow(std::size_t m) const;
  bool is_palindromic() const;
  Polynomial monic() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<BigRational> c_;
};

/// Exact product; uses the OpenMP convolution kernel above a size threshold.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);
/// Schoolbook product, serial; the reference the kernel is tested against.
Polynomial poly_mul_reference(const Polynomial& a, const Polynomial& b);

Polynomial pow(const Polynomial& p, std::size_t e);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& a, const Polynomial& b);

/// a / b when b divides a, otherwise nullopt.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Cyclotomic factor for the (1 - x^m) bookkeeping: Phi_d normalized to
/// constant term 1, and 1 - x for d = 1.
Polynomial cyclotomic(std::size_t d);

std::vector<std::size_t> divisors(std::size_t n);

}  // namespace symhilb::exact
