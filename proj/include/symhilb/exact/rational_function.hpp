#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symhilb/exact/polynomial.hpp"
#include "symhilb/exact/series.hpp"

namespace symhilb::exact {

/// x^shift * prod (1 - x^m)^e * other, with other(0) = 1.
class FactoredDenominator {
 public:
  using FactorMap = std::map<std::size_t, std::size_t>;  // m -> multiplicity e

  FactoredDenominator() = default;
  explicit FactoredDenominator(FactorMap factors, std::size_t monomial_shift = 0,
                               Polynomial other = Polynomial::constant(1));
  FactoredDenominator(std::initializer_list<std::pair<const std::size_t, std::size_t>> factors)
      : FactoredDenominator(FactorMap(factors)) {}

  std::size_t monomial_shift() const { return shift_; }
  const FactorMap& factors() const { return factors_; }
  const Polynomial& other() const { return other_; }
  bool is_cyclotomic() const { return other_.degree() == 0; }
  std::size_t degree() const;

  Polynomial expand() const;
  FactoredDenominator operator*(const FactoredDenominator& rhs) const;
  friend bool operator==(const FactoredDenominator&, const FactoredDenominator&) = default;

  /// Exponent of each Phi_d in the (1 - x^m) part.
  std::map<std::size_t, std::size_t> cyclotomic_exponents() const;
  /// Smallest greedy cover prod (1 - x^m)^e of a Phi-exponent map (may overshoot).
  static FactorMap cover(std::map<std::size_t, std::size_t> exponents);

  std::string to_string() const;

 private:
  FactorMap factors_;
  std::size_t shift_ = 0;
  Polynomial other_ = Polynomial::constant(1);
};

/// numerator / denominator with a factored denominator. Values are immutable
/// in practice: every operation returns a fresh object.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_() {}
  RationalFunction(Polynomial numerator, FactoredDenominator denominator);
  /// General denominator; throws InputError when it is the zero polynomial.
  static RationalFunction from_polynomials(const Polynomial& numerator, const Polynomial& denominator);

  const Polynomial& numerator() const { return num_; }
  const FactoredDenominator& denominator() const { return den_; }
  Polynomial expanded_denominator() const { return den_.expand(); }
  bool is_zero() const { return num_.is_zero(); }

  /// Lowest terms, with the cyclotomic part rewritten as prod (1 - x^m)^e where
  /// possible and any remaining factor kept in `other`.
  RationalFunction reduced() const;

  RationalFunction operator+(const RationalFunction& rhs) const;
  RationalFunction operator-(const RationalFunction& rhs) const;
  RationalFunction operator*(const RationalFunction& rhs) const;
  RationalFunction operator*(const BigRational& s) const;
  RationalFunction times_polynomial(const Polynomial& p) const;
  /// f / (1 - x^m)^e
  RationalFunction over_one_minus_x_pow(std::size_t m, std::size_t e = 1) const;

  /// Equality as rational functions (cross multiplication).
  bool equals(const RationalFunction& rhs) const;

  std::string to_string() const;

 private:
  Polynomial num_;
  FactoredDenominator den_;
};

/// Taylor coefficients 0..order at x = 0.
TruncatedSeries series_of_rational(const RationalFunction& f, std::size_t order);

}  // namespace symhilb::exact
