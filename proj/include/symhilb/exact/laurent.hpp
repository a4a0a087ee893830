#pragma once

#include <cstddef>
#include <vector>

#include "symhilb/exact/rational.hpp"
#include "symhilb/exact/rational_function.hpp"

namespace symhilb::exact {

/// sum_{k=0}^{K} gamma_k (1 - x)^{k - pole_order}. pole_order is the exact
/// order of the pole at x = 1 (negative for a zero there).
struct LaurentExpansion {
  long pole_order = 0;
  std::vector<BigRational> coefficients;

  std::size_t length() const { return coefficients.size(); }
  const BigRational& operator[](std::size_t k) const { return coefficients.at(k); }
  friend bool operator==(const LaurentExpansion&, const LaurentExpansion&) = default;
};

/// Expansion at x = 1 through gamma_K, via the exact substitution x = 1 - u
/// and series division.
LaurentExpansion laurent_at_one(const RationalFunction& f, std::size_t K);

/// Expansion of 1/(1 - x^t) at x = 1 for rational t != 0 (pole order 1), from
/// the binomial series of (1 - u)^t.
LaurentExpansion laurent_prototype(const BigRational& t, std::size_t K);

}  // namespace symhilb::exact
