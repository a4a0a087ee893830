#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symhilb/exact/laurent.hpp"
#include "symhilb/exact/rational_function.hpp"
#include "symhilb/exact/reconstruct.hpp"

namespace symhilb::finite {

/// diag(e^{2 pi i e_1 / m}, ..., e^{2 pi i e_n / m})
struct Generator {
  std::size_t order = 1;
  std::vector<long> exponents;
};

/// Entry k of an element stands for the eigenvalue e^{2 pi i k / N}, N = exponent.
using Element = std::vector<std::size_t>;

struct FiniteDiagonalGroup {
  std::size_t dimension = 0;
  std::size_t exponent = 1;  // lcm of the generator orders
  std::vector<Generator> generators;
  std::vector<Element> elements;  // sorted, identity first

  std::size_t order() const { return elements.size(); }
  std::size_t element_order(const Element& g) const;
  /// Order of the i-th coordinate character (the order of z_i's eigenvalues).
  std::size_t coordinate_order(std::size_t i) const;
  /// "(1/2,0)"
  std::string element_to_string(const Element& g) const;
};

/// Parses "m:e1,e2,...". Throws InputError.
Generator parse_generator(const std::string& text);
/// Parses "cyclic:m:e1,...,en" into its single generator.
Generator parse_group_spec(const std::string& text);

/// Closure of the generators. Throws InputError for order 0 or mismatched lengths.
FiniteDiagonalGroup enumerate_group(std::size_t dimension, const std::vector<Generator>& gens);

/// Invariant monomial counts of degree 0..max_degree in z, zbar.
std::vector<BigInt> molien_counts(const FiniteDiagonalGroup& g, std::size_t max_degree);
std::vector<BigInt> molien_counts_serial(const FiniteDiagonalGroup& g, std::size_t max_degree);
std::vector<BigInt> molien_counts_parallel(const FiniteDiagonalGroup& g, std::size_t max_degree);

/// Hilbert series of the real invariants, reconstructed over prod (1 - x^{m_i})^2
/// with deg numerator <= deg denominator - 2n, reduced.
exact::RationalFunction molien_series(const FiniteDiagonalGroup& g,
                                      std::size_t slack = exact::kDefaultVerificationSlack);

enum class TieBreak { Ascending, Descending };

struct ReflectionData {
  std::vector<Element> pseudoreflections;
  std::vector<Element> primitive;
  std::vector<std::size_t> primitive_orders;
  std::vector<Element> q_set;  // exactly two nontrivial eigenvalues
};

/// Greedy primitive set: largest order first, ties broken by the encoding
/// order `tie`. Throws PrimitiveCoverFailure if the result is not a valid set.
ReflectionData reflection_analysis(const FiniteDiagonalGroup& g, TieBreak tie = TieBreak::Ascending);

struct GFinLaurent {
  exact::RationalFunction series;
  exact::LaurentExpansion expansion;  // gamma_0 .. gamma_5
  ReflectionData reflections;
  BigRational gamma2_closed;
  /// sum over Q of lambda mu / ((1 - lambda)^2 (1 - mu)^2), recovered from gamma_4
  BigRational q_sum;
  BigRational relation;  // gamma_3 - 2 gamma_4 + gamma_5
};

/// Laurent data of the Molien series checked against the theorem's formulas;
/// throws TheoremInconsistency on any disagreement.
GFinLaurent gfin_laurent(const FiniteDiagonalGroup& g);

enum class GesselKind { Quad, Cube1, Cube2, Quart1, Quart2, Quart3 };

/// Closed forms of sum_{zeta^m = 1, zeta != 1} zeta^j / (1 - zeta)^k.
BigRational gessel_sum(std::size_t m, GesselKind kind);

}  // namespace symhilb::finite
