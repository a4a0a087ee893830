#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symhilb/circle/weights.hpp"
#include "symhilb/exact/rational_function.hpp"
#include "symhilb/exact/reconstruct.hpp"

namespace symhilb::circle {

enum class Method { Generic, DegenerateResidue, CompletelyDegenerate, Oracle };

std::string to_string(Method m);

struct HilbertSeriesResult {
  exact::RationalFunction on_shell;
  exact::RationalFunction off_shell;
  WeightVector weights;
  Method method = Method::Generic;
  /// Whether the on-shell numerator is palindromic. Reported, never enforced.
  bool palindromic = false;
};

struct HilbertOptions {
  std::size_t slack = exact::kDefaultVerificationSlack;
  /// Oracle check degree on the residue path; 0 disables it.
  std::size_t verify_degree = 30;
  bool parallel = true;
};

/// 1 / prod_{j != i} (1 - x^{a_i - a_j})(1 - x^{a_i + a_j}), rewritten to be
/// analytic at 0. `i` indexes the ascending weight list of a generic profile.
exact::RationalFunction phi_tilde(std::size_t i, const WeightProfile& a);

/// Residue of the off-shell integrand at z = u for a weight `a` of
/// multiplicity `p`, as a rational function R(u). The cluster contributes
/// a * U_a R to the off-shell series.
exact::RationalFunction residue_cluster(std::size_t a, std::size_t p, const WeightProfile& rest);

/// U_{a_i} phi_tilde_i for each weight, in ascending weight order; their sum
/// is the on-shell series. Generic weights only.
std::vector<exact::RationalFunction> generic_terms(const WeightProfile& a, const HilbertOptions& opts = {});

/// Generic weights only; throws DegenerateWeights otherwise.
HilbertSeriesResult hilbert_on_generic(const WeightProfile& a, const HilbertOptions& opts = {});

/// Any multiplicities. Verified against the counting oracle through
/// opts.verify_degree; throws OracleMismatch on disagreement.
HilbertSeriesResult hilbert_on_degenerate(const WeightProfile& a, const HilbertOptions& opts = {});

/// A = (1, ..., 1) with n entries.
HilbertSeriesResult hilbert_completely_degenerate(std::size_t n);

/// Off-shell numerator fitted to oracle counts over a supplied off-shell
/// denominator, with deg numerator <= deg denominator.
HilbertSeriesResult hilbert_via_oracle(const WeightVector& a, const exact::FactoredDenominator& off_denominator,
                                       std::size_t slack = exact::kDefaultVerificationSlack);

/// Normalizes, divides by the gcd, and picks the cheapest applicable path.
HilbertSeriesResult hilbert_series(const WeightVector& a, const HilbertOptions& opts = {});

}  // namespace symhilb::circle
