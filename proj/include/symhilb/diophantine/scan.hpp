#pragma once

#include <cstddef>
#include <vector>

#include "symhilb/circle/weights.hpp"
#include "symhilb/exact/rational.hpp"

namespace symhilb::diophantine {

struct IntegralityResult {
  BigRational value;
  bool is_integer = false;
};

/// 1/gamma0 of the (gcd-reduced) weight vector.
IntegralityResult gamma0_integrality(const circle::WeightVector& a);

/// 12 gamma2 / gamma0. Needs n >= 3.
IntegralityResult gamma2_condition(const circle::WeightVector& a);

/// Whether target = sum (m_i^2 - 1) with every m_i > 1 dividing `modulus`
/// (repetition allowed).
bool representable(const BigInt& target, const BigInt& modulus);

/// True when 12 gamma2 / gamma0 admits such a representation over the
/// divisors of 1/gamma0 (the pseudoreflection data of a finite quotient could
/// then match); false means no finite quotient has these gamma0, gamma2.
/// Throws NotApplicable when 1/gamma0 is not an integer.
bool pseudoreflection_obstruction(const circle::WeightVector& a);

/// 1/gamma0 by the closed form on the weights as given (no gcd reduction).
BigRational gamma0_inverse_raw(const circle::WeightVector& a);

inline constexpr std::size_t kMaxScanLevel = 1000000;

/// 1/gamma0 integrality for a positive triple in integer arithmetic:
/// (a1+a2)(a1+a3)(a2+a3) divisible by a1 a2 + a1 a3 + a2 a3.
bool triple_hit(long a1, long a2, long a3);

struct ScanResult {
  std::size_t level = 0;
  BigInt hit_count;  // ordered positive n-tuples with sum <= level and 1/gamma0 in Z
  BigInt total;      // C(level, n)
  BigRational probability;
  std::vector<circle::WeightVector> new_hits;  // hits with sum == level
};

/// One result per level n..max_level. n = 3 uses integer arithmetic; other n
/// evaluate the Schur closed form.
std::vector<ScanResult> probability_scan(std::size_t n, std::size_t max_level, bool keep_hits = true);
std::vector<ScanResult> probability_scan_serial(std::size_t n, std::size_t max_level, bool keep_hits = true);
std::vector<ScanResult> probability_scan_parallel(std::size_t n, std::size_t max_level, bool keep_hits = true);

struct ImplicationReport {
  std::size_t checked = 0;  // gcd-1 triples with 1/gamma0 in Z
  std::vector<circle::WeightVector> failures;  // those with 12 gamma2 / gamma0 not in Z
};

/// Checks whether 1/gamma0 in Z implies 12 gamma2 / gamma0 in Z on sorted
/// gcd-1 triples up to the given level.
ImplicationReport gamma2_implication_scan(std::size_t max_level);

}  // namespace symhilb::diophantine
