#pragma once

#include <cstddef>

#include "symhilb/exact/polynomial.hpp"
#include "symhilb/exact/rational_function.hpp"
#include "symhilb/exact/series.hpp"

namespace symhilb::exact {

inline constexpr std::size_t kDefaultVerificationSlack = 16;

/// Numerator P with deg P <= degree_bound such that P / den agrees with the
/// prefix. Requires prefix.order() >= den.degree() + degree_bound + slack and
/// checks that every coefficient of prefix * den in degrees
/// degree_bound+1 .. prefix.order() vanishes; throws ReconstructionMismatch if not.
Polynomial rational_reconstruct(const TruncatedSeries& prefix, const FactoredDenominator& den,
                                std::size_t degree_bound, std::size_t slack = kDefaultVerificationSlack);

/// Polynomial whose roots are the a-th powers of the roots of den, scaled to
/// constant term den(0)^a. Computed as Res_z(den(z), z^a - x) through the
/// characteristic polynomial of the a-th power of den's companion matrix.
Polynomial resultant_transform(const Polynomial& den, std::size_t a);

/// Denominator of U_a F for F = N / den: each (1 - x^m) becomes
/// (1 - x^{lcm(a,m)/a})^{gcd(a,m)}, the cofactor goes through resultant_transform.
/// The monomial shift is not transformed (callers split it off first).
FactoredDenominator multisection_denominator(const FactoredDenominator& den, std::size_t a);

}  // namespace symhilb::exact
