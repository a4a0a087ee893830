#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace symhilb {

using BigInt = mpz_class;
// mpq_class keeps every value canonical: gcd(|num|, den) = 1 and den > 0.
using BigRational = mpq_class;

namespace exact {

/// Canonicalized p/q. Throws InputError when q == 0.
BigRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p", "-p", "p/q". Throws InputError on malformed text.
BigRational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const BigRational& q);

/// Decimal rendering with `digits` places after the point (rounded half away from zero).
std::string to_decimal(const BigRational& q, int digits);

bool is_integer(const BigRational& q);

BigInt binomial(unsigned long n, unsigned long k);

/// Generalized binomial coefficient t(t-1)...(t-k+1)/k! for rational t.
BigRational binomial(const BigRational& t, unsigned long k);

BigInt factorial(unsigned long n);

}  // namespace exact
}  // namespace symhilb
