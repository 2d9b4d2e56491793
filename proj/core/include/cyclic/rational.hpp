#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace cyclic {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;

using RationalVector = std::vector<Rational>;

/// "num/den" in lowest terms; integers keep the "/1".
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

/// Parses "num/den" or "num". Throws ParseError.
Rational parse_rational(std::string_view text);

Integer ipow(const Integer& base, unsigned long exponent);
Integer binomial(unsigned long n, unsigned long k);

/// Nearest integer, halves rounded towards +infinity.
Integer round_nearest(const Rational& r);

/// Fractional part in [0, 1).
Rational frac(const Rational& r);

}  // namespace cyclic
