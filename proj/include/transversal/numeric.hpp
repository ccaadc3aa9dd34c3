#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace transversal {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Parses "p/q", "p" or "-p/q". The result is canonicalized; a zero
/// denominator or stray characters throw InvalidInput.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt factorial(unsigned n);
BigInt power(const BigInt& base, unsigned long exponent);

} // namespace transversal
