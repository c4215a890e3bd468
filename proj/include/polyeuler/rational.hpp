#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyeuler {

using Integer = mpz_class;
using Rational = mpq_class;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q". Throws InputError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// base^exp for any integer exponent; a negative exponent requires base != 0.
Rational pow(const Rational& base, std::int64_t exp);
Integer pow(const Integer& base, std::uint64_t exp);

/// Integer binomial coefficient for n, k >= 0.
Integer binomial(std::uint64_t n, std::uint64_t k);
Integer factorial(std::uint64_t n);

/// (-1)^n as an int.
constexpr int sign_power(std::int64_t n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace polyeuler
