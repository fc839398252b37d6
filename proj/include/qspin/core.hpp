#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qspin {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base exception for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Integer factorial(unsigned long n);
Integer binomial(unsigned long n, unsigned long k);
Integer ipow(const Integer& base, unsigned long exponent);

/// num / den in lowest terms; throws on a zero denominator.
Rational ratio(const Integer& num, const Integer& den);

/// 2^e for any integer e.
Rational pow2(long e);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

/// Parses "a" or "a/b" (optional sign, decimal digits only).
Rational parse_rational(std::string_view text);

} // namespace qspin
