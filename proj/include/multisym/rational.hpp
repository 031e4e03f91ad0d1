#pragma once

#include <gmpxx.h>

#include <string>

namespace multisym {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(long n);

/// Parses "num", "-num" or "num/den" into a canonical rational.
/// Throws std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical text form: "num" when the denominator is 1, else "num/den".
std::string rational_str(const Rational& q);

/// q^e with the convention q^0 = 1 (also for q = 0).
Rational rational_pow(const Rational& q, int e);

}  // namespace multisym
