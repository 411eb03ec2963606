#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace appell {

// Exact arbitrary-precision rational, always stored canonicalized
// (reduced, positive denominator).
using Rational = mpq_class;

Rational rat(long num, long den = 1);

// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
// Throws std::invalid_argument on anything else or on a zero denominator.
Rational rat_from_string(std::string_view text);

std::string rat_to_string(const Rational& r);

// C(n, k) for integer n >= 0; returns 0 when k > n.
Rational rat_binomial(unsigned long n, unsigned long k);

Rational rat_factorial(unsigned long n);

// (n)_p = n(n-1)...(n-p+1) over the integers.
Rational rat_falling(long n, unsigned long p);

}  // namespace appell
