#pragma once

#include <gmpxx.h>

#include <string>

namespace dfmax {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt binomial(long n, long k);  // 0 outside 0 <= k <= n
BigInt factorial(long n);
BigInt power_of_two(unsigned long e);

// Natural log of a positive integer, accurate to double precision for any size.
double log_big(const BigInt& x);

// Nearest double (ties to even) for normal-range results.
double to_double_rounded(const Rational& q);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);

} // namespace dfmax
