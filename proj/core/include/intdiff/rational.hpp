#pragma once

#include <gmpxx.h>

#include <string>

namespace intdiff {

using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);  // "p" or "p/q"
std::string to_string(const Rational& q);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);
// n (n-1) ... (n-k+1)
Rational falling(unsigned n, unsigned k);
Rational power(const Rational& base, unsigned exponent);
Integer lcm_of_denominators(const Rational& a, const Integer& acc);

}  // namespace intdiff
