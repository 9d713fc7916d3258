#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace rhoqes {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "p", "p/q", "-p/q" and plain decimals such as "0.125".
Rational parse_rational(std::string_view text);

// Always "p/q", including "n/1" for integers.
std::string to_pq(const Rational& r);

double to_double(const Rational& r);

Rational binomial(long n, long k);

// x^n for integer n (negative allowed when x != 0).
Rational pow(const Rational& x, long n);

// Exact square root when r is the square of a rational; false otherwise.
bool exact_sqrt(const Rational& r, Rational& out);

}  // namespace rhoqes
