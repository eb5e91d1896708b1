#pragma once

#include <gmpxx.h>
#include <string>

namespace ytw {

// Exact arithmetic lives on GMP. mpq_class keeps values canonical
// (reduced, positive denominator) after every operation.
using Integer = mpz_class;
using Rational = mpq_class;

// "num/den" with den omitted when it is 1. Platform-independent.
std::string to_fraction_string(const Rational& q);

// Accepts "num", "num/den", optional leading '-'.
Rational parse_fraction(const std::string& s);

} // namespace ytw
