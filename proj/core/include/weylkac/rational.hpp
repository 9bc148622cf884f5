#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace weylkac {

// Exact arithmetic throughout: arbitrary-precision integers and rationals.
// mpq_class values are kept canonical (lowest terms, positive denominator)
// by GMP as long as they are produced by arithmetic or by make_rational.
using Integer  = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den);

bool is_integer(const Rational& q);
bool is_nonnegative_integer(const Rational& q);

// "p" for integers, "p/q" with q > 1 otherwise.
std::string rational_to_string(const Rational& q);

// Strict inverse of rational_to_string; rejects non-canonical spellings
// such as "2/4", "1/1", "+3", "03" or "-0".
Rational parse_rational(std::string_view text);

// Checked narrowing, for results that are guaranteed small.
std::int64_t to_int64(const Integer& z);

} // namespace weylkac
