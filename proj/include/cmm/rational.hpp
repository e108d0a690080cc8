#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cmm {

// Arbitrary-precision rational, always kept canonical (lowest terms,
// positive denominator) by gmpxx.
using Rational = mpq_class;
using Integer = mpz_class;

// "p" when the denominator is 1, otherwise "p/r".
std::string to_string(const Rational& r);

// Inverse of to_string; throws std::invalid_argument on malformed input
// or a zero denominator.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace cmm
