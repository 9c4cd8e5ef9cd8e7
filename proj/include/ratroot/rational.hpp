#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ratroot {

// Exact rationals. GMP keeps every mpq_class returned by arithmetic in
// canonical form (reduced, positive denominator), so operator== is structural.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "a" or "a/b" with optional leading sign on a. Rejects decimal
// points, exponents, whitespace and zero denominators.
Rational parse_rational(std::string_view text);

// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace ratroot
