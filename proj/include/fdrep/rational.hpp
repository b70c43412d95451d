#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fdrep {

/// Arbitrary-precision rational, always kept in canonical form (gcd 1,
/// positive denominator). Every computation in the library runs over these.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a", "a/b". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

}  // namespace fdrep
