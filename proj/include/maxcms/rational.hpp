#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace maxcms {

/// Exact rational number. Every weight, capacity and relaxation coordinate is
/// one of these; nothing in the solvers goes through binary floating point.
using Rational = mpq_class;

/// Parses "7", "-3", "2.125" or "5/8". Decimals are converted exactly.
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Largest multiple of 2^-bits that is <= q.
Rational floor_dyadic(const Rational& q, unsigned bits);

double to_double(const Rational& q);

Rational sum(std::span<const Rational> values);

}  // namespace maxcms
