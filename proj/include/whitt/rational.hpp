#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace whitt {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "p/q", "-p/q" or a terminating decimal such as "0.25".
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);
/// num/den in lowest terms (mpq_class(num, den) does not canonicalise).
Rational ratio(long num, long den);

/// Canonical text form: integers print without a denominator ("3", "-1/2").
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Exact square root when q is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& q);

/// Parses a comma separated list of rationals ("0,1/2,-1").
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace whitt
