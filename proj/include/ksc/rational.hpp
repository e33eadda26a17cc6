#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace ksc {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Canonical "num/den" rendering; integers keep an explicit "/1".
std::string to_string(const Rational& r);

/// Parses "a/b", "a", or a plain decimal such as "-0.125" or "2.5e-3" exactly.
/// Throws InvalidArgument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact conversion of a double through its shortest round-trip decimal text,
/// so 0.1 becomes 1/10 rather than the binary approximation.
Rational rational_from_double(double value);

double to_double(const Rational& r);

} // namespace ksc
