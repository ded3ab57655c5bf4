#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace molp {

/// Exact arbitrary-precision rational, always kept in canonical form
/// (positive denominator, reduced by gcd).
///
/// Expression templates are disabled so `auto` captures values, not
/// unevaluated expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "7", "-7", "3/4", "-3/4", "0.5", "-.25", "+2", "1.50".
/// Throws ParseError on anything else (including a zero denominator).
Rational parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign(const Rational& value) { return value.sign(); }

}  // namespace molp
