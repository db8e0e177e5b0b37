#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fibrekit {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Three-valued answer for semi-decisions.
enum class Decision { No, Yes, Unknown };

std::string to_string(Decision d);

/// Parses "p", "-p" or "p/q" (q != 0). Decimal points and exponents are
/// rejected: every number entering the library is exact.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q" in lowest terms.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

Integer abs(const Integer& value);
Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor division with a positive or negative divisor.
Integer floor_div(const Integer& a, const Integer& b);
/// Representative of a mod m in [0, |m|).
Integer mod_floor(const Integer& a, const Integer& m);

}  // namespace fibrekit
