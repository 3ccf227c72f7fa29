#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace colorloss {

/// Exact fraction with arbitrary-precision numerator and denominator.
/// Always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Renders as "num/den", or just "num" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

/// Inverse of to_fraction_string. Also accepts a leading '+' and whitespace
/// around the slash. Throws std::invalid_argument on malformed input or a
/// zero denominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

}  // namespace colorloss
