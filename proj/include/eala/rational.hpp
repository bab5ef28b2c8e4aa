#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace eala {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational in canonical form: positive denominator,
/// gcd(|num|, den) = 1, zero stored as 0/1. cpp_rational maintains all three.
using Rational = boost::multiprecision::cpp_rational;

/// "n" when the denominator is 1, "n/d" otherwise.
std::string rational_str(const Rational& r);

/// Inverse of rational_str; also accepts a leading '+'.
Rational parse_rational(std::string_view text);

}  // namespace eala
