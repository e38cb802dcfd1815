#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace ors {

// Weights can reach magnitudes like 2^(n^k) (gap constructions), so all
// weight arithmetic is arbitrary precision. Geometry used in hardness
// gadgets is exact rational; floats never enter realizability decisions.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_decimal(const BigInt& v);
BigInt bigint_from_decimal(std::string_view text);

// Fractions serialize as "p/q", or plain "p" when q == 1.
std::string to_fraction(const Rational& v);
Rational rational_from_string(std::string_view text);

// Exact value of the double (every finite double is rational).
Rational rational_from_double(double v);
double to_double(const Rational& v);

}  // namespace ors
