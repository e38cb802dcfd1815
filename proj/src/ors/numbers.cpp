#include "ors/numbers.hpp"

#include <cctype>
#include <cmath>

#include "ors/error.hpp"

namespace ors {

std::string to_decimal(const BigInt& v) { return v.str(); }

BigInt bigint_from_decimal(std::string_view text) {
  if (text.empty()) fail(Errc::parse_error, "empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) fail(Errc::parse_error, "sign without digits");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k])))
      fail(Errc::parse_error, "bad integer literal: " + std::string(text));
  }
  return BigInt(std::string(text));
}

std::string to_fraction(const Rational& v) {
  const BigInt num = numerator(v);
  const BigInt den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational rational_from_string(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(bigint_from_decimal(text));
  const BigInt num = bigint_from_decimal(text.substr(0, slash));
  const BigInt den = bigint_from_decimal(text.substr(slash + 1));
  if (den == 0) fail(Errc::parse_error, "zero denominator: " + std::string(text));
  return Rational(num, den);
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v)) fail(Errc::invalid_argument, "non-finite value has no rational form");
  if (v == 0.0) return Rational(0);
  int exp = 0;
  // frac in [0.5, 1); 53 mantissa bits make frac * 2^53 an exact integer.
  const double frac = std::frexp(v, &exp);
  const auto mantissa = static_cast<long long>(std::ldexp(frac, 53));
  exp -= 53;
  Rational r(mantissa);
  if (exp > 0) {
    r *= Rational(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= Rational(BigInt(1) << (-exp));
  }
  return r;
}

double to_double(const Rational& v) { return v.convert_to<double>(); }

}  // namespace ors
