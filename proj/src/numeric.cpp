#include "randcx/numeric.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cctype>

#include "randcx/errors.hpp"

namespace randcx {

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) throw InputError("bad number: '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (s[0] == '+' || s[0] == '-') {
    negative = s[0] == '-';
    i = 1;
  }
  if (i == s.size()) throw InputError("bad number: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw InputError("bad number: '" + std::string(whole) + "'");
    value = value * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

BigInt pow10(long k) {
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), text);
    BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    BigInt ex = parse_integer(text.substr(e + 1), text);
    if (ex > 4000 || ex < -4000) throw InputError("exponent out of range in '" + std::string(text) + "'");
    exponent = static_cast<long>(ex);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    digits = std::string(mantissa.substr(0, dot)) + std::string(mantissa.substr(dot + 1));
    frac_digits = static_cast<long>(mantissa.size() - dot - 1);
    if (digits.empty() || digits == "-" || digits == "+")
      throw InputError("bad number: '" + std::string(text) + "'");
  } else {
    digits = std::string(mantissa);
  }
  Rational value(parse_integer(digits, text));
  long shift = exponent - frac_digits;
  if (shift > 0) value *= Rational(pow10(shift));
  if (shift < 0) value /= Rational(pow10(-shift));
  return value;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational power(const Rational& x, std::uint64_t k) {
  Rational result = 1;
  Rational base = x;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

BigInt floor_of(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;
  if (num % den != 0 && num < 0) quot -= 1;
  return quot;
}

BigInt ceil_of(const Rational& q) { return -floor_of(-q); }

Rational exponent_probability(std::int64_t n, const Rational& alpha) {
  if (n < 1) throw InputError("n must be positive");
  if (alpha < 0) throw InputError("exponents must be non-negative");
  if (alpha == 0 || n == 1) return Rational(1);
  using Float = boost::multiprecision::cpp_bin_float_50;
  const Float a = Float(boost::multiprecision::numerator(alpha)) /
                  Float(boost::multiprecision::denominator(alpha));
  const Float value = exp(-a * log(Float(n)));
  const Float scaled = floor(ldexp(value, 64));
  BigInt num = scaled.convert_to<BigInt>();
  return Rational(num, BigInt(1) << 64);
}

}  // namespace randcx
