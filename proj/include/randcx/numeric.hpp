#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace randcx {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" or "p" form, always reduced.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

// Accepts "a/b", integers, and finite decimals such as "0.55" or "-1.25e-2";
// the value is converted exactly (0.55 -> 11/20).
Rational parse_rational(std::string_view text);

double to_double(const Rational& q);

// x^k for k >= 0 with the convention 0^0 = 1.
Rational power(const Rational& x, std::uint64_t k);

BigInt floor_of(const Rational& q);
BigInt ceil_of(const Rational& q);

// n^(-alpha) computed in 50-digit software floating point and rounded down to
// a multiple of 2^-64, so the value is identical on every platform.
Rational exponent_probability(std::int64_t n, const Rational& alpha);

}  // namespace randcx
