#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <string>
#include <string_view>

namespace pbw {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always held in lowest terms with positive
/// denominator; zero is 0/1. All coefficient arithmetic in this library is
/// exact; there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "a" or "a/b" with optional leading '-'. The denominator must be a
/// positive integer. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Renders in lowest terms: "a" when the denominator is 1, else "a/b".
std::string to_string(const Rational& x);

inline int sign(const Rational& x) { return x.sign(); }

std::size_t decimal_digits(const BigInt& x);

BigInt binomial(int a, int b);

} // namespace pbw
