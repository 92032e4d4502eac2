#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace roc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p/q", integers, and decimals with optional exponent ("0.125",
// "-3e-2"). Decimals are converted exactly, not through double.
Rational parseRational(std::string_view text);

// Comma-separated list of parseRational tokens; whitespace is ignored.
std::vector<Rational> parseRationalList(std::string_view text);

// The exact binary value of a finite double.
Rational toRational(double v);

double toDouble(const Rational& r);
double toDouble(const BigInt& v);

// "p/q", or "p" when the denominator is 1.
std::string toString(const Rational& r);

// Shortest representation that round-trips through strtod, locale-free.
std::string formatDouble(double v);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
Rational pow(const Rational& base, unsigned exponent);

// Round half to even.
std::uint64_t roundHalfEven(double v);

}  // namespace roc
