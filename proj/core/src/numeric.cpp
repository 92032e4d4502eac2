#include "roc/numeric.hpp"

#include "roc/error.hpp"

#include <charconv>
#include <cmath>
#include <limits>

namespace roc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

bool allDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parseInteger(std::string_view s) {
  BigInt v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

Rational parseDecimal(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool expNeg = false;
    if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
      expNeg = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!allDigits(exp) || exp.size() > 6)
      fail(ErrorKind::Argument, "bad exponent in number '" + std::string(whole) + "'");
    exponent = std::stol(std::string(exp));
    if (expNeg) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string_view intPart = s, fracPart;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    intPart = s.substr(0, dot);
    fracPart = s.substr(dot + 1);
  }
  if ((intPart.empty() && fracPart.empty()) ||
      (!intPart.empty() && !allDigits(intPart)) ||
      (!fracPart.empty() && !allDigits(fracPart)))
    fail(ErrorKind::Argument, "not a number: '" + std::string(whole) + "'");

  std::string digits(intPart);
  digits += fracPart;
  BigInt num = parseInteger(digits);
  exponent -= static_cast<long>(fracPart.size());
  Rational r(num);
  if (exponent > 0)
    r *= pow(Rational(10), static_cast<unsigned>(exponent));
  else if (exponent < 0)
    r /= pow(Rational(10), static_cast<unsigned>(-exponent));
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parseRational(std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) fail(ErrorKind::Argument, "empty number");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parseDecimal(trim(s.substr(0, slash)), text);
    Rational den = parseDecimal(trim(s.substr(slash + 1)), text);
    if (den == 0) fail(ErrorKind::Argument, "zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parseDecimal(s, text);
}

std::vector<Rational> parseRationalList(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = trim(text.substr(start, comma - start));
    if (tok.empty()) fail(ErrorKind::Argument, "empty entry in list '" + std::string(text) + "'");
    out.push_back(parseRational(tok));
    start = comma + 1;
  }
  return out;
}

Rational toRational(double v) {
  if (!std::isfinite(v)) fail(ErrorKind::Argument, "non-finite value");
  if (v == 0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(v, &exp);
  // mant in [0.5, 1); scale to a 53-bit integer.
  auto m = static_cast<std::int64_t>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r{BigInt(m)};
  BigInt two = 1;
  two <<= static_cast<unsigned>(std::abs(exp));
  if (exp > 0) r *= Rational(two);
  else r /= Rational(two);
  return r;
}

double toDouble(const Rational& r) { return r.convert_to<double>(); }
double toDouble(const BigInt& v) { return v.convert_to<double>(); }

std::string toString(const Rational& r) {
  const BigInt& num = boost::multiprecision::numerator(r);
  const BigInt& den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string formatDouble(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1), b(base);
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

std::uint64_t roundHalfEven(double v) {
  if (!(v >= 0) || v > static_cast<double>(std::numeric_limits<std::uint64_t>::max() / 2))
    fail(ErrorKind::Parameter, "round count out of range");
  return static_cast<std::uint64_t>(std::nearbyint(v));
}

}  // namespace roc
