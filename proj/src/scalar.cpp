#include "bgpm/scalar.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>

#include "bgpm/errors.hpp"

namespace bgpm {

std::string_view to_string(ScalarDomain domain) {
  switch (domain) {
    case ScalarDomain::Integer:
      return "integer";
    case ScalarDomain::Rational:
      return "rational";
    case ScalarDomain::Float:
      return "float";
  }
  return "unknown";
}

ScalarDomain parse_domain(std::string_view text) {
  if (text == "integer") return ScalarDomain::Integer;
  if (text == "rational") return ScalarDomain::Rational;
  if (text == "float") return ScalarDomain::Float;
  throw ParseError("unknown scalar domain '" + std::string(text) + "'");
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Optional sign followed by digits.
bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  return all_digits(s);
}

// Leading zeros would make the GMP string constructor read octal.
BigInt from_digits(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return BigInt{std::string(digits)};
}

BigInt integer_from(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  BigInt v = from_digits(s);
  return negative ? BigInt(-v) : v;
}

BigInt pow10(unsigned e) {
  BigInt r = 1;
  for (unsigned i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  auto s = trim(text);
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(text) + "'");
  return integer_from(s);
}

Rational parse_rational(std::string_view text) {
  auto s = trim(text);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = trim(s.substr(0, slash));
    auto den = trim(s.substr(slash + 1));
    if (!is_integer_literal(num) || !is_integer_literal(den))
      throw ParseError("malformed fraction: '" + std::string(text) + "'");
    BigInt d = integer_from(den);
    if (d.is_zero()) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(integer_from(num), d);
  }
  if (is_integer_literal(s)) return Rational(integer_from(s));

  // Decimal with optional fraction and exponent, converted exactly.
  std::string_view body = s;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = body.substr(e + 1);
    if (!is_integer_literal(exp_text)) throw ParseError("malformed number: '" + std::string(text) + "'");
    auto sign = exp_text.front() == '-' ? -1 : 1;
    if (exp_text.front() == '+' || exp_text.front() == '-') exp_text.remove_prefix(1);
    if (exp_text.size() > 6) throw ParseError("exponent out of range: '" + std::string(text) + "'");
    exponent = sign * std::stol(std::string(exp_text));
    body = body.substr(0, e);
  }
  auto dot = body.find('.');
  std::string_view whole = body.substr(0, dot);
  std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac)))
    throw ParseError("malformed number: '" + std::string(text) + "'");
  BigInt digits = from_digits(std::string(whole) + std::string(frac));
  exponent -= static_cast<long>(frac.size());
  Rational value = exponent >= 0 ? Rational(BigInt(digits * pow10(static_cast<unsigned>(exponent))))
                                 : Rational(digits, pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

double parse_double(std::string_view text) {
  auto s = trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v))
    throw ParseError("not a finite decimal: '" + std::string(text) + "'");
  return v;
}

std::string format(const BigInt& value) { return value.str(); }

std::string format(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format(double value) {
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), ptr);
}

double to_double(const Rational& value) { return value.convert_to<double>(); }
double to_double(const BigInt& value) { return value.convert_to<double>(); }

}  // namespace bgpm
