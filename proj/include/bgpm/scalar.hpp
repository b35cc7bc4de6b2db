#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

#include <boost/multiprecision/eigen.hpp>

namespace bgpm {

// Exact domains are GMP-backed with expression templates disabled so they
// compose with Eigen's generic product kernels.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using ComplexF = std::complex<double>;

enum class ScalarDomain { Integer, Rational, Float };

std::string_view to_string(ScalarDomain domain);
ScalarDomain parse_domain(std::string_view text);

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<BigInt> {
  static constexpr ScalarDomain domain = ScalarDomain::Integer;
  static constexpr bool exact = true;
};

template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarDomain domain = ScalarDomain::Rational;
  static constexpr bool exact = true;
};

template <>
struct ScalarTraits<ComplexF> {
  static constexpr ScalarDomain domain = ScalarDomain::Float;
  static constexpr bool exact = false;
};

template <class T>
concept ExactScalar = ScalarTraits<T>::exact;

// Parsing. Rationals accept "p", "p/q" and finite decimals ("-0.25", "1e-3"),
// all converted exactly. Throws ParseError.
BigInt parse_bigint(std::string_view text);
Rational parse_rational(std::string_view text);
double parse_double(std::string_view text);

// Canonical text: "p" when the denominator is 1, otherwise "p/q".
std::string format(const BigInt& value);
std::string format(const Rational& value);
// Shortest decimal that round-trips.
std::string format(double value);

double to_double(const Rational& value);
double to_double(const BigInt& value);
inline ComplexF to_complex(const Rational& value) { return {to_double(value), 0.0}; }
inline ComplexF to_complex(const BigInt& value) { return {to_double(value), 0.0}; }
inline ComplexF to_complex(const ComplexF& value) { return value; }

template <class T>
struct is_std_complex : std::false_type {};
template <class R>
struct is_std_complex<std::complex<R>> : std::true_type {};

// Value conversion across domains; exact domains reach floating ones through
// `to_double`.
template <class To, class From>
To scalar_cast(const From& value) {
  if constexpr (std::is_same_v<To, From>) {
    return value;
  } else if constexpr (is_std_complex<To>::value) {
    using R = typename To::value_type;
    if constexpr (is_std_complex<From>::value)
      return To(static_cast<R>(value.real()), static_cast<R>(value.imag()));
    else if constexpr (std::is_arithmetic_v<From>)
      return To(static_cast<R>(value), R(0));
    else
      return To(static_cast<R>(to_double(value)), R(0));
  } else if constexpr (std::is_floating_point_v<To>) {
    if constexpr (std::is_arithmetic_v<From>)
      return static_cast<To>(value);
    else
      return static_cast<To>(to_double(value));
  } else {
    return To(value);
  }
}

inline bool is_zero(const BigInt& v) { return v.is_zero(); }
inline bool is_zero(const Rational& v) { return v.is_zero(); }
inline bool is_zero(const ComplexF& v) { return v == ComplexF{}; }

}  // namespace bgpm
