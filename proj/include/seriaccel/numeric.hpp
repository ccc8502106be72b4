#pragma once

// Scalar fields the recursions are generic over: exact rationals (GMP),
// variable-precision binary floats (MPFR) and native doubles.

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace seriaccel {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using BigFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                               boost::multiprecision::et_off>;

enum class FieldMode { rational, bigfloat, f64 };

std::string_view to_string(FieldMode mode);
FieldMode parse_field_mode(std::string_view text);

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public ParseError {
 public:
  using ParseError::ParseError;
};

/// A zero (or numerically negligible) denominator met inside a recursion.
class Breakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Working precision of BigFloat in decimal digits. Initialised from
// SERIACCEL_PRECISION (default 50, never below 50).
unsigned bigfloat_digits();
void set_bigfloat_digits(unsigned digits);

Rational parse_rational(std::string_view text);
std::string fraction_string(const Rational& value);

// Scientific rendering "-0.DDDDDDe-E" with `digits` significant digits,
// rounded half-to-even; zero renders as "0".
std::string decimal_string(const Rational& value, int digits);

Rational exact_rational(const BigFloat& value);
Rational exact_rational(double value);
BigFloat to_bigfloat(const Rational& value);
double to_double_rounded(const Rational& value);

template <class T>
struct field_traits;

template <>
struct field_traits<Rational> {
  static constexpr FieldMode mode = FieldMode::rational;
  static constexpr bool exact = true;

  static Rational parse(std::string_view text) { return parse_rational(text); }
  static Rational from_rational(const Rational& q) { return q; }
  static Rational to_rational(const Rational& x) { return x; }
  static std::string exact_string(const Rational& x) { return fraction_string(x); }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
  static double to_double(const Rational& x) { return to_double_rounded(x); }
  static bool negligible(const Rational& d, const Rational& /*scale*/) { return d == 0; }
};

template <>
struct field_traits<BigFloat> {
  static constexpr FieldMode mode = FieldMode::bigfloat;
  static constexpr bool exact = false;

  static BigFloat parse(std::string_view text) { return to_bigfloat(parse_rational(text)); }
  static BigFloat from_rational(const Rational& q) { return to_bigfloat(q); }
  static Rational to_rational(const BigFloat& x) { return exact_rational(x); }
  static std::string exact_string(const BigFloat& x);
  static BigFloat abs(const BigFloat& x) { return boost::multiprecision::abs(x); }
  static double to_double(const BigFloat& x) { return x.convert_to<double>(); }
  static bool negligible(const BigFloat& d, const BigFloat& scale);
};

template <>
struct field_traits<double> {
  static constexpr FieldMode mode = FieldMode::f64;
  static constexpr bool exact = false;

  static double parse(std::string_view text) { return to_double_rounded(parse_rational(text)); }
  static double from_rational(const Rational& q) { return to_double_rounded(q); }
  static Rational to_rational(double x) { return exact_rational(x); }
  static std::string exact_string(double x);
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static bool negligible(double d, double scale) {
    return d == 0.0 || std::fabs(d) <= std::ldexp(scale, -40);
  }
};

template <class T>
concept Field = requires { field_traits<T>::mode; };

template <Field T>
T parse_scalar(std::string_view text) {
  return field_traits<T>::parse(text);
}

template <Field T>
std::string to_decimal_string(const T& x, int digits) {
  return decimal_string(field_traits<T>::to_rational(x), digits);
}

template <Field T>
std::string to_exact_string(const T& x) {
  return field_traits<T>::exact_string(x);
}

template <Field T>
bool is_zero(const T& x) {
  return x == 0;
}

// `scale` is the magnitude of the terms that were combined to form b; with
// the default of zero only an exact zero is rejected.
template <Field T>
T checked_div(const T& a, const T& b, const T& scale = T(0)) {
  if (field_traits<T>::negligible(b, scale)) {
    throw Breakdown("division by zero: " + to_exact_string(a) + " / " + to_exact_string(b));
  }
  return a / b;
}

}  // namespace seriaccel
