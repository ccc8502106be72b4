#include "seriaccel/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>

#include <mpfr.h>

namespace seriaccel {

namespace {

constexpr unsigned kMinDigits = 50;

unsigned initial_digits() {
  unsigned digits = kMinDigits;
  if (const char* env = std::getenv("SERIACCEL_PRECISION")) {
    char* end = nullptr;
    const unsigned long parsed = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') {
      digits = std::max<unsigned>(kMinDigits, static_cast<unsigned>(parsed));
    }
  }
  return digits;
}

unsigned& digits_slot() {
  static unsigned digits = [] {
    const unsigned d = initial_digits();
    BigFloat::default_precision(d);
    return d;
  }();
  return digits;
}

// Force the environment to be read before any BigFloat is created.
[[maybe_unused]] const unsigned kInitialised = digits_slot();

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer pow10(unsigned n) {
  Integer r = 1;
  for (unsigned i = 0; i < n; ++i) r *= 10;
  return r;
}

// Boost reads a leading 0 as an octal prefix, so strip it first.
Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer{std::string(digits)};
}

Integer parse_integer(std::string_view s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw ParseError("malformed number: '" + std::string(whole) + "'");
  Integer v = decimal_integer(s);
  return negative ? Integer(-v) : v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Round a positive rational to the nearest integer, ties to even.
Integer round_half_even(const Rational& x) {
  const Integer num = boost::multiprecision::numerator(x);
  const Integer den = boost::multiprecision::denominator(x);
  Integer q = num / den;
  const Integer twice_rem = 2 * (num - q * den);
  if (twice_rem > den || (twice_rem == den && (q % 2) != 0)) q += 1;
  return q;
}

}  // namespace

std::string_view to_string(FieldMode mode) {
  switch (mode) {
    case FieldMode::rational: return "rational";
    case FieldMode::bigfloat: return "bigfloat";
    case FieldMode::f64: return "f64";
  }
  return "?";
}

FieldMode parse_field_mode(std::string_view text) {
  text = trim(text);
  if (text == "rational" || text == "exact") return FieldMode::rational;
  if (text == "bigfloat") return FieldMode::bigfloat;
  if (text == "f64" || text == "double") return FieldMode::f64;
  throw ParseError("unknown field mode '" + std::string(text) + "'");
}

unsigned bigfloat_digits() { return digits_slot(); }

void set_bigfloat_digits(unsigned digits) {
  digits_slot() = std::max(kMinDigits, digits);
  BigFloat::default_precision(digits_slot());
}

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty number");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const Integer p = parse_integer(trim(s.substr(0, slash)), s);
    const Integer q = parse_integer(trim(s.substr(slash + 1)), s);
    if (q == 0) throw DivisionByZero("zero denominator in '" + std::string(s) + "'");
    return Rational(p, q);
  }

  std::string_view mantissa = s;
  long exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = s.substr(0, e);
    std::string_view ex = s.substr(e + 1);
    bool neg = false;
    if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
      neg = ex.front() == '-';
      ex.remove_prefix(1);
    }
    if (!all_digits(ex) || ex.size() > 6) throw ParseError("malformed exponent in '" + std::string(s) + "'");
    exponent = std::stol(std::string(ex));
    if (neg) exponent = -exponent;
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '+' || mantissa.front() == '-')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  long frac_digits = 0;
  if (const auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    const std::string_view ip = mantissa.substr(0, dot);
    const std::string_view fp = mantissa.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty())) {
      throw ParseError("malformed number: '" + std::string(s) + "'");
    }
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mantissa)) throw ParseError("malformed number: '" + std::string(s) + "'");
    digits = std::string(mantissa);
  }

  Rational value{decimal_integer(digits)};
  const long shift = exponent - frac_digits;
  if (shift > 0) value *= Rational(pow10(static_cast<unsigned>(shift)));
  if (shift < 0) value /= Rational(pow10(static_cast<unsigned>(-shift)));
  return negative ? Rational(-value) : value;
}

std::string fraction_string(const Rational& value) {
  const Integer den = boost::multiprecision::denominator(value);
  std::string out = boost::multiprecision::numerator(value).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

std::string decimal_string(const Rational& value, int digits) {
  if (digits < 1) throw std::invalid_argument("decimal_string: digits must be positive");
  if (value == 0) return "0";
  const bool negative = value < 0;
  const Rational a = negative ? Rational(-value) : value;

  // Find exponent with 10^(e-1) <= a < 10^e.
  const Integer num = boost::multiprecision::numerator(a);
  const Integer den = boost::multiprecision::denominator(a);
  long e = static_cast<long>(mpz_sizeinbase(num.backend().data(), 10)) -
           static_cast<long>(mpz_sizeinbase(den.backend().data(), 10));
  auto power = [](long k) {
    return k >= 0 ? Rational(pow10(static_cast<unsigned>(k)))
                  : Rational(Integer(1), pow10(static_cast<unsigned>(-k)));
  };
  while (a >= power(e)) ++e;
  while (a < power(e - 1)) --e;

  Integer mant = round_half_even(a * power(digits - e));
  if (mant == pow10(static_cast<unsigned>(digits))) {
    mant = pow10(static_cast<unsigned>(digits - 1));
    ++e;
  }

  std::string out = negative ? "-0." : "0.";
  out += mant.str();
  out += e < 0 ? "e-" : "e+";
  out += std::to_string(e < 0 ? -e : e);
  return out;
}

Rational exact_rational(const BigFloat& value) {
  if (!boost::multiprecision::isfinite(value)) throw std::domain_error("non-finite BigFloat");
  Rational r;
  mpfr_get_q(r.backend().data(), value.backend().data());
  return r;
}

Rational exact_rational(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite double");
  Rational r;
  mpq_set_d(r.backend().data(), value);
  return r;
}

BigFloat to_bigfloat(const Rational& value) {
  BigFloat out;
  mpfr_set_q(out.backend().data(), value.backend().data(), MPFR_RNDN);
  return out;
}

double to_double_rounded(const Rational& value) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, value.backend().data(), MPFR_RNDN);
  const double d = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return d;
}

std::string field_traits<BigFloat>::exact_string(const BigFloat& x) {
  // Enough digits that parsing the string back gives the same value.
  const auto digits = static_cast<std::streamsize>(mpfr_get_str_ndigits(10, mpfr_get_prec(x.backend().data())));
  return x.str(digits, std::ios_base::scientific);
}

bool field_traits<BigFloat>::negligible(const BigFloat& d, const BigFloat& scale) {
  if (d == 0) return true;
  const long bits = static_cast<long>(mpfr_get_prec(d.backend().data()));
  // 2^12 units in the last place of the working precision.
  return boost::multiprecision::abs(d) <= boost::multiprecision::ldexp(scale, static_cast<int>(13 - bits));
}

std::string field_traits<double>::exact_string(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace seriaccel
