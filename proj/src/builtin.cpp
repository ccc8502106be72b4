#include "seriaccel/builtin.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <mpfr.h>

namespace seriaccel {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <Field T>
T power(const T& base, std::size_t e) {
  T r(1);
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

template <Field T>
T log1p_over_z(const T& z) {
  if (z == 0) return T(1);
  if constexpr (std::is_same_v<T, double>) {
    return std::log1p(z) / z;
  } else {
    return boost::multiprecision::log1p(z) / z;
  }
}

BigFloat mpfr_zeta_value(const BigFloat& s) {
  BigFloat out;
  mpfr_zeta(out.backend().data(), s.backend().data(), MPFR_RNDN);
  return out;
}

template <Field T>
void expect_params(std::string_view name, const std::vector<std::string>& params, std::size_t count) {
  if (params.size() != count) {
    throw std::invalid_argument("builtin '" + std::string(name) + "' takes " + std::to_string(count) +
                                " parameter(s), got " + std::to_string(params.size()));
  }
}

template <Field T>
std::vector<T> first_coefficients(const typename PowerSeries<T>::CoefficientFn& gamma, std::size_t count) {
  std::vector<T> out;
  out.reserve(count);
  for (std::size_t m = 0; m < count; ++m) out.push_back(gamma(m));
  return out;
}

template <Field T>
PowerSeries<T> make_log1p(std::size_t count) {
  typename PowerSeries<T>::CoefficientFn gamma = [](std::size_t m) {
    const T v = field_traits<T>::from_rational(Rational(1, static_cast<long>(m + 1)));
    return m % 2 == 0 ? v : T(-v);
  };
  PowerSeries<T> s(first_coefficients<T>(gamma, count), "log1p-over-z");
  s.with_tail(gamma);
  if constexpr (!field_traits<T>::exact) s.with_value([](const T& z) { return log1p_over_z(z); });
  return s;
}

template <Field T>
PowerSeries<T> make_zeta(const std::string& param, std::size_t count) {
  const Rational s = parse_rational(param);
  if (s <= 1) throw std::invalid_argument("zeta(s) needs s > 1");
  typename PowerSeries<T>::CoefficientFn gamma;
  if constexpr (field_traits<T>::exact) {
    if (boost::multiprecision::denominator(s) != 1 || s > 1000) {
      throw std::invalid_argument("zeta(s) in rational mode needs an integer s >= 2");
    }
    const auto e = static_cast<std::size_t>(boost::multiprecision::numerator(s).convert_to<long>());
    gamma = [e](std::size_t m) { return Rational(1) / power(Rational(m + 1), e); };
  } else {
    const T se = field_traits<T>::from_rational(s);
    gamma = [se](std::size_t m) {
      using std::pow;
      using boost::multiprecision::pow;
      return T(1) / T(pow(T(m + 1), se));
    };
  }
  PowerSeries<T> out(first_coefficients<T>(gamma, count), "zeta(" + param + ")");
  out.with_tail(gamma);
  if constexpr (!field_traits<T>::exact) {
    // Only the value at z = 1 (the limit of the partial sums) is provided.
    const T zeta_s = static_cast<T>(mpfr_zeta_value(to_bigfloat(s)));
    out.with_value([zeta_s](const T& z) {
      if (z != 1) throw std::logic_error("zeta series: closed form only at z = 1");
      return zeta_s;
    });
  }
  return out;
}

template <Field T>
PowerSeries<T> make_geometric(const std::string& param, std::size_t count) {
  const T q = parse_scalar<T>(param);
  typename PowerSeries<T>::CoefficientFn gamma = [q](std::size_t m) { return power(q, m); };
  PowerSeries<T> out(first_coefficients<T>(gamma, count), "geometric(" + param + ")");
  out.with_tail(gamma);
  out.with_value([q](const T& z) { return checked_div(T(1), T(1 - q * z)); });
  return out;
}

template <Field T>
PowerSeries<T> make_model(const std::vector<std::string>& params, std::size_t count) {
  const T s = parse_scalar<T>(params[0]);
  const T c = parse_scalar<T>(params[1]);
  const T lambda = parse_scalar<T>(params[2]);
  if (c == 0) throw std::invalid_argument("model(s,c,lambda) needs c != 0");
  if (field_traits<T>::abs(lambda) == 1) throw std::invalid_argument("model(s,c,lambda) needs |lambda| != 1");
  // s_n = s + c*lambda^n as partial sums at z = 1
  typename PowerSeries<T>::CoefficientFn gamma = [s, c, lambda](std::size_t m) {
    if (m == 0) return T(s + c);
    return T(c * power(lambda, m - 1) * (lambda - 1));
  };
  PowerSeries<T> out(first_coefficients<T>(gamma, count),
                     "model(" + params[0] + "," + params[1] + "," + params[2] + ")");
  out.with_tail(gamma);
  out.with_value([s, c, lambda](const T& z) {
    return T(s + c + checked_div(T(c * (lambda - 1) * z), T(1 - lambda * z)));
  });
  return out;
}

}  // namespace

SeriesSpec parse_series_spec(std::string_view text) {
  text = trim(text);
  SeriesSpec spec;
  if (text.starts_with("file:")) {
    spec.source = SeriesSpec::Source::file;
    spec.path = std::string(text.substr(5));
    if (spec.path.empty()) throw ParseError("series spec 'file:' needs a path");
    return spec;
  }
  if (!text.starts_with("builtin:")) {
    throw ParseError("series spec must start with 'builtin:' or 'file:', got '" + std::string(text) + "'");
  }
  std::string_view body = trim(text.substr(8));
  spec.source = SeriesSpec::Source::builtin;
  const auto open = body.find('(');
  if (open == std::string_view::npos) {
    spec.name = std::string(body);
  } else {
    if (body.back() != ')') throw ParseError("unbalanced parentheses in '" + std::string(text) + "'");
    spec.name = std::string(trim(body.substr(0, open)));
    std::string_view args = body.substr(open + 1, body.size() - open - 2);
    while (!trim(args).empty()) {
      const auto comma = args.find(',');
      spec.params.emplace_back(trim(args.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      args.remove_prefix(comma + 1);
    }
  }
  if (spec.name.empty()) throw ParseError("missing builtin name in '" + std::string(text) + "'");
  return spec;
}

std::optional<FieldMode> file_mode(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    std::string_view l = trim(line);
    if (l.empty()) continue;
    if (!l.starts_with("#")) return std::nullopt;
    l = trim(l.substr(1));
    if (l.starts_with("mode:")) return parse_field_mode(l.substr(5));
  }
  return std::nullopt;
}

std::vector<std::string> read_coefficient_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view l = trim(line);
    if (l.empty() || l.starts_with("#")) continue;
    out.emplace_back(l);
  }
  if (out.empty()) throw std::runtime_error("'" + path + "' contains no coefficients");
  return out;
}

template <Field T>
PowerSeries<T> builtin_series(std::string_view name, const std::vector<std::string>& params, std::size_t count) {
  if (count == 0) throw std::invalid_argument("builtin series needs count >= 1");
  if (name == "log1p-over-z") {
    expect_params<T>(name, params, 0);
    return make_log1p<T>(count);
  }
  if (name == "zeta") {
    expect_params<T>(name, params, 1);
    return make_zeta<T>(params[0], count);
  }
  if (name == "geometric") {
    if (params.empty()) return make_geometric<T>("1", count);
    expect_params<T>(name, params, 1);
    return make_geometric<T>(params[0], count);
  }
  if (name == "model") {
    expect_params<T>(name, params, 3);
    return make_model<T>(params, count);
  }
  throw std::invalid_argument("unknown builtin series '" + std::string(name) +
                              "' (log1p-over-z, zeta(s), geometric(q), model(s,c,lambda))");
}

template <Field T>
PowerSeries<T> load_series(const SeriesSpec& spec, std::size_t count) {
  if (spec.source == SeriesSpec::Source::builtin) return builtin_series<T>(spec.name, spec.params, count);
  std::vector<T> coeffs;
  for (const auto& c : read_coefficient_file(spec.path)) coeffs.push_back(parse_scalar<T>(c));
  return PowerSeries<T>(std::move(coeffs), spec.path);
}

template PowerSeries<Rational> builtin_series<Rational>(std::string_view, const std::vector<std::string>&,
                                                        std::size_t);
template PowerSeries<BigFloat> builtin_series<BigFloat>(std::string_view, const std::vector<std::string>&,
                                                        std::size_t);
template PowerSeries<double> builtin_series<double>(std::string_view, const std::vector<std::string>&, std::size_t);
template PowerSeries<Rational> load_series<Rational>(const SeriesSpec&, std::size_t);
template PowerSeries<BigFloat> load_series<BigFloat>(const SeriesSpec&, std::size_t);
template PowerSeries<double> load_series<double>(const SeriesSpec&, std::size_t);

}  // namespace seriaccel
