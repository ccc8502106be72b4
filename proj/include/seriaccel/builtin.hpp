#pragma once

// Built-in model series and coefficient files.
//
//   log1p-over-z     gamma_m = (-1)^m/(m+1), f(z) = log(1+z)/z
//   zeta(s)          gamma_m = (m+1)^(-s); partial sums at z = 1 tend to zeta(s)
//   geometric(q)     gamma_m = q^m, f(z) = 1/(1 - q z)
//   model(s,c,l)     partial sums at z = 1 are s + c*l^n
//
// A coefficient file holds one coefficient per line ("p/q" or decimal),
// optionally preceded by "# mode: rational|bigfloat|f64". Blank lines and
// other '#' lines are ignored.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "seriaccel/numeric.hpp"
#include "seriaccel/series.hpp"

namespace seriaccel {

struct SeriesSpec {
  enum class Source { builtin, file };
  Source source = Source::builtin;
  std::string name;                 // builtin name
  std::vector<std::string> params;  // builtin parameters, unparsed
  std::string path;                 // file path
};

/// "builtin:NAME", "builtin:NAME(p1,p2,...)" or "file:PATH".
SeriesSpec parse_series_spec(std::string_view text);

/// Mode named in the file's "# mode:" header, if any.
std::optional<FieldMode> file_mode(const std::string& path);

/// Coefficient strings of a file, in order.
std::vector<std::string> read_coefficient_file(const std::string& path);

template <Field T>
PowerSeries<T> builtin_series(std::string_view name, const std::vector<std::string>& params, std::size_t count);

template <Field T>
PowerSeries<T> load_series(const SeriesSpec& spec, std::size_t count);

extern template PowerSeries<Rational> builtin_series<Rational>(std::string_view, const std::vector<std::string>&,
                                                               std::size_t);
extern template PowerSeries<BigFloat> builtin_series<BigFloat>(std::string_view, const std::vector<std::string>&,
                                                               std::size_t);
extern template PowerSeries<double> builtin_series<double>(std::string_view, const std::vector<std::string>&,
                                                           std::size_t);
extern template PowerSeries<Rational> load_series<Rational>(const SeriesSpec&, std::size_t);
extern template PowerSeries<BigFloat> load_series<BigFloat>(const SeriesSpec&, std::size_t);
extern template PowerSeries<double> load_series<double>(const SeriesSpec&, std::size_t);

}  // namespace seriaccel
