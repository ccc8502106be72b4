// seriaccel: sequence transformations, error terms and coefficient
// prediction from the command line.
//
// Exit status: 0 success, 1 usage error or breakdown, 2 reference mismatch.

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seriaccel/builtin.hpp"
#include "seriaccel/prediction.hpp"
#include "seriaccel/remainder.hpp"
#include "seriaccel/report.hpp"
#include "seriaccel/reproduce.hpp"
#include "seriaccel/transforms.hpp"

namespace {

using namespace seriaccel;

constexpr int kUsage = 1;
constexpr int kMismatch = 2;

struct Options {
  std::string series;
  std::string family;
  std::string mode;
  std::string z;
  std::string format = "text";
  std::string experiment;
  std::size_t terms = 0;
  std::size_t use = 0;
  std::size_t count = 4;
  std::size_t max_m = 12;
  int digits = 10;
};

FieldMode resolve_mode(const Options& o, const SeriesSpec& spec, FieldMode fallback) {
  if (!o.mode.empty()) return parse_field_mode(o.mode);
  if (spec.source == SeriesSpec::Source::file) {
    if (auto m = file_mode(spec.path)) return *m;
  }
  return fallback;
}

template <class Fn>
int dispatch(FieldMode mode, Fn&& fn) {
  switch (mode) {
    case FieldMode::rational: return fn.template operator()<Rational>();
    case FieldMode::bigfloat: return fn.template operator()<BigFloat>();
    case FieldMode::f64: return fn.template operator()<double>();
  }
  return kUsage;
}

std::vector<Family> families_from(const std::string& text) {
  if (text.empty() || text == "all") return {Family::aitken, Family::epsilon, Family::theta};
  return {parse_family(text)};
}

template <Field T>
std::string show(const T& x, int digits) {
  std::string s = to_decimal_string(x, digits);
  if constexpr (field_traits<T>::exact) s += "  (" + fraction_string(x) + ")";
  return s;
}

int emit_rows(const std::vector<ReportRow>& rows, const Options& o, int grid_digits) {
  if (o.format == "csv") {
    std::cout << to_csv(rows);
  } else if (o.format == "json") {
    std::cout << to_json(rows);
  } else if (o.format == "text") {
    std::cout << format_grid(rows, grid_digits);
  } else {
    std::cerr << "unknown format '" << o.format << "' (text, csv, json)\n";
    return kUsage;
  }
  return 0;
}

int cmd_accelerate(const Options& o) {
  const SeriesSpec spec = parse_series_spec(o.series);
  const TableKind kind = parse_table_kind(o.family.empty() ? "aitken" : o.family);
  return dispatch(resolve_mode(o, spec, FieldMode::rational), [&]<class T>() {
    const std::size_t count = o.terms ? o.terms : 13;
    const auto series = load_series<T>(spec, count);
    const std::size_t terms = o.terms ? o.terms : series.size();
    const T z = o.z.empty() ? T(1) : parse_scalar<T>(o.z);
    const std::vector<T> sums = series.partial_sums(z, terms);
    const auto table = build_table<T>(kind, std::span<const T>(sums));

    std::vector<ReportRow> rows;
    for (std::size_t m = 0; m < sums.size(); ++m) {
      const auto [k, n] = selection_rule(table.step(), m);
      ReportRow row{m, std::string(to_string(kind)), k, n, {}, false};
      if (table.contains(k, n) && table.valid(k, n)) {
        row.value = to_exact_string(*table.approximant(k, n));
        row.valid = true;
      }
      rows.push_back(std::move(row));
    }
    if (o.format != "text") return emit_rows(rows, o, o.digits);

    std::cout << "table " << to_string(kind) << " of " << sums.size() << " partial sums at z = " << to_exact_string(z)
              << '\n';
    const auto& entries = table.entries();
    for (std::size_t col = 0; col < entries.columns(); ++col) {
      if (entries.size(col) == 0) break;
      std::cout << "column " << col << (table.auxiliary(col) ? " (auxiliary)" : "") << '\n';
      for (std::size_t n = 0; n < entries.size(col); ++n) {
        const auto& e = entries.at(col, n);
        std::cout << "  n=" << std::setw(2) << n << "  " << (e ? show(*e, o.digits) : std::string("invalid")) << '\n';
      }
    }
    for (const auto& b : entries.breakdowns()) {
      std::cout << "breakdown at column " << b.k << ", n=" << b.n << '\n';
    }
    std::cout << "selected approximants\n";
    for (const auto& row : rows) {
      std::cout << "  m=" << std::setw(2) << row.m << "  k=" << row.k << " n=" << row.n << "  "
                << (row.valid ? show(parse_scalar<T>(row.value), o.digits) : std::string("invalid")) << '\n';
    }
    return 0;
  });
}

int cmd_predict(const Options& o) {
  const SeriesSpec spec = parse_series_spec(o.series);
  return dispatch(resolve_mode(o, spec, FieldMode::rational), [&]<class T>() {
    const auto full = load_series<T>(spec, o.use + 1);
    const PowerSeries<T> known(full.truncated(o.use).coeffs(), full.name());
    int status = 0;
    for (Family family : families_from(o.family)) {
      const auto report = make_prediction_report(known, family, o.use, o.count);
      std::cout << to_string(family) << ": gamma_0..gamma_" << o.use;
      if (!report.zero_coefficients.empty()) {
        std::cout << " (zero coefficients at";
        for (auto i : report.zero_coefficients) std::cout << ' ' << i;
        std::cout << ")";
      }
      std::cout << '\n';
      const auto print = [&](const Prediction<T>& p) {
        std::cout << "  k=" << p.k << " n=" << p.n << '\n';
        for (const auto& c : p.coefficients) {
          std::cout << "  gamma_" << c.index << " = " << show(c.value, o.digits) << '\n';
        }
      };
      if (report.prediction) {
        print(*report.prediction);
      } else {
        std::cout << "  " << *report.breakdown << '\n';
        for (const auto& p : report.lower_order) {
          std::cout << "  lower order:";
          print(p);
        }
        status = kUsage;
      }
      const auto& lp = report.leading_predictions.entries;
      const auto& lr = report.leading_remainders.entries;
      std::size_t flagged = 0;
      for (std::size_t k = 0; k < lr.columns(); ++k) {
        for (std::size_t n = 0; n < lr.size(k); ++n) flagged += report.leading_remainders.nonzero(k, n) ? 0 : 1;
      }
      std::cout << "  leading predictions: " << lp.breakdowns().size() << " breakdown(s); leading remainders: "
                << flagged << " zero or invalid entr" << (flagged == 1 ? "y" : "ies") << '\n';
    }
    return status;
  });
}

int cmd_terms(const Options& o, bool error_terms) {
  const SeriesSpec spec = parse_series_spec(o.series);
  if (o.z.empty()) {
    std::cerr << "--z is required\n";
    return kUsage;
  }
  return dispatch(resolve_mode(o, spec, FieldMode::bigfloat), [&]<class T>() {
    const auto series = load_series<T>(spec, o.max_m + 1);
    const T z = parse_scalar<T>(o.z);
    const auto families = families_from(o.family);
    const auto cells = error_terms
                           ? evaluate_error_terms(series, z, std::span<const Family>(families), o.max_m)
                           : evaluate_transformation_terms(series, z, std::span<const Family>(families), o.max_m);
    return emit_rows(report_rows(cells), o, o.digits);
  });
}

int cmd_reproduce(const Options& o) {
  std::vector<std::string> names;
  if (o.experiment == "all") {
    names = experiment_names();
  } else {
    names.push_back(o.experiment);
  }
  int status = 0;
  for (const auto& name : names) {
    const auto result = run_experiment(name);
    std::cout << result.report;
    if (!result.matched()) status = kMismatch;
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sequence transformations, error terms and coefficient prediction"};
  app.require_subcommand(1);
  Options o;

  const auto add_series = [&](CLI::App* c) { c->add_option("--series", o.series, "builtin:NAME(params) or file:PATH")->required(); };
  const auto add_mode = [&](CLI::App* c) { c->add_option("--mode", o.mode, "rational, bigfloat or f64"); };

  auto* acc = app.add_subcommand("accelerate", "transform the partial sums at z and select approximants");
  add_series(acc);
  acc->add_option("--family", o.family,
                  "aitken, aitken-classic, epsilon, epsilon-cross, epsilon-cross-rearranged, theta, theta-modified, "
                  "theta-iterated, theta-iterated-classic");
  acc->add_option("--z", o.z, "evaluation point (default 1)");
  acc->add_option("--terms", o.terms, "number of partial sums");
  acc->add_option("--digits", o.digits, "significant digits shown");
  acc->add_option("--format", o.format, "text, csv or json");
  add_mode(acc);

  auto* pred = app.add_subcommand("predict", "predict the next series coefficients");
  add_series(pred);
  pred->add_option("--family", o.family, "aitken, epsilon, theta or all (default)");
  pred->add_option("--use", o.use, "index of the last known coefficient")->required();
  pred->add_option("--count", o.count, "number of predicted coefficients");
  pred->add_option("--digits", o.digits, "significant digits shown");
  add_mode(pred);

  auto* err = app.add_subcommand("error-terms", "z^offset * remainder terms at numeric z");
  auto* tra = app.add_subcommand("transform-terms", "z^offset * transformation terms at numeric z");
  for (auto* c : {err, tra}) {
    add_series(c);
    c->add_option("--z", o.z, "evaluation point")->required();
    c->add_option("--max-m", o.max_m, "last partial-sum index");
    c->add_option("--family", o.family, "aitken, epsilon, theta or all (default)");
    c->add_option("--format", o.format, "text, csv or json");
    c->add_option("--digits", o.digits, "significant digits in text output");
    add_mode(c);
  }

  auto* rep = app.add_subcommand("reproduce", "rerun a reference experiment and compare");
  rep->add_option("--experiment", o.experiment, "table1, table2, expansion7, predict13 or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  try {
    if (*acc) return cmd_accelerate(o);
    if (*pred) return cmd_predict(o);
    if (*err) return cmd_terms(o, true);
    if (*tra) return cmd_terms(o, false);
    if (*rep) return cmd_reproduce(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
