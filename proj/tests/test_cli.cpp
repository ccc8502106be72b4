#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "seriaccel/builtin.hpp"
#include "seriaccel/report.hpp"
#include "seriaccel/reproduce.hpp"

using namespace seriaccel;

namespace {

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path.string();
}

}  // namespace

TEST_CASE("builtin series") {
  const auto log = builtin_series<Rational>("log1p-over-z", {}, 4);
  CHECK(log.coeffs() == std::vector<Rational>{1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4)});
  // tail: gamma_{n+m+1} = (-1)^(n+m+1)/(n+m+2); n = 0, m = 0 gives -1/2
  CHECK(log.coefficient(1) == Rational(-1, 2));
  CHECK(log.coefficient(20) == Rational(1, 21));

  const auto model = builtin_series<Rational>("model", {"1", "1", "1/2"}, 3);
  CHECK(model.partial_sums(Rational(1), 3) == std::vector<Rational>{2, Rational(3, 2), Rational(5, 4)});
  CHECK(model.value(Rational(1)) == 1);

  const auto zeta = builtin_series<Rational>("zeta", {"2"}, 3);
  CHECK(zeta.coeffs() == std::vector<Rational>{1, Rational(1, 4), Rational(1, 9)});
  CHECK_THROWS(builtin_series<Rational>("zeta", {"1.5"}, 3));
  CHECK_THROWS(builtin_series<double>("zeta", {"1"}, 3));

  const auto geo = builtin_series<Rational>("geometric", {"1/2"}, 3);
  CHECK(geo.coefficient(3) == Rational(1, 8));
  CHECK(geo.value(Rational(1)) == 2);

  const auto logd = builtin_series<double>("log1p-over-z", {}, 3);
  CHECK(logd.value(1.0) == doctest::Approx(std::log(2.0)));

  CHECK_THROWS(builtin_series<Rational>("bessel", {}, 3));
  CHECK_THROWS(builtin_series<Rational>("model", {"1"}, 3));
  CHECK_THROWS(builtin_series<Rational>("model", {"1", "1", "-1"}, 3));
}

TEST_CASE("series specs") {
  auto s = parse_series_spec("builtin:model(1, 2, 1/3)");
  CHECK(s.source == SeriesSpec::Source::builtin);
  CHECK(s.name == "model");
  CHECK(s.params == std::vector<std::string>{"1", "2", "1/3"});
  s = parse_series_spec("builtin:log1p-over-z");
  CHECK(s.params.empty());
  s = parse_series_spec("file:/tmp/x.txt");
  CHECK(s.source == SeriesSpec::Source::file);
  CHECK(s.path == "/tmp/x.txt");
  CHECK_THROWS_AS(parse_series_spec("log1p-over-z"), ParseError);
  CHECK_THROWS_AS(parse_series_spec("builtin:zeta(2"), ParseError);
}

TEST_CASE("coefficient files") {
  const auto path = temp_file("seriaccel_coeffs.txt", "# mode: rational\n1\n-1/2\n\n0.25\n# comment\n-1e-1\n");
  CHECK(file_mode(path) == FieldMode::rational);
  const auto s = load_series<Rational>(parse_series_spec("file:" + path), 0);
  CHECK(s.coeffs() == std::vector<Rational>{1, Rational(-1, 2), Rational(1, 4), Rational(-1, 10)});
  CHECK_FALSE(s.has_tail());
  const auto plain = temp_file("seriaccel_plain.txt", "1\n2\n");
  CHECK_FALSE(file_mode(plain).has_value());
  const auto bad = temp_file("seriaccel_bad.txt", "1\nx\n");
  CHECK_THROWS_AS(load_series<Rational>(parse_series_spec("file:" + bad), 0), ParseError);
  CHECK_THROWS(load_series<Rational>(parse_series_spec("file:/nonexistent/file"), 0));
}

TEST_CASE("CSV and JSON round trip") {
  const auto log = builtin_series<BigFloat>("log1p-over-z", {}, 13);
  const Family fam[] = {Family::aitken, Family::epsilon, Family::theta};
  const auto cells = evaluate_error_terms(log, parse_scalar<BigFloat>("0.95"), std::span<const Family>(fam), 12);
  auto rows = report_rows(cells);
  rows.push_back({13, "aitken", 6, 1, "", false});
  CHECK(parse_csv(to_csv(rows)) == rows);
  CHECK(parse_json(to_json(rows)) == rows);
  for (std::size_t i = 0; i < cells.size(); ++i) CHECK(parse_scalar<BigFloat>(rows[i].value) == *cells[i].value);

  const auto exact = builtin_series<Rational>("log1p-over-z", {}, 11);
  const auto ec = evaluate_transformation_terms(exact, Rational(5), std::span<const Family>(fam), 10);
  const auto er = report_rows(ec);
  CHECK(er[6].value.find('/') != std::string::npos);
  CHECK(parse_csv(to_csv(er)) == er);
  CHECK(parse_json(to_json(er)) == er);

  CHECK_THROWS_AS(parse_csv("bad header\n"), ParseError);
  CHECK_THROWS_AS(parse_json("{"), ParseError);
}

TEST_CASE("grid output marks invalid cells") {
  const std::vector<ReportRow> rows = {{0, "aitken", 0, 0, "1/3", true}, {0, "epsilon", 0, 0, "", false}};
  const auto grid = format_grid(rows, 4);
  CHECK(grid.find("0.3333e+0") != std::string::npos);
  CHECK(grid.find("invalid") != std::string::npos);
}

TEST_CASE("experiments are deterministic") {
  for (const auto& name : experiment_names()) {
    const auto a = run_experiment(name);
    const auto b = run_experiment(name);
    CHECK(a.report == b.report);
    CHECK_FALSE(a.checks.empty());
  }
  CHECK_THROWS(run_experiment("table3"));
}

TEST_CASE("exact experiments match their reference values") {
  CHECK(run_experiment("expansion7").matched());
  CHECK(run_experiment("predict13").matched());
  CHECK(run_experiment("table2").matched());
}
