#include "seriaccel/reproduce.hpp"

#include <array>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "seriaccel/builtin.hpp"
#include "seriaccel/prediction.hpp"
#include "seriaccel/remainder.hpp"

namespace seriaccel {

namespace {

using Row3 = std::array<const char*, 3>;

// Columns: Aitken, epsilon, iterated theta.
constexpr Row3 kTable1[] = {
    {"0", "0", "0"},
    {"0", "0", "0"},
    {"0.620539e-2", "0.620539e-2", "0"},
    {"-0.230919e-2", "-0.230919e-2", "0.113587e-2"},
    {"0.109322e-3", "0.156975e-3", "-0.367230e-3"},
    {"-0.333267e-4", "-0.466090e-4", "0.148577e-3"},
    {"0.131240e-5", "0.413753e-5", "0.137543e-5"},
    {"-0.371684e-6", "-0.108095e-5", "-0.392983e-6"},
    {"0.111500e-7", "0.110743e-6", "0.131377e-6"},
    {"-0.311899e-8", "-0.266535e-7", "0.412451e-9"},
    {"0.689220e-10", "0.298638e-8", "-0.139178e-9"},
    {"-0.199134e-10", "-0.678908e-9", "0.475476e-10"},
    {"0.282138e-12", "0.808737e-10", "-0.316716e-12"},
};

constexpr Row3 kTable2[] = {
    {"0", "0", "0"},
    {"0", "0", "0"},
    {"-0.6410256410e1", "-0.6410256410e1", "0"},
    {"0.2467105263e2", "0.2467105263e2", "0.2480158730e2"},
    {"-0.1002174398e3", "-0.1002155172e3", "-0.1002604167e3"},
    {"0.4205996885e3", "0.4205974843e3", "0.4206730769e3"},
    {"-0.1811533788e4", "-0.1811532973e4", "-0.1811533744e4"},
    {"0.7954089807e4", "0.7954089068e4", "0.7954089765e4"},
    {"-0.3544868723e5", "-0.3544868703e5", "-0.3544868636e5"},
    {"0.1598638127e6", "0.1598638125e6", "0.1598638127e6"},
    {"-0.7279202782e6", "-0.7279202781e6", "-0.7279202782e6"},
};

// z^7, z^8, z^9 coefficients of A_3^(0), eps_6^(0), J_2^(0) minus f.
constexpr Row3 kExpansion7[] = {
    {"421/16537500", "-796321/8682187500", "810757427/4051687500000"},
    {"1/9800", "-31/77175", "113/120050"},
    {"1/37800", "-19/198450", "1/4725"},
};

// gamma_13..gamma_16 predicted from gamma_0..gamma_12.
constexpr std::array<const char*, 4> kPredict13[] = {
    {"-0.07142857137", "0.06666666629", "-0.06249999856", "0.05882352524"},
    {"-0.07142854717", "0.06666649774", "-0.06249934843", "0.05882168762"},
    {"-0.07142857148", "0.06666666684", "-0.06249999986", "0.05882352708"},
};

constexpr Family kFamilies[] = {Family::aitken, Family::epsilon, Family::theta};

std::string family_label(Family f) {
  return f == Family::theta ? "theta-iterated" : std::string(to_string(f));
}

GoldenCheck check_digits(std::string label, const char* expected, const std::string& actual_exact, int digits) {
  GoldenCheck c{std::move(label), expected, decimal_string(parse_rational(actual_exact), digits), false};
  c.ok = same_digits(expected, actual_exact, digits);
  return c;
}

void write_checks(std::ostringstream& out, const ExperimentResult& r) {
  for (const auto& c : r.checks) {
    if (!c.ok) out << "MISMATCH " << c.label << ": expected " << c.expected << ", got " << c.actual << '\n';
  }
  out << r.name << ": " << (r.checks.size() - r.mismatches()) << "/" << r.checks.size() << " values match\n";
}

template <class Golden>
ExperimentResult numeric_table(std::string name, const std::vector<TermCell<BigFloat>>& cells, const Golden& golden,
                               int digits, const std::string& heading, const std::vector<std::string>& first_column,
                               const std::string& first_heading) {
  ExperimentResult r;
  r.name = std::move(name);
  std::ostringstream out;
  out << heading << '\n';
  const int width = digits + 10;
  out << std::setw(3) << "m" << "  " << std::setw(width) << first_heading;
  for (Family f : kFamilies) out << "  " << std::setw(width) << family_label(f);
  out << '\n';
  const std::size_t rows = std::size(golden);
  for (std::size_t m = 0; m < rows; ++m) {
    out << std::setw(3) << m << "  " << std::setw(width) << first_column[m];
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& cell = cells[m * 3 + i];
      const std::string label = "m=" + std::to_string(m) + " " + family_label(cell.family);
      if (!cell.value) {
        r.checks.push_back({label, golden[m][i], "invalid", false});
        out << "  " << std::setw(width) << "invalid";
        continue;
      }
      r.checks.push_back(check_digits(label, golden[m][i], to_exact_string(*cell.value), digits));
      out << "  " << std::setw(width) << r.checks.back().actual;
    }
    out << '\n';
  }
  write_checks(out, r);
  r.report = out.str();
  return r;
}

ExperimentResult table1() {
  const auto series = builtin_series<BigFloat>("log1p-over-z", {}, 13);
  const BigFloat z = parse_scalar<BigFloat>("0.95");
  const auto cells = evaluate_error_terms(series, z, std::span<const Family>(kFamilies), 12);
  // First column: the tail sums sum_m (-1)^(n+m) z^m/(n+m+2) = -R_0^(n)(z).
  const BigFloat f = series.value(z);
  const auto sums = series.partial_sums(z, 13);
  std::vector<std::string> tails;
  BigFloat zp = z;
  for (std::size_t n = 0; n <= 12; ++n) {
    tails.push_back(to_decimal_string(BigFloat((f - sums[n]) / zp), 6));
    zp *= z;
  }
  return numeric_table("table1", cells, kTable1, 6,
                       "error terms z^(n+1) R of log(1+z)/z at z = 0.95 (BigFloat, " +
                           std::to_string(bigfloat_digits()) + " digits)",
                       tails, "tail");
}

ExperimentResult table2() {
  const auto series = builtin_series<BigFloat>("log1p-over-z", {}, 11);
  const BigFloat z = parse_scalar<BigFloat>("5");
  const auto cells = evaluate_transformation_terms(series, z, std::span<const Family>(kFamilies), 10);
  std::vector<std::string> sums;
  for (const auto& s : series.partial_sums(z, 11)) sums.push_back(to_decimal_string(s, 10));
  return numeric_table("table2", cells, kTable2, 10,
                       "transformation terms z^(n+1) Phi of log(1+z)/z at z = 5 (BigFloat, " +
                           std::to_string(bigfloat_digits()) + " digits)",
                       sums, "partial sum");
}

ExperimentResult expansion7() {
  ExperimentResult r;
  r.name = "expansion7";
  std::ostringstream out;
  out << "exact z^7..z^9 coefficients of (approximant - log(1+z)/z), rational mode\n";
  const auto series = builtin_series<Rational>("log1p-over-z", {}, 1);
  const std::size_t columns[] = {3, 3, 2};
  const char* names[] = {"A_3^(0)", "eps_6^(0)", "J_2^(0)"};
  for (std::size_t i = 0; i < 3; ++i) {
    const auto jets = remainder_jets(series, kFamilies[i], columns[i], 2);
    out << std::setw(10) << names[i];
    if (!jets.valid(columns[i], 0)) {
      for (int j = 0; j < 3; ++j) {
        r.checks.push_back({std::string(names[i]) + " z^" + std::to_string(7 + j), kExpansion7[i][j], "invalid", false});
      }
      out << "  invalid\n";
      continue;
    }
    const auto term = jets.term(columns[i], 0);
    for (std::size_t j = 0; j < 3; ++j) {
      const std::string actual = fraction_string(term.term[j]);
      r.checks.push_back({std::string(names[i]) + " z^" + std::to_string(term.offset + j), kExpansion7[i][j], actual,
                          parse_rational(kExpansion7[i][j]) == term.term[j]});
      out << "  " << std::setw(24) << actual;
    }
    out << '\n';
  }
  write_checks(out, r);
  r.report = out.str();
  return r;
}

ExperimentResult predict13() {
  ExperimentResult r;
  r.name = "predict13";
  std::ostringstream out;
  out << "gamma_13..gamma_16 of log(1+z)/z predicted from gamma_0..gamma_12, rational mode\n";
  const auto series = builtin_series<Rational>("log1p-over-z", {}, 13).truncated(12);
  PowerSeries<Rational> known(series.coeffs(), series.name());
  out << std::left << std::setw(16) << "family" << std::right;
  for (std::size_t j = 13; j <= 16; ++j) out << std::setw(18) << ("gamma_" + std::to_string(j));
  out << '\n';
  for (std::size_t i = 0; i < 3; ++i) {
    out << std::left << std::setw(16) << family_label(kFamilies[i]) << std::right;
    try {
      const auto p = predict_coefficients(known, kFamilies[i], 12, 4);
      for (std::size_t j = 0; j < 4; ++j) {
        const std::string exact = fraction_string(p.coefficients[j].value);
        r.checks.push_back(check_digits(family_label(kFamilies[i]) + " gamma_" + std::to_string(13 + j),
                                        kPredict13[i][j], exact, 10));
        out << std::setw(18) << r.checks.back().actual;
      }
    } catch (const Breakdown& e) {
      for (std::size_t j = 0; j < 4; ++j) {
        r.checks.push_back({family_label(kFamilies[i]) + " gamma_" + std::to_string(13 + j), kPredict13[i][j],
                            "breakdown", false});
      }
      out << "  " << e.what();
    }
    out << '\n';
  }
  out << std::left << std::setw(16) << "exact" << std::right;
  for (long j = 13; j <= 16; ++j) {
    const Rational g(j % 2 == 0 ? 1 : -1, j + 1);
    out << std::setw(18) << decimal_string(g, 10);
  }
  out << '\n';
  write_checks(out, r);
  r.report = out.str();
  return r;
}

}  // namespace

bool ExperimentResult::matched() const { return mismatches() == 0; }

std::size_t ExperimentResult::mismatches() const {
  std::size_t bad = 0;
  for (const auto& c : checks) bad += c.ok ? 0 : 1;
  return bad;
}

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {"table1", "table2", "expansion7", "predict13"};
  return names;
}

ExperimentResult run_experiment(std::string_view name) {
  if (name == "table1") return table1();
  if (name == "table2") return table2();
  if (name == "expansion7") return expansion7();
  if (name == "predict13") return predict13();
  throw std::invalid_argument("unknown experiment '" + std::string(name) +
                              "' (table1, table2, expansion7, predict13)");
}

bool same_digits(std::string_view expected, std::string_view actual_exact, int digits) {
  return decimal_string(parse_rational(expected), digits) == decimal_string(parse_rational(actual_exact), digits);
}

}  // namespace seriaccel
