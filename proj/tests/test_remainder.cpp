#include <doctest.h>

#include "oracles.hpp"
#include "seriaccel/builtin.hpp"
#include "seriaccel/prediction.hpp"
#include "seriaccel/remainder.hpp"
#include "seriaccel/reproduce.hpp"

using namespace seriaccel;

namespace {

constexpr Family kFamilies[] = {Family::aitken, Family::epsilon, Family::theta};

}  // namespace

TEST_CASE("base remainder of the log series") {
  const auto log = builtin_series<Rational>("log1p-over-z", {}, 1);
  CHECK(base_remainder_jet(log, 0, 2) == Jet<Rational>{Rational(1, 2), Rational(-1, 3), Rational(1, 4)});
  const auto r = remainder_jets(log, Family::aitken, 0, 2, 3);
  CHECK(r.entries.columns() == 1);
  CHECK(r.term(0, 0).offset == 1);
}

TEST_CASE("C_0 is -gamma_{n+1} and matches the remainder jets' constant terms") {
  oracle::RandomRationals rng(201);
  for (int trial = 0; trial < 10; ++trial) {
    PowerSeries<Rational> s(rng.nonzero_list(20), "random");
    for (Family f : kAllFamilies) {
      const auto c = leading_remainders(s, f, 12);
      for (std::size_t n = 0; n < 12; ++n) CHECK(*c.entries.at(0, n) == -s.coefficient(n + 1));
      const std::size_t K = f == Family::theta ? 3 : 5;
      const auto r = remainder_jets(s, f, K, 3, 12);
      for (std::size_t k = 0; k < r.entries.columns(); ++k) {
        for (std::size_t n = 0; n < r.entries.size(k); ++n) {
          CAPTURE(k);
          CAPTURE(n);
          REQUIRE(c.entries.contains(k, n));
          CHECK(r.valid(k, n) == c.valid(k, n));
          if (r.valid(k, n)) CHECK(r.entries.value(k, n)[0] == c.entries.value(k, n));
        }
      }
    }
  }
}

TEST_CASE("c_2 of the log series and the connection g = c + gamma") {
  const auto log = builtin_series<Rational>("log1p-over-z", {}, 13);
  const auto c = leading_remainders(log, Family::epsilon, 12);
  // c_2^(0) = c_0^(2) - [c_0^(1)]^2 / c_0^(0) with c_0^(n) = -gamma_{n+1}
  const Rational direct = Rational(1, 4) - Rational(1, 9) / Rational(1, 2);
  CHECK(*c.entries.at(1, 0) == direct);
  CHECK(direct == Rational(1, 36));
  const auto g = leading_predictions(log, Family::epsilon, 12);
  CHECK(*g.entries.at(1, 0) - log.coefficient(3) == direct);
}

TEST_CASE("remainder jets reproduce the exact z^7 expansions") {
  const auto log = builtin_series<Rational>("log1p-over-z", {}, 1);
  const auto a = remainder_jets(log, Family::aitken, 3, 2).term(3, 0);
  CHECK(a.offset == 7);
  CHECK(a.term == Jet<Rational>{Rational(421, 16537500), Rational(-796321, 8682187500LL),
                                parse_rational("810757427/4051687500000")});
  const auto e = remainder_jets(log, Family::epsilon, 3, 2).term(3, 0);
  CHECK(e.term == Jet<Rational>{Rational(1, 9800), Rational(-31, 77175), Rational(113, 120050)});
  const auto t = remainder_jets(log, Family::theta, 2, 2).term(2, 0);
  CHECK(t.offset == 7);
  CHECK(t.term == Jet<Rational>{Rational(1, 37800), Rational(-19, 198450), Rational(1, 4725)});
}

TEST_CASE("zero C entries are flagged and stop deeper columns") {
  // gamma_2 = 0 makes C_0^(1) zero.
  const PowerSeries<Rational> s({1, 2, 0, 3, 4, 5, 6, 7});
  const auto c = leading_remainders(s, Family::aitken, 7);
  CHECK(c.valid(0, 1));
  CHECK_FALSE(c.nonzero(0, 1));
  CHECK_FALSE(c.valid(1, 1));
  CHECK(c.valid(1, 2));
}

TEST_CASE("error terms of the log series at z = 0.95") {
  const auto log = builtin_series<BigFloat>("log1p-over-z", {}, 13);
  const auto cells = evaluate_error_terms(log, parse_scalar<BigFloat>("0.95"), std::span<const Family>(kFamilies), 12);
  REQUIRE(cells.size() == 39);
  auto cell = [&](std::size_t m, std::size_t i) { return to_exact_string(*cells[3 * m + i].value); };
  CHECK(same_digits("0.620539e-2", cell(2, 0), 6));
  CHECK(same_digits("0.620539e-2", cell(2, 1), 6));
  CHECK(cell(2, 2) == to_exact_string(BigFloat(0)));
  CHECK(same_digits("0.131240e-5", cell(6, 0), 6));
  CHECK(same_digits("0.413753e-5", cell(6, 1), 6));
  CHECK(same_digits("0.137543e-5", cell(6, 2), 6));
  CHECK(same_digits("0.808737e-10", cell(12, 1), 6));
  CHECK(same_digits("-0.316716e-12", cell(12, 2), 6));
  for (std::size_t m = 0; m < 13; ++m) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto& c = cells[3 * m + i];
      CHECK(c.m == m);
      CHECK(c.family == kFamilies[i]);
      REQUIRE(c.value);
      const bool zero_expected = m < (i == 2 ? 3u : 2u);
      CHECK((*c.value == 0) == zero_expected);
    }
  }
}

TEST_CASE("error terms and transformation terms describe the same approximant") {
  const auto log = builtin_series<BigFloat>("log1p-over-z", {}, 13);
  const BigFloat z = parse_scalar<BigFloat>("0.95");
  const auto err = evaluate_error_terms(log, z, std::span<const Family>(kFamilies), 12);
  const auto tra = evaluate_transformation_terms(log, z, std::span<const Family>(kFamilies), 12);
  const BigFloat f = log.value(z);
  const auto sums = log.partial_sums(z, 13);
  const BigFloat tol = boost::multiprecision::ldexp(BigFloat(1), -140);
  for (std::size_t i = 0; i < err.size(); ++i) {
    if (err[i].k == 0) continue;
    const BigFloat lhs = f + *err[i].value;
    const BigFloat rhs = sums[err[i].m] + *tra[i].value;
    CHECK(boost::multiprecision::abs(lhs - rhs) < tol);
  }
}

TEST_CASE("transformation terms of the log series at z = 5") {
  const auto log = builtin_series<BigFloat>("log1p-over-z", {}, 11);
  const auto cells = evaluate_transformation_terms(log, BigFloat(5), std::span<const Family>(kFamilies), 10);
  auto cell = [&](std::size_t m, std::size_t i) { return to_exact_string(*cells[3 * m + i].value); };
  for (std::size_t i = 0; i < 3; ++i) CHECK(*cells[i].value == 0);
  CHECK(same_digits("0.2467105263e2", cell(3, 0), 10));
  CHECK(same_digits("0.2467105263e2", cell(3, 1), 10));
  CHECK(same_digits("0.2480158730e2", cell(3, 2), 10));
  CHECK(same_digits("-0.7279202782e6", cell(10, 0), 10));
  CHECK(same_digits("-0.7279202781e6", cell(10, 1), 10));
  CHECK(same_digits("-0.7279202782e6", cell(10, 2), 10));
}

TEST_CASE("exact transformation terms at a rational point") {
  // m = 2 Aitken: z^3 Phi_1^(0)(z) = z^3 gamma_2^2/(gamma_1 - gamma_2 z)
  const auto log = builtin_series<Rational>("log1p-over-z", {}, 11);
  const Family fam[] = {Family::aitken};
  const auto cells = evaluate_transformation_terms(log, Rational(5), std::span<const Family>(fam), 2);
  const Rational expected = Rational(125) * Rational(1, 9) / (Rational(-1, 2) - Rational(5, 3));
  CHECK(*cells[2].value == expected);
  CHECK(decimal_string(expected, 10) == "-0.6410256410e+1");
}

TEST_CASE("error terms need a closed form") {
  const auto log = builtin_series<Rational>("log1p-over-z", {}, 5);
  CHECK_THROWS_AS(evaluate_error_terms(log, Rational(1, 2), std::span<const Family>(kFamilies), 4), std::logic_error);
}

TEST_CASE("double precision error terms are close to the BigFloat ones for small m") {
  const auto logd = builtin_series<double>("log1p-over-z", {}, 9);
  const auto logb = builtin_series<BigFloat>("log1p-over-z", {}, 9);
  const auto cd = evaluate_error_terms(logd, 0.95, std::span<const Family>(kFamilies), 6);
  const auto cb = evaluate_error_terms(logb, parse_scalar<BigFloat>("0.95"), std::span<const Family>(kFamilies), 6);
  for (std::size_t i = 0; i < cd.size(); ++i) {
    REQUIRE(cd[i].value);
    CHECK(*cd[i].value == doctest::Approx(cb[i].value->convert_to<double>()).epsilon(1e-6));
  }
}
