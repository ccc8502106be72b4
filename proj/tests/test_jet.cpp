#include <doctest.h>

#include "oracles.hpp"
#include "seriaccel/jet.hpp"
#include "seriaccel/series.hpp"

using namespace seriaccel;

TEST_CASE("jet products match a naive convolution") {
  oracle::RandomRationals rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = rng.nonzero_list(7);
    const auto b = rng.nonzero_list(5);
    const Jet<Rational> ja(a);
    const Jet<Rational> jb(b);
    const auto prod = ja * jb;
    CHECK(prod.order() == 4);
    CHECK(prod.coeffs() == oracle::convolve(a, b, 4));
  }
}

TEST_CASE("reciprocal times jet is one") {
  oracle::RandomRationals rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Jet<Rational> a(rng.nonzero_list(9));
    CHECK(a * a.reciprocal() == Jet<Rational>::constant(1, 8));
  }
}

TEST_CASE("geometric series reciprocal") {
  const Jet<Rational> one_minus_z{1, -1, 0, 0};
  CHECK((Jet<Rational>::constant(1, 3) / one_minus_z) == Jet<Rational>{1, 1, 1, 1});
}

TEST_CASE("zero constant term is a jet breakdown") {
  const Jet<Rational> a{0, 1, 2};
  CHECK_THROWS_AS(a.reciprocal(), JetBreakdown);
  CHECK_THROWS_AS(Jet<Rational>::constant(1, 2) / a, Breakdown);
}

TEST_CASE("mixed orders truncate to the smaller order") {
  const Jet<Rational> a{1, 2, 3, 4};
  const Jet<Rational> b{1, 1};
  CHECK((a + b) == Jet<Rational>{2, 3});
  CHECK((a - b).order() == 1);
  CHECK((a * b) == Jet<Rational>{1, 3});
}

TEST_CASE("z shift keeps the order") {
  const Jet<Rational> a{1, 2, 3};
  CHECK(a.times_z() == Jet<Rational>{0, 1, 2});
  CHECK(a.truncated(1) == Jet<Rational>{1, 2});
  CHECK_THROWS(a.truncated(5));
}

TEST_CASE("evaluate uses Horner on the stored coefficients") {
  const Jet<Rational> a{1, 2, 3};
  CHECK(a.evaluate(Rational(1, 2)) == Rational(1) + Rational(1) + Rational(3, 4));
}

TEST_CASE("delta and delta2 shifts") {
  std::vector<Jet<Rational>> fam = {Jet<Rational>{1, 1}, Jet<Rational>{2, 3}, Jet<Rational>{5, 7}};
  const std::span<const Jet<Rational>> s(fam);
  // z*X1 - X0 = (0 + 2z) - (1 + z)
  CHECK(delta_shift(s, 0) == Jet<Rational>{-1, 1});
  // z*deltaX1 - deltaX0 with deltaX1 = z*X2 - X1 = (-2, 2)
  CHECK(delta2_shift(s, 0) == Jet<Rational>{1, -3});
  CHECK_THROWS_AS(delta_shift(s, 2), std::out_of_range);
  CHECK_THROWS_AS(delta2_shift(s, 1), std::out_of_range);
}

TEST_CASE("float jets flag near-zero constant terms relative to their scale") {
  const Jet<double> d{1e-18, 1.0};
  CHECK_THROWS_AS(checked_inverse(d, 1.0), JetBreakdown);
  CHECK_NOTHROW(checked_inverse(d, 1e-18));
}

TEST_CASE("power series coefficients, tails and partial sums") {
  PowerSeries<Rational> s({1, Rational(-1, 2), Rational(1, 3)}, "three");
  CHECK(s.coefficient(2) == Rational(1, 3));
  CHECK_THROWS_AS(s.coefficient(3), std::out_of_range);
  s.with_tail([](std::size_t nu) { return Rational(nu % 2 ? -1 : 1, static_cast<long>(nu + 1)); });
  CHECK(s.coefficient(5) == Rational(-1, 6));
  CHECK(s.partial_sum(2, Rational(1)) == Rational(5, 6));
  CHECK(s.partial_sums(Rational(1), 3) == std::vector<Rational>{1, Rational(1, 2), Rational(5, 6)});
  CHECK(s.partial_sum_jet(1, 3) == Jet<Rational>{1, Rational(-1, 2), 0, 0});
  CHECK(s.truncated(4).size() == 5);
  CHECK_THROWS_AS(s.value(Rational(1)), std::logic_error);
  PowerSeries<Rational> z({1, 0, 2, 0});
  CHECK(z.zero_coefficients(3) == std::vector<std::size_t>{1, 3});
}
