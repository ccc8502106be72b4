#pragma once

// Independent reference machinery for the tests: exact Laurent series with
// absolute-precision tracking, random rational data, brute-force helpers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "seriaccel/element.hpp"
#include "seriaccel/jet.hpp"
#include "seriaccel/numeric.hpp"
#include "seriaccel/series.hpp"

namespace oracle {

using seriaccel::Rational;

/// sum_{e = val}^{precision-1} c[e-val] z^e + O(z^precision), exact rationals.
/// Normalised so that c is empty or c[0] != 0.
class Laurent {
 public:
  Laurent() = default;

  static Laurent polynomial(const std::vector<Rational>& coeffs, long precision) {
    Laurent l;
    l.val_ = 0;
    for (long e = 0; e < precision; ++e) {
      l.c_.push_back(e < static_cast<long>(coeffs.size()) ? coeffs[static_cast<std::size_t>(e)] : Rational(0));
    }
    l.normalise();
    return l;
  }

  long valuation() const { return val_; }
  long precision() const { return val_ + static_cast<long>(c_.size()); }
  bool known_zero() const { return c_.empty(); }

  Rational coefficient(long e) const {
    if (e >= precision()) throw std::out_of_range("coefficient z^" + std::to_string(e) + " beyond precision");
    if (e < val_) return 0;
    return c_[static_cast<std::size_t>(e - val_)];
  }

  Laurent operator-() const {
    Laurent r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r;
    const long p = std::min(a.precision(), b.precision());
    r.val_ = std::min({a.val_, b.val_, p});
    for (long e = r.val_; e < p; ++e) r.c_.push_back(a.coefficient(e) + b.coefficient(e));
    r.normalise();
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    const long p = std::min(a.val_ + b.precision(), b.val_ + a.precision());
    r.val_ = std::min(a.val_ + b.val_, p);
    for (long e = r.val_; e < p; ++e) {
      Rational acc = 0;
      for (long i = a.val_; i < a.precision(); ++i) {
        const long j = e - i;
        if (j < b.val_) break;
        if (j >= b.precision()) continue;
        acc += a.coefficient(i) * b.coefficient(j);
      }
      r.c_.push_back(acc);
    }
    r.normalise();
    return r;
  }

  Laurent inverse() const {
    if (c_.empty()) throw seriaccel::Breakdown("Laurent inverse of a series not known to be nonzero");
    Laurent r;
    r.val_ = -val_;
    r.c_.resize(c_.size());
    r.c_[0] = Rational(1) / c_[0];
    for (std::size_t k = 1; k < c_.size(); ++k) {
      Rational acc = 0;
      for (std::size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc * r.c_[0];
    }
    return r;
  }

 private:
  void normalise() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    val_ += static_cast<long>(lead);
    c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  }

  long val_ = 0;
  std::vector<Rational> c_;
};

}  // namespace oracle

template <>
struct seriaccel::element_traits<oracle::Laurent> {
  using magnitude_type = Rational;
  static Rational magnitude(const oracle::Laurent&) { return 0; }
  static oracle::Laurent inverse(const oracle::Laurent& d, const Rational&) { return d.inverse(); }
};

namespace oracle {

class RandomRationals {
 public:
  explicit RandomRationals(std::uint64_t seed) : gen_(seed) {}

  /// p/q with 1 <= |p| <= max_num, 1 <= q <= max_den.
  Rational nonzero(int max_num = 9, int max_den = 9) {
    std::uniform_int_distribution<int> num(1, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    std::bernoulli_distribution sign(0.5);
    const int p = num(gen_);
    return Rational(sign(gen_) ? -p : p, den(gen_));
  }

  std::vector<Rational> nonzero_list(std::size_t count, int max_num = 9, int max_den = 9) {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(nonzero(max_num, max_den));
    return out;
  }

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen_); }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

/// Partial sums f_0..f_{count-1} of sum gamma_nu z^nu as exact Laurent series.
inline std::vector<Laurent> partial_sum_series(const std::vector<Rational>& gamma, std::size_t count, long precision) {
  std::vector<Laurent> out;
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<Rational> c(gamma.begin(), gamma.begin() + static_cast<std::ptrdiff_t>(n + 1));
    out.push_back(Laurent::polynomial(c, precision));
  }
  return out;
}

/// Partial sums at a numeric point, by direct summation of powers.
inline std::vector<Rational> partial_sums_at(const std::vector<Rational>& gamma, const Rational& z) {
  std::vector<Rational> out;
  Rational acc = 0;
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    Rational term = gamma[n];
    for (std::size_t i = 0; i < n; ++i) term *= z;
    acc += term;
    out.push_back(acc);
  }
  return out;
}

/// Naive O(N^2) truncated product, used to check Jet arithmetic.
inline std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, std::size_t order) {
  std::vector<Rational> out(order + 1, Rational(0));
  for (std::size_t i = 0; i <= order && i < a.size(); ++i) {
    for (std::size_t j = 0; i + j <= order && j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace oracle
