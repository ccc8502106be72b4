#pragma once

// Truncated power series ("jets") in z over a scalar field.
//
// A Jet of order N stores the coefficients of 1, z, ..., z^N. Binary
// operations on jets of different orders truncate to the smaller order, and
// multiplication by z drops the top coefficient, so every result is exact
// modulo z^(N+1).

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seriaccel/element.hpp"
#include "seriaccel/numeric.hpp"

namespace seriaccel {

class JetBreakdown : public Breakdown {
 public:
  using Breakdown::Breakdown;
};

template <Field T>
class Jet {
 public:
  using value_type = T;

  explicit Jet(std::size_t order = 0) : coeffs_(order + 1, T(0)) {}
  explicit Jet(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("Jet needs at least one coefficient");
  }
  Jet(std::initializer_list<T> coeffs) : Jet(std::vector<T>(coeffs)) {}

  static Jet constant(const T& c, std::size_t order) {
    Jet j(order);
    j.coeffs_[0] = c;
    return j;
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  const T& operator[](std::size_t i) const { return coeffs_[i]; }
  T& operator[](std::size_t i) { return coeffs_[i]; }
  const T& constant_term() const { return coeffs_.front(); }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const T& c) { return c == 0; });
  }

  Jet truncated(std::size_t order) const {
    if (order > this->order()) throw std::invalid_argument("cannot raise the order of a jet");
    return Jet(std::vector<T>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
  }

  // z * X, keeping the order fixed.
  Jet times_z() const {
    Jet r(order());
    for (std::size_t i = order(); i > 0; --i) r.coeffs_[i] = coeffs_[i - 1];
    return r;
  }

  Jet reciprocal() const {
    const T& a0 = coeffs_[0];
    if (a0 == 0) throw JetBreakdown("jet reciprocal: zero constant term");
    const std::size_t n = order();
    Jet r(n);
    r.coeffs_[0] = T(1) / a0;
    for (std::size_t k = 1; k <= n; ++k) {
      T acc(0);
      for (std::size_t j = 1; j <= k; ++j) acc += coeffs_[j] * r.coeffs_[k - j];
      r.coeffs_[k] = -acc * r.coeffs_[0];
    }
    return r;
  }

  Jet operator-() const {
    Jet r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Jet r(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
  }

  friend Jet operator-(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Jet r(n);
    for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Jet r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  friend Jet operator*(const Jet& a, const T& s) {
    Jet r(a);
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  friend Jet operator*(const T& s, const Jet& a) { return a * s; }

  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }

  Jet& operator+=(const Jet& b) { return *this = *this + b; }
  Jet& operator-=(const Jet& b) { return *this = *this - b; }
  Jet& operator*=(const Jet& b) { return *this = *this * b; }

  friend bool operator==(const Jet& a, const Jet& b) { return a.coeffs_ == b.coeffs_; }

  // Value of the truncated polynomial at a point.
  T evaluate(const T& z) const {
    T acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
  }

 private:
  std::vector<T> coeffs_;
};

/// delta X^(n) = z X^(n+1) - X^(n)
template <Field T>
Jet<T> delta_shift(std::span<const Jet<T>> family, std::size_t n) {
  if (n + 1 >= family.size()) throw std::out_of_range("delta_shift: index " + std::to_string(n) + " out of range");
  return family[n + 1].times_z() - family[n];
}

/// delta^2 X^(n) = z delta X^(n+1) - delta X^(n)
template <Field T>
Jet<T> delta2_shift(std::span<const Jet<T>> family, std::size_t n) {
  if (n + 2 >= family.size()) throw std::out_of_range("delta2_shift: index " + std::to_string(n) + " out of range");
  return delta_shift(family, n + 1).times_z() - delta_shift(family, n);
}

template <Field T>
struct element_traits<Jet<T>> {
  using magnitude_type = T;

  static magnitude_type magnitude(const Jet<T>& x) { return field_traits<T>::abs(x.constant_term()); }

  // The constant term decides invertibility; `scale` is the magnitude of the
  // constant terms that were combined to form it.
  static Jet<T> inverse(const Jet<T>& d, const T& scale) {
    if (field_traits<T>::negligible(d.constant_term(), scale)) {
      throw JetBreakdown("jet breakdown: constant term " + to_exact_string(d.constant_term()));
    }
    return d.reciprocal();
  }

  static Jet<T> times_z(const Jet<T>& x) { return x.times_z(); }
};

}  // namespace seriaccel
