#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seriaccel/jet.hpp"
#include "seriaccel/numeric.hpp"

namespace seriaccel {

/// Known Taylor coefficients gamma_0..gamma_M of f(z), optionally with a
/// closed-form coefficient provider for nu > M and a closed form for f.
template <Field T>
class PowerSeries {
 public:
  using CoefficientFn = std::function<T(std::size_t)>;
  using ValueFn = std::function<T(const T&)>;

  PowerSeries() = default;
  explicit PowerSeries(std::vector<T> coeffs, std::string name = {})
      : coeffs_(std::move(coeffs)), name_(std::move(name)) {}

  PowerSeries& with_tail(CoefficientFn tail) {
    tail_ = std::move(tail);
    return *this;
  }
  PowerSeries& with_value(ValueFn value) {
    value_ = std::move(value);
    return *this;
  }

  const std::string& name() const { return name_; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool has_tail() const { return static_cast<bool>(tail_); }
  bool has_value() const { return static_cast<bool>(value_); }

  /// gamma_nu, from the stored list or the tail provider.
  T coefficient(std::size_t nu) const {
    if (nu < coeffs_.size()) return coeffs_[nu];
    if (tail_) return tail_(nu);
    throw std::out_of_range("coefficient " + std::to_string(nu) + " of series '" + name_ +
                            "' is not known (" + std::to_string(coeffs_.size()) + " stored, no tail)");
  }

  /// A copy restricted to gamma_0..gamma_last, keeping tail and closed form.
  PowerSeries truncated(std::size_t last) const {
    PowerSeries out(*this);
    std::vector<T> c;
    c.reserve(last + 1);
    for (std::size_t nu = 0; nu <= last; ++nu) c.push_back(coefficient(nu));
    out.coeffs_ = std::move(c);
    return out;
  }

  /// f(z) from the closed form.
  T value(const T& z) const {
    if (!value_) throw std::logic_error("series '" + name_ + "' has no closed form for f(z)");
    return value_(z);
  }

  /// f_n(z) = sum_{nu<=n} gamma_nu z^nu
  T partial_sum(std::size_t n, const T& z) const {
    T acc(0);
    for (std::size_t nu = n + 1; nu-- > 0;) acc = acc * z + coefficient(nu);
    return acc;
  }

  std::vector<T> partial_sums(const T& z, std::size_t count) const {
    std::vector<T> out;
    out.reserve(count);
    T acc(0);
    T power(1);
    for (std::size_t n = 0; n < count; ++n) {
      acc += coefficient(n) * power;
      power *= z;
      out.push_back(acc);
    }
    return out;
  }

  /// f_n as a jet of the given order (coefficients above n are zero).
  Jet<T> partial_sum_jet(std::size_t n, std::size_t order) const {
    Jet<T> j(order);
    for (std::size_t nu = 0; nu <= std::min(n, order); ++nu) j[nu] = coefficient(nu);
    return j;
  }

  /// Indices nu <= last with gamma_nu = 0; such series break the
  /// prediction recursions.
  std::vector<std::size_t> zero_coefficients(std::size_t last) const {
    std::vector<std::size_t> out;
    for (std::size_t nu = 0; nu <= last; ++nu) {
      if (coefficient(nu) == 0) out.push_back(nu);
    }
    return out;
  }

 private:
  std::vector<T> coeffs_;
  CoefficientFn tail_;
  ValueFn value_;
  std::string name_;
};

}  // namespace seriaccel
