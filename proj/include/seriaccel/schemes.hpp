#pragma once

// Generic form of the three "rearranged" recursions (iterated Aitken,
// epsilon via the cross rule, iterated theta).
//
// Every quantity the toolkit tabulates -- plain transforms of a sequence,
// remainder terms R/r/calR and transformation terms Phi/phi/Psi, either as
// jets in z or evaluated at a numeric z -- obeys the same recursion once
// the common power of z is factored out. With
//
//   U_j = d_{p+1+j} + z X^(n+j+1) - X^(n+j),   p = n + step*k,
//
// the schemes differ only in the element type (scalar or jet), in what
// "multiplication by z" means (identity for plain sequences, a number, or a
// coefficient shift) and in the offsets d (series coefficients for the
// transformation terms, zero otherwise).

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "seriaccel/element.hpp"
#include "seriaccel/numeric.hpp"

namespace seriaccel {

inline constexpr std::size_t kAllColumns = std::numeric_limits<std::size_t>::max();

struct TableSite {
  std::size_t k = 0;
  std::size_t n = 0;
  friend bool operator==(const TableSite&, const TableSite&) = default;
};

class InvalidEntry : public std::runtime_error {
 public:
  InvalidEntry(std::size_t k, std::size_t n, const std::string& what)
      : std::runtime_error(what), site_{k, n} {}
  const TableSite& site() const { return site_; }

 private:
  TableSite site_;
};

/// Triangular array X_k^(n); column k holds n = 0 .. size(k)-1. Entries that
/// broke down, or depend on one that did, are empty.
template <class E>
class Triangle {
 public:
  using Column = std::vector<std::optional<E>>;

  Triangle() = default;

  void push_column(Column column) { columns_.push_back(std::move(column)); }
  void record_breakdown(std::size_t k, std::size_t n) { breakdowns_.push_back({k, n}); }

  std::size_t columns() const { return columns_.size(); }
  std::size_t size(std::size_t k) const { return k < columns_.size() ? columns_[k].size() : 0; }
  const Column& column(std::size_t k) const { return columns_.at(k); }
  bool contains(std::size_t k, std::size_t n) const { return n < size(k); }

  const std::optional<E>& at(std::size_t k, std::size_t n) const {
    if (!contains(k, n)) {
      throw std::out_of_range("table entry (" + std::to_string(k) + ", " + std::to_string(n) + ") does not exist");
    }
    return columns_[k][n];
  }
  bool valid(std::size_t k, std::size_t n) const { return contains(k, n) && columns_[k][n].has_value(); }

  const E& value(std::size_t k, std::size_t n) const {
    const auto& entry = at(k, n);
    if (!entry) {
      throw InvalidEntry(k, n, "table entry (" + std::to_string(k) + ", " + std::to_string(n) + ") is invalid (breakdown)");
    }
    return *entry;
  }

  /// Entries where a denominator vanished (the root causes, not the
  /// entries merely depending on them).
  const std::vector<TableSite>& breakdowns() const { return breakdowns_; }

 private:
  std::vector<Column> columns_;
  std::vector<TableSite> breakdowns_;
};

// --- what "multiply by z" means -------------------------------------------

/// Plain sequences: the forward difference is the z = 1 case.
struct UnitZ {
  template <class E>
  E operator()(const E& x) const { return x; }
};

/// Evaluation at a numeric point.
template <Field T>
struct NumericZ {
  T z;
  T operator()(const T& x) const { return z * x; }
};

/// Formal variable acting on jets (coefficient shift).
struct FormalZ {
  template <class J>
  J operator()(const J& x) const { return x.times_z(); }
};

/// Offsets d_i added to the z-weighted differences; empty means zero.
template <class E>
using Offsets = std::function<E(std::size_t)>;

namespace detail {

template <class E>
struct Difference {
  E value;
  magnitude_t<E> scale;
};

// d_i + z*next - cur
template <class E, class ZOp>
Difference<E> weighted_difference(const Offsets<E>& d, std::size_t i, const E& next, const E& cur, const ZOp& z) {
  const E zn = z(next);
  if (d) {
    const E di = d(i);
    return {di + zn - cur, combined_scale<E>(di, zn, cur)};
  }
  return {zn - cur, combined_scale<E>(zn, cur)};
}

template <class E>
bool all_present(const std::vector<std::optional<E>>& col, std::size_t from, std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) {
    if (!col[from + j]) return false;
  }
  return true;
}

}  // namespace detail

/// X_{k+1}^(n) = X_k^(n+2) - U_1^2 / (z U_1 - U_0)
template <class E, class ZOp>
Triangle<E> aitken_scheme(std::vector<std::optional<E>> base, const ZOp& z, const Offsets<E>& d = {},
                          std::size_t max_k = kAllColumns) {
  Triangle<E> t;
  t.push_column(std::move(base));
  for (std::size_t k = 0; k < max_k && t.size(k) >= 3; ++k) {
    const auto& x = t.column(k);
    typename Triangle<E>::Column next(x.size() - 2);
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (!detail::all_present(x, n, 3)) continue;
      try {
        const std::size_t p = n + 2 * k;
        const auto u0 = detail::weighted_difference(d, p + 1, *x[n + 1], *x[n], z);
        const auto u1 = detail::weighted_difference(d, p + 2, *x[n + 2], *x[n + 1], z);
        const E zu1 = z(u1.value);
        const E v0 = zu1 - u0.value;
        const E inv = checked_inverse(v0, combined_scale<E>(zu1, u0.value));
        next[n] = *x[n + 2] - u1.value * u1.value * inv;
      } catch (const Breakdown&) {
        t.record_breakdown(k + 1, n);
      }
    }
    t.push_column(std::move(next));
  }
  return t;
}

/// Even-column epsilon elements through the rearranged cross rule. Column
/// k holds the elements of subscript 2k.
template <class E, class ZOp>
Triangle<E> epsilon_scheme(std::vector<std::optional<E>> base, const ZOp& z, const Offsets<E>& d = {},
                           std::size_t max_k = kAllColumns) {
  Triangle<E> t;
  t.push_column(std::move(base));
  for (std::size_t k = 0; k < max_k && t.size(k) >= 3; ++k) {
    const auto& x = t.column(k);
    typename Triangle<E>::Column next(x.size() - 2);
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (!detail::all_present(x, n, 3)) continue;
      if (k > 0 && !t.column(k - 1)[n + 2]) continue;
      try {
        const std::size_t p = n + 2 * k;
        const auto u0 = detail::weighted_difference(d, p + 1, *x[n + 1], *x[n], z);
        const auto u1 = detail::weighted_difference(d, p + 2, *x[n + 2], *x[n + 1], z);
        const E inv_u0 = checked_inverse(u0.value, u0.scale);
        const E inv_u1 = checked_inverse(u1.value, u1.scale);
        const E z_inv_u0 = z(inv_u0);
        E alpha = u1.value * inv_u0;
        E beta = inv_u1 - z_inv_u0;
        magnitude_t<E> beta_scale = combined_scale<E>(inv_u1, z_inv_u0);
        if (k > 0) {
          // The k = 0 step corresponds to an infinite element of subscript -2,
          // which simply drops these terms.
          const auto w = detail::weighted_difference(d, p + 1, *x[n + 1], *t.column(k - 1)[n + 2], z);
          const E inv_w = checked_inverse(w.value, w.scale);
          const E z_inv_w = z(inv_w);
          alpha = alpha - u1.value * inv_w;
          beta = beta + z_inv_w;
          beta_scale = combined_scale<E>(inv_u1, z_inv_u0, z_inv_w);
        }
        next[n] = *x[n + 2] + alpha * checked_inverse(beta, beta_scale);
      } catch (const Breakdown&) {
        t.record_breakdown(k + 1, n);
      }
    }
    t.push_column(std::move(next));
  }
  return t;
}

/// X_{k+1}^(n) = X_k^(n+3) - N/D with
///   N = U_2 (U_2 V_0 + U_1^2 - U_0 U_2),  D = z U_2 V_0 - U_0 V_1,
///   V_j = z U_{j+1} - U_j.
template <class E, class ZOp>
Triangle<E> theta_scheme(std::vector<std::optional<E>> base, const ZOp& z, const Offsets<E>& d = {},
                         std::size_t max_k = kAllColumns) {
  Triangle<E> t;
  t.push_column(std::move(base));
  for (std::size_t k = 0; k < max_k && t.size(k) >= 4; ++k) {
    const auto& x = t.column(k);
    typename Triangle<E>::Column next(x.size() - 3);
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (!detail::all_present(x, n, 4)) continue;
      try {
        const std::size_t p = n + 3 * k;
        const E u0 = detail::weighted_difference(d, p + 1, *x[n + 1], *x[n], z).value;
        const E u1 = detail::weighted_difference(d, p + 2, *x[n + 2], *x[n + 1], z).value;
        const E u2 = detail::weighted_difference(d, p + 3, *x[n + 3], *x[n + 2], z).value;
        const E v0 = z(u1) - u0;
        const E v1 = z(u2) - u1;
        const E u2v0 = u2 * v0;
        const E numer = u2 * (u2v0 + u1 * u1 - u0 * u2);
        const E first = z(u2v0);
        const E second = u0 * v1;
        const E inv = checked_inverse(E(first - second), combined_scale<E>(first, second));
        next[n] = *x[n + 3] - numer * inv;
      } catch (const Breakdown&) {
        t.record_breakdown(k + 1, n);
      }
    }
    t.push_column(std::move(next));
  }
  return t;
}

}  // namespace seriaccel
