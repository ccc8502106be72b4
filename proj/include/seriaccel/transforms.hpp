#pragma once

// Scalar sequence transformations: iterated Aitken (classic and rearranged),
// Wynn's epsilon algorithm and its cross-rule forms, Brezinski's theta
// algorithm and its iteration, plus the approximant selection rules, a
// Pade linear-system solver and a convergence-type classifier.
//
// The table builders are generic over the element type so the same code
// runs on scalars and, in the tests, on Laurent series in z.

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seriaccel/element.hpp"
#include "seriaccel/jet.hpp"
#include "seriaccel/numeric.hpp"
#include "seriaccel/schemes.hpp"
#include "seriaccel/series.hpp"

namespace seriaccel {

template <Field T>
struct ScalarSequence {
  std::vector<T> entries;
  std::optional<T> limit;
};

/// s_n = s + c * lambda^n; converges for |lambda| < 1, diverges for |lambda| > 1,
/// and s is its (anti)limit in both cases.
template <Field T>
class ModelSequence {
 public:
  ModelSequence(T s, T c, T lambda) : s_(std::move(s)), c_(std::move(c)), lambda_(std::move(lambda)) {
    if (c_ == 0) throw std::invalid_argument("model sequence needs c != 0");
    if (field_traits<T>::abs(lambda_) == 1) throw std::invalid_argument("model sequence needs |lambda| != 1");
  }

  const T& s() const { return s_; }
  const T& c() const { return c_; }
  const T& lambda() const { return lambda_; }

  ScalarSequence<T> sequence(std::size_t count) const {
    ScalarSequence<T> out{{}, s_};
    T power(1);
    for (std::size_t n = 0; n < count; ++n) {
      out.entries.push_back(s_ + c_ * power);
      power *= lambda_;
    }
    return out;
  }

 private:
  T s_;
  T c_;
  T lambda_;
};

enum class TableKind {
  aitken_classic,
  aitken_rearranged,
  epsilon,
  epsilon_cross,
  epsilon_cross_rearranged,
  theta,
  theta_modified,
  theta_iterated_classic,
  theta_iterated_rearranged,
};

std::string_view to_string(TableKind kind);
TableKind parse_table_kind(std::string_view text);

/// Number of new sequence elements consumed per column (2 or 3).
constexpr std::size_t table_step(TableKind kind) {
  switch (kind) {
    case TableKind::theta:
    case TableKind::theta_modified:
    case TableKind::theta_iterated_classic:
    case TableKind::theta_iterated_rearranged:
      return 3;
    default:
      return 2;
  }
}

/// Full epsilon and theta tables store the auxiliary odd columns as well.
constexpr std::size_t column_stride(TableKind kind) {
  return kind == TableKind::epsilon || kind == TableKind::theta || kind == TableKind::theta_modified ? 2 : 1;
}

/// (k, n) picked for the last input index m: k = floor(m/step), n = m - step*k.
constexpr std::pair<std::size_t, std::size_t> selection_rule(std::size_t step, std::size_t m) {
  return {m / step, m % step};
}

template <class E>
class TransformTable {
 public:
  TransformTable(TableKind kind, Triangle<E> entries) : kind_(kind), entries_(std::move(entries)) {}

  TableKind kind() const { return kind_; }
  std::size_t step() const { return table_step(kind_); }
  std::size_t stride() const { return column_stride(kind_); }

  /// Raw columns (for full epsilon/theta tables column j is subscript j).
  const Triangle<E>& entries() const { return entries_; }
  bool auxiliary(std::size_t column) const { return stride() == 2 && column % 2 == 1; }

  /// Number of approximant columns k = 0, 1, ...
  std::size_t approximant_columns() const {
    return stride() == 1 ? entries_.columns() : (entries_.columns() + 1) / 2;
  }
  bool contains(std::size_t k, std::size_t n) const { return entries_.contains(stride() * k, n); }
  const std::optional<E>& approximant(std::size_t k, std::size_t n) const { return entries_.at(stride() * k, n); }
  bool valid(std::size_t k, std::size_t n) const { return entries_.valid(stride() * k, n); }

 private:
  TableKind kind_;
  Triangle<E> entries_;
};

template <class E>
struct Selection {
  std::size_t k = 0;
  std::size_t n = 0;
  E value;
};

namespace detail {

template <class E>
typename Triangle<E>::Column as_column(std::span<const E> seq) {
  typename Triangle<E>::Column col;
  col.reserve(seq.size());
  for (const auto& s : seq) col.emplace_back(s);
  return col;
}

}  // namespace detail

/// A_{k+1}^(n) = A_k^(n) - [Delta A_k^(n)]^2 / Delta^2 A_k^(n)
template <class E>
Triangle<E> aitken_classic_entries(std::span<const E> seq) {
  Triangle<E> t;
  t.push_column(detail::as_column(seq));
  for (std::size_t k = 0; t.size(k) >= 3; ++k) {
    const auto& a = t.column(k);
    typename Triangle<E>::Column next(a.size() - 2);
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (!a[n] || !a[n + 1] || !a[n + 2]) continue;
      try {
        const E d0 = *a[n + 1] - *a[n];
        const E d1 = *a[n + 2] - *a[n + 1];
        next[n] = *a[n] - d0 * d0 * checked_inverse(E(d1 - d0), combined_scale<E>(d1, d0));
      } catch (const Breakdown&) {
        t.record_breakdown(k + 1, n);
      }
    }
    t.push_column(std::move(next));
  }
  return t;
}

/// eps_{-1} = 0, eps_0 = s_n, eps_{k+1}^(n) = eps_{k-1}^(n+1) + 1/(eps_k^(n+1) - eps_k^(n))
template <class E>
Triangle<E> epsilon_entries(std::span<const E> seq) {
  Triangle<E> t;
  t.push_column(detail::as_column(seq));
  for (std::size_t j = 0; t.size(j) >= 2; ++j) {
    const auto& e = t.column(j);
    typename Triangle<E>::Column next(e.size() - 1);
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (!e[n] || !e[n + 1]) continue;
      if (j > 0 && !t.column(j - 1)[n + 1]) continue;
      try {
        const E diff = *e[n + 1] - *e[n];
        E inv = checked_inverse(diff, combined_scale<E>(*e[n + 1], *e[n]));
        next[n] = j > 0 ? E(*t.column(j - 1)[n + 1] + inv) : inv;
      } catch (const Breakdown&) {
        t.record_breakdown(j + 1, n);
      }
    }
    t.push_column(std::move(next));
  }
  return t;
}

/// Even epsilon columns from Wynn's cross rule, solved for the new element
/// relative to eps_{2k}^(n+1).
template <class E>
Triangle<E> epsilon_cross_entries(std::span<const E> seq) {
  Triangle<E> t;
  t.push_column(detail::as_column(seq));
  for (std::size_t k = 0; t.size(k) >= 3; ++k) {
    const auto& e = t.column(k);
    typename Triangle<E>::Column next(e.size() - 2);
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (!e[n] || !e[n + 1] || !e[n + 2]) continue;
      if (k > 0 && !t.column(k - 1)[n + 2]) continue;
      try {
        const E d0 = *e[n + 1] - *e[n];
        const E d1 = *e[n + 2] - *e[n + 1];
        const E inv_d0 = checked_inverse(d0, combined_scale<E>(*e[n + 1], *e[n]));
        const E inv_d1 = checked_inverse(d1, combined_scale<E>(*e[n + 2], *e[n + 1]));
        E denom = inv_d1 - inv_d0;
        magnitude_t<E> scale = combined_scale<E>(inv_d1, inv_d0);
        if (k > 0) {
          const E& south = *t.column(k - 1)[n + 2];
          const E inv_w = checked_inverse(E(*e[n + 1] - south), combined_scale<E>(*e[n + 1], south));
          denom = denom + inv_w;
          scale = combined_scale<E>(inv_d1, inv_d0, inv_w);
        }
        next[n] = *e[n + 1] + checked_inverse(denom, scale);
      } catch (const Breakdown&) {
        t.record_breakdown(k + 1, n);
      }
    }
    t.push_column(std::move(next));
  }
  return t;
}

/// Brezinski's theta algorithm. With `modified` the odd columns are
/// 1/Delta theta_{2k}^(n) without the theta_{2k-1}^(n+1) term.
template <class E>
Triangle<E> theta_entries(std::span<const E> seq, bool modified = false) {
  Triangle<E> t;
  t.push_column(detail::as_column(seq));
  for (std::size_t k = 0;; ++k) {
    const std::size_t even = 2 * k;
    if (t.size(even) < 2) break;
    {
      const auto& th = t.column(even);
      typename Triangle<E>::Column odd(th.size() - 1);
      for (std::size_t n = 0; n < odd.size(); ++n) {
        if (!th[n] || !th[n + 1]) continue;
        const bool chained = !modified && k > 0;
        if (chained && !t.column(even - 1)[n + 1]) continue;
        try {
          const E inv = checked_inverse(E(*th[n + 1] - *th[n]), combined_scale<E>(*th[n + 1], *th[n]));
          odd[n] = chained ? E(*t.column(even - 1)[n + 1] + inv) : inv;
        } catch (const Breakdown&) {
          t.record_breakdown(even + 1, n);
        }
      }
      t.push_column(std::move(odd));
    }
    if (t.size(even + 1) < 3) break;
    const auto& th = t.column(even);
    const auto& odd = t.column(even + 1);
    typename Triangle<E>::Column next(odd.size() - 2);
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (!th[n + 1] || !th[n + 2] || !odd[n] || !odd[n + 1] || !odd[n + 2]) continue;
      try {
        const E o0 = *odd[n + 1] - *odd[n];
        const E o1 = *odd[n + 2] - *odd[n + 1];
        const E inv = checked_inverse(E(o1 - o0), combined_scale<E>(o1, o0));
        next[n] = *th[n + 1] + (*th[n + 2] - *th[n + 1]) * o1 * inv;
      } catch (const Breakdown&) {
        t.record_breakdown(even + 2, n);
      }
    }
    t.push_column(std::move(next));
  }
  return t;
}

/// J_{k+1}^(n) = J_k^(n+1) - dJ^(n) dJ^(n+1) d2J^(n+1) / (dJ^(n+2) d2J^(n) - dJ^(n) d2J^(n+1))
template <class E>
Triangle<E> iterated_theta_classic_entries(std::span<const E> seq) {
  Triangle<E> t;
  t.push_column(detail::as_column(seq));
  for (std::size_t k = 0; t.size(k) >= 4; ++k) {
    const auto& j = t.column(k);
    typename Triangle<E>::Column next(j.size() - 3);
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (!detail::all_present(j, n, 4)) continue;
      try {
        const E d0 = *j[n + 1] - *j[n];
        const E d1 = *j[n + 2] - *j[n + 1];
        const E d2 = *j[n + 3] - *j[n + 2];
        const E dd0 = d1 - d0;
        const E dd1 = d2 - d1;
        const E first = d2 * dd0;
        const E second = d0 * dd1;
        const E inv = checked_inverse(E(first - second), combined_scale<E>(first, second));
        next[n] = *j[n + 1] - d0 * d1 * dd1 * inv;
      } catch (const Breakdown&) {
        t.record_breakdown(k + 1, n);
      }
    }
    t.push_column(std::move(next));
  }
  return t;
}

// --- table front ends ------------------------------------------------------

enum class Scheme { classic, rearranged };

template <class E>
TransformTable<E> aitken_table(std::span<const E> seq, Scheme scheme) {
  if (scheme == Scheme::classic) return {TableKind::aitken_classic, aitken_classic_entries(seq)};
  return {TableKind::aitken_rearranged, aitken_scheme<E>(detail::as_column(seq), UnitZ{})};
}

template <class E>
TransformTable<E> epsilon_table(std::span<const E> seq) {
  return {TableKind::epsilon, epsilon_entries(seq)};
}

template <class E>
TransformTable<E> epsilon_cross_table(std::span<const E> seq, Scheme form) {
  if (form == Scheme::classic) return {TableKind::epsilon_cross, epsilon_cross_entries(seq)};
  return {TableKind::epsilon_cross_rearranged, epsilon_scheme<E>(detail::as_column(seq), UnitZ{})};
}

template <class E>
TransformTable<E> theta_table(std::span<const E> seq, bool modified = false) {
  return {modified ? TableKind::theta_modified : TableKind::theta, theta_entries(seq, modified)};
}

template <class E>
TransformTable<E> iterated_theta_table(std::span<const E> seq, Scheme scheme) {
  if (scheme == Scheme::classic) return {TableKind::theta_iterated_classic, iterated_theta_classic_entries(seq)};
  return {TableKind::theta_iterated_rearranged, theta_scheme<E>(detail::as_column(seq), UnitZ{})};
}

template <class E>
TransformTable<E> build_table(TableKind kind, std::span<const E> seq) {
  switch (kind) {
    case TableKind::aitken_classic: return aitken_table(seq, Scheme::classic);
    case TableKind::aitken_rearranged: return aitken_table(seq, Scheme::rearranged);
    case TableKind::epsilon: return epsilon_table(seq);
    case TableKind::epsilon_cross: return epsilon_cross_table(seq, Scheme::classic);
    case TableKind::epsilon_cross_rearranged: return epsilon_cross_table(seq, Scheme::rearranged);
    case TableKind::theta: return theta_table(seq, false);
    case TableKind::theta_modified: return theta_table(seq, true);
    case TableKind::theta_iterated_classic: return iterated_theta_table(seq, Scheme::classic);
    case TableKind::theta_iterated_rearranged: return iterated_theta_table(seq, Scheme::rearranged);
  }
  throw std::invalid_argument("unknown table kind");
}

/// Approximant chosen after the partial sum of index m has been added.
template <class E>
Selection<E> select_approximant(const TransformTable<E>& table, std::size_t m) {
  const auto [k, n] = selection_rule(table.step(), m);
  if (!table.contains(k, n)) {
    throw std::out_of_range("table was not built from " + std::to_string(m + 1) + " elements");
  }
  const auto& entry = table.approximant(k, n);
  if (!entry) {
    throw InvalidEntry(k, n, "selected approximant (k=" + std::to_string(k) + ", n=" + std::to_string(n) +
                                 ") broke down");
  }
  return {k, n, *entry};
}

// --- Pade approximants from the linear system -----------------------------

class DegeneratePade : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// [l/m] = P_l / Q_m with Q_m(0) = 1.
template <Field T>
struct PadeRational {
  std::vector<T> numerator;
  std::vector<T> denominator;

  T evaluate(const T& z) const {
    auto horner = [&](const std::vector<T>& c) {
      T acc(0);
      for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
      return acc;
    };
    return checked_div(horner(numerator), horner(denominator));
  }

  Jet<T> expand(std::size_t order) const {
    Jet<T> p(order);
    Jet<T> q(order);
    for (std::size_t i = 0; i < numerator.size() && i <= order; ++i) p[i] = numerator[i];
    for (std::size_t i = 0; i < denominator.size() && i <= order; ++i) q[i] = denominator[i];
    return p / q;
  }
};

/// Solves sum_{j=0..m} q_j gamma_{i-j} = 0 for i = l+1..l+m, then
/// p_i = sum_{j=0..min(i,m)} q_j gamma_{i-j}.
template <Field T>
PadeRational<T> pade_linear_system(std::span<const T> gamma, std::size_t l, std::size_t m) {
  if (gamma.size() < l + m + 1) {
    throw std::invalid_argument("[" + std::to_string(l) + "/" + std::to_string(m) + "] needs " +
                                std::to_string(l + m + 1) + " coefficients");
  }
  auto g = [&](long i) { return i < 0 ? T(0) : gamma[static_cast<std::size_t>(i)]; };

  // Augmented system A q = b for q_1..q_m.
  std::vector<std::vector<T>> a(m, std::vector<T>(m + 1, T(0)));
  for (std::size_t r = 0; r < m; ++r) {
    const long i = static_cast<long>(l + 1 + r);
    for (std::size_t c = 0; c < m; ++c) a[r][c] = g(i - static_cast<long>(c + 1));
    a[r][m] = -g(i);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    T column_scale(0);
    for (std::size_t r = col; r < m; ++r) {
      const T mag = field_traits<T>::abs(a[r][col]);
      column_scale += mag;
      if constexpr (field_traits<T>::exact) {
        if (a[pivot][col] == 0 && a[r][col] != 0) pivot = r;
      } else {
        if (mag > field_traits<T>::abs(a[pivot][col])) pivot = r;
      }
    }
    if (field_traits<T>::negligible(a[pivot][col], column_scale)) {
      throw DegeneratePade("singular Pade system for [" + std::to_string(l) + "/" + std::to_string(m) + "]");
    }
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const T f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }

  PadeRational<T> out;
  out.denominator.assign(m + 1, T(1));
  for (std::size_t j = 1; j <= m; ++j) out.denominator[j] = a[j - 1][m] / a[j - 1][j - 1];
  out.numerator.assign(l + 1, T(0));
  for (std::size_t i = 0; i <= l; ++i) {
    for (std::size_t j = 0; j <= std::min(i, m); ++j) out.numerator[i] += out.denominator[j] * gamma[i - j];
  }
  return out;
}

template <Field T>
PadeRational<T> pade_linear_system(const PowerSeries<T>& series, std::size_t l, std::size_t m) {
  std::vector<T> gamma;
  for (std::size_t i = 0; i <= l + m; ++i) gamma.push_back(series.coefficient(i));
  return pade_linear_system<T>(std::span<const T>(gamma), l, m);
}

// --- convergence classification -------------------------------------------

enum class ConvergenceKind { linear, logarithmic, divergent, inconclusive };

std::string_view to_string(ConvergenceKind kind);

struct ConvergenceClass {
  ConvergenceKind kind = ConvergenceKind::inconclusive;
  double rho = 0.0;
};

/// Estimates rho = lim (s_{n+1} - s)/(s_n - s) as the mean of the last three
/// ratios and classifies with tolerance `tol`.
template <Field T>
ConvergenceClass classify_convergence(std::span<const T> seq, const T& limit, double tol = 1e-2) {
  if (seq.size() < 5) throw std::invalid_argument("classify_convergence needs at least 5 entries");
  double sum = 0.0;
  for (std::size_t i = seq.size() - 4; i + 1 < seq.size(); ++i) {
    const T den = seq[i] - limit;
    if (den == 0) return {ConvergenceKind::inconclusive, 0.0};
    sum += field_traits<T>::to_double(T((seq[i + 1] - limit) / den));
  }
  const double rho = sum / 3.0;
  if (std::fabs(rho - 1.0) < tol) return {ConvergenceKind::logarithmic, rho};
  if (std::fabs(rho) < 1.0 - tol) return {ConvergenceKind::linear, rho};
  if (std::fabs(rho) > 1.0 + tol) return {ConvergenceKind::divergent, rho};
  return {ConvergenceKind::inconclusive, rho};
}

}  // namespace seriaccel
