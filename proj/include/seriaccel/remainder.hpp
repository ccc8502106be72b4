#pragma once

// Remainder terms R/r/calR of the approximants relative to f(z), their
// z-independent parts C/c/calC, and numeric evaluation of the error and
// transformation terms at a fixed z.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "seriaccel/element.hpp"
#include "seriaccel/family.hpp"
#include "seriaccel/jet.hpp"
#include "seriaccel/numeric.hpp"
#include "seriaccel/schemes.hpp"
#include "seriaccel/series.hpp"

namespace seriaccel {

template <Field T>
using RemainderJet = FamilyTerm<Jet<T>>;

/// R_0^(n)(z) = -sum_nu gamma_{n+nu+1} z^nu, truncated at `order`.
template <Field T>
Jet<T> base_remainder_jet(const PowerSeries<T>& series, std::size_t n, std::size_t order) {
  Jet<T> j(order);
  for (std::size_t nu = 0; nu <= order; ++nu) j[nu] = -series.coefficient(n + nu + 1);
  return j;
}

/// Remainder jets up to column K. The base column holds n = 0..base_count-1
/// (default step*K + 1, enough for the (K, 0) entry).
template <Field T>
TermTable<Jet<T>> remainder_jets(const PowerSeries<T>& series, Family family, std::size_t K, std::size_t order,
                                 std::optional<std::size_t> base_count = std::nullopt) {
  const std::size_t count = base_count.value_or(family_step(family) * K + 1);
  typename Triangle<Jet<T>>::Column base;
  base.reserve(count);
  for (std::size_t n = 0; n < count; ++n) base.emplace_back(base_remainder_jet(series, n, order));
  return {family, run_family<Jet<T>>(family, std::move(base), FormalZ{}, {}, K)};
}

/// C/c/calC from the scalar recursions, with C_0^(n) = -gamma_{n+1},
/// using gamma_0..gamma_last.
template <Field T>
LeadingTable<T> leading_remainders(const PowerSeries<T>& series, Family family, std::size_t last,
                                   std::size_t max_k = kAllColumns) {
  if (last == 0) throw std::invalid_argument("leading_remainders needs at least gamma_0 and gamma_1");
  const std::vector<T> g = coefficient_list(series, last);
  LeadingTable<T> table{family, {}};
  auto& t = table.entries;
  typename Triangle<T>::Column base;
  for (std::size_t n = 0; n + 1 <= last; ++n) base.emplace_back(T(-g[n + 1]));
  t.push_column(std::move(base));

  const std::size_t width = family_step(family) + 1;
  for (std::size_t k = 0; k < max_k && t.size(k) >= width; ++k) {
    const auto& c = t.column(k);
    typename Triangle<T>::Column next(c.size() - family_step(family));
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (!detail::all_present(c, n, width)) continue;
      if (family == Family::epsilon && k > 0 && !t.column(k - 1)[n + 2]) continue;
      try {
        const T& c0 = *c[n];
        const T& c1 = *c[n + 1];
        const T& c2 = *c[n + 2];
        switch (family) {
          case Family::aitken:
            // C_{k+1} = C^(n+2) - [C^(n+1)]^2 / C^(n)
            next[n] = c2 - checked_div(T(c1 * c1), c0);
            break;
          case Family::epsilon: {
            // k = 0 drops the term with c_{-2} = infinity
            T value = c2 - checked_div(T(c1 * c1), c0);
            if (k > 0) value += checked_div(T(c1 * c1), *t.column(k - 1)[n + 2]);
            next[n] = value;
            break;
          }
          case Family::theta: {
            const T& c3 = *c[n + 3];
            next[n] = c3 - checked_div(T(c2 * (2 * c0 * c2 - c1 * c1)), T(c0 * c1));
            break;
          }
        }
      } catch (const Breakdown&) {
        t.record_breakdown(k + 1, n);
      }
    }
    t.push_column(std::move(next));
  }
  return table;
}

/// One output cell: z^offset * term(z) for the (k, n) selected at m.
template <Field T>
struct TermCell {
  std::size_t m = 0;
  Family family = Family::aitken;
  std::size_t k = 0;
  std::size_t n = 0;
  std::optional<T> value;
};

namespace detail {

template <Field T>
T power(const T& z, std::size_t e) {
  T r(1);
  for (std::size_t i = 0; i < e; ++i) r *= z;
  return r;
}

template <Field T>
void append_cells(std::vector<TermCell<T>>& cells, std::size_t m, Family family, const Triangle<T>& table,
                  const T& z) {
  const std::size_t step = family_step(family);
  const std::size_t k = m / step;
  const std::size_t n = m % step;
  TermCell<T> cell{m, family, k, n, std::nullopt};
  if (k == 0) {
    // not enough inputs for a transformation: reported as zero
    cell.value = T(0);
  } else if (table.valid(k, n)) {
    cell.value = power(z, term_offset(family, k, n)) * table.value(k, n);
  }
  cells.push_back(std::move(cell));
}

template <Field T>
std::vector<TermCell<T>> cells_by_m(const std::vector<Triangle<T>>& tables, std::span<const Family> families,
                                    std::size_t m_max, const T& z) {
  std::vector<TermCell<T>> cells;
  for (std::size_t m = 0; m <= m_max; ++m) {
    for (std::size_t i = 0; i < families.size(); ++i) append_cells(cells, m, families[i], tables[i], z);
  }
  return cells;
}

}  // namespace detail

/// z^offset * R/r/calR at numeric z, started from R_0^(n)(z) = (f_n(z) - f(z))/z^(n+1).
/// Needs the closed form of f. Rows are ordered by m, then by family.
template <Field T>
std::vector<TermCell<T>> evaluate_error_terms(const PowerSeries<T>& series, const T& z,
                                              std::span<const Family> families, std::size_t m_max) {
  if (z == 0) throw std::invalid_argument("error terms need z != 0");
  const T f = series.value(z);
  const std::vector<T> sums = series.partial_sums(z, m_max + 1);
  typename Triangle<T>::Column base;
  T zp = z;
  for (std::size_t n = 0; n <= m_max; ++n) {
    base.emplace_back((sums[n] - f) / zp);
    zp *= z;
  }
  std::vector<Triangle<T>> tables;
  for (Family family : families) tables.push_back(run_family<T>(family, base, NumericZ<T>{z}));
  return detail::cells_by_m(tables, families, m_max, z);
}

/// z^offset * Phi/phi/Psi at numeric z (the transformation terms; for a
/// summable divergent series they approach f - f_m).
template <Field T>
std::vector<TermCell<T>> evaluate_transformation_terms(const PowerSeries<T>& series, const T& z,
                                                       std::span<const Family> families, std::size_t m_max) {
  const std::vector<T> g = coefficient_list(series, m_max);
  const Offsets<T> d = [&g](std::size_t i) { return g.at(i); };
  typename Triangle<T>::Column base(m_max + 1, T(0));
  std::vector<Triangle<T>> tables;
  for (Family family : families) tables.push_back(run_family<T>(family, base, NumericZ<T>{z}, d));
  return detail::cells_by_m(tables, families, m_max, z);
}

}  // namespace seriaccel
