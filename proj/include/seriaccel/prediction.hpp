#pragma once

// Transformation terms Phi/phi/Psi as jets, the scalar leading-prediction
// recursions G/g/calG, and prediction of the next series coefficients.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "seriaccel/element.hpp"
#include "seriaccel/family.hpp"
#include "seriaccel/jet.hpp"
#include "seriaccel/numeric.hpp"
#include "seriaccel/remainder.hpp"
#include "seriaccel/schemes.hpp"
#include "seriaccel/series.hpp"

namespace seriaccel {

template <Field T>
using TransformationTerm = FamilyTerm<Jet<T>>;

/// Phi_k^(n) (Aitken), phi_2k^(n) (epsilon) or Psi_k^(n) (theta) as jets of
/// the given order, for every (k, n) computable from gamma_0..gamma_last.
/// Term (k, n) uses gamma up to n + step*k.
template <Field T>
TermTable<Jet<T>> transformation_terms(const PowerSeries<T>& series, Family family, std::size_t last,
                                       std::size_t order, std::size_t max_k = kAllColumns) {
  const std::vector<T> g = coefficient_list(series, last);
  const Offsets<Jet<T>> d = [&g, order](std::size_t i) { return Jet<T>::constant(g.at(i), order); };
  typename Triangle<Jet<T>>::Column base(last + 1, Jet<T>(order));
  return {family, run_family<Jet<T>>(family, std::move(base), FormalZ{}, d, max_k)};
}

/// G/g/calG straight from the scalar recursions (no jets), G_0^(n) = 0.
template <Field T>
LeadingTable<T> leading_predictions(const PowerSeries<T>& series, Family family, std::size_t last,
                                    std::size_t max_k = kAllColumns) {
  const std::vector<T> g = coefficient_list(series, last);
  LeadingTable<T> table{family, {}};
  auto& t = table.entries;
  t.push_column(typename Triangle<T>::Column(last + 1, T(0)));

  const std::size_t step = family_step(family);
  for (std::size_t k = 0; k < max_k && t.size(k) >= step + 1; ++k) {
    const auto& x = t.column(k);
    typename Triangle<T>::Column next(x.size() - step);
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (!detail::all_present(x, n, step + 1)) continue;
      if (family == Family::epsilon && k > 0 && !t.column(k - 1)[n + 2]) continue;
      const std::size_t p = n + step * k;
      try {
        switch (family) {
          case Family::aitken: {
            // G_{k+1} = G^(n+2) + (gamma_{p+2} - G^(n+1))^2 / (gamma_{p+1} - G^(n))
            const T a = g[p + 2] - *x[n + 1];
            next[n] = *x[n + 2] + checked_div(T(a * a), T(g[p + 1] - *x[n]));
            break;
          }
          case Family::epsilon: {
            if (k == 0) {
              // g_2 = gamma_{n+2}^2 / gamma_{n+1}
              next[n] = checked_div(T(g[n + 2] * g[n + 2]), g[n + 1]);
            } else {
              const T a = g[p + 2] - *x[n + 1];
              const T a2 = a * a;
              next[n] = *x[n + 2] + checked_div(a2, T(g[p + 1] - *x[n])) -
                        checked_div(a2, T(g[p + 1] - *t.column(k - 1)[n + 2]));
            }
            break;
          }
          case Family::theta: {
            // calG_{k+1} = calG^(n+3) - F/H,  a_i = gamma_{p+i} - calG^(n+i-1)
            const T a1 = g[p + 1] - *x[n];
            const T a2 = g[p + 2] - *x[n + 1];
            const T a3 = g[p + 3] - *x[n + 2];
            next[n] = *x[n + 3] - checked_div(T(a3 * (a2 * a2 - 2 * a1 * a3)), T(a1 * a2));
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

template <Field T>
struct PredictedCoefficient {
  std::size_t index = 0;
  T value;
};

template <Field T>
struct Prediction {
  Family family = Family::aitken;
  std::size_t m = 0;
  std::size_t k = 0;
  std::size_t n = 0;
  std::vector<PredictedCoefficient<T>> coefficients;
};

/// Raised when the selected transformation term cannot be built. Carries
/// the predictions of the valid lower columns that use the same data.
template <Field T>
class PredictionBreakdown : public Breakdown {
 public:
  PredictionBreakdown(Family family, TableSite site, std::vector<Prediction<T>> lower)
      : Breakdown("prediction breakdown: " + std::string(to_string(family)) + " (k=" + std::to_string(site.k) +
                  ", n=" + std::to_string(site.n) + ")"),
        family_(family),
        site_(site),
        lower_(std::move(lower)) {}

  Family family() const { return family_; }
  const TableSite& site() const { return site_; }
  const std::vector<Prediction<T>>& lower_order() const { return lower_; }

 private:
  Family family_;
  TableSite site_;
  std::vector<Prediction<T>> lower_;
};

inline constexpr std::size_t kPredictionGuard = 2;

/// Predicts gamma_{m+1}..gamma_{m+count} from gamma_0..gamma_m with the
/// (k, n) that the selection rule picks for m.
template <Field T>
Prediction<T> predict_coefficients(const PowerSeries<T>& series, Family family, std::size_t m, std::size_t count) {
  if (count == 0) throw std::invalid_argument("predict_coefficients: count must be positive");
  const std::size_t step = family_step(family);
  const std::size_t k = m / step;
  const std::size_t n = m % step;
  const std::size_t order = count - 1 + kPredictionGuard;
  const auto terms = transformation_terms(series, family, m, order, k);

  auto extract = [&](std::size_t kk, std::size_t nn) {
    Prediction<T> p{family, m, kk, nn, {}};
    const Jet<T>& jet = terms.entries.value(kk, nn);
    for (std::size_t i = 0; i < count; ++i) p.coefficients.push_back({m + 1 + i, jet[i]});
    return p;
  };

  if (!terms.valid(k, n)) {
    std::vector<Prediction<T>> lower;
    for (std::size_t kk = k; kk-- > 1;) {
      const std::size_t nn = n + step * (k - kk);
      if (terms.valid(kk, nn)) lower.push_back(extract(kk, nn));
    }
    throw PredictionBreakdown<T>(family, {k, n}, std::move(lower));
  }
  return extract(k, n);
}

/// Everything the `predict` command reports for one family.
template <Field T>
struct PredictionReport {
  Family family = Family::aitken;
  std::size_t m = 0;
  std::optional<Prediction<T>> prediction;
  std::optional<std::string> breakdown;
  std::vector<Prediction<T>> lower_order;
  LeadingTable<T> leading_predictions;
  LeadingTable<T> leading_remainders;
  std::vector<std::size_t> zero_coefficients;
};

template <Field T>
PredictionReport<T> make_prediction_report(const PowerSeries<T>& series, Family family, std::size_t m,
                                           std::size_t count) {
  PredictionReport<T> report;
  report.family = family;
  report.m = m;
  report.zero_coefficients = series.zero_coefficients(m);
  report.leading_predictions = leading_predictions(series, family, m);
  if (m > 0) report.leading_remainders = leading_remainders(series, family, m);
  report.leading_remainders.family = family;
  try {
    report.prediction = predict_coefficients(series, family, m, count);
  } catch (const PredictionBreakdown<T>& e) {
    report.breakdown = e.what();
    report.lower_order = e.lower_order();
  }
  return report;
}

}  // namespace seriaccel
