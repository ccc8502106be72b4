#pragma once

// The three transformation families and the pieces shared by the
// prediction and remainder modules: term tables indexed (k, n) and scalar
// tables of leading coefficients.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "seriaccel/numeric.hpp"
#include "seriaccel/schemes.hpp"
#include "seriaccel/series.hpp"

namespace seriaccel {

enum class Family { aitken, epsilon, theta };

inline constexpr Family kAllFamilies[] = {Family::aitken, Family::epsilon, Family::theta};

std::string_view to_string(Family family);
/// Accepts "aitken", "epsilon", "theta" and "theta-iterated".
Family parse_family(std::string_view text);

constexpr std::size_t family_step(Family family) { return family == Family::theta ? 3 : 2; }

/// Power of z multiplying the (k, n) term: n + step*k + 1.
constexpr std::size_t term_offset(Family family, std::size_t k, std::size_t n) {
  return n + family_step(family) * k + 1;
}

/// Runs the family's rearranged recursion on `base`.
template <class E, class ZOp>
Triangle<E> run_family(Family family, typename Triangle<E>::Column base, const ZOp& z, const Offsets<E>& d = {},
                       std::size_t max_k = kAllColumns) {
  switch (family) {
    case Family::aitken: return aitken_scheme<E>(std::move(base), z, d, max_k);
    case Family::epsilon: return epsilon_scheme<E>(std::move(base), z, d, max_k);
    case Family::theta: return theta_scheme<E>(std::move(base), z, d, max_k);
  }
  throw std::invalid_argument("unknown family");
}

/// Phi/phi/Psi or R/r/calR for one (k, n): the approximant is
/// partial sum (resp. f) + z^offset * term.
template <class E>
struct FamilyTerm {
  Family family = Family::aitken;
  std::size_t k = 0;
  std::size_t n = 0;
  E term;
  std::size_t offset = 0;
};

template <class E>
struct TermTable {
  Family family = Family::aitken;
  Triangle<E> entries;

  std::size_t offset(std::size_t k, std::size_t n) const { return term_offset(family, k, n); }
  bool valid(std::size_t k, std::size_t n) const { return entries.valid(k, n); }

  FamilyTerm<E> term(std::size_t k, std::size_t n) const {
    return {family, k, n, entries.value(k, n), offset(k, n)};
  }

  std::vector<FamilyTerm<E>> valid_terms() const {
    std::vector<FamilyTerm<E>> out;
    for (std::size_t k = 0; k < entries.columns(); ++k) {
      for (std::size_t n = 0; n < entries.size(k); ++n) {
        if (entries.valid(k, n)) out.push_back(term(k, n));
      }
    }
    return out;
  }
};

/// Scalar table G/g/calG (leading predictions) or C/c/calC (z-independent
/// parts of the remainders). Entry (k, n) belongs to gamma_{n+step*k+1}.
template <Field T>
struct LeadingTable {
  Family family = Family::aitken;
  Triangle<T> entries;

  std::size_t coefficient_index(std::size_t k, std::size_t n) const { return term_offset(family, k, n); }
  bool valid(std::size_t k, std::size_t n) const { return entries.valid(k, n); }
  bool nonzero(std::size_t k, std::size_t n) const { return entries.valid(k, n) && *entries.at(k, n) != 0; }
};

/// gamma_0..gamma_last as a plain vector (tail consulted if needed).
template <Field T>
std::vector<T> coefficient_list(const PowerSeries<T>& series, std::size_t last) {
  std::vector<T> out;
  out.reserve(last + 1);
  for (std::size_t nu = 0; nu <= last; ++nu) out.push_back(series.coefficient(nu));
  return out;
}

}  // namespace seriaccel
