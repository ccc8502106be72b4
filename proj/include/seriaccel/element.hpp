#pragma once

// Customisation point for the values that populate recursion tables:
// plain scalars, jets, or (in tests) Laurent series.

#include "seriaccel/numeric.hpp"

namespace seriaccel {

template <class E>
struct element_traits;

template <class T>
  requires Field<T>
struct element_traits<T> {
  using magnitude_type = T;

  static T magnitude(const T& x) { return field_traits<T>::abs(x); }

  static T inverse(const T& d, const T& scale) {
    if (field_traits<T>::negligible(d, scale)) {
      throw Breakdown("breakdown: denominator " + to_exact_string(d));
    }
    return T(1) / d;
  }
};

template <class E>
using magnitude_t = typename element_traits<E>::magnitude_type;

// Sum of magnitudes of the terms forming a denominator. Skipped entirely
// in exact arithmetic, where only a true zero counts as breakdown.
template <class E, class... Terms>
magnitude_t<E> combined_scale(const Terms&... terms) {
  using M = magnitude_t<E>;
  if constexpr (field_traits<M>::exact) {
    return M(0);
  } else {
    return (M(0) + ... + element_traits<E>::magnitude(terms));
  }
}

template <class E>
E checked_inverse(const E& d, const magnitude_t<E>& scale) {
  return element_traits<E>::inverse(d, scale);
}

}  // namespace seriaccel
