#pragma once

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "expmart/algebra/element.hpp"

namespace test {

using expmart::algebra::Complex;

inline bool close(Complex a, Complex b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

inline std::vector<Complex> poly(std::initializer_list<double> v) { return {v.begin(), v.end()}; }

// Monomial coefficients of a single-term element, padded to `n`.
inline std::vector<Complex> monomial_of(const expmart::algebra::Element& f, std::size_t n) {
  auto terms = f.monomial_terms();
  std::vector<Complex> out(n);
  if (!terms.empty()) {
    for (std::size_t k = 0; k < std::min(n, terms.front().poly.size()); ++k) out[k] = terms.front().poly[k];
  }
  return out;
}

}  // namespace test
