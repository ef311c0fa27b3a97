#pragma once

#include <vector>

#include "expmart/algebra/element.hpp"

namespace expmart::verify {

using algebra::Complex;

/// Pathwise value sum_k p_k(x) exp(c_k x - c_k^2 q / 2). OverflowError when
/// |c_k x| > 700.
Complex evaluate_element(const algebra::Element& f, double x);

/// An element prepared for repeated evaluation: per-term log-normalizer
/// -c^2 q / 2 and Hermite shift c q computed once.
class CompiledElement {
 public:
  explicit CompiledElement(const algebra::Element& f);

  Complex operator()(double x) const;
  bool is_zero() const noexcept { return terms_.empty(); }

 private:
  struct Term {
    Complex exponent;
    Complex shift;       // c q
    Complex log_normalizer;  // -c^2 q / 2
    bool plain;          // exponent == 0
    std::vector<Complex> coeffs;
  };
  double q_;
  std::vector<Term> terms_;
};

}  // namespace expmart::verify
