#include "expmart/verify/evaluate.hpp"

#include <cmath>

#include "expmart/algebra/hermite.hpp"
#include "expmart/errors.hpp"

namespace expmart::verify {

namespace {

constexpr double kExpLimit = 700.0;

}  // namespace

CompiledElement::CompiledElement(const algebra::Element& f) : q_(f.q()) {
  terms_.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    const Complex c = t.exponent;
    terms_.push_back({c, c * q_, -0.5 * c * c * q_, c == Complex{}, t.coeffs});
  }
}

Complex CompiledElement::operator()(double x) const {
  Complex sum{};
  for (const auto& t : terms_) {
    const Complex poly = algebra::hermite_series(t.coeffs, Complex{x} - t.shift, q_);
    if (t.plain) {
      sum += poly;
      continue;
    }
    if (std::abs(t.exponent) * std::abs(x) > kExpLimit) throw OverflowError(t.exponent, x);
    sum += poly * std::exp(t.exponent * x + t.log_normalizer);
  }
  return sum;
}

Complex evaluate_element(const algebra::Element& f, double x) { return CompiledElement(f)(x); }

}  // namespace expmart::verify
