#pragma once

#include <cstddef>
#include <span>

#include "expmart/algebra/scalar.hpp"

namespace expmart::verify {

using algebra::Complex;

/// Monte Carlo mean with its standard error. n == 0 marks a value computed
/// exactly (std_error is then 0); sampled estimates have n >= 2.
struct Estimate {
  Complex mean{};
  double std_error = 0.0;
  std::size_t n = 0;

  static Estimate exact(Complex value) { return {value, 0.0, 0}; }
  bool is_exact() const noexcept { return n == 0; }
};

/// Pairwise (cascade) summation. The split points depend only on the input
/// length, so the result is reproducible however the samples were produced.
double pairwise_sum(std::span<const double> values);
Complex pairwise_sum(std::span<const Complex> values);

/// Sample mean and standard error sqrt(s^2 / n) with s^2 the unbiased sample
/// variance of |z - mean|. Needs at least two samples.
Estimate estimate_mean(std::span<const Complex> samples);
Estimate estimate_mean(std::span<const double> samples);

/// Estimate and delta-method standard error of sqrt(E[a] E[b]) from paired
/// samples (a_i, b_i), including their covariance.
struct ProductRoot {
  double value = 0.0;
  double std_error = 0.0;
};
ProductRoot product_root(std::span<const double> a, std::span<const double> b);

}  // namespace expmart::verify
