#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "expmart/algebra/element.hpp"

namespace expmart::algebra {

struct SamplerBounds {
  int max_degree = 8;
  int max_terms = 3;
  double max_exponent = 3.0;  // |c| bound
  std::vector<double> variances{0.0, 0.5, 1.0, 4.0};
};

/// Seeded generator of random elements for property checks. Exponents are
/// drawn from a mix of zero, real, imaginary and general complex values so
/// that the special cases of the operators are exercised.
class ElementSampler {
 public:
  explicit ElementSampler(std::uint64_t seed, SamplerBounds bounds = {});

  Variance draw_variance();
  Element draw(Variance q);
  Element draw() { return draw(draw_variance()); }

  double uniform(double lo, double hi);

 private:
  Complex draw_exponent();

  SamplerBounds bounds_;
  std::mt19937_64 engine_;
};

}  // namespace expmart::algebra
