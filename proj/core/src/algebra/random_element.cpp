#include "expmart/algebra/random_element.hpp"

#include <cmath>
#include <numbers>

#include "expmart/errors.hpp"

namespace expmart::algebra {

ElementSampler::ElementSampler(std::uint64_t seed, SamplerBounds bounds)
    : bounds_(std::move(bounds)), engine_(seed) {
  if (bounds_.variances.empty() || bounds_.max_terms < 1 || bounds_.max_degree < 0) {
    throw InvalidInput("empty sampler bounds");
  }
}

double ElementSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

Variance ElementSampler::draw_variance() {
  std::uniform_int_distribution<std::size_t> pick(0, bounds_.variances.size() - 1);
  return Variance(bounds_.variances[pick(engine_)]);
}

Complex ElementSampler::draw_exponent() {
  const double r = bounds_.max_exponent * std::sqrt(uniform(0.0, 1.0));
  switch (std::uniform_int_distribution<int>(0, 3)(engine_)) {
    case 0:
      return {};
    case 1:
      return {uniform(-bounds_.max_exponent, bounds_.max_exponent), 0.0};
    case 2:
      return {0.0, uniform(-bounds_.max_exponent, bounds_.max_exponent)};
    default:
      return std::polar(r, uniform(0.0, 2.0 * std::numbers::pi));
  }
}

Element ElementSampler::draw(Variance q) {
  const int n_terms = std::uniform_int_distribution<int>(1, bounds_.max_terms)(engine_);
  std::vector<Element::MonomialTerm> terms;
  for (int k = 0; k < n_terms; ++k) {
    const int degree = std::uniform_int_distribution<int>(0, bounds_.max_degree)(engine_);
    Element::MonomialTerm t{draw_exponent(), {}};
    for (int i = 0; i <= degree; ++i) t.poly.emplace_back(uniform(-1.0, 1.0), uniform(-1.0, 1.0));
    terms.push_back(std::move(t));
  }
  return Element::from_monomial_terms(terms, q);
}

}  // namespace expmart::algebra
