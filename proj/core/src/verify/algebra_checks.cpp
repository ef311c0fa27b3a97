#include "expmart/verify/algebra_checks.hpp"

#include <algorithm>
#include <cmath>

namespace expmart::verify {

using namespace expmart::algebra;

namespace {

CheckSummary finish(std::string name, std::size_t cases, double worst, double tol) {
  return {std::move(name), cases, worst, tol, worst <= tol};
}

double relative(Complex a, Complex b, double scale) {
  const double d = std::abs(a - b);
  if (d == 0.0) return 0.0;
  return scale > 0.0 ? d / scale : d;
}

}  // namespace

CheckSummary check_commutator(Commutator which, std::uint64_t seed, std::size_t count,
                              const SamplerBounds& bounds) {
  ElementSampler sampler(seed, bounds);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Element f = sampler.draw();
    worst = std::max(worst, commutator_relative_residual(which, f));
    if (!commutator_residual(which, f).is_zero()) worst = std::max(worst, 1.0);
  }
  return finish("commutator-" + std::string(to_string(which)), count, worst, kCanonicalTolerance);
}

CheckSummary check_unitarity(std::uint64_t seed, std::size_t count, const SamplerBounds& bounds) {
  ElementSampler sampler(seed, bounds);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Variance q = sampler.draw_variance();
    const Element f = sampler.draw(q);
    const Element g = sampler.draw(q);
    const Complex before = inner_product(f, g);
    const Complex after = inner_product(apply_G(f), apply_G(g));
    worst = std::max(worst, relative(after, before, norm(f) * norm(g)));
  }
  return finish("G-unitarity", count, worst, 1e-9);
}

CheckSummary check_order_four(std::uint64_t seed, std::size_t count, const SamplerBounds& bounds) {
  ElementSampler sampler(seed, bounds);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Element f = sampler.draw();
    const Element g4 = apply_G(apply_G(apply_G(apply_G(f))));
    worst = std::max(worst, relative_difference(g4, f));
  }
  return finish("G-order-four", count, worst, 0.0);
}

CheckSummary check_product_formula(std::uint64_t seed, std::size_t count) {
  ElementSampler sampler(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Variance q = sampler.draw_variance();
    const Complex c{sampler.uniform(-3.0, 3.0), sampler.uniform(-3.0, 3.0)};
    const Complex d{sampler.uniform(-3.0, 3.0), sampler.uniform(-3.0, 3.0)};
    const Element product = mul(Element::exponential(c, q), Element::exponential(d, q));
    const Complex expected = std::exp(c * d * q.value());
    if (product.terms().size() != 1 || std::abs(product.terms()[0].exponent - (c + d)) > kCanonicalTolerance ||
        product.terms()[0].coeffs.size() != 1) {
      worst = std::max(worst, 1.0);
      continue;
    }
    worst = std::max(worst, relative(product.terms()[0].coeffs[0], expected, std::abs(expected)));
  }
  return finish("product-formula", count, worst, kCanonicalTolerance);
}

CheckSummary check_adjoint_split(std::uint64_t seed, std::size_t count, const SamplerBounds& bounds) {
  ElementSampler sampler(seed, bounds);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Element f = sampler.draw();
    worst = std::max(worst, relative_difference(apply_X(f), apply_D(f) + apply_D_star(f)));
  }
  return finish("X=D+D*", count, worst, kCanonicalTolerance);
}

CheckSummary check_adjointness(std::uint64_t seed, std::size_t count, const SamplerBounds& bounds) {
  ElementSampler sampler(seed, bounds);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Variance q = sampler.draw_variance();
    const Element f = sampler.draw(q);
    const Element g = sampler.draw(q);
    const Element df = apply_D(f);
    const Element dsg = apply_D_star(g);
    const double scale = norm(df) * norm(g) + norm(f) * norm(dsg);
    worst = std::max(worst, relative(inner_product(df, g), inner_product(f, dsg), scale));
  }
  return finish("adjointness", count, worst, 1e-9);
}

CheckSummary check_hermite_eigen(int max_degree, const SamplerBounds& bounds) {
  double worst = 0.0;
  std::size_t cases = 0;
  for (double qv : bounds.variances) {
    const Variance q(qv);
    for (int n = 0; n <= max_degree; ++n, ++cases) {
      const Element h = from_hermite(HermiteExpansion::basis(q, n));
      Complex eigen{1.0};
      for (int k = 0; k < n % 4; ++k) eigen = rotate_minus_i(eigen);
      worst = std::max(worst, relative_difference(apply_G(h), eigen * h));
      worst = std::max(worst, relative_difference(apply_G_generating(h), eigen * h));
    }
  }
  return finish("G-hermite-eigen", cases, worst, kCanonicalTolerance);
}

CheckSummary check_ladder(int max_degree, const SamplerBounds& bounds) {
  double worst = 0.0;
  std::size_t cases = 0;
  for (double qv : bounds.variances) {
    const Variance q(qv);
    for (int n = 0; n <= max_degree; ++n, ++cases) {
      const Element h = from_hermite(HermiteExpansion::basis(q, n));
      const Element up = from_hermite(HermiteExpansion::basis(q, n + 1));
      const Element down = n == 0 ? Element(q)
                                  : Complex{n * qv} * from_hermite(HermiteExpansion::basis(q, n - 1));
      worst = std::max(worst, relative_difference(apply_D(h), down));
      worst = std::max(worst, relative_difference(apply_D_star(h), up));
    }
  }
  return finish("ladder", cases, worst, kCanonicalTolerance);
}

CheckSummary check_transform_routes(std::uint64_t seed, std::size_t count) {
  SamplerBounds bounds;
  bounds.max_degree = 6;
  bounds.max_exponent = 1.0;
  bounds.variances = {0.0, 0.5, 1.0};
  ElementSampler sampler(seed, bounds);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Element f = sampler.draw();
    worst = std::max(worst, relative_difference(apply_G(f), apply_G_generating(f)));
  }
  return finish("G-routes", count, worst, 1e-10);
}

CheckSummary check_expectation_routes(std::uint64_t seed, std::size_t count) {
  ElementSampler sampler(seed);
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Element f = sampler.draw();
    Complex by_moments{};
    double scale = 0.0;
    for (const auto& t : f.monomial_terms()) {
      const Complex e = gaussian_expectation(t.poly, t.exponent, f.variance());
      by_moments += e;
      scale += std::abs(e);
    }
    worst = std::max(worst, relative(expectation(f), by_moments, std::max(scale, 1.0)));
  }
  return finish("expectation-routes", count, worst, 1e-9);
}

}  // namespace expmart::verify
