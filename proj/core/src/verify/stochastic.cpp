#include "expmart/verify/stochastic.hpp"

#include <cmath>
#include <limits>

#include "expmart/algebra/operators.hpp"
#include "expmart/algebra/text_format.hpp"
#include "expmart/errors.hpp"
#include "expmart/parallel.hpp"
#include "expmart/verify/evaluate.hpp"

namespace expmart::verify {

using algebra::Element;
using algebra::Variance;
using processes::PathEnsemble;

Estimate mc_expectation(const Element& f, std::size_t k, const PathEnsemble& ens, unsigned workers) {
  if (k >= ens.n_points()) throw RangeError("grid index out of range");
  if (f.q() != ens.variance_at(k)) {
    throw ContractViolation("element q differs from the quadratic variation at this grid time");
  }
  if (f.is_zero()) return {Complex{}, 0.0, ens.n_paths()};
  const CompiledElement eval(f);
  std::vector<Complex> samples(ens.n_paths());
  parallel_for(ens.n_paths(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) samples[i] = eval(ens.at(i, k));
  });
  return estimate_mean(samples);
}

Estimate mc_expectation(const ProcessElement& f, double t, const PathEnsemble& ens, unsigned workers) {
  const auto k = ens.grid().index_of(t);
  if (!k) throw RangeError("time " + algebra::format_double(t) + " is not on the ensemble grid");
  const double tk = ens.grid()[*k];
  return mc_expectation(f.at(tk, Variance(ens.variance_at(*k))), *k, ens, workers);
}

std::vector<Complex> ito_integral(const ProcessElement& z, const PathEnsemble& ens, unsigned workers) {
  const std::size_t steps = ens.grid().steps();
  std::vector<CompiledElement> integrand;
  integrand.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    integrand.emplace_back(z.at(ens.grid()[k], Variance(ens.variance_at(k))));
  }

  std::vector<Complex> out(ens.n_paths());
  parallel_for(ens.n_paths(), workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto x = ens.path(i);
      Complex sum{};
      for (std::size_t k = 0; k < steps; ++k) {
        if (integrand[k].is_zero()) continue;
        sum += integrand[k](x[k]) * (x[k + 1] - x[k]);
      }
      out[i] = sum;
    }
  });
  return out;
}

double discrete_isometry(const ProcessElement& z, const processes::TimeChange& h,
                         const processes::TimeGrid& grid) {
  double sum = 0.0;
  for (std::size_t k = 0; k < grid.steps(); ++k) {
    const double dh = h(grid[k + 1]) - h(grid[k]);
    if (dh == 0.0) continue;
    const Element zk = z.at(grid[k], h);
    sum += algebra::inner_product(zk, zk).real() * dh;
  }
  return sum;
}

double trapezoid_dh(std::span<const double> phi, const processes::TimeChange& h,
                    const processes::TimeGrid& grid) {
  if (phi.size() != grid.points().size()) throw InvalidInput("integrand length differs from grid");
  double sum = 0.0;
  for (std::size_t k = 0; k < grid.steps(); ++k) {
    sum += 0.5 * (phi[k] + phi[k + 1]) * (h(grid[k + 1]) - h(grid[k]));
  }
  return sum;
}

IsometryReport verify_isometry(const ProcessElement& z, const PathEnsemble& ens, const Tolerances& tol,
                               unsigned workers) {
  const auto integrals = ito_integral(z, ens, workers);
  std::vector<double> squares(integrals.size());
  for (std::size_t i = 0; i < integrals.size(); ++i) squares[i] = std::norm(integrals[i]);

  IsometryReport r;
  r.mc = estimate_mean(squares);
  std::vector<double> second_moment;
  second_moment.reserve(ens.n_points());
  for (double t : ens.grid().points()) {
    const Element zt = z.at(t, ens.time_change());
    second_moment.push_back(algebra::inner_product(zt, zt).real());
  }
  r.exact = trapezoid_dh(second_moment, ens.time_change(), ens.grid());
  r.discrete = discrete_isometry(z, ens.time_change(), ens.grid());

  const double diff = std::abs(r.mc.mean.real() - r.exact);
  if (r.mc.std_error > 0.0) {
    r.z_score = diff / r.mc.std_error;
  } else {
    r.z_score = diff == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  }
  r.sigma_k = tol.sigma;
  r.allowance = tol.discretization_factor * ens.grid().max_step();
  r.pass = diff <= tol.sigma * r.mc.std_error + r.allowance;
  return r;
}

}  // namespace expmart::verify
