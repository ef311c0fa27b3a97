#include "expmart/verify/inequality.hpp"

#include <algorithm>
#include <cmath>

#include "expmart/algebra/operators.hpp"
#include "expmart/errors.hpp"
#include "expmart/verify/stochastic.hpp"

namespace expmart::verify {

using algebra::Element;

namespace {

double energy(const Element& f) { return std::max(0.0, algebra::inner_product(f, f).real()); }

Element centre(const Element& y, double c) { return algebra::apply_X(y) - Complex{c} * y; }

}  // namespace

InequalityReport verify_h1(const Element& y, double c, double c_tilde, const Tolerances& tol) {
  if (!std::isfinite(c) || !std::isfinite(c_tilde)) throw InvalidInput("centrings must be finite reals");
  const Element gy = algebra::apply_G(y);

  InequalityReport r;
  r.factor1 = Estimate::exact(energy(centre(y, c)));
  r.factor2 = Estimate::exact(energy(centre(gy, c_tilde)));
  r.lhs_product = std::sqrt(r.factor1.mean.real()) * std::sqrt(r.factor2.mean.real());
  r.rhs = y.q() * energy(y);
  r.slack = r.lhs_product - r.rhs;
  r.sigma_k = 0.0;
  r.allowance = tol.exact_inequality * std::max(1.0, r.rhs);
  r.pass = r.lhs_product >= r.rhs - r.allowance;
  return r;
}

double h2_rhs(const ProcessElement& y, const processes::TimeChange& h, const processes::TimeGrid& grid) {
  std::vector<double> phi;
  phi.reserve(grid.points().size());
  for (double t : grid.points()) phi.push_back(energy(y.at(t, h)) * h(t));
  return trapezoid_dh(phi, h, grid);
}

InequalityReport verify_h2(const ProcessElement& y, const CenteringFunction& g,
                           const CenteringFunction& g_tilde, const processes::PathEnsemble& ens,
                           const Tolerances& tol, unsigned workers) {
  const ProcessElement z1 = y.centred(g);
  const ProcessElement z2 = y.transformed().centred(g_tilde);

  const auto i1 = ito_integral(z1, ens, workers);
  const auto i2 = ito_integral(z2, ens, workers);
  std::vector<double> a(i1.size()), b(i2.size());
  for (std::size_t i = 0; i < i1.size(); ++i) {
    a[i] = std::norm(i1[i]);
    b[i] = std::norm(i2[i]);
  }

  InequalityReport r;
  r.factor1 = estimate_mean(a);
  r.factor2 = estimate_mean(b);
  const auto root = product_root(a, b);
  r.lhs_product = root.value;
  r.lhs_stderr = root.std_error;

  const auto& h = ens.time_change();
  const auto& grid = ens.grid();
  r.rhs = h2_rhs(y, h, grid);
  r.slack = r.lhs_product - r.rhs;
  r.sigma_k = tol.sigma;
  r.allowance = tol.discretization_factor * grid.max_step();
  r.pass = r.lhs_product >= r.rhs - r.sigma_k * r.lhs_stderr - r.allowance;

  const auto fine = grid.refined();
  r.refinement = Refinement{r.rhs,
                            h2_rhs(y, h, fine),
                            discrete_isometry(z1, h, grid),
                            discrete_isometry(z1, h, fine),
                            discrete_isometry(z2, h, grid),
                            discrete_isometry(z2, h, fine)};
  return r;
}

}  // namespace expmart::verify
