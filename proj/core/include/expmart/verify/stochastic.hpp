#pragma once

#include <cstddef>
#include <vector>

#include "expmart/algebra/element.hpp"
#include "expmart/processes/path_ensemble.hpp"
#include "expmart/verify/estimate.hpp"
#include "expmart/verify/process_element.hpp"
#include "expmart/verify/tolerances.hpp"

namespace expmart::verify {

/// Sample mean of f(t) over X_t. `t` must lie on the ensemble grid.
Estimate mc_expectation(const ProcessElement& f, double t, const processes::PathEnsemble& ens,
                        unsigned workers = 1);

/// Same for a fixed element at grid index k; its q must equal h(t_k).
Estimate mc_expectation(const algebra::Element& f, std::size_t k, const processes::PathEnsemble& ens,
                        unsigned workers = 1);

/// Left-point Ito sums sum_k Z(t_k)(X_{t_k}) (X_{t_{k+1}} - X_{t_k}), one per path.
std::vector<Complex> ito_integral(const ProcessElement& z, const processes::PathEnsemble& ens,
                                  unsigned workers = 1);

/// sum_k E|Z_k|^2 (h_{k+1} - h_k): the exact second moment of the left-point
/// sum on `grid`.
double discrete_isometry(const ProcessElement& z, const processes::TimeChange& h,
                         const processes::TimeGrid& grid);

/// Trapezoid rule for int_0^T phi(t) dh(t) on the grid, phi given at the points.
double trapezoid_dh(std::span<const double> phi, const processes::TimeChange& h,
                    const processes::TimeGrid& grid);

struct IsometryReport {
  Estimate mc;            // E|int Z dX|^2 by Monte Carlo
  double exact = 0.0;     // int E|Z_t|^2 d<X>_t, trapezoid in t
  double discrete = 0.0;  // exact second moment of the left-point sum
  double z_score = 0.0;   // |mc - exact| / stderr
  double sigma_k = 0.0;
  double allowance = 0.0;
  bool pass = false;
};

IsometryReport verify_isometry(const ProcessElement& z, const processes::PathEnsemble& ens,
                               const Tolerances& tol = {}, unsigned workers = 1);

}  // namespace expmart::verify
