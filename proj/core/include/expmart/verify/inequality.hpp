#pragma once

#include <optional>

#include "expmart/algebra/element.hpp"
#include "expmart/processes/path_ensemble.hpp"
#include "expmart/verify/estimate.hpp"
#include "expmart/verify/process_element.hpp"
#include "expmart/verify/tolerances.hpp"

namespace expmart::verify {

/// Discretization study emitted with every stochastic-integral report:
/// exact right-hand side and exact left-point second moments of both
/// factors on the grid and on its midpoint refinement.
struct Refinement {
  double rhs_coarse = 0.0;
  double rhs_fine = 0.0;
  double factor1_coarse = 0.0;
  double factor1_fine = 0.0;
  double factor2_coarse = 0.0;
  double factor2_fine = 0.0;
};

/// Report for  sqrt(factor1) * sqrt(factor2) >= rhs.
///
/// pass <=> lhs_product >= rhs - sigma_k * lhs_stderr - allowance.
struct InequalityReport {
  Estimate factor1;
  Estimate factor2;
  double lhs_product = 0.0;
  double lhs_stderr = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // lhs_product - rhs
  double sigma_k = 0.0;
  double allowance = 0.0;
  bool pass = false;
  std::optional<Refinement> refinement;
};

/// Exact check of
///   E[(X - c)^2 |Y|^2]^(1/2) E[(X - c~)^2 |G Y|^2]^(1/2) >= q E[|Y|^2]
/// at Y's own q. Both factors come from algebra inner products; allowance is
/// tol.exact_inequality * max(1, rhs).
InequalityReport verify_h1(const algebra::Element& y, double c, double c_tilde,
                           const Tolerances& tol = {});

/// Monte Carlo check of
///   E|int (X - g) Y dX|^2^(1/2) E|int (X - g~) G Y dX|^2^(1/2)
///       >= int E|Y_t|^2 h(t) dh(t)
/// on the ensemble. The right side is exact in x and trapezoidal in t.
InequalityReport verify_h2(const ProcessElement& y, const CenteringFunction& g,
                           const CenteringFunction& g_tilde, const processes::PathEnsemble& ens,
                           const Tolerances& tol = {}, unsigned workers = 1);

/// int E|Y_t|^2 h(t) dh(t) by the trapezoid rule on `grid`.
double h2_rhs(const ProcessElement& y, const processes::TimeChange& h, const processes::TimeGrid& grid);

}  // namespace expmart::verify
