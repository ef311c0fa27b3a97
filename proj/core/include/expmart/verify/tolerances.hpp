#pragma once

namespace expmart::verify {

struct Tolerances {
  /// Statistical pass threshold in standard errors.
  double sigma = 4.0;
  /// Discretization allowance = factor * max grid step.
  double discretization_factor = 10.0;
  /// Slack allowed by the exact (h1) inequality check, relative to max(1, RHS).
  double exact_inequality = 1e-9;
  /// Exact algebra identities (coefficients, relative).
  double exact_relative = 1e-12;
  /// Inner-product identities that pass through exp() (relative).
  double inner_product_relative = 1e-9;
  /// Finite-difference PDE residual bound.
  double pde_residual = 1e-6;
};

}  // namespace expmart::verify
