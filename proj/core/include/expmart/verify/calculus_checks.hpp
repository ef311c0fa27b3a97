#pragma once

#include <span>
#include <vector>

#include "expmart/algebra/scalar.hpp"

namespace expmart::verify {

using algebra::Complex;

struct PdePoint {
  double x;
  double y;
};

/// Regular nx-by-ny sample of [x_lo, x_hi] x [y_lo, y_hi].
std::vector<PdePoint> pde_box_points(double x_lo = -2.0, double x_hi = 2.0, double y_lo = 0.5,
                                     double y_hi = 2.0, std::size_t nx = 21, std::size_t ny = 16);

struct PdeResidual {
  double max_f = 0.0;  // f_c(x, y) = exp(c x - c^2 y / 2)
  double max_g = 0.0;  // g_c(x, y) = (x - c y) f_c(x, y)
  double max() const noexcept { return max_f > max_g ? max_f : max_g; }
};

/// Largest |f_xx / 2 + f_y| by central differences with the given step.
/// Requires y > step at every point.
PdeResidual verify_pde(Complex c, std::span<const PdePoint> points, double step = 1e-4);

/// Exact L2 norms || (E_r - 1)/r * E_c - X E_c ||_2 for each r.
/// Requires q > 0 and r in (0, 1].
std::vector<double> verify_l2_limit(Complex c, algebra::Variance q, std::span<const double> r);

/// 2^-k for k = first..last.
std::vector<double> dyadic_sequence(int first, int last);

}  // namespace expmart::verify
