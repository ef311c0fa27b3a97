#pragma once

#include <string>
#include <utility>
#include <vector>

#include "expmart/algebra/scalar.hpp"
#include "expmart/processes/time_grid.hpp"

namespace expmart::processes {

/// Deterministic time change h with h(0) = 0 on [0, T]; X_t = B_{h(t)} in
/// law and <X>_t = h(t).
class TimeChange {
 public:
  enum class Kind { identity, power, piecewise_linear };

  using Knot = std::pair<double, double>;  // (t, h(t))

  static TimeChange identity(double horizon);
  /// h(t) = t^alpha, alpha > 0.
  static TimeChange power(double alpha, double horizon);
  /// Linear interpolation between knots. The first knot must be (0, 0);
  /// times strictly increasing; T is the last knot time. Monotonicity of
  /// the values is checked by validate_on().
  static TimeChange piecewise_linear(std::vector<Knot> knots);

  Kind kind() const noexcept { return kind_; }
  double horizon() const noexcept { return horizon_; }
  double alpha() const noexcept { return alpha_; }
  const std::vector<Knot>& knots() const noexcept { return knots_; }

  /// h(t). RangeError outside [0, T].
  double operator()(double t) const;

  /// "identity", "power(2)", "piecewise-linear(0:0,1:2)".
  std::string describe() const;

  /// InvalidTimeChange if h decreases between consecutive grid points or the
  /// grid runs past T.
  void validate_on(const TimeGrid& grid) const;

 private:
  TimeChange(Kind kind, double horizon, double alpha, std::vector<Knot> knots);

  Kind kind_;
  double horizon_;
  double alpha_;
  std::vector<Knot> knots_;
};

/// <X>_t = h(t) as the variance parameter of algebra elements at time t.
algebra::Variance quadratic_variation_at(const TimeChange& h, double t);

}  // namespace expmart::processes
