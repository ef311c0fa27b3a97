#pragma once

#include <cmath>
#include <compare>
#include <complex>

namespace expmart::algebra {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Coefficient and exponent-merge tolerance of the canonical form.
inline constexpr double kCanonicalTolerance = 1e-12;

inline bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// -i * z computed by swapping components, so four applications are exact.
inline constexpr Complex rotate_minus_i(Complex z) noexcept {
  return {z.imag(), -z.real()};
}

inline constexpr Complex rotate_plus_i(Complex z) noexcept {
  return {-z.imag(), z.real()};
}

/// Deterministic quadratic variation <X>_t at a fixed time. Always finite
/// and non-negative.
class Variance {
 public:
  explicit Variance(double q);

  double value() const noexcept { return q_; }

  friend bool operator==(Variance, Variance) = default;
  friend auto operator<=>(Variance, Variance) = default;

 private:
  double q_;
};

}  // namespace expmart::algebra
