#pragma once

#include <span>
#include <vector>

#include "expmart/algebra/scalar.hpp"

namespace expmart::algebra {

using Coeffs = std::vector<Complex>;

// Variance-q Hermite polynomials: H_0 = 1, H_1 = x,
// H_{n+1} = x H_n - n q H_{n-1}. Generating function
// exp(c x - c^2 q / 2) = sum_n c^n / n! H_n(x; q).

/// Monomial coefficients of H_n(x; q), index = power of x.
std::vector<double> hermite_polynomial(int n, double q);

/// Monomial coefficients -> Hermite coefficients (x H_n = H_{n+1} + n q H_{n-1}).
Coeffs monomial_to_hermite(std::span<const Complex> monomial, double q);

/// Hermite coefficients -> monomial coefficients.
Coeffs hermite_to_monomial(std::span<const Complex> hermite, double q);

/// sum_n coeffs[n] H_n(y; q) by the three-term recurrence.
Complex hermite_series(std::span<const Complex> coeffs, Complex y, double q);
double hermite_series(std::span<const double> coeffs, double y, double q);

/// Coefficients of p(x + shift) given those of p(x).
Coeffs taylor_shift(std::span<const Complex> poly, Complex shift);

/// Drops trailing exact zeros.
void trim_trailing_zeros(Coeffs& coeffs);

/// A pure polynomial element written in the variance-q Hermite basis.
class HermiteExpansion {
 public:
  HermiteExpansion(Variance q, Coeffs coeffs);

  Variance variance() const noexcept { return q_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }

  /// Unit vector e_n.
  static HermiteExpansion basis(Variance q, int n);

 private:
  Variance q_;
  Coeffs coeffs_;
};

}  // namespace expmart::algebra
