#include "expmart/verify/calculus_checks.hpp"

#include <algorithm>
#include <cmath>

#include "expmart/algebra/operators.hpp"
#include "expmart/errors.hpp"

namespace expmart::verify {

using algebra::Element;

std::vector<PdePoint> pde_box_points(double x_lo, double x_hi, double y_lo, double y_hi, std::size_t nx,
                                     std::size_t ny) {
  if (nx < 2 || ny < 2) throw InvalidInput("need at least two sample points per axis");
  std::vector<PdePoint> pts;
  pts.reserve(nx * ny);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      pts.push_back({x_lo + (x_hi - x_lo) * static_cast<double>(i) / static_cast<double>(nx - 1),
                     y_lo + (y_hi - y_lo) * static_cast<double>(j) / static_cast<double>(ny - 1)});
    }
  }
  return pts;
}

namespace {

template <class F>
double heat_residual(F&& f, double x, double y, double h) {
  const Complex fxx = (f(x + h, y) - 2.0 * f(x, y) + f(x - h, y)) / (h * h);
  const Complex fy = (f(x, y + h) - f(x, y - h)) / (2.0 * h);
  return std::abs(0.5 * fxx + fy);
}

}  // namespace

PdeResidual verify_pde(Complex c, std::span<const PdePoint> points, double step) {
  if (!algebra::is_finite(c)) throw InvalidInput("non-finite exponent");
  if (!(step > 0.0)) throw InvalidInput("finite-difference step must be positive");
  auto f = [c](double x, double y) { return std::exp(c * x - 0.5 * c * c * y); };
  auto g = [c, f](double x, double y) { return (x - c * y) * f(x, y); };

  PdeResidual r;
  for (const auto& p : points) {
    if (!(p.y > step)) throw InvalidInput("PDE sample points need y > step");
    r.max_f = std::max(r.max_f, heat_residual(f, p.x, p.y, step));
    r.max_g = std::max(r.max_g, heat_residual(g, p.x, p.y, step));
  }
  return r;
}

// (E_r - 1)/r E_c - X E_c = E_c sum_{n>=2} r^(n-1)/n! H_n(x; q), since
// E_r E_c / E_c = E_r. Subtracting the exponentials directly cancels terms of
// size 1/r down to size r, so the norm is summed from the series instead.
//
// The Gram entries <H_m E_c, H_n E_c> come from inner products of
// single-degree elements: a whole series in one element would put
// coefficients of very different size side by side, and the canonical drop
// would discard high degrees whose basis norm is large.
std::vector<double> verify_l2_limit(Complex c, algebra::Variance q, std::span<const double> rs) {
  if (!(q.value() > 0.0)) throw InvalidInput("the L2 limit check needs q > 0");
  if (!algebra::is_finite(c)) throw InvalidInput("non-finite exponent");
  for (double r : rs) {
    if (!(r > 0.0 && r <= 1.0)) throw InvalidInput("r must lie in (0, 1]");
  }
  constexpr int kMaxDegree = 40;
  constexpr double kCutoff = 1e-20;

  const Element ec = Element::exponential(c, q);
  std::vector<Element> basis;  // basis[j] = H_{j+2} E_c
  std::vector<std::vector<Complex>> gram;
  auto extend_to = [&](std::size_t size) {
    while (basis.size() < size) {
      basis.push_back(algebra::mul(
          ec, algebra::from_hermite(algebra::HermiteExpansion::basis(q, static_cast<int>(basis.size()) + 2))));
      std::vector<Complex> row;
      for (const auto& b : basis) row.push_back(algebra::inner_product(basis.back(), b));
      gram.push_back(std::move(row));
    }
  };
  auto entry = [&](std::size_t m, std::size_t n) { return m >= n ? gram[m][n] : std::conj(gram[n][m]); };

  std::vector<double> norms;
  norms.reserve(rs.size());
  for (double r : rs) {
    std::vector<double> weight;  // r^(n-1) / n!
    double w = r / 2.0;
    for (int n = 2; n <= kMaxDegree; ++n) {
      extend_to(weight.size() + 1);
      weight.push_back(w);
      const double size = w * std::sqrt(std::abs(gram.back().back()));
      const double lead = weight.front() * std::sqrt(std::abs(gram.front().front()));
      if (n > 3 && size < kCutoff * lead) break;
      w *= r / (n + 1);
    }
    double sum = 0.0;
    for (std::size_t m = 0; m < weight.size(); ++m) {
      for (std::size_t n = 0; n < weight.size(); ++n) sum += weight[m] * weight[n] * entry(m, n).real();
    }
    norms.push_back(std::sqrt(std::max(0.0, sum)));
  }
  return norms;
}

std::vector<double> dyadic_sequence(int first, int last) {
  std::vector<double> r;
  for (int k = first; k <= last; ++k) r.push_back(std::ldexp(1.0, -k));
  return r;
}

}  // namespace expmart::verify
