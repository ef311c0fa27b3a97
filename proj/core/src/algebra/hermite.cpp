#include "expmart/algebra/hermite.hpp"

#include <cmath>
#include <utility>

#include "expmart/errors.hpp"

namespace expmart::algebra {

std::vector<double> hermite_polynomial(int n, double q) {
  if (n < 0) throw InvalidInput("negative Hermite degree");
  std::vector<double> prev{1.0};
  if (n == 0) return prev;
  std::vector<double> cur{0.0, 1.0};
  for (int k = 1; k < n; ++k) {
    std::vector<double> next(static_cast<std::size_t>(k) + 2, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= k * q * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Coeffs monomial_to_hermite(std::span<const Complex> monomial, double q) {
  Coeffs out(monomial.size(), Complex{});
  // power holds x^k in the Hermite basis.
  Coeffs power{Complex{1.0}};
  for (std::size_t k = 0; k < monomial.size(); ++k) {
    for (std::size_t n = 0; n < power.size(); ++n) out[n] += monomial[k] * power[n];
    if (k + 1 == monomial.size()) break;
    Coeffs next(power.size() + 1, Complex{});
    for (std::size_t n = 0; n < power.size(); ++n) {
      next[n + 1] += power[n];
      if (n > 0) next[n - 1] += static_cast<double>(n) * q * power[n];
    }
    power = std::move(next);
  }
  trim_trailing_zeros(out);
  return out;
}

Coeffs hermite_to_monomial(std::span<const Complex> hermite, double q) {
  Coeffs out(hermite.size(), Complex{});
  for (std::size_t n = 0; n < hermite.size(); ++n) {
    if (hermite[n] == Complex{}) continue;
    const auto h = hermite_polynomial(static_cast<int>(n), q);
    for (std::size_t i = 0; i < h.size(); ++i) out[i] += hermite[n] * h[i];
  }
  trim_trailing_zeros(out);
  return out;
}

Complex hermite_series(std::span<const Complex> coeffs, Complex y, double q) {
  if (coeffs.empty()) return {};
  Complex prev{1.0};
  Complex sum = coeffs[0];
  if (coeffs.size() == 1) return sum;
  Complex cur = y;
  sum += coeffs[1] * cur;
  for (std::size_t n = 1; n + 1 < coeffs.size(); ++n) {
    const Complex next = y * cur - static_cast<double>(n) * q * prev;
    prev = cur;
    cur = next;
    sum += coeffs[n + 1] * cur;
  }
  return sum;
}

double hermite_series(std::span<const double> coeffs, double y, double q) {
  if (coeffs.empty()) return 0.0;
  double prev = 1.0;
  double sum = coeffs[0];
  if (coeffs.size() == 1) return sum;
  double cur = y;
  sum += coeffs[1] * cur;
  for (std::size_t n = 1; n + 1 < coeffs.size(); ++n) {
    const double next = y * cur - static_cast<double>(n) * q * prev;
    prev = cur;
    cur = next;
    sum += coeffs[n + 1] * cur;
  }
  return sum;
}

Coeffs taylor_shift(std::span<const Complex> poly, Complex shift) {
  // Repeated synthetic division (Horner shift), O(n^2).
  Coeffs out(poly.begin(), poly.end());
  const std::size_t n = out.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k > i; --k) out[k - 1] += shift * out[k];
  }
  return out;
}

void trim_trailing_zeros(Coeffs& coeffs) {
  while (!coeffs.empty() && coeffs.back() == Complex{}) coeffs.pop_back();
}

HermiteExpansion::HermiteExpansion(Variance q, Coeffs coeffs)
    : q_(q), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!is_finite(c)) throw InvalidInput("non-finite Hermite coefficient");
  }
  trim_trailing_zeros(coeffs_);
}

HermiteExpansion HermiteExpansion::basis(Variance q, int n) {
  if (n < 0) throw InvalidInput("negative Hermite degree");
  Coeffs c(static_cast<std::size_t>(n) + 1, Complex{});
  c.back() = 1.0;
  return HermiteExpansion(q, std::move(c));
}

}  // namespace expmart::algebra
