#include "expmart/algebra/operators.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "expmart/errors.hpp"

namespace expmart::algebra {

namespace {

using Term = Element::Term;

std::vector<double> factorials(std::size_t n) {
  std::vector<double> f(n + 1, 1.0);
  for (std::size_t k = 1; k <= n; ++k) f[k] = f[k - 1] * static_cast<double>(k);
  return f;
}

// base^0 .. base^n with 0^0 = 1.
std::vector<Complex> powers(Complex base, std::size_t n) {
  std::vector<Complex> p(n + 1, Complex{1.0});
  for (std::size_t k = 1; k <= n; ++k) p[k] = p[k - 1] * base;
  return p;
}

template <class F>
Element map_terms(const Element& f, F&& op) {
  std::vector<Term> out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) out.push_back(op(t));
  return Element::from_terms(std::move(out), f.variance());
}

// Product of H_m(x - c q) E_c and H_n(x - d q) E_d without the exp(c d q)
// factor, re-expanded in H_k(x - (c + d) q). From the generating function
// E_{c+r} E_{d+s} = exp(q (c d + c s + d r + r s)) E_{c+d+r+s}:
//   gamma_k = m! n! sum_{j,i} q^j/j! * 1/(i!(k-i)!) * (qd)^{m-j-i}/(m-j-i)!
//                              * (qc)^{n-j-k+i}/(n-j-k+i)!
Coeffs centred_product(const Coeffs& a, Complex c, const Coeffs& b, Complex d, double q) {
  const std::size_t degree = a.size() + b.size() - 2;
  const auto fact = factorials(degree);
  const auto qc = powers(c * q, degree);
  const auto qd = powers(d * q, degree);
  std::vector<double> qj(degree + 1, 1.0);
  for (std::size_t k = 1; k <= degree; ++k) qj[k] = qj[k - 1] * q;

  Coeffs out(degree + 1, Complex{});
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] == Complex{}) continue;
    for (std::size_t n = 0; n < b.size(); ++n) {
      if (b[n] == Complex{}) continue;
      const Complex ab = a[m] * b[n] * (fact[m] * fact[n]);
      for (std::size_t k = 0; k <= m + n; ++k) {
        Complex gamma{};
        for (std::size_t j = 0; j <= std::min(m, n); ++j) {
          // i ranges so that every exponent stays non-negative.
          const std::size_t lo = (k + j > n) ? k + j - n : 0;
          const std::size_t hi = std::min(k, m - j);
          for (std::size_t i = lo; i <= hi; ++i) {
            const std::size_t alpha = m - j - i;
            const std::size_t beta = n - j - (k - i);
            gamma += qj[j] * qd[alpha] * qc[beta] /
                     (fact[j] * fact[i] * fact[k - i] * fact[alpha] * fact[beta]);
          }
        }
        out[k] += ab * gamma;
      }
    }
  }
  return out;
}

// The k = 0 coefficient of centred_product, i.e. E[H_m(y_c) E_c H_n(y_d) E_d]
// without exp(c d q).
Complex centred_pairing(const Coeffs& a, Complex c, const Coeffs& b, Complex d, double q) {
  const std::size_t degree = std::max(a.size(), b.size());
  const auto fact = factorials(degree);
  const auto qc = powers(c * q, degree);
  const auto qd = powers(d * q, degree);
  Complex sum{};
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] == Complex{}) continue;
    for (std::size_t n = 0; n < b.size(); ++n) {
      if (b[n] == Complex{}) continue;
      Complex gamma{};
      double qpow = 1.0;
      for (std::size_t j = 0; j <= std::min(m, n); ++j) {
        gamma += qpow * qd[m - j] * qc[n - j] / (fact[j] * fact[m - j] * fact[n - j]);
        qpow *= q;
      }
      sum += a[m] * b[n] * (fact[m] * fact[n]) * gamma;
    }
  }
  return sum;
}

}  // namespace

Element make_exponential(Complex c, Variance q) { return Element::exponential(c, q); }

Element mul(const Element& f, const Element& g) {
  require_same_variance(f, g);
  const double q = f.q();
  std::vector<Term> out;
  out.reserve(f.terms().size() * g.terms().size());
  for (const auto& s : f.terms()) {
    for (const auto& t : g.terms()) {
      Coeffs coeffs = centred_product(s.coeffs, s.exponent, t.coeffs, t.exponent, q);
      const Complex scale = std::exp(s.exponent * t.exponent * q);
      for (auto& a : coeffs) a *= scale;
      out.push_back({s.exponent + t.exponent, std::move(coeffs)});
    }
  }
  return Element::from_terms(std::move(out), f.variance());
}

Element conjugate(const Element& f) {
  // H_n has real coefficients, so conj(H_n(x - c q)) = H_n(x - conj(c) q).
  return map_terms(f, [](const Term& t) {
    Coeffs c(t.coeffs.size());
    std::transform(t.coeffs.begin(), t.coeffs.end(), c.begin(), [](Complex a) { return std::conj(a); });
    return Term{std::conj(t.exponent), std::move(c)};
  });
}

Complex gaussian_expectation(std::span<const Complex> poly, Complex a, Variance q) {
  if (!is_finite(a)) throw InvalidInput("non-finite exponent");
  const double v = q.value();
  const Complex mean = a * v;
  Complex prev{1.0};
  Complex cur = mean;
  Complex sum{};
  for (std::size_t k = 0; k < poly.size(); ++k) {
    if (k == 0) {
      sum += poly[0] * prev;
    } else if (k == 1) {
      sum += poly[1] * cur;
    } else {
      const Complex next = mean * cur + static_cast<double>(k - 1) * v * prev;
      prev = cur;
      cur = next;
      sum += poly[k] * cur;
    }
  }
  return sum;
}

Complex expectation(const Element& f) {
  // E[H_n(X - c q) E_c] = delta_{n0}: under the tilt by E_c, X - c q ~ N(0, q).
  Complex sum{};
  for (const auto& t : f.terms()) sum += t.coeffs.front();
  return sum;
}

Complex inner_product(const Element& f, const Element& g) {
  require_same_variance(f, g);
  const double q = f.q();
  Complex sum{};
  for (const auto& s : f.terms()) {
    for (const auto& t : g.terms()) {
      Coeffs conj_b(t.coeffs.size());
      std::transform(t.coeffs.begin(), t.coeffs.end(), conj_b.begin(), [](Complex a) { return std::conj(a); });
      const Complex d = std::conj(t.exponent);
      sum += std::exp(s.exponent * d * q) * centred_pairing(s.coeffs, s.exponent, conj_b, d, q);
    }
  }
  return sum;
}

double norm(const Element& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

Element apply_X(const Element& f) {
  // x H_n(y) = H_{n+1}(y) + c q H_n(y) + n q H_{n-1}(y), y = x - c q.
  const double q = f.q();
  return map_terms(f, [q](const Term& t) {
    const auto& a = t.coeffs;
    const Complex cq = t.exponent * q;
    Coeffs out(a.size() + 1, Complex{});
    for (std::size_t n = 0; n < a.size(); ++n) {
      out[n + 1] += a[n];
      out[n] += cq * a[n];
      if (n > 0) out[n - 1] += static_cast<double>(n) * q * a[n];
    }
    return Term{t.exponent, std::move(out)};
  });
}

Element apply_D(const Element& f) {
  // q d/dx [H_n(y) E_c] = n q H_{n-1}(y) E_c + c q H_n(y) E_c.
  const double q = f.q();
  return map_terms(f, [q](const Term& t) {
    const auto& a = t.coeffs;
    const Complex cq = t.exponent * q;
    Coeffs out(a.size(), Complex{});
    for (std::size_t n = 0; n < a.size(); ++n) {
      out[n] += cq * a[n];
      if (n > 0) out[n - 1] += static_cast<double>(n) * q * a[n];
    }
    return Term{t.exponent, std::move(out)};
  });
}

Element apply_D_star(const Element& f) {
  return map_terms(f, [](const Term& t) {
    Coeffs out(t.coeffs.size() + 1, Complex{});
    std::copy(t.coeffs.begin(), t.coeffs.end(), out.begin() + 1);
    return Term{t.exponent, std::move(out)};
  });
}

Element apply_G(const Element& f) {
  return map_terms(f, [](const Term& t) {
    Coeffs out(t.coeffs.size());
    for (std::size_t n = 0; n < out.size(); ++n) {
      Complex a = t.coeffs[n];
      for (std::size_t r = 0; r < n % 4; ++r) a = rotate_minus_i(a);
      out[n] = a;
    }
    return Term{rotate_minus_i(t.exponent), std::move(out)};
  });
}

Element apply_G_generating(const Element& f) {
  // With u = 2 c q - i x, G(x^n E_c) = P_n(x) E_{-ic} where
  // P_0 = 1, P_1 = u, P_{n+1} = u P_n + 2 n q P_{n-1}.
  const double q = f.q();
  std::vector<Element::MonomialTerm> out;
  for (const auto& term : f.monomial_terms()) {
    const Coeffs& p = term.poly;
    const Complex u0 = 2.0 * term.exponent * q;
    const Complex u1 = -kI;
    Coeffs result(p.size(), Complex{});
    Coeffs prev;
    Coeffs cur{Complex{1.0}};
    for (std::size_t n = 0; n < p.size(); ++n) {
      for (std::size_t i = 0; i < cur.size(); ++i) result[i] += p[n] * cur[i];
      Coeffs next(cur.size() + 1, Complex{});
      for (std::size_t i = 0; i < cur.size(); ++i) {
        next[i] += u0 * cur[i];
        next[i + 1] += u1 * cur[i];
      }
      for (std::size_t i = 0; i < prev.size(); ++i) next[i] += 2.0 * static_cast<double>(n) * q * prev[i];
      prev = std::move(cur);
      cur = std::move(next);
    }
    out.push_back({rotate_minus_i(term.exponent), std::move(result)});
  }
  return Element::from_monomial_terms(out, f.variance());
}

HermiteExpansion to_hermite(const Element& f) {
  if (!f.is_polynomial()) {
    throw UnsupportedInput("to_hermite needs a pure polynomial element (exponent 0)");
  }
  if (f.is_zero()) return HermiteExpansion(f.variance(), {});
  return HermiteExpansion(f.variance(), f.terms().front().coeffs);
}

Element from_hermite(const HermiteExpansion& h) {
  return Element::from_terms({Term{Complex{}, h.coeffs()}}, h.variance());
}

std::string_view to_string(Commutator which) noexcept {
  switch (which) {
    case Commutator::DX:
      return "DX";
    case Commutator::DDstar:
      return "DDstar";
    case Commutator::DG:
      return "DG";
    case Commutator::DstarG:
      return "DstarG";
  }
  return "?";
}

std::optional<Commutator> parse_commutator(std::string_view name) noexcept {
  for (auto c : kAllCommutators) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

namespace {

std::pair<Element, Element> commutator_sides(Commutator which, const Element& f) {
  const Complex q{f.q()};
  switch (which) {
    case Commutator::DX:
      return {apply_D(apply_X(f)), apply_X(apply_D(f)) + q * f};
    case Commutator::DDstar:
      return {apply_D(apply_D_star(f)), apply_D_star(apply_D(f)) + q * f};
    case Commutator::DG:
      return {apply_D(apply_G(f)), -kI * apply_G(apply_D(f))};
    case Commutator::DstarG:
      return {apply_D_star(apply_G(f)), kI * apply_G(apply_D_star(f))};
  }
  throw InvalidInput("unknown commutator");
}

}  // namespace

Element commutator_residual(Commutator which, const Element& f) {
  auto [lhs, rhs] = commutator_sides(which, f);
  return lhs - rhs;
}

double commutator_relative_residual(Commutator which, const Element& f) {
  const auto [lhs, rhs] = commutator_sides(which, f);
  return relative_difference(lhs, rhs);
}

}  // namespace expmart::algebra
