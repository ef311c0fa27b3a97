#pragma once

#include <algorithm>
#include <complex>
#include <optional>
#include <span>
#include <string_view>

#include "expmart/algebra/element.hpp"
#include "expmart/algebra/hermite.hpp"

namespace expmart::algebra {

Element make_exponential(Complex c, Variance q);

/// Exact product. E_c E_d = exp(c d q) E_{c+d}; polynomial factors are
/// re-expanded about the combined tilted mean.
Element mul(const Element& f, const Element& g);

Element conjugate(const Element& f);

/// E[p(X) exp(aX - a^2 q/2)] for X ~ N(0, q), via the tilted moments
/// m_0 = 1, m_1 = a q, m_k = a q m_{k-1} + (k-1) q m_{k-2}.
Complex gaussian_expectation(std::span<const Complex> poly, Complex a, Variance q);

Complex expectation(const Element& f);

/// <f, g> = E[f conj(g)]. Equals expectation(mul(f, conjugate(g))) but skips
/// the intermediate canonical drop.
Complex inner_product(const Element& f, const Element& g);

/// sqrt(<f, f>).
double norm(const Element& f);

/// <E_{c,s}, E_{d,t}> = exp(c conj(d) h(min(s, t))). `h` is any callable
/// time -> quadratic variation.
template <class TimeChangeFn>
Complex cross_time_inner_product(Complex c, double s, Complex d, double t,
                                 const TimeChangeFn& h) {
  return std::exp(c * std::conj(d) * h(std::min(s, t)));
}

/// Multiplication by X_t.
Element apply_X(const Element& f);

/// D = q d/dx on p(x) E_c, so D E_c = c q E_c.
Element apply_D(const Element& f);

/// D* = X - D. Raises the centred Hermite degree by one.
Element apply_D_star(const Element& f);

/// The unitary G, G E_c = E_{-ic}. Acts as (-i)^n on the centred Hermite
/// coefficients and rotates the exponent.
Element apply_G(const Element& f);

/// G computed from the monomial form by differentiating the exponential
/// family in its parameter:
///     G(x^n E_c) = d^n/dr^n exp(r^2 q/2 + r c q) E_{-i(r+c)} |_{r=0}.
/// Independent of apply_G; kept as a cross-check.
Element apply_G_generating(const Element& f);

/// Requires a pure polynomial element; UnsupportedInput otherwise.
HermiteExpansion to_hermite(const Element& f);
Element from_hermite(const HermiteExpansion& h);

enum class Commutator { DX, DDstar, DG, DstarG };

inline constexpr Commutator kAllCommutators[] = {Commutator::DX, Commutator::DDstar,
                                                 Commutator::DG, Commutator::DstarG};

std::string_view to_string(Commutator which) noexcept;
std::optional<Commutator> parse_commutator(std::string_view name) noexcept;

/// (LHS - RHS) f for
///   DX:     [D, X]  = q I
///   DDstar: [D, D*] = q I
///   DG:     D G  = -i G D
///   DstarG: D* G =  i G D*
/// canonicalized against the operand scale; the zero element when the
/// relations hold to 1e-12.
Element commutator_residual(Commutator which, const Element& f);

/// Largest residual coefficient relative to the largest LHS/RHS coefficient.
double commutator_relative_residual(Commutator which, const Element& f);

}  // namespace expmart::algebra
