#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "expmart/algebra/hermite.hpp"
#include "expmart/algebra/scalar.hpp"

namespace expmart::algebra {

/// The random variable sum_k p_k(X_t) E_{c_k,t} at a fixed q = <X>_t, where
/// E_{c,t} = exp(c X_t - c^2 q / 2).
///
/// Each term keeps its polynomial factor in the Hermite basis centred at the
/// term's tilted mean,
///
///     p_k(x) = sum_n a_n H_n(x - c_k q; q),
///
/// because G, D* and conjugation act coefficient-wise there and are exact in
/// floating point. monomial_terms() gives the power-of-x view.
///
/// Canonical form: exponents pairwise distinct (merged when both components
/// agree to 1e-12), terms ordered by (re, im) of the exponent, coefficients
/// below 1e-12 of the largest one dropped, no trailing zeros, no empty terms.
class Element {
 public:
  struct Term {
    Complex exponent;
    Coeffs coeffs;  // centred Hermite coefficients, index = Hermite degree
  };

  struct MonomialTerm {
    Complex exponent;
    Coeffs poly;  // index = power of x
  };

  /// The zero element.
  explicit Element(Variance q) : q_(q) {}

  static Element exponential(Complex c, Variance q);
  static Element constant(Complex value, Variance q);
  /// p(x) E_c.
  static Element monomial_term(Complex c, std::span<const Complex> poly, Variance q);
  static Element from_monomial_terms(std::span<const MonomialTerm> terms, Variance q);
  /// Canonicalizes. `scale` raises the drop threshold to 1e-12 * scale when
  /// the coefficients came out of a cancellation between larger operands.
  static Element from_terms(std::vector<Term> terms, Variance q, double scale = 0.0);

  Variance variance() const noexcept { return q_; }
  double q() const noexcept { return q_.value(); }
  std::span<const Term> terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Zero, or a single term with exponent 0.
  bool is_polynomial() const noexcept;
  std::size_t degree() const noexcept;
  double max_coefficient() const noexcept;

  Coeffs monomial(const Term& term) const;
  std::vector<MonomialTerm> monomial_terms() const;

  Element& operator+=(const Element& other);
  Element& operator-=(const Element& other);
  Element& operator*=(Complex factor);

  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Complex s, Element a) { return a *= s; }
  friend Element operator*(Element a, Complex s) { return a *= s; }
  friend Element operator-(Element a) { return a *= Complex{-1.0, 0.0}; }

 private:
  Element(Variance q, std::vector<Term> terms) : q_(q), terms_(std::move(terms)) {}

  void canonicalize(double scale);

  Variance q_;
  std::vector<Term> terms_;
};

/// Throws ContractViolation unless a and b share q.
void require_same_variance(const Element& a, const Element& b);

/// Largest coefficient of a - b (centred basis, exponents matched with the
/// canonical tolerance) divided by the largest coefficient of a and b.
/// Returns 0 when both are zero.
double relative_difference(const Element& a, const Element& b);

inline bool approx_equal(const Element& a, const Element& b,
                         double rel = kCanonicalTolerance) {
  return relative_difference(a, b) <= rel;
}

}  // namespace expmart::algebra
