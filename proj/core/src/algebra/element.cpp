#include "expmart/algebra/element.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "expmart/errors.hpp"

namespace expmart::algebra {

namespace {

bool same_exponent(Complex a, Complex b) noexcept {
  return std::abs(a.real() - b.real()) <= kCanonicalTolerance &&
         std::abs(a.imag() - b.imag()) <= kCanonicalTolerance;
}

void add_into(Coeffs& dst, const Coeffs& src, Complex factor = 1.0) {
  if (dst.size() < src.size()) dst.resize(src.size(), Complex{});
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] += factor * src[i];
}

double max_abs(std::span<const Element::Term> terms) noexcept {
  double m = 0.0;
  for (const auto& t : terms) {
    for (const auto& a : t.coeffs) m = std::max(m, std::abs(a));
  }
  return m;
}

// Merge terms whose exponents agree to the canonical tolerance. The first
// exponent seen is kept.
std::vector<Element::Term> merge_terms(std::vector<Element::Term> terms) {
  std::vector<Element::Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const Element::Term& m) { return same_exponent(m.exponent, t.exponent); });
    if (it == merged.end()) {
      merged.push_back(std::move(t));
    } else {
      add_into(it->coeffs, t.coeffs);
    }
  }
  return merged;
}

}  // namespace

Element Element::exponential(Complex c, Variance q) {
  return from_terms({Term{c, Coeffs{Complex{1.0}}}}, q);
}

Element Element::constant(Complex value, Variance q) {
  return from_terms({Term{Complex{}, Coeffs{value}}}, q);
}

Element Element::monomial_term(Complex c, std::span<const Complex> poly, Variance q) {
  if (!is_finite(c)) throw InvalidInput("non-finite exponent");
  for (const auto& a : poly) {
    if (!is_finite(a)) throw InvalidInput("non-finite polynomial coefficient");
  }
  // p(x) = p(y + c q) with y = x - c q, then expand in H_n(y; q).
  const Coeffs shifted = taylor_shift(poly, c * q.value());
  return from_terms({Term{c, monomial_to_hermite(shifted, q.value())}}, q);
}

Element Element::from_monomial_terms(std::span<const MonomialTerm> terms, Variance q) {
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    Element e = monomial_term(t.exponent, t.poly, q);
    for (auto& term : e.terms_) out.push_back(std::move(term));
  }
  return from_terms(std::move(out), q);
}

Element Element::from_terms(std::vector<Term> terms, Variance q, double scale) {
  Element e(q, std::move(terms));
  e.canonicalize(scale);
  return e;
}

void Element::canonicalize(double scale) {
  for (const auto& t : terms_) {
    if (!is_finite(t.exponent)) throw InvalidInput("non-finite exponent");
    for (const auto& a : t.coeffs) {
      if (!is_finite(a)) throw InvalidInput("non-finite coefficient");
    }
  }
  terms_ = merge_terms(std::move(terms_));

  const double threshold = kCanonicalTolerance * std::max(scale, max_abs(terms_));
  for (auto& t : terms_) {
    for (auto& a : t.coeffs) {
      if (std::abs(a) < threshold) a = Complex{};
    }
    trim_trailing_zeros(t.coeffs);
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeffs.empty(); });
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    if (a.exponent.real() != b.exponent.real()) return a.exponent.real() < b.exponent.real();
    return a.exponent.imag() < b.exponent.imag();
  });
}

bool Element::is_polynomial() const noexcept {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && same_exponent(terms_.front().exponent, Complex{});
}

std::size_t Element::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.coeffs.size() - 1);
  return d;
}

double Element::max_coefficient() const noexcept { return max_abs(terms_); }

Coeffs Element::monomial(const Term& term) const {
  const Coeffs in_y = hermite_to_monomial(term.coeffs, q());
  Coeffs out = taylor_shift(in_y, -term.exponent * q());
  trim_trailing_zeros(out);
  return out;
}

std::vector<Element::MonomialTerm> Element::monomial_terms() const {
  std::vector<MonomialTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.exponent, monomial(t)});
  return out;
}

Element& Element::operator+=(const Element& other) {
  require_same_variance(*this, other);
  const double scale = std::max(max_coefficient(), other.max_coefficient());
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  canonicalize(scale);
  return *this;
}

Element& Element::operator-=(const Element& other) {
  require_same_variance(*this, other);
  const double scale = std::max(max_coefficient(), other.max_coefficient());
  for (const auto& t : other.terms_) {
    Coeffs negated(t.coeffs.size());
    std::transform(t.coeffs.begin(), t.coeffs.end(), negated.begin(), [](Complex a) { return -a; });
    terms_.push_back({t.exponent, std::move(negated)});
  }
  canonicalize(scale);
  return *this;
}

Element& Element::operator*=(Complex factor) {
  if (!is_finite(factor)) throw InvalidInput("non-finite scalar");
  for (auto& t : terms_) {
    for (auto& a : t.coeffs) a *= factor;
  }
  canonicalize(0.0);
  return *this;
}

void require_same_variance(const Element& a, const Element& b) {
  if (a.variance() != b.variance()) {
    throw ContractViolation("elements live at different quadratic variations");
  }
}

double relative_difference(const Element& a, const Element& b) {
  require_same_variance(a, b);
  const double scale = std::max(a.max_coefficient(), b.max_coefficient());
  if (scale == 0.0) return 0.0;
  std::vector<Element::Term> diff(a.terms().begin(), a.terms().end());
  for (const auto& t : b.terms()) {
    Coeffs negated(t.coeffs.size());
    std::transform(t.coeffs.begin(), t.coeffs.end(), negated.begin(), [](Complex x) { return -x; });
    diff.push_back({t.exponent, std::move(negated)});
  }
  return max_abs(merge_terms(std::move(diff))) / scale;
}

}  // namespace expmart::algebra
