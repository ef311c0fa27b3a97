#include "expmart/verify/process_element.hpp"

#include <algorithm>
#include <cmath>

#include "expmart/algebra/operators.hpp"
#include "expmart/algebra/text_format.hpp"
#include "expmart/errors.hpp"

namespace expmart::verify {

using algebra::Element;
using algebra::format_double;
using algebra::Variance;

CenteringFunction CenteringFunction::constant(double value) {
  if (!std::isfinite(value)) throw InvalidInput("centring must be finite");
  return CenteringFunction(Kind::constant, value, {});
}

CenteringFunction CenteringFunction::piecewise_linear(std::vector<Knot> knots) {
  if (knots.empty()) throw InvalidInput("piecewise-linear centring needs knots");
  for (std::size_t k = 0; k < knots.size(); ++k) {
    if (!std::isfinite(knots[k].first) || !std::isfinite(knots[k].second)) {
      throw InvalidInput("centring knots must be finite");
    }
    if (k > 0 && !(knots[k].first > knots[k - 1].first)) {
      throw InvalidInput("centring knot times must be strictly increasing");
    }
  }
  return CenteringFunction(Kind::piecewise_linear, 0.0, std::move(knots));
}

double CenteringFunction::operator()(double t) const {
  switch (kind_) {
    case Kind::zero:
      return 0.0;
    case Kind::constant:
      return value_;
    case Kind::piecewise_linear: {
      if (t <= knots_.front().first) return knots_.front().second;
      if (t >= knots_.back().first) return knots_.back().second;
      auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                 [](double v, const Knot& k) { return v < k.first; });
      const auto& [t1, v1] = *it;
      const auto& [t0, v0] = *(it - 1);
      return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
    }
  }
  return 0.0;
}

std::string CenteringFunction::describe() const {
  switch (kind_) {
    case Kind::zero:
      return "zero";
    case Kind::constant:
      return "constant:" + format_double(value_);
    case Kind::piecewise_linear: {
      std::string s = "piecewise-linear:";
      for (std::size_t k = 0; k < knots_.size(); ++k) {
        if (k) s += ',';
        s += format_double(knots_[k].first) + ":" + format_double(knots_[k].second);
      }
      return s;
    }
  }
  return "?";
}

ProcessElement ProcessElement::from_template(std::vector<Element::MonomialTerm> terms) {
  std::string desc;
  for (const auto& t : terms) {
    if (!desc.empty()) desc += "; ";
    desc += format_double(t.exponent.real()) + " " + format_double(t.exponent.imag());
    for (const auto& a : t.poly) desc += " " + format_double(a.real()) + " " + format_double(a.imag());
  }
  if (desc.empty()) desc = "0";
  return ProcessElement(
      [terms = std::move(terms)](double, Variance q) { return Element::from_monomial_terms(terms, q); },
      std::move(desc));
}

ProcessElement ProcessElement::constant(algebra::Complex value) {
  return from_template({Element::MonomialTerm{{}, {value}}});
}

Element ProcessElement::at(double t, Variance q) const {
  Element e = rule_(t, q);
  if (e.variance() != q) {
    throw ContractViolation("process rule returned an element at the wrong quadratic variation");
  }
  return e;
}

Element ProcessElement::at(double t, const processes::TimeChange& h) const {
  return at(t, processes::quadratic_variation_at(h, t));
}

ProcessElement ProcessElement::centred(CenteringFunction g) const {
  auto base = *this;
  std::string desc = "(X - " + g.describe() + ") * [" + description_ + "]";
  return ProcessElement(
      [base = std::move(base), g = std::move(g)](double t, Variance q) {
        const Element y = base.at(t, q);
        return algebra::apply_X(y) - algebra::Complex{g(t)} * y;
      },
      std::move(desc));
}

ProcessElement ProcessElement::transformed() const {
  auto base = *this;
  std::string desc = "G[" + description_ + "]";
  return ProcessElement([base = std::move(base)](double t, Variance q) { return algebra::apply_G(base.at(t, q)); },
                        std::move(desc));
}

}  // namespace expmart::verify
