#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "expmart/algebra/element.hpp"
#include "expmart/processes/time_change.hpp"

namespace expmart::verify {

/// Real centring g(t) on [0, T]: zero, a constant, or linear interpolation
/// between knots (held flat outside them).
class CenteringFunction {
 public:
  enum class Kind { zero, constant, piecewise_linear };
  using Knot = std::pair<double, double>;

  static CenteringFunction zero() { return CenteringFunction(Kind::zero, 0.0, {}); }
  static CenteringFunction constant(double value);
  static CenteringFunction piecewise_linear(std::vector<Knot> knots);

  double operator()(double t) const;
  Kind kind() const noexcept { return kind_; }
  std::string describe() const;

 private:
  CenteringFunction(Kind kind, double value, std::vector<Knot> knots)
      : kind_(kind), value_(value), knots_(std::move(knots)) {}

  Kind kind_;
  double value_;
  std::vector<Knot> knots_;
};

/// A process Y_t given as a rule t -> element at q = h(t).
class ProcessElement {
 public:
  using Rule = std::function<algebra::Element(double t, algebra::Variance q)>;

  ProcessElement(Rule rule, std::string description)
      : rule_(std::move(rule)), description_(std::move(description)) {}

  /// p(X_t) E_{c,t} summed over the given terms, coefficients constant in t.
  static ProcessElement from_template(std::vector<algebra::Element::MonomialTerm> terms);
  static ProcessElement constant(algebra::Complex value);
  static ProcessElement zero() { return constant(0.0); }

  /// Throws ContractViolation if the rule returns an element at another q.
  algebra::Element at(double t, algebra::Variance q) const;
  algebra::Element at(double t, const processes::TimeChange& h) const;

  const std::string& description() const noexcept { return description_; }

  /// (X_t - g(t)) Y_t.
  ProcessElement centred(CenteringFunction g) const;
  /// G Y_t.
  ProcessElement transformed() const;

 private:
  Rule rule_;
  std::string description_;
};

}  // namespace expmart::verify
