#include "expmart/processes/time_change.hpp"

#include <algorithm>
#include <cmath>

#include "expmart/algebra/text_format.hpp"
#include "expmart/errors.hpp"

namespace expmart::processes {

using algebra::format_double;

TimeChange::TimeChange(Kind kind, double horizon, double alpha, std::vector<Knot> knots)
    : kind_(kind), horizon_(horizon), alpha_(alpha), knots_(std::move(knots)) {
  if (!std::isfinite(horizon_) || !(horizon_ > 0.0)) throw InvalidInput("horizon must be positive");
}

TimeChange TimeChange::identity(double horizon) { return {Kind::identity, horizon, 1.0, {}}; }

TimeChange TimeChange::power(double alpha, double horizon) {
  if (!std::isfinite(alpha) || !(alpha > 0.0)) throw InvalidTimeChange("power time change needs alpha > 0");
  return {Kind::power, horizon, alpha, {}};
}

TimeChange TimeChange::piecewise_linear(std::vector<Knot> knots) {
  if (knots.size() < 2) throw InvalidTimeChange("piecewise-linear time change needs two knots");
  if (knots.front().first != 0.0 || knots.front().second != 0.0) {
    throw InvalidTimeChange("piecewise-linear time change must start at (0, 0)");
  }
  for (std::size_t k = 0; k < knots.size(); ++k) {
    if (!std::isfinite(knots[k].first) || !std::isfinite(knots[k].second)) {
      throw InvalidTimeChange("non-finite knot");
    }
    if (k > 0 && !(knots[k].first > knots[k - 1].first)) {
      throw InvalidTimeChange("knot times must be strictly increasing");
    }
  }
  const double horizon = knots.back().first;
  return {Kind::piecewise_linear, horizon, 1.0, std::move(knots)};
}

double TimeChange::operator()(double t) const {
  if (!(t >= 0.0) || t > horizon_ * (1.0 + 1e-12)) {
    throw RangeError("time " + format_double(t) + " outside [0, " + format_double(horizon_) + "]");
  }
  t = std::min(t, horizon_);
  switch (kind_) {
    case Kind::identity:
      return t;
    case Kind::power:
      return std::pow(t, alpha_);
    case Kind::piecewise_linear: {
      auto it = std::upper_bound(knots_.begin(), knots_.end(), t,
                                 [](double v, const Knot& k) { return v < k.first; });
      if (it == knots_.end()) return knots_.back().second;
      const auto& [t1, h1] = *it;
      const auto& [t0, h0] = *(it - 1);
      return h0 + (h1 - h0) * (t - t0) / (t1 - t0);
    }
  }
  return 0.0;
}

std::string TimeChange::describe() const {
  switch (kind_) {
    case Kind::identity:
      return "identity";
    case Kind::power:
      return "power(" + format_double(alpha_) + ")";
    case Kind::piecewise_linear: {
      std::string s = "piecewise-linear(";
      for (std::size_t k = 0; k < knots_.size(); ++k) {
        if (k) s += ',';
        s += format_double(knots_[k].first) + ":" + format_double(knots_[k].second);
      }
      return s + ")";
    }
  }
  return "?";
}

void TimeChange::validate_on(const TimeGrid& grid) const {
  if (grid.horizon() > horizon_ * (1.0 + 1e-12)) {
    throw InvalidTimeChange("grid extends past the time-change horizon");
  }
  double prev = (*this)(grid[0]);
  if (prev != 0.0) throw InvalidTimeChange("h(0) must be 0");
  for (std::size_t k = 1; k < grid.points().size(); ++k) {
    const double cur = (*this)(grid[k]);
    if (cur < prev) {
      throw InvalidTimeChange("time change decreases between t = " + format_double(grid[k - 1]) +
                              " and t = " + format_double(grid[k]));
    }
    prev = cur;
  }
}

algebra::Variance quadratic_variation_at(const TimeChange& h, double t) {
  return algebra::Variance(h(t));
}

}  // namespace expmart::processes
