#include "expmart/processes/time_grid.hpp"

#include <cmath>

#include "expmart/errors.hpp"

namespace expmart::processes {

TimeGrid::TimeGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw InvalidInput("time grid needs at least one step");
  if (points_.front() != 0.0) throw InvalidInput("time grid must start at 0");
  for (std::size_t k = 0; k + 1 < points_.size(); ++k) {
    if (!std::isfinite(points_[k + 1]) || !(points_[k + 1] > points_[k])) {
      throw InvalidInput("time grid must be strictly increasing and finite");
    }
  }
}

TimeGrid TimeGrid::uniform(double horizon, std::size_t steps) {
  if (!(horizon > 0.0) || !std::isfinite(horizon)) throw InvalidInput("horizon must be positive");
  if (steps == 0) throw InvalidInput("grid needs at least one step");
  std::vector<double> p(steps + 1);
  for (std::size_t k = 0; k <= steps; ++k) {
    p[k] = horizon * static_cast<double>(k) / static_cast<double>(steps);
  }
  p.back() = horizon;
  return TimeGrid(std::move(p));
}

double TimeGrid::max_step() const noexcept {
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < points_.size(); ++k) m = std::max(m, points_[k + 1] - points_[k]);
  return m;
}

std::optional<std::size_t> TimeGrid::index_of(double t) const noexcept {
  const double tol = 1e-12 * horizon();
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (std::abs(points_[k] - t) <= tol) return k;
  }
  return std::nullopt;
}

TimeGrid TimeGrid::refined() const {
  std::vector<double> p;
  p.reserve(2 * points_.size() - 1);
  for (std::size_t k = 0; k + 1 < points_.size(); ++k) {
    p.push_back(points_[k]);
    p.push_back(0.5 * (points_[k] + points_[k + 1]));
  }
  p.push_back(points_.back());
  return TimeGrid(std::move(p));
}

}  // namespace expmart::processes
