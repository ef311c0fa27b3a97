#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace expmart::processes {

/// 0 = t_0 < t_1 < ... < t_M = T, M >= 1.
class TimeGrid {
 public:
  explicit TimeGrid(std::vector<double> points);

  static TimeGrid uniform(double horizon, std::size_t steps);

  std::span<const double> points() const noexcept { return points_; }
  double operator[](std::size_t k) const noexcept { return points_[k]; }
  std::size_t steps() const noexcept { return points_.size() - 1; }
  double horizon() const noexcept { return points_.back(); }
  double max_step() const noexcept;

  /// Index of t on the grid (exact match within 1e-12 * T), if any.
  std::optional<std::size_t> index_of(double t) const noexcept;

  /// The grid with every interval split at its midpoint.
  TimeGrid refined() const;

 private:
  std::vector<double> points_;
};

}  // namespace expmart::processes
