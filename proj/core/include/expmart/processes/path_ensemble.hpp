#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "expmart/processes/time_change.hpp"
#include "expmart/processes/time_grid.hpp"

namespace expmart::processes {

/// Name of the random stream construction, recorded in reports.
std::string_view rng_algorithm() noexcept;

/// N simulated paths of X_t = B_{h(t)} on a grid, stored row-major
/// (row = path). Column 0 is identically zero.
class PathEnsemble {
 public:
  const TimeGrid& grid() const noexcept { return grid_; }
  const TimeChange& time_change() const noexcept { return h_; }
  std::uint64_t seed() const noexcept { return seed_; }
  std::size_t n_paths() const noexcept { return n_paths_; }
  std::size_t n_points() const noexcept { return grid_.points().size(); }

  std::span<const double> path(std::size_t i) const noexcept {
    return {values_.data() + i * n_points(), n_points()};
  }
  double at(std::size_t path, std::size_t k) const noexcept { return values_[path * n_points() + k]; }

  /// Quadratic variation h(t_k) at grid index k.
  double variance_at(std::size_t k) const noexcept { return qv_[k]; }

  /// One row per path, comma separated, full precision.
  void write_csv(std::ostream& os) const;

 private:
  friend PathEnsemble generate(const TimeChange&, const TimeGrid&, std::size_t, std::uint64_t,
                               unsigned);

  PathEnsemble(TimeChange h, TimeGrid grid, std::size_t n_paths, std::uint64_t seed);

  TimeChange h_;
  TimeGrid grid_;
  std::size_t n_paths_;
  std::uint64_t seed_;
  std::vector<double> qv_;
  std::vector<double> values_;
};

/// Increments over [t_k, t_{k+1}] are N(0, h(t_{k+1}) - h(t_k)). Path i
/// draws from a stream derived only from (seed, i), so the result does not
/// depend on `workers`.
PathEnsemble generate(const TimeChange& h, const TimeGrid& grid, std::size_t n_paths,
                      std::uint64_t seed, unsigned workers = 1);

}  // namespace expmart::processes
