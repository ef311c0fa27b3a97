#include "expmart/processes/path_ensemble.hpp"

#include <cmath>
#include <ostream>
#include <random>

#include "expmart/algebra/text_format.hpp"
#include "expmart/errors.hpp"
#include "expmart/parallel.hpp"

namespace expmart::processes {

std::string_view rng_algorithm() noexcept {
  return "mt19937_64 per path, seeded by seed_seq{seed, path}; std::normal_distribution";
}

namespace {

std::mt19937_64 path_engine(std::uint64_t seed, std::uint64_t path) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(path), static_cast<std::uint32_t>(path >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

PathEnsemble::PathEnsemble(TimeChange h, TimeGrid grid, std::size_t n_paths, std::uint64_t seed)
    : h_(std::move(h)), grid_(std::move(grid)), n_paths_(n_paths), seed_(seed) {
  qv_.reserve(grid_.points().size());
  for (double t : grid_.points()) qv_.push_back(h_(t));
}

void PathEnsemble::write_csv(std::ostream& os) const {
  for (std::size_t i = 0; i < n_paths_; ++i) {
    const auto p = path(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) os << ',';
      os << algebra::format_double(p[k]);
    }
    os << '\n';
  }
}

PathEnsemble generate(const TimeChange& h, const TimeGrid& grid, std::size_t n_paths,
                      std::uint64_t seed, unsigned workers) {
  if (n_paths == 0) throw InvalidInput("ensemble needs at least one path");
  h.validate_on(grid);
  PathEnsemble ens(h, grid, n_paths, seed);

  const std::size_t m = ens.n_points();
  std::vector<double> sd(m - 1);
  for (std::size_t k = 0; k + 1 < m; ++k) sd[k] = std::sqrt(ens.qv_[k + 1] - ens.qv_[k]);

  ens.values_.assign(n_paths * m, 0.0);
  parallel_for(n_paths, workers, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      auto engine = path_engine(seed, i);
      std::normal_distribution<double> normal;
      double* row = ens.values_.data() + i * m;
      double x = 0.0;
      for (std::size_t k = 0; k + 1 < m; ++k) {
        x += sd[k] * normal(engine);
        row[k + 1] = x;
      }
    }
  });
  return ens;
}

}  // namespace expmart::processes
