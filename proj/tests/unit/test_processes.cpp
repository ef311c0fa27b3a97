#include <cmath>
#include <numeric>
#include <sstream>

#include "expmart/errors.hpp"
#include "expmart/processes/path_ensemble.hpp"
#include "expmart/verify/estimate.hpp"
#include "helpers.hpp"

using namespace expmart;
using namespace expmart::processes;

namespace {

// Shared 1e6-path ensemble on {0, 1}.
const PathEnsemble& big_ensemble() {
  static const PathEnsemble ens =
      generate(TimeChange::identity(1.0), TimeGrid({0.0, 1.0}), 1'000'000, 314159);
  return ens;
}

}  // namespace

TEST_SUITE("processes") {

TEST_CASE("time grid") {
  const auto g = TimeGrid::uniform(2.0, 4);
  CHECK(g.steps() == 4);
  CHECK(g.horizon() == 2.0);
  CHECK(g.max_step() == doctest::Approx(0.5));
  CHECK(g.index_of(1.0) == std::optional<std::size_t>{2});
  CHECK_FALSE(g.index_of(0.75).has_value());
  CHECK(g.refined().steps() == 8);
  CHECK(g.refined()[1] == doctest::Approx(0.25));

  CHECK_THROWS_AS(TimeGrid({0.0}), InvalidInput);
  CHECK_THROWS_AS(TimeGrid({0.1, 1.0}), InvalidInput);
  CHECK_THROWS_AS(TimeGrid({0.0, 1.0, 1.0}), InvalidInput);
  CHECK_THROWS_AS(TimeGrid::uniform(-1.0, 4), InvalidInput);
}

TEST_CASE("time changes") {
  CHECK(quadratic_variation_at(TimeChange::identity(1.0), 0.5).value() == 0.5);
  CHECK(quadratic_variation_at(TimeChange::power(2.0, 3.0), 3.0).value() == doctest::Approx(9.0));
  CHECK(quadratic_variation_at(TimeChange::piecewise_linear({{0.0, 0.0}, {1.0, 2.0}}), 0.5).value() ==
        doctest::Approx(1.0));

  CHECK_THROWS_AS(TimeChange::identity(1.0)(1.5), RangeError);
  CHECK_THROWS_AS(TimeChange::identity(1.0)(-0.1), RangeError);
  CHECK_THROWS_AS(quadratic_variation_at(TimeChange::identity(1.0), 2.0), RangeError);
  CHECK_THROWS_AS(TimeChange::power(0.0, 1.0), InvalidTimeChange);
  CHECK_THROWS_AS(TimeChange::piecewise_linear({{0.0, 1.0}, {1.0, 2.0}}), InvalidTimeChange);

  CHECK(TimeChange::identity(1.0).describe() == "identity");
  CHECK(TimeChange::power(2.0, 1.0).describe() == "power(2)");
  CHECK(TimeChange::piecewise_linear({{0.0, 0.0}, {1.0, 2.0}}).describe() == "piecewise-linear(0:0,1:2)");

  const auto decreasing = TimeChange::piecewise_linear({{0.0, 0.0}, {0.5, 1.0}, {1.0, 0.5}});
  CHECK_THROWS_AS(decreasing.validate_on(TimeGrid::uniform(1.0, 4)), InvalidTimeChange);
  CHECK_THROWS_AS(generate(decreasing, TimeGrid::uniform(1.0, 4), 10, 1), InvalidTimeChange);
  CHECK_THROWS_AS(TimeChange::identity(1.0).validate_on(TimeGrid::uniform(2.0, 4)), InvalidTimeChange);
}

TEST_CASE("ensemble structure and reproducibility") {
  const auto h = TimeChange::power(1.5, 2.0);
  const auto grid = TimeGrid::uniform(2.0, 16);
  const auto a = generate(h, grid, 257, 99, 1);
  const auto b = generate(h, grid, 257, 99, 4);
  const auto c = generate(h, grid, 257, 100, 1);
  CHECK(a.n_paths() == 257);
  CHECK(a.n_points() == 17);
  bool identical = true, differs = false, zero_start = true;
  for (std::size_t i = 0; i < a.n_paths(); ++i) {
    zero_start = zero_start && a.at(i, 0) == 0.0;
    for (std::size_t k = 0; k < a.n_points(); ++k) {
      identical = identical && a.at(i, k) == b.at(i, k);
      differs = differs || a.at(i, k) != c.at(i, k);
    }
  }
  CHECK(zero_start);
  CHECK(identical);
  CHECK(differs);
  CHECK(a.variance_at(16) == doctest::Approx(std::pow(2.0, 1.5)));

  // A path depends only on (seed, index), not on how many paths were drawn.
  const auto fewer = generate(h, grid, 10, 99, 1);
  for (std::size_t k = 0; k < grid.points().size(); ++k) CHECK(fewer.at(9, k) == a.at(9, k));

  std::ostringstream os;
  fewer.write_csv(os);
  const std::string text = os.str();
  CHECK(std::count(text.begin(), text.end(), '\n') == 10);

  CHECK(!std::string(rng_algorithm()).empty());
}

TEST_CASE("zero quadratic variation gives zero paths") {
  const auto h = TimeChange::piecewise_linear({{0.0, 0.0}, {1.0, 0.0}});
  const auto ens = generate(h, TimeGrid::uniform(1.0, 8), 50, 3);
  double max_abs = 0.0;
  for (std::size_t i = 0; i < ens.n_paths(); ++i) {
    for (double x : ens.path(i)) max_abs = std::max(max_abs, std::abs(x));
  }
  CHECK(max_abs == 0.0);
}

TEST_CASE("X_1 mean and variance over 1e6 paths") {
  const auto& ens = big_ensemble();
  std::vector<double> x(ens.n_paths()), x2(ens.n_paths());
  for (std::size_t i = 0; i < ens.n_paths(); ++i) {
    x[i] = ens.at(i, 1);
    x2[i] = x[i] * x[i];
  }
  const auto m = verify::estimate_mean(std::span<const double>(x));
  CHECK(std::abs(m.mean.real()) <= 4e-3);
  // Sample second moment against h(1) = 1 with its own standard error.
  const auto v = verify::estimate_mean(std::span<const double>(x2));
  CHECK(std::abs(v.mean.real() - 1.0) <= 4.0 * v.std_error);
}

TEST_CASE("martingale increments and realized quadratic variation") {
  const auto h = TimeChange::power(2.0, 1.0);
  const auto grid = TimeGrid::uniform(1.0, 64);
  const auto ens = generate(h, grid, 20000, 2718);
  const std::size_t s = 20, t = 50;

  std::vector<double> cov(ens.n_paths()), qv(ens.n_paths());
  for (std::size_t i = 0; i < ens.n_paths(); ++i) {
    cov[i] = (ens.at(i, t) - ens.at(i, s)) * ens.at(i, s);
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < ens.n_points(); ++k) sum += std::pow(ens.at(i, k + 1) - ens.at(i, k), 2);
    qv[i] = sum;
  }
  const auto c = verify::estimate_mean(std::span<const double>(cov));
  CHECK(std::abs(c.mean.real()) <= 4.0 * c.std_error);
  const auto r = verify::estimate_mean(std::span<const double>(qv));
  CHECK(std::abs(r.mean.real() - 1.0) <= 4.0 * r.std_error);
}

}  // TEST_SUITE
