#include <benchmark/benchmark.h>

#include "expmart/processes/path_ensemble.hpp"
#include "expmart/verify/stochastic.hpp"

namespace {

namespace ep = expmart::processes;
namespace ev = expmart::verify;

void BM_Generate(benchmark::State& state) {
  const auto h = ep::TimeChange::identity(1.0);
  const auto grid = ep::TimeGrid::uniform(1.0, 512);
  const auto paths = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ep::generate(h, grid, paths, 7));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Generate)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_ItoIntegral(benchmark::State& state) {
  const auto h = ep::TimeChange::identity(1.0);
  const auto grid = ep::TimeGrid::uniform(1.0, 512);
  const auto ens = ep::generate(h, grid, static_cast<std::size_t>(state.range(0)), 7);
  const auto z = ev::ProcessElement::from_template({{0.5, {1.0, 1.0}}});
  for (auto _ : state) benchmark::DoNotOptimize(ev::ito_integral(z, ens));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ItoIntegral)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
