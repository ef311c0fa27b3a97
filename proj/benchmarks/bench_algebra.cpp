#include <benchmark/benchmark.h>

#include <vector>

#include "expmart/algebra/operators.hpp"
#include "expmart/algebra/random_element.hpp"

namespace {

using expmart::algebra::Element;
using expmart::algebra::ElementSampler;
using expmart::algebra::Variance;

std::vector<Element> sample(std::size_t n, std::uint64_t seed) {
  ElementSampler sampler(seed);
  std::vector<Element> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sampler.draw(Variance(1.0)));
  return out;
}

void BM_Mul(benchmark::State& state) {
  const auto a = sample(64, 1), b = sample(64, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expmart::algebra::mul(a[i % 64], b[i % 64]));
    ++i;
  }
}
BENCHMARK(BM_Mul);

void BM_ApplyG(benchmark::State& state) {
  const auto a = sample(64, 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(expmart::algebra::apply_G(a[i++ % 64]));
}
BENCHMARK(BM_ApplyG);

void BM_InnerProduct(benchmark::State& state) {
  const auto a = sample(64, 4), b = sample(64, 5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expmart::algebra::inner_product(a[i % 64], b[i % 64]));
    ++i;
  }
}
BENCHMARK(BM_InnerProduct);

}  // namespace
