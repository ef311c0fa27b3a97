#include "expmart/verify/estimate.hpp"

#include <cmath>
#include <vector>

#include "expmart/errors.hpp"

namespace expmart::verify {

namespace {

constexpr std::size_t kBlock = 64;

template <class T>
T cascade(std::span<const T> v) {
  if (v.size() <= kBlock) {
    T s{};
    for (const auto& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return cascade(v.first(half)) + cascade(v.subspan(half));
}

void require_samples(std::size_t n) {
  if (n < 2) throw InvalidInput("an estimate needs at least two samples");
}

}  // namespace

double pairwise_sum(std::span<const double> values) { return cascade(values); }
Complex pairwise_sum(std::span<const Complex> values) { return cascade(values); }

Estimate estimate_mean(std::span<const Complex> samples) {
  require_samples(samples.size());
  const double n = static_cast<double>(samples.size());
  const Complex mean = pairwise_sum(samples) / n;
  std::vector<double> dev(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) dev[i] = std::norm(samples[i] - mean);
  const double var = pairwise_sum(dev) / (n - 1.0);
  return {mean, std::sqrt(var / n), samples.size()};
}

Estimate estimate_mean(std::span<const double> samples) {
  require_samples(samples.size());
  const double n = static_cast<double>(samples.size());
  const double mean = pairwise_sum(samples) / n;
  std::vector<double> dev(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) dev[i] = (samples[i] - mean) * (samples[i] - mean);
  const double var = pairwise_sum(dev) / (n - 1.0);
  return {Complex{mean}, std::sqrt(var / n), samples.size()};
}

ProductRoot product_root(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw InvalidInput("paired samples differ in length");
  require_samples(a.size());
  const double n = static_cast<double>(a.size());
  const double ma = pairwise_sum(a) / n;
  const double mb = pairwise_sum(b) / n;
  std::vector<double> vaa(a.size()), vbb(a.size()), vab(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    vaa[i] = (a[i] - ma) * (a[i] - ma);
    vbb[i] = (b[i] - mb) * (b[i] - mb);
    vab[i] = (a[i] - ma) * (b[i] - mb);
  }
  const double saa = pairwise_sum(vaa) / (n - 1.0);
  const double sbb = pairwise_sum(vbb) / (n - 1.0);
  const double sab = pairwise_sum(vab) / (n - 1.0);

  const double value = std::sqrt(std::max(0.0, ma * mb));
  if (value == 0.0) return {0.0, 0.0};
  // d sqrt(AB)/dA = B / (2 sqrt(AB)), symmetric in B.
  const double ga = mb / (2.0 * value);
  const double gb = ma / (2.0 * value);
  const double var = (ga * ga * saa + gb * gb * sbb + 2.0 * ga * gb * sab) / n;
  return {value, std::sqrt(std::max(0.0, var))};
}

}  // namespace expmart::verify
