#include "hypwalk/walk.hpp"

#include <cmath>

#include "hypwalk/errors.hpp"
#include "hypwalk/parallel.hpp"

namespace hypwalk {

SamplePath sample_path(const Measure& mu, int n, std::uint64_t seed) {
  if (n < 0) throw UsageError("walk length must be nonnegative");
  SamplePath path;
  path.seed = seed;
  path.increments.reserve(n);
  path.positions.reserve(n);
  Rng rng(seed);
  GroupElement position;
  bool started = false;
  for (int i = 0; i < n; ++i) {
    const GroupElement& g = mu.sample(rng);
    path.increments.push_back(g);
    position = started ? multiply(position, g) : g;
    started = true;
    path.positions.push_back(position);
  }
  return path;
}

GroupElement walk_endpoint(const Measure& mu, int n, std::uint64_t seed) {
  if (n < 0) throw UsageError("walk length must be nonnegative");
  Rng rng(seed);
  if (n == 0) {
    // Identity in whichever group the measure lives on.
    const GroupElement& probe = mu.entries().front().first;
    return multiply(probe, invert(probe));
  }
  // Words multiply in place to keep long walks linear-time.
  if (std::holds_alternative<FreeWord>(mu.entries().front().first)) {
    FreeWord w;
    for (int i = 0; i < n; ++i) w *= std::get<FreeWord>(mu.sample(rng));
    return w;
  }
  Moebius m;
  for (int i = 0; i < n; ++i) m = m * std::get<Moebius>(mu.sample(rng));
  return m;
}

GeneratorTuple sample_generator_tuple(const Measure& mu, int n, int k,
                                      std::uint64_t master_seed) {
  if (k < 1) throw UsageError("need k >= 1 walks");
  if (n < 1) throw UsageError("need n >= 1 steps");
  GeneratorTuple tuple;
  tuple.n = n;
  tuple.elements.reserve(k);
  tuple.seeds.reserve(k);
  for (int j = 0; j < k; ++j) {
    const std::uint64_t seed = child_seed(master_seed, j);
    tuple.seeds.push_back(seed);
    tuple.elements.push_back(walk_endpoint(mu, n, seed));
  }
  return tuple;
}

Distribution exact_distribution(const Measure& mu, int n) {
  if (n < 1) throw UsageError("convolution order must be >= 1");
  double combinations = 1.0;
  for (int i = 0; i < n; ++i) combinations *= static_cast<double>(mu.support_size());
  if (combinations > 1e7)
    throw BudgetError("|support|^n exceeds the 10^7 convolution budget");

  Distribution table;
  for (const auto& [g, p] : mu.entries()) table[g] += p;
  for (int step = 1; step < n; ++step) {
    Distribution next;
    for (const auto& [x, px] : table)
      for (const auto& [g, pg] : mu.entries()) next[multiply(x, g)] += px * pg;
    table = std::move(next);
  }
  return table;
}

bool inverse_step_distribution_check(const Measure& mu, int n) {
  const Distribution forward = exact_distribution(mu, n);
  const Distribution reflected_n = exact_distribution(mu.reflected(), n);
  Distribution inverted;
  for (const auto& [x, p] : forward) inverted[invert(x)] += p;
  if (inverted.size() != reflected_n.size()) return false;
  for (const auto& [x, p] : inverted) {
    const auto it = reflected_n.find(x);
    if (it == reflected_n.end() || std::abs(it->second - p) > 1e-9) return false;
  }
  return true;
}

DriftEstimate estimate_drift(const Measure& mu, const ModelSpace& space, int n,
                             int trials, std::uint64_t master_seed, int threads) {
  if (n < 1) throw UsageError("need n >= 1");
  if (trials < 1) throw UsageError("need at least one trial");
  std::vector<double> normalized(trials);
  parallel_for(trials, threads, [&](long t) {
    const GroupElement w = walk_endpoint(mu, n, child_seed(master_seed, t));
    normalized[t] = space.displacement(w) / static_cast<double>(n);
  });
  double mean = 0.0;
  for (double v : normalized) mean += v;
  mean /= trials;
  double ss = 0.0;
  for (double v : normalized) ss += (v - mean) * (v - mean);
  const double std_error =
      trials > 1 ? std::sqrt(ss / (trials - 1.0) / trials) : 0.0;
  return {mean, std_error, n, trials};
}

}  // namespace hypwalk
