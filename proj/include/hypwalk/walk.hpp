#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hypwalk/measure.hpp"
#include "hypwalk/model_space.hpp"

namespace hypwalk {

/// One sample path: i.i.d. increments g_1..g_n and the partial products
/// w_i = g_1 ... g_i.
struct SamplePath {
  std::vector<GroupElement> increments;
  std::vector<GroupElement> positions;
  std::uint64_t seed = 0;
};

SamplePath sample_path(const Measure& mu, int n, std::uint64_t seed);

/// Just w_n, without materializing the path.
GroupElement walk_endpoint(const Measure& mu, int n, std::uint64_t seed);

/// The n-th steps of k independent walks; walk j uses child_seed(master, j).
struct GeneratorTuple {
  int n = 0;
  std::vector<GroupElement> elements;
  std::vector<std::uint64_t> seeds;
};

GeneratorTuple sample_generator_tuple(const Measure& mu, int n, int k,
                                      std::uint64_t master_seed);

using Distribution = std::map<GroupElement, double, ElementLess>;

/// Exact n-fold convolution of mu. Guarded by |support|^n <= 10^7.
Distribution exact_distribution(const Measure& mu, int n);

/// Verifies that the inverse of the n-th step is distributed as the n-fold
/// convolution of the reflected measure (pointwise within 1e-9).
bool inverse_step_distribution_check(const Measure& mu, int n);

struct DriftEstimate {
  double l_hat = 0.0;
  double std_error = 0.0;
  int n = 0;
  int trials = 0;
};

/// Mean of d(x0, w_n x0)/n over independent trials; trial t uses
/// child_seed(master_seed, t).
DriftEstimate estimate_drift(const Measure& mu, const ModelSpace& space, int n,
                             int trials, std::uint64_t master_seed, int threads = 1);

}  // namespace hypwalk
