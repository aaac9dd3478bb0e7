#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypwalk/certifier.hpp"
#include "hypwalk/measure.hpp"
#include "hypwalk/model_space.hpp"
#include "hypwalk/walk.hpp"

namespace hypwalk {

/// Shared knobs for the Monte Carlo experiments. Every run is a pure
/// function of this struct; trials get seeds derived from
/// (master_seed, n, trial), so results never depend on the worker count.
struct ExperimentConfig {
  ModelSpace space;
  Measure mu;
  int k = 2;
  std::vector<int> n_grid;
  int trials = 100;
  std::uint64_t master_seed = 0;
  int threads = 1;
};

struct CurveRow {
  int n = 0;
  int trials = 0;
  int successes = 0;
  double p_hat = 0.0;
  double std_error = 0.0;  // sqrt(p(1-p)/trials)
};

std::uint64_t curve_trial_seed(std::uint64_t master_seed, int n, long trial);

struct CurveTrial {
  GeneratorTuple tuple;
  bool success = false;
  /// Empty when a sampled generator was the identity (counted as failure
  /// without invoking the criterion).
  std::optional<CertifyResult> result;
};

/// One trial of the certification experiment, re-derivable from seeds.
CurveTrial run_curve_trial(const ExperimentConfig& cfg, int n, long trial);

/// Empirical probability that the criterion certifies the subgroup
/// generated by the n-th steps of k independent walks, for each n.
std::vector<CurveRow> probability_curve(const ExperimentConfig& cfg);

struct TailRow {
  int n = 0;
  std::string tail_case;  // pp, pm, mp, mm, self_inverse
  int trials = 0;
  int successes = 0;
  double p_hat = 0.0;
  double std_error = 0.0;
};

/// Estimates P[(w_n^s x0 . u_n^t x0)_{x0} <= l(n)] for independent walks
/// (four sign cases) and P[(w_n x0 . w_n^-1 x0)_{x0} <= l(n)].
std::vector<TailRow> gromov_tail_stats(const ExperimentConfig& cfg,
                                       const std::function<int(int)>& l_schedule);

/// max(1, min(floor(sqrt n), floor(L_hat n / 4))): grows without bound but
/// stays below half the drift for large n.
int default_l_schedule(int n, double drift_estimate);

struct DecayRow {
  int r = 0;
  int shadows = 0;
  int samples = 0;
  double f_hat = 0.0;
};

/// For each r: samples shadows S_{x0}(g x0, d(x0,gx0) - r) with g an
/// independent n-step walk (distance parameter exactly r), estimates
/// mu_n(S) with fresh walk endpoints, and reports the max over shadows.
std::vector<DecayRow> shadow_decay_curve(const ExperimentConfig& cfg, int n,
                                         const std::vector<int>& r_grid,
                                         int num_shadows, int num_samples);

std::string curve_csv(const std::vector<CurveRow>& rows);
std::string tails_csv(const std::vector<TailRow>& rows);
std::string decay_csv(const std::vector<DecayRow>& rows);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace hypwalk
