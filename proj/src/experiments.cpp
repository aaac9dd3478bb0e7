#include "hypwalk/experiments.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "hypwalk/errors.hpp"
#include "hypwalk/format.hpp"
#include "hypwalk/geometry.hpp"
#include "hypwalk/parallel.hpp"

namespace hypwalk {

namespace {

void validate(const ExperimentConfig& cfg) {
  if (cfg.k < 1) throw UsageError("need k >= 1");
  if (cfg.trials < 1) throw UsageError("need at least one trial");
  if (cfg.n_grid.empty()) throw UsageError("empty n grid");
  for (std::size_t i = 1; i < cfg.n_grid.size(); ++i)
    if (cfg.n_grid[i] <= cfg.n_grid[i - 1])
      throw UsageError("n grid must be strictly increasing");
  if (cfg.n_grid.front() < 1) throw UsageError("n must be >= 1");
}

double binomial_std_error(int successes, int trials) {
  const double p = static_cast<double>(successes) / trials;
  return std::sqrt(p * (1.0 - p) / trials);
}

}  // namespace

std::uint64_t curve_trial_seed(std::uint64_t master_seed, int n, long trial) {
  return child_seed(child_seed(master_seed, static_cast<std::uint64_t>(n)),
                    static_cast<std::uint64_t>(trial));
}

CurveTrial run_curve_trial(const ExperimentConfig& cfg, int n, long trial) {
  CurveTrial out;
  out.tuple = sample_generator_tuple(cfg.mu, n, cfg.k,
                                     curve_trial_seed(cfg.master_seed, n, trial));
  for (const auto& g : out.tuple.elements)
    if (is_identity(g)) return out;  // failure without a report
  out.result = criterion_check(out.tuple.elements, cfg.space, cfg.space.delta());
  out.success = certified(*out.result);
  return out;
}

std::vector<CurveRow> probability_curve(const ExperimentConfig& cfg) {
  validate(cfg);
  std::vector<CurveRow> rows;
  rows.reserve(cfg.n_grid.size());
  for (int n : cfg.n_grid) {
    std::vector<char> success(cfg.trials, 0);
    parallel_for(cfg.trials, cfg.threads,
                 [&](long t) { success[t] = run_curve_trial(cfg, n, t).success; });
    CurveRow row;
    row.n = n;
    row.trials = cfg.trials;
    for (char s : success) row.successes += s;
    row.p_hat = static_cast<double>(row.successes) / row.trials;
    row.std_error = binomial_std_error(row.successes, row.trials);
    rows.push_back(row);
  }
  return rows;
}

std::vector<TailRow> gromov_tail_stats(const ExperimentConfig& cfg,
                                       const std::function<int(int)>& l_schedule) {
  validate(cfg);
  static const char* kCases[5] = {"pp", "pm", "mp", "mm", "self_inverse"};
  std::vector<TailRow> rows;
  for (int n : cfg.n_grid) {
    const double bound = static_cast<double>(l_schedule(n));
    std::vector<std::array<char, 5>> hits(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](long t) {
      const std::uint64_t seed = curve_trial_seed(cfg.master_seed, n, t);
      const GroupElement w = walk_endpoint(cfg.mu, n, child_seed(seed, 0));
      const GroupElement u = walk_endpoint(cfg.mu, n, child_seed(seed, 1));
      const SpacePoint x0 = cfg.space.basepoint();
      const SpacePoint wp = cfg.space.apply(w, x0);
      const SpacePoint wm = cfg.space.apply(invert(w), x0);
      const SpacePoint up = cfg.space.apply(u, x0);
      const SpacePoint um = cfg.space.apply(invert(u), x0);
      const SpacePoint* pairs[5][2] = {
          {&wp, &up}, {&wp, &um}, {&wm, &up}, {&wm, &um}, {&wp, &wm}};
      for (int c = 0; c < 5; ++c)
        hits[t][c] =
            gromov_product(*pairs[c][0], *pairs[c][1], x0, cfg.space) <= bound;
    });
    for (int c = 0; c < 5; ++c) {
      TailRow row;
      row.n = n;
      row.tail_case = kCases[c];
      row.trials = cfg.trials;
      for (const auto& h : hits) row.successes += h[c];
      row.p_hat = static_cast<double>(row.successes) / row.trials;
      row.std_error = binomial_std_error(row.successes, row.trials);
      rows.push_back(row);
    }
  }
  return rows;
}

int default_l_schedule(int n, double drift_estimate) {
  if (!(drift_estimate > 0.0)) throw UsageError("drift estimate must be positive");
  if (n < 1) throw UsageError("need n >= 1");
  const double cap = std::floor(drift_estimate * n / 4.0);
  const double root = std::floor(std::sqrt(static_cast<double>(n)));
  return static_cast<int>(std::max(1.0, std::min(root, cap)));
}

std::vector<DecayRow> shadow_decay_curve(const ExperimentConfig& cfg, int n,
                                         const std::vector<int>& r_grid,
                                         int num_shadows, int num_samples) {
  if (n < 1) throw UsageError("need n >= 1");
  if (num_shadows < 1 || num_samples < 1)
    throw UsageError("need at least one shadow and one sample");
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (r_grid[i] <= 0) throw UsageError("r grid must be positive");
    if (i > 0 && r_grid[i] <= r_grid[i - 1])
      throw UsageError("r grid must be strictly increasing");
  }
  const SpacePoint x0 = cfg.space.basepoint();
  std::vector<DecayRow> rows;
  for (int r : r_grid) {
    const std::uint64_t seed_r = child_seed(cfg.master_seed, static_cast<std::uint64_t>(r));
    const std::uint64_t centers_seed = child_seed(seed_r, 0);
    const std::uint64_t samples_seed = child_seed(seed_r, 1);

    std::vector<SpacePoint> pool(num_samples, x0);
    parallel_for(num_samples, cfg.threads, [&](long t) {
      pool[t] = cfg.space.apply(walk_endpoint(cfg.mu, n, child_seed(samples_seed, t)), x0);
    });

    std::vector<double> mass(num_shadows, 0.0);
    parallel_for(num_shadows, cfg.threads, [&](long s) {
      const GroupElement g = walk_endpoint(cfg.mu, n, child_seed(centers_seed, s));
      const SpacePoint center = cfg.space.apply(g, x0);
      ShadowSpec shadow{x0, center, cfg.space.distance(x0, center) - r};
      if (shadow.radius_offset < 0.0) return;  // empty shadow, mass 0
      int hits = 0;
      for (const auto& y : pool) hits += in_shadow(y, shadow, cfg.space);
      mass[s] = static_cast<double>(hits) / num_samples;
    });

    DecayRow row;
    row.r = r;
    row.shadows = num_shadows;
    row.samples = num_samples;
    for (double m : mass) row.f_hat = std::max(row.f_hat, m);
    rows.push_back(row);
  }
  return rows;
}

std::string curve_csv(const std::vector<CurveRow>& rows) {
  std::ostringstream out;
  out << "n,trials,successes,p_hat,stderr\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.trials << ',' << r.successes << ','
        << format_double(r.p_hat) << ',' << format_double(r.std_error) << '\n';
  return out.str();
}

std::string tails_csv(const std::vector<TailRow>& rows) {
  std::ostringstream out;
  out << "n,case,trials,successes,p_hat,stderr\n";
  for (const auto& r : rows)
    out << r.n << ',' << r.tail_case << ',' << r.trials << ',' << r.successes
        << ',' << format_double(r.p_hat) << ',' << format_double(r.std_error)
        << '\n';
  return out.str();
}

std::string decay_csv(const std::vector<DecayRow>& rows) {
  std::ostringstream out;
  out << "r,shadows,samples,f_hat\n";
  for (const auto& r : rows)
    out << r.r << ',' << r.shadows << ',' << r.samples << ','
        << format_double(r.f_hat) << '\n';
  return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw UsageError("failed writing '" + path + "'");
}

}  // namespace hypwalk
