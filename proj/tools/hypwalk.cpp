// hypwalk: certify free subgroups of isometry groups via Gromov-product
// inequalities, run random-walk experiments, and plot the results.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hypwalk/certifier.hpp"
#include "hypwalk/csv.hpp"
#include "hypwalk/errors.hpp"
#include "hypwalk/experiments.hpp"
#include "hypwalk/format.hpp"
#include "hypwalk/geometry.hpp"
#include "hypwalk/measure.hpp"
#include "hypwalk/model_space.hpp"
#include "hypwalk/parallel.hpp"
#include "hypwalk/svg.hpp"
#include "hypwalk/walk.hpp"

namespace {

using namespace hypwalk;

struct SpaceOpts {
  std::string space;  // "tree" or "plane"
  int rank = 2;
  double delta = 0.0;
  bool delta_auto = false;
  long delta_quadruples = 100000;
  double delta_radius = 20.0;
  double delta_safety = 1.5;
  std::uint64_t delta_seed = 1;
};

void add_space_flags(CLI::App* sub, SpaceOpts* opts, bool with_delta) {
  sub->add_option("--space", opts->space, "Model space: tree or plane")
      ->required()
      ->check(CLI::IsMember({"tree", "plane"}));
  sub->add_option("--rank", opts->rank, "Free-group rank for the tree model")
      ->capture_default_str();
  if (with_delta) {
    sub->add_option("--delta", opts->delta,
                    "Hyperbolicity constant (0 is exact for the tree)")
        ->capture_default_str();
    sub->add_flag("--delta-auto", opts->delta_auto,
                  "Estimate delta by quadruple sampling (plane)");
    sub->add_option("--delta-quadruples", opts->delta_quadruples,
                    "Quadruples for --delta-auto")
        ->capture_default_str();
    sub->add_option("--delta-radius", opts->delta_radius,
                    "Sampling ball radius for --delta-auto")
        ->capture_default_str();
    sub->add_option("--delta-safety", opts->delta_safety,
                    "Safety factor applied to the estimated delta")
        ->capture_default_str();
    sub->add_option("--delta-seed", opts->delta_seed, "Seed for --delta-auto")
        ->capture_default_str();
  }
}

ModelSpace make_space(const SpaceOpts& opts) {
  if (opts.space == "tree") {
    ModelSpace space = ModelSpace::tree(opts.rank);
    if (opts.delta != 0.0) space.set_delta(opts.delta);
    return space;
  }
  ModelSpace space = ModelSpace::plane(opts.delta);
  if (opts.delta_auto) {
    const auto est = estimate_delta(
        space, make_ball_sampler(space, opts.delta_radius, opts.delta_seed),
        opts.delta_quadruples, opts.delta_safety);
    space.set_delta(est.delta_used);
    std::cerr << "estimated delta_hat " << format_double(est.delta_hat)
              << ", using delta " << format_double(est.delta_used) << "\n";
  }
  return space;
}

Measure make_measure(const ModelSpace& space, const std::string& measure_path) {
  Measure mu = [&] {
    if (!measure_path.empty()) return Measure::load(measure_path, space);
    if (space.is_tree()) return Measure::uniform_symmetric(space.rank());
    throw UsageError("plane runs need --measure (no default matrix measure)");
  }();
  if (mu.possibly_elementary())
    std::cerr << "warning: measure support has fewer than 2 elements; it "
                 "cannot be nonelementary and the limit theorems do not apply\n";
  return mu;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw UsageError("bad integer '" + tok + "' in list");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_file(out_path, text);
}

int run_certify(const SpaceOpts& sopts, const std::string& generators_path,
                const std::string& out_path, int bruteforce_len) {
  const ModelSpace space = make_space(sopts);
  const auto generators = space.load_generators(generators_path);
  const CertifyResult result = criterion_check(generators, space, space.delta());
  std::string text = to_text(result, space);
  if (certified(result) && bruteforce_len > 0) {
    const auto report = verify_certificate_bruteforce(
        generators, space, std::get<Certificate>(result), bruteforce_len);
    text += "bruteforce_max_len: " + std::to_string(report.max_len) + "\n";
    text += "bruteforce_words: " + std::to_string(report.words_checked) + "\n";
    text += "bruteforce_points: " + std::to_string(report.points_checked) + "\n";
    text += "bruteforce: ok\n";
  }
  emit(text, out_path);
  if (!out_path.empty())
    std::cout << (certified(result) ? "certified\n" : "not certified\n");
  return certified(result) ? 0 : 2;
}

int run_walk(const SpaceOpts& sopts, const std::string& measure_path, int n,
             std::uint64_t seed, bool print_positions) {
  const ModelSpace space = make_space(sopts);
  const Measure mu = make_measure(space, measure_path);
  const SamplePath path = sample_path(mu, n, seed);
  const GroupElement end = n > 0 ? path.positions.back() : space.identity();
  const double disp = space.displacement(end);
  std::cout << "n: " << n << "\n";
  std::cout << "seed: " << seed << "\n";
  std::cout << "element: " << element_str(end) << "\n";
  std::cout << "displacement: " << format_double(disp) << "\n";
  if (n > 0)
    std::cout << "normalized_displacement: " << format_double(disp / n) << "\n";
  if (print_positions)
    for (int i = 0; i < n; ++i)
      std::cout << "position." << (i + 1) << ": "
                << element_str(path.positions[i]) << "\n";
  return 0;
}

int run_drift(const SpaceOpts& sopts, const std::string& measure_path, int n,
              int trials, std::uint64_t seed, int threads) {
  const ModelSpace space = make_space(sopts);
  const Measure mu = make_measure(space, measure_path);
  const auto est = estimate_drift(mu, space, n, trials, seed, resolve_threads(threads));
  std::cout << "n: " << est.n << "\n";
  std::cout << "trials: " << est.trials << "\n";
  std::cout << "l_hat: " << format_double(est.l_hat) << "\n";
  std::cout << "stderr: " << format_double(est.std_error) << "\n";
  return 0;
}

int run_delta(const SpaceOpts& sopts, long quadruples, double radius,
              double safety, std::uint64_t seed) {
  const ModelSpace space = make_space(sopts);
  const auto est = estimate_delta(space, make_ball_sampler(space, radius, seed),
                                  quadruples, safety);
  std::cout << "quadruples: " << est.quadruples_sampled << "\n";
  std::cout << "delta_hat: " << format_double(est.delta_hat) << "\n";
  std::cout << "safety_factor: " << format_double(est.safety_factor) << "\n";
  std::cout << "delta_used: " << format_double(est.delta_used) << "\n";
  return 0;
}

int run_curve(const SpaceOpts& sopts, const std::string& measure_path, int k,
              const std::string& n_list, int trials, std::uint64_t seed,
              int threads, const std::string& out_path) {
  const ModelSpace space = make_space(sopts);
  ExperimentConfig cfg{space,  make_measure(space, measure_path), k,
                       parse_int_list(n_list), trials, seed,
                       resolve_threads(threads)};
  emit(curve_csv(probability_curve(cfg)), out_path);
  return 0;
}

int run_tails(const SpaceOpts& sopts, const std::string& measure_path,
              const std::string& n_list, const std::string& l_text, int trials,
              std::uint64_t seed, int threads, const std::string& out_path) {
  const ModelSpace space = make_space(sopts);
  ExperimentConfig cfg{space,  make_measure(space, measure_path), 1,
                       parse_int_list(n_list), trials, seed,
                       resolve_threads(threads)};
  std::function<int(int)> schedule;
  if (l_text == "auto") {
    // Drift estimate on a derived stream; sized for a stable first digit.
    const auto est = estimate_drift(cfg.mu, space, 1000, 64,
                                    child_seed(seed, 0x7a115), cfg.threads);
    if (!(est.l_hat > 0.0))
      throw NumericError("drift estimate is not positive; pass --l explicitly");
    const double l_hat = est.l_hat;
    schedule = [l_hat](int n) { return default_l_schedule(n, l_hat); };
    std::cerr << "using l(n) = min(floor(sqrt n), floor(" << format_double(l_hat)
              << " n/4))\n";
  } else {
    const int fixed = std::stoi(l_text);
    if (fixed < 0) throw UsageError("--l must be nonnegative or 'auto'");
    schedule = [fixed](int) { return fixed; };
  }
  emit(tails_csv(gromov_tail_stats(cfg, schedule)), out_path);
  return 0;
}

int run_shadow_decay(const SpaceOpts& sopts, const std::string& measure_path,
                     int n, const std::string& r_list, int shadows, int samples,
                     std::uint64_t seed, int threads, const std::string& out_path) {
  const ModelSpace space = make_space(sopts);
  ExperimentConfig cfg{space, make_measure(space, measure_path), 1,
                       {n},   1,
                       seed,  resolve_threads(threads)};
  emit(decay_csv(shadow_decay_curve(cfg, n, parse_int_list(r_list), shadows, samples)),
       out_path);
  return 0;
}

int run_plot(const std::string& in_path, const std::string& out_path,
             const std::string& x_col, const std::string& y_col,
             const std::string& err_col) {
  const CsvTable table = CsvTable::load(in_path);
  const auto x = table.numeric_column(x_col);
  const auto y = table.numeric_column(y_col);
  std::optional<std::vector<double>> err;
  if (!err_col.empty()) err = table.numeric_column(err_col);
  write_text_file(out_path, render_line_chart(x, y, err, x_col, y_col));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-walk subgroup certification in hyperbolic model spaces"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read defaults from a key=value file");

  SpaceOpts sopts;
  std::string measure_path, generators_path, out_path, in_path;
  std::string n_list = "4,8,16,32,64,100", r_list = "5,10,15,20", l_text = "auto";
  std::string x_col = "n", y_col = "p_hat", err_col;
  int n = 100, trials = 1000, k = 2, threads = 0, bruteforce_len = 0;
  int shadows = 200, samples = 500;
  long quadruples = 100000;
  double radius = 20.0, safety = 1.5;
  std::uint64_t seed = 0;

  auto* certify = app.add_subcommand(
      "certify", "Check the quasi-isometric-embedding criterion for generators");
  add_space_flags(certify, &sopts, true);
  certify->add_option("--generators", generators_path, "Generator file, one element per line")
      ->required();
  certify->add_option("--out", out_path, "Write the certificate or failure report here");
  certify->add_option("--bruteforce", bruteforce_len,
                      "Also verify the certificate over words up to this length")
      ->capture_default_str();

  auto* walk = app.add_subcommand("walk", "Run one sample path");
  add_space_flags(walk, &sopts, false);
  walk->add_option("--measure", measure_path, "Measure file (default: uniform symmetric)");
  walk->add_option("--n", n, "Number of steps")->required();
  walk->add_option("--seed", seed, "RNG seed")->required();
  bool print_positions = false;
  walk->add_flag("--print-positions", print_positions, "Print every position");

  auto* drift = app.add_subcommand("drift", "Estimate the drift d(x0, w_n x0)/n");
  add_space_flags(drift, &sopts, false);
  drift->add_option("--measure", measure_path, "Measure file (default: uniform symmetric)");
  drift->add_option("--n", n, "Walk length")->capture_default_str();
  drift->add_option("--trials", trials, "Independent walks")->capture_default_str();
  drift->add_option("--seed", seed, "RNG seed")->required();
  drift->add_option("--threads", threads, "Worker threads (0 = auto)")
      ->capture_default_str();

  auto* delta = app.add_subcommand("delta", "Estimate the hyperbolicity constant");
  add_space_flags(delta, &sopts, false);
  delta->add_option("--quadruples", quadruples, "Sampled quadruples")->capture_default_str();
  delta->add_option("--radius", radius, "Sampling ball radius")->capture_default_str();
  delta->add_option("--safety", safety, "Safety factor for delta_used")->capture_default_str();
  delta->add_option("--seed", seed, "RNG seed")->required();

  auto* curve = app.add_subcommand(
      "curve", "Probability that k random walks generate a certified subgroup");
  add_space_flags(curve, &sopts, true);
  curve->add_option("--measure", measure_path, "Measure file (default: uniform symmetric)");
  curve->add_option("--k", k, "Number of independent walks")->capture_default_str();
  curve->add_option("--n", n_list, "Comma-separated step counts")->capture_default_str();
  curve->add_option("--trials", trials, "Trials per n")->capture_default_str();
  curve->add_option("--seed", seed, "RNG seed")->required();
  curve->add_option("--threads", threads, "Worker threads (0 = auto)")->capture_default_str();
  curve->add_option("--out", out_path, "CSV output path (default: stdout)");

  auto* tails = app.add_subcommand(
      "tails", "Tail estimates for Gromov products of independent and inverse walks");
  add_space_flags(tails, &sopts, true);
  tails->add_option("--measure", measure_path, "Measure file (default: uniform symmetric)");
  tails->add_option("--n", n_list, "Comma-separated step counts")->capture_default_str();
  tails->add_option("--l", l_text, "Product bound l(n): integer or 'auto'")
      ->capture_default_str();
  tails->add_option("--trials", trials, "Trials per n")->capture_default_str();
  tails->add_option("--seed", seed, "RNG seed")->required();
  tails->add_option("--threads", threads, "Worker threads (0 = auto)")->capture_default_str();
  tails->add_option("--out", out_path, "CSV output path (default: stdout)");

  auto* decay = app.add_subcommand(
      "shadow-decay", "Empirical max of mu_n over shadows with distance parameter r");
  add_space_flags(decay, &sopts, false);
  decay->add_option("--measure", measure_path, "Measure file (default: uniform symmetric)");
  decay->add_option("--n", n, "Walk length")->capture_default_str();
  decay->add_option("--r", r_list, "Comma-separated distance parameters")->capture_default_str();
  decay->add_option("--shadows", shadows, "Shadows sampled per r")->capture_default_str();
  decay->add_option("--samples", samples, "Walk samples per r")->capture_default_str();
  decay->add_option("--seed", seed, "RNG seed")->required();
  decay->add_option("--threads", threads, "Worker threads (0 = auto)")->capture_default_str();
  decay->add_option("--out", out_path, "CSV output path (default: stdout)");

  auto* plot = app.add_subcommand("plot", "Render a CSV column pair as an SVG line chart");
  plot->add_option("--in", in_path, "Input CSV")->required();
  plot->add_option("--out", out_path, "Output SVG")->required();
  plot->add_option("--x", x_col, "X column name")->capture_default_str();
  plot->add_option("--y", y_col, "Y column name")->capture_default_str();
  plot->add_option("--err", err_col, "Optional column with symmetric error bars");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(certify))
      return run_certify(sopts, generators_path, out_path, bruteforce_len);
    if (app.got_subcommand(walk))
      return run_walk(sopts, measure_path, n, seed, print_positions);
    if (app.got_subcommand(drift))
      return run_drift(sopts, measure_path, n, trials, seed, threads);
    if (app.got_subcommand(delta))
      return run_delta(sopts, quadruples, radius, safety, seed);
    if (app.got_subcommand(curve))
      return run_curve(sopts, measure_path, k, n_list, trials, seed, threads, out_path);
    if (app.got_subcommand(tails))
      return run_tails(sopts, measure_path, n_list, l_text, trials, seed, threads, out_path);
    if (app.got_subcommand(decay))
      return run_shadow_decay(sopts, measure_path, n, r_list, shadows, samples,
                              seed, threads, out_path);
    if (app.got_subcommand(plot))
      return run_plot(in_path, out_path, x_col, y_col, err_col);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
