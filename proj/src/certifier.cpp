#include "hypwalk/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypwalk/errors.hpp"
#include "hypwalk/format.hpp"
#include "hypwalk/tolerances.hpp"

namespace hypwalk {

namespace {

std::string symbol_str(const SignedSymbol& s) {
  return "g" + std::to_string(s.index + 1) + (s.sign > 0 ? "^+1" : "^-1");
}

void write_common(std::ostringstream& out, const std::vector<GroupElement>& gens,
                  const ModelSpace& space, double delta_used,
                  double min_displacement, double max_product, double margin) {
  out << "space: " << (space.is_tree() ? "tree" : "plane") << "\n";
  if (space.is_tree()) out << "rank: " << space.rank() << "\n";
  out << "k: " << gens.size() << "\n";
  out << "delta_used: " << format_double(delta_used) << "\n";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out << "generator." << (i + 1) << ": " << element_str(gens[i]) << "\n";
    out << "displacement." << (i + 1) << ": "
        << format_double(space.displacement(gens[i])) << "\n";
  }
  out << "min_displacement: " << format_double(min_displacement) << "\n";
  out << "max_product: " << format_double(max_product) << "\n";
  out << "margin: " << format_double(margin) << "\n";
}

}  // namespace

CertifyResult criterion_check(const std::vector<GroupElement>& generators,
                              const ModelSpace& space, double delta) {
  if (generators.empty()) throw UsageError("need at least one generator");
  if (!(delta >= 0.0)) throw UsageError("delta must be nonnegative");
  for (const auto& g : generators)
    if (is_identity(g)) throw UsageError("identity generator is never certified");

  const int k = static_cast<int>(generators.size());
  const SpacePoint x0 = space.basepoint();

  // Orbit points of the 2k signed symbols, symbol 2i = g_{i+1}, 2i+1 its
  // inverse.
  std::vector<SpacePoint> orbit(2 * k, x0);
  std::vector<SignedSymbol> symbols(2 * k);
  std::vector<double> displacement(k, 0.0);
  for (int i = 0; i < k; ++i) {
    orbit[2 * i] = space.apply(generators[i], x0);
    orbit[2 * i + 1] = space.apply(invert(generators[i]), x0);
    symbols[2 * i] = {i, +1};
    symbols[2 * i + 1] = {i, -1};
    displacement[i] = space.distance(x0, orbit[2 * i]);
  }
  const double min_displacement = *std::min_element(displacement.begin(), displacement.end());
  const double max_displacement = *std::max_element(displacement.begin(), displacement.end());

  const double rhs_const = 18.0 * delta + 1.0;
  double max_product = 0.0;
  std::vector<Violation> violations;
  for (int s = 0; s < 2 * k; ++s) {
    for (int t = s + 1; t < 2 * k; ++t) {
      // All pairs of distinct signed symbols; only a product of a point
      // with itself is excluded.
      const double prod = gromov_product(orbit[s], orbit[t], x0, space);
      max_product = std::max(max_product, prod);
      const double required = 2.0 * prod + rhs_const;
      for (int i = 0; i < k; ++i) {
        const bool ok = space.is_tree()
                            ? displacement[i] >= required
                            : displacement[i] > required + kMarginTol;
        if (!ok)
          violations.push_back(
              {i, displacement[i], symbols[s], symbols[t], prod, required});
      }
    }
  }

  const double margin = min_displacement - (2.0 * max_product + rhs_const);
  if (violations.empty()) {
    Certificate cert;
    cert.generators = generators;
    cert.delta_used = delta;
    cert.min_displacement = min_displacement;
    cert.max_product = max_product;
    cert.margin = margin;
    cert.lipschitz_constant = max_displacement;
    return cert;
  }
  FailureReport report;
  report.generators = generators;
  report.delta_used = delta;
  report.min_displacement = min_displacement;
  report.max_product = max_product;
  report.margin = margin;
  report.violations = std::move(violations);
  return report;
}

std::string to_text(const Certificate& cert, const ModelSpace& space) {
  std::ostringstream out;
  out << "kind: certificate\n";
  write_common(out, cert.generators, space, cert.delta_used,
               cert.min_displacement, cert.max_product, cert.margin);
  out << "lipschitz_constant: " << format_double(cert.lipschitz_constant) << "\n";
  out << "lower_bound: word_length <= orbit_displacement\n";
  out << "upper_bound: orbit_displacement <= " << format_double(cert.lipschitz_constant)
      << " * word_length\n";
  out << "free_of_rank_k: " << (cert.free_of_rank_k ? "true" : "false") << "\n";
  out << "undistorted: " << (cert.undistorted ? "true" : "false") << "\n";
  out << "qi_embedding: " << (cert.qi_embedding ? "true" : "false") << "\n";
  out << "purely_loxodromic: " << (cert.purely_loxodromic ? "true" : "false") << "\n";
  return out.str();
}

std::string to_text(const FailureReport& report, const ModelSpace& space) {
  std::ostringstream out;
  out << "kind: failure_report\n";
  write_common(out, report.generators, space, report.delta_used,
               report.min_displacement, report.max_product, report.margin);
  out << "max_power_tested: " << report.max_power_tested << "\n";
  out << "violations: " << report.violations.size() << "\n";
  for (std::size_t v = 0; v < report.violations.size(); ++v) {
    const Violation& viol = report.violations[v];
    const std::string key = "violation." + std::to_string(v + 1);
    out << key << ".generator: " << (viol.gen_index + 1) << "\n";
    out << key << ".displacement: " << format_double(viol.displacement) << "\n";
    out << key << ".pair: " << symbol_str(viol.first) << " " << symbol_str(viol.second)
        << "\n";
    out << key << ".product: " << format_double(viol.product) << "\n";
    out << key << ".required: " << format_double(viol.required) << "\n";
  }
  return out.str();
}

std::string to_text(const CertifyResult& result, const ModelSpace& space) {
  if (const auto* cert = std::get_if<Certificate>(&result)) return to_text(*cert, space);
  return to_text(std::get<FailureReport>(result), space);
}

namespace {

struct BruteforceState {
  const std::vector<GroupElement>* symbol_elem;  // 2k signed generators
  const ModelSpace* space;
  const Certificate* cert;
  int max_len = 0;
  std::vector<SpacePoint> chain;      // orbit chain of the current word
  std::vector<int> word;              // current symbol word
  GroupElement element;               // product of the current word
  std::vector<SpacePoint>* points;    // all orbit points, for distinctness
  long words = 0;
};

void bruteforce_dfs(BruteforceState& st) {
  const int depth = static_cast<int>(st.word.size());
  if (depth > 0) {
    ++st.words;
    const SpacePoint& x0 = st.chain.front();
    const SpacePoint& end = st.chain.back();
    const double d = st.space->distance(x0, end);
    const double m = static_cast<double>(depth);
    const double tol = st.space->is_tree() ? 0.0 : kGeomTol;
    if (!(m <= d + tol))
      throw CertificateRefuted(
          "word of length " + std::to_string(depth) + " has displacement " +
          format_double(d) + " < length; certificate refuted");
    if (!(d <= st.cert->lipschitz_constant * m + tol))
      throw CertificateRefuted("displacement " + format_double(d) +
                               " exceeds Lipschitz bound; certificate refuted");
    if (depth >= 2) {
      const std::size_t i = st.chain.size() - 2;
      const double d_prev = st.space->distance(st.chain[i - 1], st.chain[i]);
      const double d_next = st.space->distance(st.chain[i], st.chain[i + 1]);
      const double prod =
          gromov_product(st.chain[i - 1], st.chain[i + 1], st.chain[i], *st.space);
      if (!holds_at_least(*st.space, std::min(d_prev, d_next),
                          2.0 * prod + 18.0 * st.cert->delta_used + 1.0))
        throw CertificateRefuted(
            "chain inequality fails along an orbit chain; certificate refuted");
    }
    st.points->push_back(end);
  }
  if (depth == st.max_len) return;
  const int num_symbols = static_cast<int>(st.symbol_elem->size());
  for (int s = 0; s < num_symbols; ++s) {
    if (depth > 0 && s == (st.word.back() ^ 1)) continue;  // not reduced
    const GroupElement prev = st.element;
    st.element = depth == 0 ? (*st.symbol_elem)[s] : multiply(st.element, (*st.symbol_elem)[s]);
    st.word.push_back(s);
    st.chain.push_back(st.space->apply(st.element, st.chain.front()));
    bruteforce_dfs(st);
    st.chain.pop_back();
    st.word.pop_back();
    st.element = prev;
  }
}

void check_all_distinct(const std::vector<SpacePoint>& points, const ModelSpace& space) {
  if (space.is_tree()) {
    std::vector<FreeWord> words;
    words.reserve(points.size());
    for (const auto& p : points) words.push_back(std::get<FreeWord>(p));
    std::sort(words.begin(), words.end());
    for (std::size_t i = 1; i < words.size(); ++i)
      if (words[i] == words[i - 1])
        throw CertificateRefuted("orbit points collide at vertex '" +
                                 words[i].str() + "'; certificate refuted");
    return;
  }
  std::vector<PlanePoint> pts;
  pts.reserve(points.size());
  double max_im = 0.0;
  for (const auto& p : points) {
    pts.push_back(std::get<PlanePoint>(p));
    max_im = std::max(max_im, pts.back().y);
  }
  std::sort(pts.begin(), pts.end(),
            [](const PlanePoint& l, const PlanePoint& r) {
              return l.x != r.x ? l.x < r.x : l.y < r.y;
            });
  // Hyperbolic distance <= tol forces |dx| <= max_im * tol (roughly), so a
  // window scan over the x-sorted list sees every candidate pair.
  const double window = 2.0 * max_im * kGeomTol + 1e-300;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size() && pts[j].x - pts[i].x <= window; ++j) {
      if (plane_distance(pts[i], pts[j]) <= kGeomTol)
        throw CertificateRefuted("orbit points closer than tolerance; certificate refuted");
    }
  }
}

}  // namespace

BruteforceReport verify_certificate_bruteforce(
    const std::vector<GroupElement>& generators, const ModelSpace& space,
    const Certificate& cert, int max_len) {
  if (max_len < 1) throw UsageError("max_len must be >= 1");
  const int k = static_cast<int>(generators.size());
  if (k < 1) throw UsageError("need at least one generator");
  double budget = 2.0 * k;
  for (int i = 1; i < max_len; ++i) budget *= (2.0 * k - 1.0);
  if (budget > 1e6)
    throw BudgetError("(2k)(2k-1)^(B-1) exceeds the 10^6 enumeration budget");

  std::vector<GroupElement> symbol_elem;
  symbol_elem.reserve(2 * k);
  for (const auto& g : generators) {
    symbol_elem.push_back(g);
    symbol_elem.push_back(invert(g));
  }

  std::vector<SpacePoint> points;
  points.push_back(space.basepoint());

  BruteforceState st;
  st.symbol_elem = &symbol_elem;
  st.space = &space;
  st.cert = &cert;
  st.max_len = max_len;
  st.chain.push_back(space.basepoint());
  st.element = space.identity();
  st.points = &points;
  bruteforce_dfs(st);

  check_all_distinct(points, space);

  BruteforceReport report;
  report.words_checked = st.words;
  report.points_checked = static_cast<long>(points.size());
  report.max_len = max_len;
  return report;
}

FreeWord cyclically_reduce(const FreeWord& word) {
  auto letters = word.letters();
  std::size_t lo = 0;
  std::size_t hi = letters.size();
  while (hi - lo >= 2 && letters[lo] == -letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return FreeWord::reduce(letters.subspan(lo, hi - lo));
}

void for_each_reduced_symbol_word(
    int k, int max_len, const std::function<void(std::span<const int>)>& visit) {
  if (k < 1) throw UsageError("need k >= 1");
  std::vector<int> word;
  auto rec = [&](auto&& self) -> void {
    if (!word.empty()) visit(word);
    if (static_cast<int>(word.size()) == max_len) return;
    for (int s = 0; s < 2 * k; ++s) {
      if (!word.empty() && s == (word.back() ^ 1)) continue;
      word.push_back(s);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
}

}  // namespace hypwalk
