#include "hypwalk/measure.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hypwalk/errors.hpp"

namespace hypwalk {

Measure Measure::make(std::vector<Entry> entries) {
  if (entries.empty()) throw UsageError("measure needs at least one entry");
  double sum = 0.0;
  for (const auto& [g, p] : entries) {
    if (!(p > 0.0)) throw UsageError("measure probabilities must be strictly positive");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw UsageError("measure probabilities sum to " + std::to_string(sum) +
                     ", not 1");
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (elements_equal(entries[i].first, entries[j].first))
        throw UsageError("duplicate element in measure support");

  Measure mu;
  mu.entries_ = std::move(entries);
  mu.cumulative_.reserve(mu.entries_.size());
  double acc = 0.0;
  for (const auto& [g, p] : mu.entries_) {
    acc += p;
    mu.cumulative_.push_back(acc);
  }
  mu.cumulative_.back() = 1.0;
  return mu;
}

Measure Measure::uniform_symmetric(int rank) {
  if (rank < 1 || rank > FreeWord::kMaxRank) throw UsageError("rank must be in 1..26");
  std::vector<Entry> entries;
  entries.reserve(2 * rank);
  const double p = 1.0 / (2.0 * rank);
  for (int i = 1; i <= rank; ++i) {
    entries.emplace_back(FreeWord::generator(i, +1), p);
    entries.emplace_back(FreeWord::generator(i, -1), p);
  }
  return make(std::move(entries));
}

Measure Measure::uniform_on_symmetrized(const std::vector<GroupElement>& elements) {
  std::vector<GroupElement> support;
  auto add = [&support](const GroupElement& g) {
    for (const auto& have : support)
      if (elements_equal(have, g)) return;
    support.push_back(g);
  };
  for (const auto& g : elements) {
    add(g);
    add(invert(g));
  }
  std::vector<Entry> entries;
  const double p = 1.0 / static_cast<double>(support.size());
  for (auto& g : support) entries.emplace_back(std::move(g), p);
  return make(std::move(entries));
}

Measure Measure::load(const std::string& path, const ModelSpace& space) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open measure file '" + path + "'");
  std::vector<Entry> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::vector<std::string> tokens;
    for (std::string tok; row >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() < 2)
      throw UsageError("measure line needs '<element> <probability>': " + line);
    char* end = nullptr;
    const std::string& ptok = tokens.back();
    const double p = std::strtod(ptok.c_str(), &end);
    if (end == ptok.c_str() || *end != '\0')
      throw UsageError("bad probability '" + ptok + "'");
    std::string elem = tokens[0];
    for (std::size_t i = 1; i + 1 < tokens.size(); ++i) elem += " " + tokens[i];
    entries.emplace_back(space.parse_element(elem), p);
  }
  return make(std::move(entries));
}

Measure Measure::reflected() const {
  Measure mu;
  mu.entries_.reserve(entries_.size());
  for (const auto& [g, p] : entries_) mu.entries_.emplace_back(invert(g), p);
  mu.cumulative_ = cumulative_;
  return mu;
}

const GroupElement& Measure::sample(Rng& rng) const {
  const double u = rng.next_double();
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  const std::size_t idx =
      std::min<std::size_t>(it - cumulative_.begin(), entries_.size() - 1);
  return entries_[idx].first;
}

}  // namespace hypwalk
