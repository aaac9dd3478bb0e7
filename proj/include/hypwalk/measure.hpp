#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hypwalk/model_space.hpp"
#include "hypwalk/rng.hpp"

namespace hypwalk {

/// A finite-support probability measure on group elements. Probabilities are
/// strictly positive, sum to 1 within 1e-12, and the support has no
/// duplicates.
class Measure {
 public:
  using Entry = std::pair<GroupElement, double>;

  /// Validates and builds the sampling table.
  static Measure make(std::vector<Entry> entries);

  /// Mass 1/(2r) on each generator of F_r and each inverse.
  static Measure uniform_symmetric(int rank);

  /// Equal mass on the given elements and, if absent, their inverses.
  static Measure uniform_on_symmetrized(const std::vector<GroupElement>& elements);

  /// Lines of "<element> <probability>"; element syntax from the space.
  static Measure load(const std::string& path, const ModelSpace& space);

  /// The reflected measure: same probabilities on inverted elements.
  Measure reflected() const;

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }

  /// Support smaller than two elements cannot generate a nonelementary
  /// subgroup; the CLI warns on this.
  bool possibly_elementary() const { return entries_.size() < 2; }

  const GroupElement& sample(Rng& rng) const;

 private:
  Measure() = default;

  std::vector<Entry> entries_;
  std::vector<double> cumulative_;
};

}  // namespace hypwalk
