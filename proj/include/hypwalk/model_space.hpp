#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "hypwalk/free_word.hpp"
#include "hypwalk/halfplane.hpp"

namespace hypwalk {

/// A point of one of the two model spaces: a vertex of the Cayley tree of a
/// free group (identified with a reduced word), or a point of the upper
/// half-plane.
using SpacePoint = std::variant<FreeWord, PlanePoint>;

/// An acting isometry: a free-group element, or a Moebius transformation.
using GroupElement = std::variant<FreeWord, Moebius>;

GroupElement multiply(const GroupElement& g, const GroupElement& h);
GroupElement invert(const GroupElement& g);
bool is_identity(const GroupElement& g);
std::string element_str(const GroupElement& g);

/// Strict weak order usable as a map/sort comparator. Words are short-lex;
/// matrices compare by sign-canonicalized entries.
struct ElementLess {
  bool operator()(const GroupElement& lhs, const GroupElement& rhs) const;
};

/// Equality for support deduplication (+-M identified for matrices).
bool elements_equal(const GroupElement& lhs, const GroupElement& rhs);

/// One of the two concrete pointed spaces with their group actions:
///   tree(r):  Cayley tree of F_r, basepoint the identity vertex, delta = 0;
///   plane(d): upper half-plane, basepoint i, delta configured or estimated.
class ModelSpace {
 public:
  enum class Kind { tree, plane };

  static ModelSpace tree(int rank);
  static ModelSpace plane(double delta);

  Kind kind() const { return kind_; }
  bool is_tree() const { return kind_ == Kind::tree; }
  int rank() const { return rank_; }

  double delta() const { return delta_; }
  void set_delta(double delta);

  SpacePoint basepoint() const;
  GroupElement identity() const;

  double distance(const SpacePoint& p, const SpacePoint& q) const;
  SpacePoint apply(const GroupElement& g, const SpacePoint& p) const;

  /// d(x0, g x0).
  double displacement(const GroupElement& g) const;

  /// Parses one element in this space's syntax: a word ("abA", "1"), or
  /// four whitespace-separated matrix entries ("1 2 0 1").
  GroupElement parse_element(std::string_view text) const;

  /// Reads a generator file: one element per line, '#' comments.
  std::vector<GroupElement> load_generators(const std::string& path) const;

 private:
  ModelSpace(Kind kind, int rank, double delta)
      : kind_(kind), rank_(rank), delta_(delta) {}

  Kind kind_;
  int rank_;
  double delta_;
};

/// Exact on the tree; |lhs - rhs| <= kGeomTol counts as equal on the plane,
/// and ties resolve against the claim being certified.
bool holds_at_least(const ModelSpace& space, double lhs, double rhs);

}  // namespace hypwalk
