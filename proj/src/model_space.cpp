#include "hypwalk/model_space.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "hypwalk/errors.hpp"
#include "hypwalk/tolerances.hpp"

namespace hypwalk {

namespace {

const FreeWord& as_word(const GroupElement& g) {
  if (const auto* w = std::get_if<FreeWord>(&g)) return *w;
  throw UsageError("expected a free-group element, got a matrix");
}

const Moebius& as_moebius(const GroupElement& g) {
  if (const auto* m = std::get_if<Moebius>(&g)) return *m;
  throw UsageError("expected a matrix element, got a word");
}

}  // namespace

GroupElement multiply(const GroupElement& g, const GroupElement& h) {
  if (g.index() != h.index()) throw UsageError("cannot multiply elements of different groups");
  if (std::holds_alternative<FreeWord>(g))
    return std::get<FreeWord>(g) * std::get<FreeWord>(h);
  return std::get<Moebius>(g) * std::get<Moebius>(h);
}

GroupElement invert(const GroupElement& g) {
  if (std::holds_alternative<FreeWord>(g)) return std::get<FreeWord>(g).inverse();
  return std::get<Moebius>(g).inverse();
}

bool is_identity(const GroupElement& g) {
  if (std::holds_alternative<FreeWord>(g)) return std::get<FreeWord>(g).is_identity();
  return std::get<Moebius>(g).is_identity();
}

std::string element_str(const GroupElement& g) {
  if (std::holds_alternative<FreeWord>(g)) return std::get<FreeWord>(g).str();
  return std::get<Moebius>(g).str();
}

bool ElementLess::operator()(const GroupElement& lhs, const GroupElement& rhs) const {
  if (lhs.index() != rhs.index()) return lhs.index() < rhs.index();
  if (std::holds_alternative<FreeWord>(lhs))
    return std::get<FreeWord>(lhs) < std::get<FreeWord>(rhs);
  return std::get<Moebius>(lhs).canonical_entries() <
         std::get<Moebius>(rhs).canonical_entries();
}

bool elements_equal(const GroupElement& lhs, const GroupElement& rhs) {
  if (lhs.index() != rhs.index()) return false;
  if (std::holds_alternative<FreeWord>(lhs))
    return std::get<FreeWord>(lhs) == std::get<FreeWord>(rhs);
  const auto a = std::get<Moebius>(lhs).canonical_entries();
  const auto b = std::get<Moebius>(rhs).canonical_entries();
  for (int i = 0; i < 4; ++i)
    if (std::abs(a[i] - b[i]) > kElementEqTol) return false;
  return true;
}

ModelSpace ModelSpace::tree(int rank) {
  if (rank < 2 || rank > FreeWord::kMaxRank)
    throw UsageError("tree rank must be in 2..26");
  return ModelSpace(Kind::tree, rank, 0.0);
}

ModelSpace ModelSpace::plane(double delta) {
  if (!(delta >= 0.0)) throw UsageError("delta must be nonnegative");
  return ModelSpace(Kind::plane, 0, delta);
}

void ModelSpace::set_delta(double delta) {
  if (!(delta >= 0.0)) throw UsageError("delta must be nonnegative");
  delta_ = delta;
}

SpacePoint ModelSpace::basepoint() const {
  if (is_tree()) return FreeWord{};
  return PlanePoint{0.0, 1.0};
}

GroupElement ModelSpace::identity() const {
  if (is_tree()) return FreeWord{};
  return Moebius::identity();
}

double ModelSpace::distance(const SpacePoint& p, const SpacePoint& q) const {
  if (p.index() != q.index())
    throw UsageError("distance between points of different spaces");
  if (std::holds_alternative<FreeWord>(p)) {
    if (!is_tree()) throw UsageError("tree point passed to a plane space");
    return std::get<FreeWord>(p).distance(std::get<FreeWord>(q));
  }
  if (is_tree()) throw UsageError("plane point passed to a tree space");
  return plane_distance(std::get<PlanePoint>(p), std::get<PlanePoint>(q));
}

SpacePoint ModelSpace::apply(const GroupElement& g, const SpacePoint& p) const {
  if (is_tree()) {
    if (!std::holds_alternative<FreeWord>(p))
      throw UsageError("plane point passed to a tree space");
    return as_word(g) * std::get<FreeWord>(p);
  }
  if (!std::holds_alternative<PlanePoint>(p))
    throw UsageError("tree point passed to a plane space");
  return as_moebius(g).apply(std::get<PlanePoint>(p));
}

double ModelSpace::displacement(const GroupElement& g) const {
  return distance(basepoint(), apply(g, basepoint()));
}

GroupElement ModelSpace::parse_element(std::string_view text) const {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.empty()) throw UsageError("empty element");
  if (is_tree()) {
    if (tokens.size() != 1)
      throw UsageError("tree elements are single words: got '" + std::string(text) + "'");
    return FreeWord::parse(tokens[0], rank_);
  }
  if (tokens.size() != 4)
    throw UsageError("matrix elements need four entries: got '" + std::string(text) + "'");
  double e[4];
  for (int i = 0; i < 4; ++i) {
    char* end = nullptr;
    e[i] = std::strtod(tokens[i].c_str(), &end);
    if (end == tokens[i].c_str() || *end != '\0')
      throw UsageError("bad matrix entry '" + tokens[i] + "'");
  }
  return Moebius::from_entries(e[0], e[1], e[2], e[3]);
}

std::vector<GroupElement> ModelSpace::load_generators(const std::string& path) const {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open generator file '" + path + "'");
  std::vector<GroupElement> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (!(probe >> tok)) continue;  // blank or comment-only line
    out.push_back(parse_element(line));
  }
  if (out.empty()) throw UsageError("no generators in '" + path + "'");
  return out;
}

bool holds_at_least(const ModelSpace& space, double lhs, double rhs) {
  if (space.is_tree()) return lhs >= rhs;
  return lhs >= rhs + kGeomTol;
}

}  // namespace hypwalk
