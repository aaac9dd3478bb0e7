#include "hypwalk/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "hypwalk/errors.hpp"
#include "hypwalk/rng.hpp"
#include "hypwalk/tolerances.hpp"

namespace hypwalk {

double gromov_product(const SpacePoint& p, const SpacePoint& q,
                      const SpacePoint& base, const ModelSpace& space) {
  const double dp = space.distance(base, p);
  const double dq = space.distance(base, q);
  const double dpq = space.distance(p, q);
  return 0.5 * (dp + dq - dpq);
}

double four_point_defect(const SpacePoint& a, const SpacePoint& b,
                         const SpacePoint& c, const SpacePoint& d,
                         const ModelSpace& space) {
  const double ab = gromov_product(a, b, d, space);
  const double bc = gromov_product(b, c, d, space);
  const double ac = gromov_product(a, c, d, space);
  return std::min(ab, bc) - ac;
}

PointSampler make_ball_sampler(const ModelSpace& space, double radius,
                               std::uint64_t seed) {
  if (!(radius >= 0.0)) throw UsageError("sampler radius must be nonnegative");
  auto rng = std::make_shared<Rng>(seed);
  if (space.is_tree()) {
    const int rank = space.rank();
    const int max_len = static_cast<int>(radius);
    return [rng, rank, max_len]() -> SpacePoint {
      const int len = static_cast<int>(rng->next_below(max_len + 1));
      std::vector<FreeWord::Letter> letters;
      letters.reserve(len);
      for (int i = 0; i < len; ++i) {
        // Uniform over the 2r-1 non-cancelling letters (2r for the first).
        int idx;
        int sign;
        do {
          idx = 1 + static_cast<int>(rng->next_below(rank));
          sign = rng->next_double() < 0.5 ? +1 : -1;
        } while (!letters.empty() &&
                 letters.back() == static_cast<FreeWord::Letter>(-sign * idx));
        letters.push_back(static_cast<FreeWord::Letter>(sign * idx));
      }
      return FreeWord::reduce(letters);
    };
  }
  return [rng, radius]() -> SpacePoint {
    // Area-uniform: P[r' <= r] = (cosh r - 1)/(cosh R - 1).
    const double u = rng->next_double();
    const double r = robust_acosh(1.0 + u * (std::cosh(radius) - 1.0));
    const double theta = 2.0 * M_PI * rng->next_double();
    return plane_from_polar(r, theta);
  };
}

DeltaEstimate estimate_delta(const ModelSpace& space, const PointSampler& sample,
                             long num_quadruples, double safety_factor) {
  if (num_quadruples < 1) throw UsageError("need at least one quadruple");
  if (!(safety_factor >= 1.0)) throw UsageError("safety factor must be >= 1");
  double worst = 0.0;
  for (long q = 0; q < num_quadruples; ++q) {
    const SpacePoint a = sample();
    const SpacePoint b = sample();
    const SpacePoint c = sample();
    const SpacePoint d = sample();
    // Max over the three choices of middle point, base fixed at d.
    worst = std::max(worst, four_point_defect(a, b, c, d, space));
    worst = std::max(worst, four_point_defect(b, a, c, d, space));
    worst = std::max(worst, four_point_defect(a, c, b, d, space));
  }
  DeltaEstimate est;
  est.delta_hat = std::max(0.0, worst);
  est.quadruples_sampled = num_quadruples;
  est.safety_factor = safety_factor;
  est.delta_used = est.delta_hat * safety_factor;
  return est;
}

ChainCheck check_chain_inequality(std::span<const SpacePoint> points,
                                  double delta, const ModelSpace& space) {
  if (points.size() < 2) throw UsageError("chain needs at least two points");
  if (!(delta >= 0.0)) throw UsageError("delta must be nonnegative");
  const double rhs_const = 18.0 * delta + 1.0;
  for (std::size_t i = 1; i + 1 < points.size(); ++i) {
    const double d_prev = space.distance(points[i - 1], points[i]);
    const double d_next = space.distance(points[i], points[i + 1]);
    const double prod = gromov_product(points[i - 1], points[i + 1], points[i], space);
    if (!holds_at_least(space, std::min(d_prev, d_next), 2.0 * prod + rhs_const))
      return {false, static_cast<std::ptrdiff_t>(i)};
  }
  return {true, -1};
}

FellowTravelResult fellow_travel_check(const SpacePoint& a, const SpacePoint& b,
                                       const SpacePoint& c, const SpacePoint& d,
                                       const SpacePoint& base, double delta,
                                       double big_a, const ModelSpace& space) {
  if (!(delta >= 0.0)) throw UsageError("delta must be nonnegative");
  const double ab = gromov_product(a, b, base, space);
  const double cd = gromov_product(c, d, base, space);
  const double ac = gromov_product(a, c, base, space);
  const double bd = gromov_product(b, d, base, space);

  FellowTravelResult out;
  out.hypotheses_hold = holds_at_least(space, ab, big_a) &&
                        holds_at_least(space, cd, big_a) &&
                        holds_at_least(space, big_a - 3.0 * delta, ac);
  const double slack = space.is_tree() ? 0.0 : kGeomTol;
  out.conclusion_holds = (ac >= bd - 2.0 * delta - slack) &&
                         (ac <= bd + 2.0 * delta + slack);
  return out;
}

double ShadowSpec::distance_parameter(const ModelSpace& space) const {
  return space.distance(base, center) - radius_offset;
}

bool in_shadow(const SpacePoint& y, const ShadowSpec& shadow, const ModelSpace& space) {
  if (shadow.radius_offset < 0.0) return false;
  const double prod = gromov_product(shadow.center, y, shadow.base, space);
  const double dparam = shadow.distance_parameter(space);
  if (space.is_tree()) return prod >= dparam;
  return prod >= dparam - kGeomTol;
}

}  // namespace hypwalk
