#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "hypwalk/model_space.hpp"

namespace hypwalk {

/// Gromov product (p . q)_base = (d(base,p) + d(base,q) - d(p,q)) / 2.
/// Exact (integer or half-integer) on the tree.
double gromov_product(const SpacePoint& p, const SpacePoint& q,
                      const SpacePoint& base, const ModelSpace& space);

/// min{(a.b)_d, (b.c)_d} - (a.c)_d. Any delta satisfying the four-point
/// condition at these points is at least this value.
double four_point_defect(const SpacePoint& a, const SpacePoint& b,
                         const SpacePoint& c, const SpacePoint& d,
                         const ModelSpace& space);

struct DeltaEstimate {
  double delta_hat = 0.0;          // max observed defect, clipped at 0
  long quadruples_sampled = 0;
  double safety_factor = 1.0;
  double delta_used = 0.0;         // delta_hat * safety_factor
};

using PointSampler = std::function<SpacePoint()>;

/// Uniform sampler on the radius-`radius` ball around the basepoint
/// (hyperbolic area measure on the plane; uniform length then uniform
/// reduced word on the tree, with radius rounded down to a word length).
PointSampler make_ball_sampler(const ModelSpace& space, double radius,
                               std::uint64_t seed);

/// Sampling lower bound on the four-point delta: max over quadruples of the
/// max over the three middle choices of four_point_defect.
DeltaEstimate estimate_delta(const ModelSpace& space, const PointSampler& sample,
                             long num_quadruples, double safety_factor);

struct ChainCheck {
  bool ok = true;
  std::ptrdiff_t first_violation = -1;  // interior index, or -1
};

/// Checks min{d(p_{i-1},p_i), d(p_i,p_{i+1})} >= 2 (p_{i-1}.p_{i+1})_{p_i}
/// + 18 delta + 1 at every interior index. Chains that pass have
/// d(p_0,p_n) >= n.
ChainCheck check_chain_inequality(std::span<const SpacePoint> points,
                                  double delta, const ModelSpace& space);

struct FellowTravelResult {
  bool hypotheses_hold = false;
  bool conclusion_holds = false;
};

/// Hypotheses: (a.b) >= A, (c.d) >= A, (a.c) <= A - 3 delta, all at `base`.
/// Conclusion: |(a.c) - (b.d)| <= 2 delta. Both reported; hypotheses failing
/// is a state, not an error.
FellowTravelResult fellow_travel_check(const SpacePoint& a, const SpacePoint& b,
                                       const SpacePoint& c, const SpacePoint& d,
                                       const SpacePoint& base, double delta,
                                       double big_a, const ModelSpace& space);

/// S_base(center, R) = { y : (center . y)_base >= d(base,center) - R },
/// empty when R < 0.
struct ShadowSpec {
  SpacePoint base;
  SpacePoint center;
  double radius_offset = 0.0;

  double distance_parameter(const ModelSpace& space) const;
};

bool in_shadow(const SpacePoint& y, const ShadowSpec& shadow, const ModelSpace& space);

}  // namespace hypwalk
