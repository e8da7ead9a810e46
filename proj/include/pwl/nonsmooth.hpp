#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pwl/linalg.hpp"
#include "pwl/pwlmap.hpp"

namespace pwl {

// The limiting Jacobians {grad f_i(x0)} of a PC^1 map at x0. Its convex
// hull is the Clarke generalized Jacobian.
struct GeneralizedJacobian {
  std::vector<Mat2> members;
};

struct HullMinimum {
  double min_det = 0.0;
  std::vector<double> weights;
};

// det(sum w_i M_i). Throws Error{DimensionMismatch} if the sizes differ.
double hull_det(std::span<const Mat2> members, std::span<const double> weights);

// Minimizes det over the convex hull of `members`: simplex grid scan at
// `resolution`, then 20 sweeps of pairwise coordinate descent. A negative
// result is certified by the returned weights; a positive one is a
// heuristic bound.
HullMinimum clarke_hull_min_det(std::span<const Mat2> members, int resolution = 100);

// Largest resolution <= 100 whose simplex grid has at most `max_points`.
int affordable_resolution(std::size_t members, double max_points = 5e6);

enum class LocalRule {
  TwoCones,           // n = 2, half-space criterion
  StructuralCones,    // n <= 3, or n = 4 with convex cones
  SingletonPreimage,  // caller-supplied probe point
  GenericDegree,      // invertible B-derivative, no corollary needed
  NotApplicable,
};

std::string_view to_string(LocalRule r);

struct Pc1Verdict {
  bool same_sign = false;
  int sign = 0;  // common determinant sign of the Jacobians, 0 if none
  bool bderiv_invertible = false;
  bool locally_invertible = false;
  LocalRule rule = LocalRule::NotApplicable;
  std::string detail;
};

// Local invertibility of a PC^1 map at x0 from its limiting Jacobians and
// its Bouligand derivative (given as a piecewise linear map).
Pc1Verdict check_local_invertibility(const GeneralizedJacobian& j, const PwlMap2& bderiv);

// As above, naming the corollary whose hypotheses hold. `probe` is an
// optional point whose preimage under the B-derivative is tested for the
// singleton-in-at-most-two-cones property.
Pc1Verdict corollary_dispatch(const GeneralizedJacobian& j, const PwlMap2& bderiv,
                              std::optional<Vec2> probe = std::nullopt);

// f = (x, 2y - x^2) above y = x^2, (x, 2y + x^2) below y = -x^2, identity
// in between. At the origin the limiting Jacobians are diag(1,2), diag(1,2)
// and I. Along (0, t) one gets f = (0, 2t), so the B-derivative used here
// is diag(1,2) on both half-planes (the cusp region has an empty tangent
// cone interior), not the identity.
struct ParabolicSectorExample {
  GeneralizedJacobian jacobian;
  PwlMap2 bderiv;
};

ParabolicSectorExample parabolic_sector_example();

}  // namespace pwl
