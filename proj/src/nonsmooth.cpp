#include "pwl/nonsmooth.hpp"

#include <algorithm>
#include <cmath>

#include "pwl/errors.hpp"
#include "pwl/kernels.hpp"

namespace pwl {
namespace {

constexpr int kDescentSweeps = 20;

// det(M + t D) = det M + t * lin + t^2 * det D
double det_linear_term(const Mat2& m, const Mat2& d) {
  return m.a11 * d.a22 + m.a22 * d.a11 - m.a12 * d.a21 - m.a21 * d.a12;
}

Mat2 combine(std::span<const Mat2> members, std::span<const double> w) {
  Mat2 sum{};
  for (std::size_t i = 0; i < members.size(); ++i) sum = sum + w[i] * members[i];
  return sum;
}

void pairwise_descent(std::span<const Mat2> members, std::vector<double>& w) {
  Mat2 current = combine(members, w);
  for (int sweep = 0; sweep < kDescentSweeps; ++sweep) {
    bool moved = false;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = 0; j < members.size(); ++j) {
        if (i == j) continue;
        // Shift mass t from j to i, t in [-w_i, w_j].
        const Mat2 d = members[i] - members[j];
        const double lo = -w[i];
        const double hi = w[j];
        if (hi - lo <= 0.0) continue;
        const double c1 = det_linear_term(current, d);
        const double c2 = d.det();
        auto value = [&](double t) { return t * c1 + t * t * c2; };
        double best_t = value(lo) < value(hi) ? lo : hi;
        if (c2 > 0.0) {
          const double vertex = -c1 / (2.0 * c2);
          if (vertex > lo && vertex < hi && value(vertex) < value(best_t)) best_t = vertex;
        }
        if (value(best_t) < -1e-15 * std::max(1.0, std::abs(current.det()))) {
          w[i] += best_t;
          w[j] -= best_t;
          w[i] = std::max(w[i], 0.0);
          w[j] = std::max(w[j], 0.0);
          current = combine(members, w);
          moved = true;
        }
      }
    }
    if (!moved) break;
  }
}

bool jacobian_same_sign(const GeneralizedJacobian& j, int& sign) {
  sign = 0;
  for (const auto& m : j.members) {
    const int s = m.det_sign();
    if (s == 0 || (sign != 0 && s != sign)) {
      sign = 0;
      return false;
    }
    sign = s;
  }
  return sign != 0;
}

}  // namespace

double hull_det(std::span<const Mat2> members, std::span<const double> weights) {
  if (members.size() != weights.size())
    throw Error(ErrorKind::DimensionMismatch, "one weight per hull member is required");
  return combine(members, weights).det();
}

HullMinimum clarke_hull_min_det(std::span<const Mat2> members, int resolution) {
  const kernels::HullScan scan = kernels::hull_grid_min_det(members, resolution);
  if (members.size() == 1) return {scan.min_det, scan.weights};
  std::vector<double> w = scan.weights;
  pairwise_descent(members, w);
  const double refined = hull_det(members, w);
  if (refined < scan.min_det) return {refined, w};
  return {scan.min_det, scan.weights};
}

int affordable_resolution(std::size_t members, double max_points) {
  int r = 100;
  while (r > 2 && kernels::simplex_grid_size(members, r) > max_points) --r;
  return r;
}

std::string_view to_string(LocalRule r) {
  switch (r) {
    case LocalRule::TwoCones: return "TwoCones";
    case LocalRule::StructuralCones: return "StructuralCones";
    case LocalRule::SingletonPreimage: return "SingletonPreimage";
    case LocalRule::GenericDegree: return "GenericDegree";
    case LocalRule::NotApplicable: return "NotApplicable";
  }
  return "Unknown";
}

Pc1Verdict check_local_invertibility(const GeneralizedJacobian& j, const PwlMap2& bderiv) {
  if (j.members.empty())
    throw Error(ErrorKind::InvalidArgument, "generalized Jacobian must be nonempty");
  Pc1Verdict v;
  v.same_sign = jacobian_same_sign(j, v.sign);
  v.bderiv_invertible = decide(bderiv).tag == VerdictTag::Invertible;
  v.locally_invertible = v.same_sign && v.bderiv_invertible;
  if (v.locally_invertible) {
    v.rule = LocalRule::GenericDegree;
    v.detail = "Jacobians share sign " + std::to_string(v.sign) +
               " and the B-derivative is invertible";
  } else if (!v.same_sign) {
    v.detail = "generalized Jacobian determinants do not share one nonzero sign";
  } else {
    v.detail = "B-derivative is not an invertible piecewise linear map";
  }
  return v;
}

Pc1Verdict corollary_dispatch(const GeneralizedJacobian& j, const PwlMap2& bderiv,
                              std::optional<Vec2> probe) {
  Pc1Verdict v = check_local_invertibility(j, bderiv);
  if (!v.locally_invertible) return v;
  const TheoremTag tag = structural_tag(bderiv);
  if (bderiv.size() == 2) {
    v.rule = LocalRule::TwoCones;
    v.detail = "two cones with nondegenerate B-derivative (half-space criterion)";
  } else if (tag != TheoremTag::DegreeOne) {
    v.rule = LocalRule::StructuralCones;
    v.detail = bderiv.size() == 4 ? "four convex cones with nondegenerate B-derivative"
                                  : "at most three cones with nondegenerate B-derivative";
  } else if (probe && singleton_half_line_probe(bderiv, *probe)) {
    v.rule = LocalRule::SingletonPreimage;
    v.detail = "probe point has a single preimage in at most two cones";
  } else {
    v.rule = LocalRule::GenericDegree;
    v.detail = "no corollary applies; B-derivative has degree +-1";
  }
  return v;
}

ParabolicSectorExample parabolic_sector_example() {
  const Mat2 d12 = Mat2::diag(1.0, 2.0);
  GeneralizedJacobian j{{d12, d12, Mat2::identity()}};
  PwlMap2 b = validate({{Sector::from_turns(TurnAngle(0, 1), TurnSpan(1, 2)), d12},
                        {Sector::from_turns(TurnAngle(1, 2), TurnSpan(1, 2)), d12}});
  return {std::move(j), std::move(b)};
}

}  // namespace pwl
