#pragma once

namespace pwl {

// Every tolerance used by the library lives here. Defaults are the
// contract values; tests may install a different policy through
// ScopedNumericPolicy. Not synchronized: change it only before work starts.
struct NumericPolicy {
  double angle_tol = 1e-12;           // boundary membership on S^1, radians
  double partition_tol = 1e-9;        // float-path tiling of S^1, radians
  double continuity_tol = 1e-9;       // relative mismatch on shared rays
  double mat2_singular_tol = 1e-12;   // |det| <= tol * max(1, ||L||_F^2)
  double matk_singular_tol = 1e-10;   // |det| <= tol * (max row norm)^k
  double degree_round_tol = 1e-6;     // distance of winding sum to an integer
  double sweep_gap = 1.5707963267948966;  // adaptive bisection threshold (pi/2)
  double convex_width_slack = 1e-12;  // width <= pi + slack counts as convex
  double dedup_rel = 1e-9;            // preimage deduplication radius / |q|
  double witness_rel = 1e-8;          // collision witness image agreement
};

const NumericPolicy& numeric_policy();

class ScopedNumericPolicy {
 public:
  explicit ScopedNumericPolicy(const NumericPolicy& p);
  ~ScopedNumericPolicy();
  ScopedNumericPolicy(const ScopedNumericPolicy&) = delete;
  ScopedNumericPolicy& operator=(const ScopedNumericPolicy&) = delete;

 private:
  NumericPolicy saved_;
};

}  // namespace pwl
