#pragma once

#include <cstdint>

#include "pwl/pwlmap.hpp"

namespace pwl {

// Deterministic random continuous nondegenerate map with n cones.
//
// Cone boundary rays u_i are random angles at least pi/36 apart; each L_i is
// the linear map sending (u_i, u_{i+1}) to random image rays (v_i, v_{i+1})
// with lengths in [0.1, 10], so continuity holds by construction. For n = 2
// the cones are half-planes. With force_invertible the image rays advance
// monotonically through exactly one turn (degree 1); otherwise image rays
// are independent and candidates are redrawn until all determinants share
// a sign. Throws Error{GenerationFailed} after 10^4 attempts.
PwlMap2 random_map(int n, std::uint64_t seed, bool force_invertible);

}  // namespace pwl
