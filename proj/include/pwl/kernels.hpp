#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pwl/pwlmap.hpp"

// Data-parallel inner loops. Each OpenMP kernel has a *_serial twin that
// does the same arithmetic in the same order; tests pin them together and
// bench/ compares their speed.
namespace pwl::kernels {

// Angles of `samples` uniform points of S^1 (starting at the first cone's
// start) merged with every cone boundary direction, ascending.
std::vector<double> sample_angles(const PwlMap2& g, std::size_t samples);

// G at each sample angle: the closed curve G(S^1), without repeating the
// first point.
std::vector<Vec2> sample_image_curve(const PwlMap2& g, std::size_t samples);
std::vector<Vec2> sample_image_curve_serial(const PwlMap2& g, std::size_t samples);

// Winding number about the origin of the closed polyline (last point joins
// the first), as the unrounded sum of wrapped angle increments over 2pi.
double polyline_winding(std::span<const Vec2> pts);
double polyline_winding_serial(std::span<const Vec2> pts);

struct HullScan {
  double min_det = 0.0;
  std::vector<double> weights;  // a point of the simplex
};

// Minimum of det(sum lambda_i M_i) over the simplex grid with spacing
// 1/resolution. Ties keep the lexicographically first grid point.
HullScan hull_grid_min_det(std::span<const Mat2> members, int resolution);
HullScan hull_grid_min_det_serial(std::span<const Mat2> members, int resolution);

// Number of grid points of the simplex: C(resolution + m - 1, m - 1).
double simplex_grid_size(std::size_t members, int resolution);

}  // namespace pwl::kernels
