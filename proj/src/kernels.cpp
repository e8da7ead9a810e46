#include "pwl/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pwl/errors.hpp"

namespace pwl::kernels {
namespace {

Vec2 image_at(const PwlMap2& g, double angle) {
  return evaluate(g, Vec2{std::cos(angle), std::sin(angle)});
}

double wrapped_increment(Vec2 a, Vec2 b) { return std::atan2(a.cross(b), a.dot(b)); }

struct Best {
  double det = std::numeric_limits<double>::infinity();
  std::vector<int> counts;
};

double hull_det(std::span<const Mat2> members, const std::vector<int>& counts, int resolution) {
  Mat2 sum{};
  for (std::size_t i = 0; i < members.size(); ++i)
    sum = sum + (static_cast<double>(counts[i]) / resolution) * members[i];
  return sum.det();
}

// Lexicographic walk over compositions of `left` into counts[pos..].
void scan(std::span<const Mat2> members, int resolution, std::vector<int>& counts,
          std::size_t pos, int left, Best& best) {
  if (pos + 1 == counts.size()) {
    counts[pos] = left;
    const double d = hull_det(members, counts, resolution);
    if (d < best.det) {
      best.det = d;
      best.counts = counts;
    }
    return;
  }
  for (int c = 0; c <= left; ++c) {
    counts[pos] = c;
    scan(members, resolution, counts, pos + 1, left - c, best);
  }
}

void check_scan_args(std::span<const Mat2> members, int resolution) {
  if (members.empty()) throw Error(ErrorKind::InvalidArgument, "hull needs at least one member");
  if (resolution < 2) throw Error(ErrorKind::InvalidArgument, "grid resolution must be >= 2");
}

HullScan to_scan(const Best& b, int resolution) {
  HullScan out{b.det, {}};
  for (int c : b.counts) out.weights.push_back(static_cast<double>(c) / resolution);
  return out;
}

}  // namespace

std::vector<double> sample_angles(const PwlMap2& g, std::size_t samples) {
  if (samples == 0) throw Error(ErrorKind::InvalidArgument, "need at least one sample");
  const double start = g[0].sector.start().angle();
  std::vector<double> angles;
  angles.reserve(samples + g.size());
  for (std::size_t j = 0; j < samples; ++j)
    angles.push_back(start + kTwoPi * static_cast<double>(j) / static_cast<double>(samples));
  for (std::size_t i = 1; i < g.size(); ++i) {
    double a = g[i].sector.start().angle();
    if (a < start) a += kTwoPi;
    angles.push_back(a);
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  return angles;
}

std::vector<Vec2> sample_image_curve(const PwlMap2& g, std::size_t samples) {
  const std::vector<double> angles = sample_angles(g, samples);
  std::vector<Vec2> pts(angles.size());
  const auto n = static_cast<std::ptrdiff_t>(angles.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) pts[j] = image_at(g, angles[j]);
  return pts;
}

std::vector<Vec2> sample_image_curve_serial(const PwlMap2& g, std::size_t samples) {
  const std::vector<double> angles = sample_angles(g, samples);
  std::vector<Vec2> pts(angles.size());
  for (std::size_t j = 0; j < angles.size(); ++j) pts[j] = image_at(g, angles[j]);
  return pts;
}

double polyline_winding(std::span<const Vec2> pts) {
  const auto n = static_cast<std::ptrdiff_t>(pts.size());
  double total = 0.0;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (std::ptrdiff_t j = 0; j < n; ++j) total += wrapped_increment(pts[j], pts[(j + 1) % n]);
  return total / kTwoPi;
}

double polyline_winding_serial(std::span<const Vec2> pts) {
  double total = 0.0;
  for (std::size_t j = 0; j < pts.size(); ++j)
    total += wrapped_increment(pts[j], pts[(j + 1) % pts.size()]);
  return total / kTwoPi;
}

HullScan hull_grid_min_det(std::span<const Mat2> members, int resolution) {
  check_scan_args(members, resolution);
  const std::size_t m = members.size();
  if (m == 1) return {members[0].det(), {1.0}};
  // One block per value of the first coordinate; merged in order so the
  // result matches the serial walk exactly.
  std::vector<Best> blocks(static_cast<std::size_t>(resolution) + 1);
#pragma omp parallel for schedule(dynamic)
  for (int c0 = 0; c0 <= resolution; ++c0) {
    std::vector<int> counts(m, 0);
    counts[0] = c0;
    scan(members, resolution, counts, 1, resolution - c0, blocks[static_cast<std::size_t>(c0)]);
  }
  Best best;
  for (const auto& b : blocks)
    if (b.det < best.det) best = b;
  return to_scan(best, resolution);
}

HullScan hull_grid_min_det_serial(std::span<const Mat2> members, int resolution) {
  check_scan_args(members, resolution);
  if (members.size() == 1) return {members[0].det(), {1.0}};
  Best best;
  std::vector<int> counts(members.size(), 0);
  scan(members, resolution, counts, 0, resolution, best);
  return to_scan(best, resolution);
}

double simplex_grid_size(std::size_t members, int resolution) {
  // C(resolution + members - 1, members - 1)
  double c = 1.0;
  for (std::size_t i = 1; i < members; ++i)
    c = c * (resolution + static_cast<double>(i)) / static_cast<double>(i);
  return c;
}

}  // namespace pwl::kernels
