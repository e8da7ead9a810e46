#include "pwl/random_map.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <vector>

#include "pwl/errors.hpp"

namespace pwl {
namespace {

constexpr int kMaxAttempts = 10000;
constexpr double kMinGap = kPi / 36.0;

class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  double angle() { return uniform(0.0, kTwoPi); }
  Vec2 ray(double angle) {
    const double r = uniform(0.1, 10.0);
    return {r * std::cos(angle), r * std::sin(angle)};
  }

 private:
  std::mt19937_64 rng_;
};

Vec2 unit(double a) { return {std::cos(a), std::sin(a)}; }

// Image pairs closer than kMinGap to collinear make ill-conditioned pieces.
bool well_separated(Vec2 a, Vec2 b) {
  return std::abs(a.cross(b)) >= std::sin(kMinGap) * a.norm() * b.norm();
}

// Linear map with L u1 = v1 and L u2 = v2.
Mat2 map_pair(Vec2 u1, Vec2 u2, Vec2 v1, Vec2 v2) {
  return Mat2::from_columns(v1, v2) * Mat2::from_columns(u1, u2).inverse();
}

std::optional<PwlMap2> try_single(Draw& draw, bool force) {
  const double start = draw.angle();
  const double phi = draw.angle();
  const double turn = force ? draw.uniform(kMinGap, kPi - kMinGap)
                            : draw.uniform(kMinGap, kTwoPi - kMinGap);
  const Vec2 v1 = draw.ray(phi);
  const Vec2 v2 = draw.ray(phi + turn);
  if (!well_separated(v1, v2)) return std::nullopt;
  const Mat2 l = map_pair(unit(start), unit(start + kPi / 2), v1, v2);
  return validate({{Sector::from_radians(start, kTwoPi), l}});
}

std::optional<PwlMap2> try_half_planes(Draw& draw, bool force) {
  const double alpha = draw.angle();
  const Vec2 u = unit(alpha);
  const Vec2 nrm = unit(alpha + kPi / 2);
  const Vec2 v0 = draw.ray(draw.angle());
  const Vec2 v1 = draw.ray(draw.angle());
  const Vec2 v2 = draw.ray(draw.angle());
  if (!well_separated(v0, v1) || !well_separated(v0, v2)) return std::nullopt;
  const Mat2 a = map_pair(u, nrm, v0, v1);
  const Mat2 b = map_pair(u, -nrm, v0, v2);
  if (a.det_sign() == 0 || a.det_sign() != b.det_sign()) return std::nullopt;
  if (force && a.det_sign() < 0) return std::nullopt;
  return validate({{Sector::from_radians(alpha, kPi), a},
                   {Sector::from_radians(alpha + kPi, kPi), b}});
}

// Gaps g_i > 0 summing to 2pi, with g_i > pi exactly where width_i > pi.
std::optional<std::vector<double>> monotone_gaps(Draw& draw, const std::vector<double>& widths) {
  const std::size_t n = widths.size();
  auto wide = std::find_if(widths.begin(), widths.end(), [](double w) { return w > kPi; });
  std::vector<double> gaps(n, 0.0);
  double remaining = kTwoPi;
  std::size_t free = n;
  if (wide != widths.end()) {
    const auto iw = static_cast<std::size_t>(std::distance(widths.begin(), wide));
    const double hi = kTwoPi - static_cast<double>(n) * kMinGap;
    if (hi <= kPi + kMinGap) return std::nullopt;
    gaps[iw] = draw.uniform(kPi + kMinGap, hi);
    remaining -= gaps[iw];
    --free;
  }
  std::vector<double> weights(n, 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (gaps[i] > 0.0) continue;
    weights[i] = draw.uniform(0.05, 1.0);
    total += weights[i];
  }
  const double spread = remaining - static_cast<double>(free) * kMinGap;
  if (spread <= 0.0) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (gaps[i] > 0.0) continue;
    gaps[i] = kMinGap + spread * weights[i] / total;
    if (gaps[i] > kPi - kMinGap) return std::nullopt;
  }
  return gaps;
}

std::optional<PwlMap2> try_fan(Draw& draw, int n, bool force) {
  std::vector<double> theta(static_cast<std::size_t>(n));
  for (auto& t : theta) t = draw.angle();
  std::sort(theta.begin(), theta.end());
  std::vector<double> widths(theta.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const double next = i + 1 < theta.size() ? theta[i + 1] : theta[0] + kTwoPi;
    widths[i] = next - theta[i];
    if (widths[i] < kMinGap || std::abs(widths[i] - kPi) < kMinGap) return std::nullopt;
  }

  std::vector<Vec2> images(theta.size());
  if (force) {
    auto gaps = monotone_gaps(draw, widths);
    if (!gaps) return std::nullopt;
    double phi = draw.angle();
    for (std::size_t i = 0; i < theta.size(); ++i) {
      images[i] = draw.ray(phi);
      phi += (*gaps)[i];
    }
  } else {
    for (auto& v : images) v = draw.ray(draw.angle());
  }

  std::vector<Piece> pieces;
  pieces.reserve(theta.size());
  int sign = 0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    const std::size_t j = (i + 1) % theta.size();
    if (!well_separated(images[i], images[j])) return std::nullopt;
    const Mat2 l = map_pair(unit(theta[i]), unit(theta[i] + widths[i]), images[i], images[j]);
    const int s = l.det_sign();
    if (s == 0 || (sign != 0 && s != sign)) return std::nullopt;
    sign = s;
    pieces.push_back({Sector::from_radians(theta[i], widths[i]), l});
  }
  return validate(std::move(pieces));
}

}  // namespace

PwlMap2 random_map(int n, std::uint64_t seed, bool force_invertible) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "random_map needs n >= 1");
  Draw draw(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::optional<PwlMap2> g;
    if (n == 1)
      g = try_single(draw, force_invertible);
    else if (n == 2)
      g = try_half_planes(draw, force_invertible);
    else
      g = try_fan(draw, n, force_invertible);
    if (g) return *std::move(g);
  }
  throw Error(ErrorKind::GenerationFailed,
              "no admissible map after " + std::to_string(kMaxAttempts) + " attempts");
}

}  // namespace pwl
