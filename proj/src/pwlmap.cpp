#include "pwl/pwlmap.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pwl/errors.hpp"
#include "pwl/numeric_policy.hpp"

namespace pwl {
namespace {

constexpr int kMaxBisectionDepth = 60;

// Sorting key; exact turns compare exactly.
bool start_before(const Piece& a, const Piece& b) {
  const auto& ea = a.sector.start().exact();
  const auto& eb = b.sector.start().exact();
  if (ea && eb) return *ea < *eb;
  return a.sector.start().angle() < b.sector.start().angle();
}

void check_partition(const std::vector<Piece>& pieces, bool exact) {
  const std::size_t n = pieces.size();
  if (exact) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = pieces[i].sector;
      const TurnAngle end = *s.start().exact() + *s.exact_width();
      const TurnAngle next = *pieces[(i + 1) % n].sector.start().exact();
      if (end != next)
        throw Error(ErrorKind::GapOrOverlap,
                    "cone " + std::to_string(i) + " ends at turn " + end.to_string() +
                        " but the next cone starts at " + next.to_string());
    }
    return;
  }
  const double tol = numeric_policy().partition_tol;
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = pieces[i].sector;
    total += s.width();
    const double next = pieces[(i + 1) % n].sector.start().angle();
    const double gap = std::remainder(s.start().angle() + s.width() - next, kTwoPi);
    if (std::abs(gap) > tol)
      throw Error(ErrorKind::GapOrOverlap,
                  "cone " + std::to_string(i) + " does not end where the next begins");
  }
  if (std::abs(total - kTwoPi) > tol)
    throw Error(ErrorKind::GapOrOverlap, "cone widths do not sum to a full turn");
}

void check_continuity(const std::vector<Piece>& pieces) {
  const std::size_t n = pieces.size();
  const double tol = numeric_policy().continuity_tol;
  // Ray at the start of piece i is shared with piece i-1.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const Vec2 u = pieces[i].sector.start().vec();
    const Vec2 a = pieces[prev].matrix * u;
    const Vec2 b = pieces[i].matrix * u;
    const double mismatch = (a - b).norm();
    if (mismatch > tol * std::max(1.0, a.norm()))
      throw DiscontinuousBoundaryError(prev, i, u.x, u.y, mismatch);
  }
}

double image_angle(const Mat2& l, Vec2 u) {
  const Vec2 p = l * u;
  return std::atan2(p.y, p.x);
}

// Sweep over the arc [ta, ta + w] with unit endpoints ua, ub.
double sweep_arc(const Mat2& l, int sign, Vec2 ua, Vec2 ub, double ta, double w,
                 int depth) {
  if (w < kPi) {
    const Vec2 pa = l * ua;
    const Vec2 pb = l * ub;
    double delta = std::atan2(pa.cross(pb), pa.dot(pb));
    // Monotone in theta, so a wrong sign is rounding on a tiny arc.
    if (delta * sign < 0.0) delta = 0.0;
    if (std::abs(delta) < numeric_policy().sweep_gap || depth >= kMaxBisectionDepth)
      return delta;
  }
  const double half = 0.5 * w;
  const double tm = ta + half;
  const Vec2 um{std::cos(tm), std::sin(tm)};
  return sweep_arc(l, sign, ua, um, ta, half, depth + 1) +
         sweep_arc(l, sign, um, ub, tm, half, depth + 1);
}

int require_nondegenerate(const PwlMap2& g) {
  const int sign = determinant_sign(g);
  if (sign == 0)
    throw Error(ErrorKind::DegenerateMap,
                "determinants are singular or of mixed sign");
  return sign;
}

}  // namespace

bool PwlMap2::is_exact() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const Piece& p) {
    return p.sector.is_exact() && p.sector.start().exact();
  });
}

std::size_t PwlMap2::piece_index(const Direction& d) const {
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    if (pieces_[i].sector.contains(d)) return i;
  // Only reachable through rounding right at a boundary: take the nearest.
  std::size_t best = 0;
  double best_gap = kTwoPi;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& s = pieces_[i].sector;
    const double past = normalize_angle(d.angle() - s.start().angle()) - s.width();
    const double before = kTwoPi - normalize_angle(d.angle() - s.start().angle());
    const double gap = std::min(std::abs(past), std::abs(before));
    if (gap < best_gap) {
      best_gap = gap;
      best = i;
    }
  }
  return best;
}

PwlMap2 validate(std::vector<Piece> pieces) {
  if (pieces.empty()) throw Error(ErrorKind::InvalidArgument, "map needs at least one piece");
  for (const auto& p : pieces)
    if (!(p.sector.width() > 0.0))
      throw Error(ErrorKind::EmptyInteriorCone, "cone with empty interior");
  const bool exact = std::all_of(pieces.begin(), pieces.end(), [](const Piece& p) {
    return p.sector.is_exact() && p.sector.start().exact();
  });
  std::stable_sort(pieces.begin(), pieces.end(), start_before);
  check_partition(pieces, exact);
  check_continuity(pieces);
  return PwlMap2(std::move(pieces));
}

Vec2 evaluate(const PwlMap2& g, Vec2 x) {
  if (x.x == 0.0 && x.y == 0.0) return {0.0, 0.0};
  return g[g.piece_index(Direction::from_vector(x))].matrix * x;
}

int determinant_sign(const PwlMap2& g) {
  int sign = 0;
  for (const auto& p : g.pieces()) {
    const int s = p.matrix.det_sign();
    if (s == 0) return 0;
    if (sign == 0) sign = s;
    if (s != sign) return 0;
  }
  return sign;
}

double sweep(const Mat2& l, const Sector& s) {
  const int sign = l.det_sign();
  if (sign == 0) throw Error(ErrorKind::SingularMatrix, "sweep of a singular matrix");
  return sweep_arc(l, sign, s.start().vec(), s.end().vec(), s.start().angle(), s.width(), 0);
}

ImageSector image_sector(const Mat2& l, const Sector& s) {
  if (!(s.width() < kTwoPi))
    throw Error(ErrorKind::InvalidArgument, "image_sector needs a cone other than the plane");
  const int sign = l.det_sign();
  if (sign == 0) throw Error(ErrorKind::SingularMatrix, "image of a cone under a singular matrix");
  const double w = std::abs(sweep(l, s));
  const Vec2 first = sign > 0 ? l * s.start().vec() : l * s.end().vec();
  const ImageClass cls =
      s.is_strictly_convex() ? ImageClass::StrictlyConvex : ImageClass::ContainsHalfPlane;
  return {Sector::from_radians(Direction::from_vector(first).angle(), w), cls};
}

double winding_sum(const PwlMap2& g) {
  require_nondegenerate(g);
  double total = 0.0;
  for (const auto& p : g.pieces()) total += sweep(p.matrix, p.sector);
  return total / kTwoPi;
}

int degree(const PwlMap2& g) {
  const double w = winding_sum(g);
  const double r = std::round(w);
  if (std::abs(w - r) > numeric_policy().degree_round_tol)
    throw Error(ErrorKind::NonIntegerWinding,
                "winding sum " + std::to_string(w) + " is not near an integer");
  return static_cast<int>(r);
}

std::vector<Preimage> preimages(const PwlMap2& g, Vec2 q) {
  if (q.x == 0.0 && q.y == 0.0)
    throw Error(ErrorKind::InvalidArgument, "preimages of the origin are not isolated");
  require_nondegenerate(g);
  const double radius = numeric_policy().dedup_rel * q.norm();
  std::vector<Preimage> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Vec2 c = g[i].matrix.inverse() * q;
    if (!g[i].sector.contains(Direction::from_vector(c))) continue;
    auto same = std::find_if(out.begin(), out.end(),
                             [&](const Preimage& p) { return (p.point - c).norm() <= radius; });
    if (same == out.end())
      out.push_back({c, {i}});
    else
      same->cones.push_back(i);
  }
  return out;
}

bool singleton_half_line_probe(const PwlMap2& g, Vec2 q) {
  const auto p1 = preimages(g, q);
  const auto p2 = preimages(g, 2.0 * q);
  if (p1.size() != 1 || p2.size() != 1) return false;
  if (p1[0].cones.size() > 2) return false;
  const Vec2 twice = 2.0 * p1[0].point;
  return (p2[0].point - twice).norm() <= numeric_policy().dedup_rel * 2.0 * q.norm() +
                                             1e-12 * twice.norm();
}

bool witness_is_valid(const PwlMap2& g, const CollisionWitness& w) {
  const double sep = (w.x1 - w.x2).norm();
  if (!(sep > 1e-6 * std::max(w.x1.norm(), w.x2.norm()))) return false;
  const double tol = numeric_policy().witness_rel * std::max(1.0, w.image.norm());
  return (evaluate(g, w.x1) - w.image).norm() <= tol &&
         (evaluate(g, w.x2) - w.image).norm() <= tol;
}

CollisionWitness collision_witness(const PwlMap2& g) {
  const int sign = require_nondegenerate(g);
  const int d = degree(g);
  if (std::abs(d) < 2)
    throw Error(ErrorKind::DegreeOne, "a map of degree +-1 has no collision");

  // Oriented cumulative image angle psi at the start of each piece; psi is
  // strictly increasing over one turn of the domain.
  const std::size_t n = g.size();
  std::vector<double> psi(n + 1);
  psi[0] = sign * image_angle(g[0].matrix, g[0].sector.start().vec());
  for (std::size_t i = 0; i < n; ++i)
    psi[i + 1] = psi[i] + std::abs(sweep(g[i].matrix, g[i].sector));

  auto enclosing = [&](double a) {
    auto it = std::upper_bound(psi.begin(), psi.end(), a);
    return static_cast<std::size_t>(std::distance(psi.begin(), it)) - 1;
  };
  auto near_kink = [&](double a) {
    return std::any_of(psi.begin(), psi.end(),
                       [&](double b) { return std::abs(a - b) <= 1e-9; });
  };

  // Aim at the middle of the first piece's image range, nudged off kinks.
  const double span0 = psi[1] - psi[0];
  const double nudge = span0 * (std::numbers::sqrt2 - 1.0) / 8.0;
  double a = psi[0] + 0.5 * span0;
  for (int attempt = 0; attempt < 3 && (near_kink(a) || near_kink(a + kTwoPi)); ++attempt)
    a += nudge;

  const std::size_t k = enclosing(a);
  const std::size_t m = enclosing(a + kTwoPi);
  const double target = sign * a;
  const Vec2 e{std::cos(target), std::sin(target)};
  Vec2 x1 = g[k].matrix.inverse() * e;
  Vec2 x2 = g[m].matrix.inverse() * e;
  const double scale = 1.0 / x1.norm();
  x1 = scale * x1;
  x2 = scale * x2;

  CollisionWitness w{x1, x2, k, m, scale * e};
  if (!witness_is_valid(g, w))
    throw Error(ErrorKind::NonIntegerWinding, "collision witness failed verification");
  return w;
}

PwlMap2 invert(const PwlMap2& g) {
  const int d = degree(g);
  if (std::abs(d) != 1)
    throw Error(ErrorKind::NotInvertible, "degree " + std::to_string(d) + " map is not invertible");
  std::vector<Piece> inv;
  inv.reserve(g.size());
  if (g.size() == 1) {
    const Mat2& l = g[0].matrix;
    const double start = Direction::from_vector(l * g[0].sector.start().vec()).angle();
    inv.push_back({Sector::from_radians(start, kTwoPi), l.inverse()});
  } else {
    for (const auto& p : g.pieces())
      inv.push_back({image_sector(p.matrix, p.sector).sector, p.matrix.inverse()});
  }
  return validate(std::move(inv));
}

TheoremTag structural_tag(const PwlMap2& g) {
  switch (g.size()) {
    case 1: return TheoremTag::TrivialLinear;
    case 2: return TheoremTag::HalfSpaceN2;
    case 3: return TheoremTag::ThreeCones;
    case 4: {
      const double slack = numeric_policy().convex_width_slack;
      const bool convex = std::all_of(g.pieces().begin(), g.pieces().end(),
                                      [&](const Piece& p) { return p.sector.is_convex(slack); });
      if (convex) return TheoremTag::FourConvexCones;
      break;
    }
    default: break;
  }
  return TheoremTag::DegreeOne;
}

Verdict decide(const PwlMap2& g) {
  Verdict v;
  bool any_singular = false;
  bool any_pos = false;
  bool any_neg = false;
  for (const auto& p : g.pieces()) {
    const int s = p.matrix.det_sign();
    any_singular |= s == 0;
    any_pos |= s > 0;
    any_neg |= s < 0;
  }
  if (any_singular || (any_pos && any_neg)) {
    v.tag = VerdictTag::Degenerate;
    v.theorem_tag = any_singular ? TheoremTag::SingularPiece : TheoremTag::MixedDeterminantSigns;
    return v;
  }
  const int d = degree(g);
  v.degree = d;
  if (std::abs(d) == 1) {
    v.tag = VerdictTag::Invertible;
    v.inverse = invert(g);
    v.theorem_tag = structural_tag(g);
  } else {
    v.tag = VerdictTag::NonInjective;
    v.witness = collision_witness(g);
    v.theorem_tag = TheoremTag::DegreeNotOne;
  }
  return v;
}

std::string_view to_string(VerdictTag t) {
  switch (t) {
    case VerdictTag::Invertible: return "Invertible";
    case VerdictTag::NonInjective: return "NonInjective";
    case VerdictTag::Degenerate: return "Degenerate";
  }
  return "Unknown";
}

std::string_view to_string(TheoremTag t) {
  switch (t) {
    case TheoremTag::TrivialLinear: return "TrivialLinear";
    case TheoremTag::HalfSpaceN2: return "HalfSpaceN2";
    case TheoremTag::ThreeCones: return "ThreeCones";
    case TheoremTag::FourConvexCones: return "FourConvexCones";
    case TheoremTag::DegreeOne: return "DegreeOne";
    case TheoremTag::DegreeNotOne: return "DegreeNotOne";
    case TheoremTag::MixedDeterminantSigns: return "MixedDeterminantSigns";
    case TheoremTag::SingularPiece: return "SingularPiece";
  }
  return "Unknown";
}

}  // namespace pwl
