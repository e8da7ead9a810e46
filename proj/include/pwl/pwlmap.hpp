#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "pwl/angles.hpp"
#include "pwl/linalg.hpp"

namespace pwl {

struct Piece {
  Sector sector;
  Mat2 matrix;
};

// Continuous strongly piecewise linear map of the plane: G(x) = L_i x for
// x in cone C_i. Pieces are sorted counterclockwise by start angle and
// tile S^1. Only validate() constructs one.
class PwlMap2 {
 public:
  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  const Piece& operator[](std::size_t i) const { return pieces_[i]; }
  // True when every cone carries exact turn data.
  bool is_exact() const;
  // Index of the first piece whose closed sector contains d.
  std::size_t piece_index(const Direction& d) const;

 private:
  explicit PwlMap2(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {}
  friend PwlMap2 validate(std::vector<Piece> pieces);
  std::vector<Piece> pieces_;
};

// Sorts the pieces and checks the tiling and boundary continuity. Throws
// Error{GapOrOverlap}, Error{EmptyInteriorCone} or DiscontinuousBoundaryError.
PwlMap2 validate(std::vector<Piece> pieces);

Vec2 evaluate(const PwlMap2& g, Vec2 x);

// +1 or -1 when all determinants share that sign, 0 otherwise.
int determinant_sign(const PwlMap2& g);

enum class ImageClass { StrictlyConvex, ContainsHalfPlane };

struct ImageSector {
  Sector sector;
  ImageClass classification;
};

// The cone L(C). Requires width < 2pi; throws Error{SingularMatrix}.
ImageSector image_sector(const Mat2& l, const Sector& s);

// Signed angle swept by direction(L e^{i theta}) over the arc of s, by
// adaptive bisection. Sign is sign(det L).
double sweep(const Mat2& l, const Sector& s);

// (1/2pi) * sum of sweeps, before rounding. Throws Error{DegenerateMap}.
double winding_sum(const PwlMap2& g);

// Brouwer degree. Throws Error{DegenerateMap} or Error{NonIntegerWinding}.
int degree(const PwlMap2& g);

struct Preimage {
  Vec2 point;
  std::vector<std::size_t> cones;  // every piece whose sector holds `point`
};

// All x with G(x) = q, q != 0.
std::vector<Preimage> preimages(const PwlMap2& g, Vec2 q);

// Half-line form of the singleton-preimage condition, checked through
// points: q and 2q both have a single preimage lying in at most two cones,
// and the preimage of 2q is twice that of q.
bool singleton_half_line_probe(const PwlMap2& g, Vec2 q);

struct CollisionWitness {
  Vec2 x1;
  Vec2 x2;
  std::size_t cone_index_1 = 0;
  std::size_t cone_index_2 = 0;
  Vec2 image;
};

bool witness_is_valid(const PwlMap2& g, const CollisionWitness& w);

// Two distinct points with the same image. Requires |degree| >= 2; throws
// Error{DegreeOne} otherwise.
CollisionWitness collision_witness(const PwlMap2& g);

// Inverse with pieces (L_i(C_i), L_i^{-1}). Throws Error{NotInvertible}
// unless the degree is +-1.
PwlMap2 invert(const PwlMap2& g);

enum class VerdictTag { Invertible, NonInjective, Degenerate };

enum class TheoremTag {
  TrivialLinear,
  HalfSpaceN2,
  ThreeCones,
  FourConvexCones,
  DegreeOne,
  DegreeNotOne,
  MixedDeterminantSigns,
  SingularPiece,
};

std::string_view to_string(VerdictTag t);
std::string_view to_string(TheoremTag t);

struct Verdict {
  VerdictTag tag = VerdictTag::Degenerate;
  std::optional<int> degree;
  std::optional<PwlMap2> inverse;
  std::optional<CollisionWitness> witness;
  TheoremTag theorem_tag = TheoremTag::SingularPiece;
};

// Structural sufficient condition for invertibility that the cone layout
// alone satisfies, or DegreeOne when none does.
TheoremTag structural_tag(const PwlMap2& g);

Verdict decide(const PwlMap2& g);

}  // namespace pwl
