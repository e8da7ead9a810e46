#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "pwl/pwlmap.hpp"

namespace pwl {

// Square real matrix of any size with an LU-based determinant.
class MatK {
 public:
  explicit MatK(Eigen::MatrixXd m);
  static MatK identity(int k) { return MatK(Eigen::MatrixXd::Identity(k, k)); }

  int size() const { return static_cast<int>(m_.rows()); }
  const Eigen::MatrixXd& matrix() const { return m_; }
  double det() const { return det_; }
  // |det| <= tol * (max row norm)^k
  bool is_singular() const;
  int det_sign() const;

 private:
  Eigen::MatrixXd m_;
  double det_;
};

// x -> A x on <v, x> >= 0 and x -> B x on <v, x> <= 0, where A and B agree
// on the hyperplane orthogonal to v.
class HalfSpaceMap {
 public:
  // Throws Error{DimensionMismatch} on inconsistent sizes,
  // Error{InvalidArgument} for v = 0, Error{DiscontinuousBoundary} when
  // A and B differ on the hyperplane.
  HalfSpaceMap(MatK a, MatK b, Eigen::VectorXd v);

  int dim() const { return a_.size(); }
  const MatK& a() const { return a_; }
  const MatK& b() const { return b_; }
  const Eigen::VectorXd& normal() const { return v_; }
  // Orthonormal basis of the hyperplane, k-1 vectors.
  const std::vector<Eigen::VectorXd>& basis() const { return w_; }

 private:
  MatK a_, b_;
  Eigen::VectorXd v_;
  std::vector<Eigen::VectorXd> w_;
};

// Deterministic orthonormal basis of {v}^perp: pivot on the largest
// coordinate of v, then Gram-Schmidt over the remaining unit vectors.
std::vector<Eigen::VectorXd> orthonormal_complement(const Eigen::VectorXd& v);

struct GammaCoefficients {
  std::vector<double> gammas;  // along w_1 .. w_{k-1}
  double gamma_k = 0.0;        // along v
};

// Coordinates of A^{-1} B v in the basis (w_1, .., w_{k-1}, v).
// Throws Error{SingularA}.
GammaCoefficients gamma_coefficients(const HalfSpaceMap& m);

Eigen::VectorXd halfspace_evaluate(const HalfSpaceMap& m, const Eigen::VectorXd& x);

struct HalfSpaceWitness {
  Eigen::VectorXd x1;
  Eigen::VectorXd x2;
  Eigen::VectorXd image;
};

// Collision pair x1 = v, x2 = sum(-gamma_i/gamma_k w_i) + v/gamma_k.
// Throws Error{NotApplicable} unless det(A) det(B) < 0.
HalfSpaceWitness halfspace_witness(const HalfSpaceMap& m);

struct HalfSpaceVerdict {
  VerdictTag tag = VerdictTag::Degenerate;
  std::optional<int> degree;
  std::optional<HalfSpaceWitness> witness;
};

HalfSpaceVerdict halfspace_decide(const HalfSpaceMap& m);

// Planar engine encoding of a k = 2 map: two half-plane sectors.
PwlMap2 to_planar(const HalfSpaceMap& m);

// Random A, random normal v and B = A + z v^T, so A and B agree on v^perp.
// The sign of det(A) det(B) is left to chance.
HalfSpaceMap random_halfspace(int k, std::uint64_t seed);

}  // namespace pwl
