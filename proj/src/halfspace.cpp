#include "pwl/halfspace.hpp"

#include <cmath>
#include <random>

#include "pwl/errors.hpp"
#include "pwl/numeric_policy.hpp"

namespace pwl {

MatK::MatK(Eigen::MatrixXd m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw Error(ErrorKind::DimensionMismatch, "MatK must be square and nonempty");
  det_ = m_.partialPivLu().determinant();
}

bool MatK::is_singular() const {
  const double row = m_.rowwise().norm().maxCoeff();
  return std::abs(det_) <= numeric_policy().matk_singular_tol * std::pow(row, size());
}

int MatK::det_sign() const {
  if (is_singular()) return 0;
  return det_ > 0.0 ? 1 : -1;
}

std::vector<Eigen::VectorXd> orthonormal_complement(const Eigen::VectorXd& v) {
  const Eigen::Index k = v.size();
  Eigen::Index pivot = 0;
  v.cwiseAbs().maxCoeff(&pivot);
  std::vector<Eigen::VectorXd> basis;
  basis.reserve(static_cast<std::size_t>(k - 1));
  const Eigen::VectorXd e = v.normalized();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (j == pivot) continue;
    Eigen::VectorXd w = Eigen::VectorXd::Unit(k, j);
    w -= w.dot(e) * e;
    for (const auto& b : basis) w -= w.dot(b) * b;
    basis.push_back(w.normalized());
  }
  return basis;
}

HalfSpaceMap::HalfSpaceMap(MatK a, MatK b, Eigen::VectorXd v)
    : a_(std::move(a)), b_(std::move(b)), v_(std::move(v)) {
  if (a_.size() != b_.size() || v_.size() != a_.size())
    throw Error(ErrorKind::DimensionMismatch, "A, B and v must share one dimension");
  if (!(v_.norm() > 0.0)) throw Error(ErrorKind::InvalidArgument, "normal vector is zero");
  w_ = orthonormal_complement(v_);
  const double tol = numeric_policy().continuity_tol;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    const Eigen::VectorXd aw = a_.matrix() * w_[i];
    const double mismatch = (aw - b_.matrix() * w_[i]).norm();
    if (mismatch > tol * std::max(1.0, aw.norm()))
      throw Error(ErrorKind::DiscontinuousBoundary,
                  "A and B differ on the hyperplane (basis vector " + std::to_string(i) +
                      ", mismatch " + std::to_string(mismatch) + ")");
  }
}

GammaCoefficients gamma_coefficients(const HalfSpaceMap& m) {
  if (m.a().is_singular()) throw Error(ErrorKind::SingularA, "A is singular");
  const Eigen::VectorXd y = m.a().matrix().partialPivLu().solve(m.b().matrix() * m.normal());
  GammaCoefficients g;
  g.gammas.reserve(m.basis().size());
  for (const auto& w : m.basis()) g.gammas.push_back(y.dot(w));
  g.gamma_k = y.dot(m.normal()) / m.normal().squaredNorm();
  return g;
}

Eigen::VectorXd halfspace_evaluate(const HalfSpaceMap& m, const Eigen::VectorXd& x) {
  if (x.size() != m.dim()) throw Error(ErrorKind::DimensionMismatch, "point has wrong dimension");
  return m.normal().dot(x) >= 0.0 ? Eigen::VectorXd(m.a().matrix() * x)
                                  : Eigen::VectorXd(m.b().matrix() * x);
}

HalfSpaceWitness halfspace_witness(const HalfSpaceMap& m) {
  if (m.a().det_sign() * m.b().det_sign() >= 0)
    throw Error(ErrorKind::NotApplicable, "witness needs det(A) det(B) < 0");
  const GammaCoefficients g = gamma_coefficients(m);
  Eigen::VectorXd x2 = m.normal() / g.gamma_k;
  for (std::size_t i = 0; i < g.gammas.size(); ++i) x2 -= (g.gammas[i] / g.gamma_k) * m.basis()[i];

  HalfSpaceWitness w{m.normal(), x2, halfspace_evaluate(m, m.normal())};
  const double side = m.normal().dot(x2);
  const double gap = (halfspace_evaluate(m, x2) - w.image).norm();
  if (!(side < 0.0) || gap > numeric_policy().witness_rel * w.image.norm())
    throw Error(ErrorKind::NotApplicable, "half-space witness failed verification");
  return w;
}

HalfSpaceVerdict halfspace_decide(const HalfSpaceMap& m) {
  HalfSpaceVerdict v;
  const int sa = m.a().det_sign();
  const int sb = m.b().det_sign();
  if (sa == 0 || sb == 0) return v;
  if (sa == sb) {
    v.tag = VerdictTag::Invertible;
    v.degree = sa;
  } else {
    v.tag = VerdictTag::NonInjective;
    v.witness = halfspace_witness(m);
  }
  return v;
}

PwlMap2 to_planar(const HalfSpaceMap& m) {
  if (m.dim() != 2) throw Error(ErrorKind::DimensionMismatch, "to_planar needs k = 2");
  const auto& a = m.a().matrix();
  const auto& b = m.b().matrix();
  const double alpha = std::atan2(m.normal()(1), m.normal()(0));
  // <v, x> >= 0 is the half-plane of directions alpha - pi/2 .. alpha + pi/2.
  return validate({{Sector::from_radians(alpha - kPi / 2, kPi), {a(0, 0), a(0, 1), a(1, 0), a(1, 1)}},
                   {Sector::from_radians(alpha + kPi / 2, kPi), {b(0, 0), b(0, 1), b(1, 0), b(1, 1)}}});
}

HalfSpaceMap random_halfspace(int k, std::uint64_t seed) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  auto random_matrix = [&](int rows, int cols) {
    Eigen::MatrixXd r(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(i, j) = coef(rng);
    return r;
  };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const Eigen::MatrixXd a = random_matrix(k, k) + Eigen::MatrixXd::Identity(k, k);
    Eigen::VectorXd v = random_matrix(k, 1);
    if (v.norm() < 0.1) continue;
    v.normalize();
    const Eigen::VectorXd z = 2.0 * random_matrix(k, 1);
    MatK ma(a);
    MatK mb(a + z * v.transpose());
    // Keep both well away from singular so verdicts are unambiguous.
    if (std::abs(ma.det()) < 1e-3 || std::abs(mb.det()) < 1e-3) continue;
    return HalfSpaceMap(std::move(ma), std::move(mb), v);
  }
  throw Error(ErrorKind::GenerationFailed, "no admissible half-space map");
}

}  // namespace pwl
