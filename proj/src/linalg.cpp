#include "pwl/linalg.hpp"

#include <algorithm>

#include "pwl/errors.hpp"
#include "pwl/numeric_policy.hpp"

namespace pwl {

bool Mat2::is_singular() const {
  const double f = frobenius_norm();
  return std::abs(det()) <=
         numeric_policy().mat2_singular_tol * std::max(1.0, f * f);
}

int Mat2::det_sign() const {
  if (is_singular()) return 0;
  return det() > 0.0 ? 1 : -1;
}

Mat2 Mat2::inverse() const {
  if (is_singular()) throw Error(ErrorKind::SingularMatrix, "matrix is singular");
  const double d = det();
  return {a22 / d, -a12 / d, -a21 / d, a11 / d};
}

double max_abs_diff(const Mat2& a, const Mat2& b) {
  return std::max({std::abs(a.a11 - b.a11), std::abs(a.a12 - b.a12),
                   std::abs(a.a21 - b.a21), std::abs(a.a22 - b.a22)});
}

}  // namespace pwl
