#include "szegolab/mat2.hpp"

#include <cmath>

namespace szegolab {

bool finite_entries(const Mat2c& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag()))
        return false;
  return true;
}

bool is_su11(const Mat2c& m, double tol) {
  const Mat2c j = j_form();
  const Mat2c defect = m.adjoint() * j * m - j;
  if (defect.cwiseAbs().maxCoeff() > tol) return false;
  return std::abs(m.determinant() - Complex(1.0, 0.0)) <= tol;
}

Mat2c normalize_det(const Mat2c& m) {
  const Complex det = m.determinant();
  if (std::abs(std::abs(det) - 1.0) > kDetTol)
    throw NearSingular("normalize_det: |det| deviates from 1 beyond 1e-9");
  return std::pow(det, -0.5) * m;
}

Mat2c su11_to_sl2r_conjugator() {
  const double s = 1.0 / std::sqrt(2.0);
  Mat2c u;
  u << Complex(0.0, -s), Complex(s, 0.0), Complex(0.0, s), Complex(s, 0.0);
  return u;
}

Mat2c conjugate_to_sl2r(const Mat2c& m, double tol) {
  if (!is_su11(m, tol))
    throw NotInGroup("conjugate_to_sl2r: input is not in SU(1,1)");
  const Mat2c u = su11_to_sl2r_conjugator();
  return u.adjoint() * m * u;  // U is unitary, so U^{-1} = U*
}

}  // namespace szegolab
