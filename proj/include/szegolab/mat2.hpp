#ifndef SZEGOLAB_MAT2_HPP
#define SZEGOLAB_MAT2_HPP

#include <Eigen/Dense>
#include <complex>

#include "szegolab/errors.hpp"

namespace szegolab {

using Complex = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Vec2c = Eigen::Vector2cd;

inline constexpr double kGroupTol = 1e-9;
inline constexpr double kDetTol = 1e-9;

// J = diag(1, -1); the indefinite form preserved by U(1,1).
inline Mat2c j_form() {
  Mat2c j;
  j << 1.0, 0.0, 0.0, -1.0;
  return j;
}

inline Mat2c mul(const Mat2c& x, const Mat2c& y) { return x * y; }

// Spectral norm of a 2x2 matrix in closed form:
// sigma_max^2 = (tr(M*M) + sqrt(tr(M*M)^2 - 4 |det M|^2)) / 2.
inline double operator_norm(const Mat2c& m) {
  const double g = m.squaredNorm();
  const double d = std::norm(m.determinant());
  double disc = g * g - 4.0 * d;
  if (disc < 0.0) disc = 0.0;  // roundoff below a double singular value
  return std::sqrt(0.5 * (g + std::sqrt(disc)));
}

bool finite_entries(const Mat2c& m);

// True iff m* J m = J and det m = 1, both within tol.
bool is_su11(const Mat2c& m, double tol = kGroupTol);

// (det m)^{-1/2} * m with the principal square-root branch.
// Requires |det m| = 1 within kDetTol; throws NearSingular otherwise.
Mat2c normalize_det(const Mat2c& m);

// The unitary change of basis with U^{-1} SU(1,1) U = SL(2,R).
Mat2c su11_to_sl2r_conjugator();

// U^{-1} m U for m in SU(1,1); throws NotInGroup if m fails is_su11.
Mat2c conjugate_to_sl2r(const Mat2c& m, double tol = kGroupTol);

// A long matrix product kept as exp(log_scale) * mat with the stored
// factor renormalized into operator-norm band [1/2, 2].
struct LogScaledProduct {
  Mat2c mat = Mat2c::Identity();
  double log_scale = 0.0;
};

// Represents m * (previous product). Renormalizes whenever the stored
// norm leaves [1/2, 2] by rescaling mat to unit norm.
[[nodiscard]] inline LogScaledProduct absorb(LogScaledProduct p, const Mat2c& m) {
  p.mat = m * p.mat;
  const double norm = operator_norm(p.mat);
  if (norm < 0.5 || norm > 2.0) {
    p.mat /= norm;
    p.log_scale += std::log(norm);
  }
  return p;
}

// log of the represented product's operator norm.
inline double log_norm(const LogScaledProduct& p) {
  return p.log_scale + std::log(operator_norm(p.mat));
}

// exp(log_scale) * mat; only safe when the scale is moderate.
inline Mat2c represented(const LogScaledProduct& p) {
  return std::exp(p.log_scale) * p.mat;
}

}  // namespace szegolab

#endif  // SZEGOLAB_MAT2_HPP
