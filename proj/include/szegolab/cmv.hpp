#ifndef SZEGOLAB_CMV_HPP
#define SZEGOLAB_CMV_HPP

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "szegolab/verblunsky.hpp"

namespace szegolab {

enum class CmvVariant { HalfLine, ExtendedTruncated };

// Finite section of the five-diagonal canonical matrix built from
// (alpha_n, rho_n). HalfLine uses the alpha_{-1} = -1 convention and cuts
// at the top-left corner; ExtendedTruncated cuts a centered window of the
// two-sided operator.
struct CmvOperator {
  int size = 0;
  CmvVariant variant = CmvVariant::HalfLine;
  Eigen::MatrixXcd entries;
};

CmvOperator build_cmv(const CoefficientSequence& coeffs, int size, CmvVariant variant);

// Eigenvalue arguments sorted into [0, 2pi), moduli carried alongside
// (near 1 except for truncation-edge states).
struct EigenphaseList {
  std::vector<double> phases;
  std::vector<double> moduli;
};

EigenphaseList eigenphases(const CmvOperator& op);

// Union of arcs where the one-period discriminant is real with modulus
// <= 2; the band spectrum of the periodized coefficient sequence.
struct BandSpectrum {
  int period = 0;  // even; odd inputs are doubled
  std::vector<std::pair<double, double>> bands;  // disjoint, sorted arcs
  double total_measure = 0.0;
};

// Evaluates Delta(theta) = tr( e^{-i theta p/2} A_{e^{i theta}}(p-1) ... A(0) )
// on a theta grid and extracts {|Delta| <= 2} with band edges refined by
// bisection to 1e-10. The caller guarantees the coefficients are periodic
// with the given period over the evaluation window.
BandSpectrum discriminant_bands(const CoefficientSequence& coeffs, int period,
                                int grid_size);

bool band_contains(const BandSpectrum& bands, double theta);

}  // namespace szegolab

#endif  // SZEGOLAB_CMV_HPP
