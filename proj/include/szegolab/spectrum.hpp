#ifndef SZEGOLAB_SPECTRUM_HPP
#define SZEGOLAB_SPECTRUM_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "szegolab/cmv.hpp"
#include "szegolab/cocycle.hpp"

namespace szegolab {

// Trichotomy at one spectral parameter:
//   Resolvent         gamma clearly positive with small spread (uniform)
//   SpectrumCandidate gamma below the resolution floor
//   Undecided         gamma positive but spread large (non-uniform signature)
enum class PointClass { Resolvent, SpectrumCandidate, Undecided };

struct SpectrumThresholds {
  double gamma_floor = 0.0;  // <= 0 means the default 10/n
  double defect_cap = 0.5;
};

PointClass classify_estimate(const LyapunovEstimate& est, double gamma_floor,
                             double defect_cap);

PointClass classify_point(const VerblunskyMap& f, const SubshiftSpec& spec, Complex z,
                          std::int64_t n, int samples,
                          SpectrumThresholds thresholds = {},
                          std::int64_t horizon = SymbolSequence::kDefaultHorizon);

struct SpectrumRow {
  double theta = 0.0;
  double gamma = 0.0;
  double defect = 0.0;
  PointClass cls = PointClass::Undecided;
};

struct SpectrumReport {
  int grid_size = 0;
  std::int64_t steps = 0;
  int samples = 0;
  double gamma_floor = 0.0;
  double defect_cap = 0.0;
  std::vector<SpectrumRow> rows;  // sorted by theta
  double measure_estimate = 0.0;  // (2pi/grid) * #(candidates + undecided)
  std::string sampling_note;
};

// classify_point on the grid theta_k = 2 pi k / gridSize. Undecided counts
// toward the measure estimate (conservative upper bound).
SpectrumReport scan(const VerblunskyMap& f, const SubshiftSpec& spec, int grid_size,
                    std::int64_t n, int samples,
                    SpectrumThresholds thresholds = {},
                    std::int64_t horizon = SymbolSequence::kDefaultHorizon);

// Cross-validation of the cocycle classification against a periodic
// approximant's band spectrum.
struct BandAgreement {
  double agreement = 0.0;  // fraction of grid points where the proxies match
  std::vector<std::pair<double, double>> disagreement_arcs;
};

BandAgreement compare_with_bands(const SpectrumReport& report, const BandSpectrum& bands);

}  // namespace szegolab

#endif  // SZEGOLAB_SPECTRUM_HPP
