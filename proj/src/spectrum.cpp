#include "szegolab/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace szegolab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

const char* kSamplingNote =
    "uniformity sampled over phase shifts / base offsets of one long orbit; "
    "the defect over samples stands in for the sup over the hull";

double resolved_floor(const SpectrumThresholds& t, std::int64_t n) {
  return t.gamma_floor > 0.0 ? t.gamma_floor : 10.0 / static_cast<double>(n);
}

}  // namespace

PointClass classify_estimate(const LyapunovEstimate& est, double gamma_floor,
                             double defect_cap) {
  if (est.gamma < gamma_floor) return PointClass::SpectrumCandidate;
  if (est.defect <= defect_cap * est.gamma) return PointClass::Resolvent;
  return PointClass::Undecided;
}

PointClass classify_point(const VerblunskyMap& f, const SubshiftSpec& spec, Complex z,
                          std::int64_t n, int samples, SpectrumThresholds thresholds,
                          std::int64_t horizon) {
  const double floor = resolved_floor(thresholds, n);
  if (!(floor > 0.0 && thresholds.defect_cap > 0.0))
    throw ConfigError("classify_point: thresholds must be positive");
  const LyapunovEstimate est = lyapunov(f, spec, z, n, samples, horizon);
  return classify_estimate(est, floor, thresholds.defect_cap);
}

SpectrumReport scan(const VerblunskyMap& f, const SubshiftSpec& spec, int grid_size,
                    std::int64_t n, int samples, SpectrumThresholds thresholds,
                    std::int64_t horizon) {
  if (grid_size < 64) throw ConfigError("scan: gridSize must be at least 64");
  if (n < 1000) throw ConfigError("scan: needs n >= 1e3");
  if (samples < 8) throw ConfigError("scan: needs samples >= 8");
  const double floor = resolved_floor(thresholds, n);
  if (!(floor > 0.0 && thresholds.defect_cap > 0.0))
    throw ConfigError("scan: thresholds must be positive");

  // Sample windows are z-independent; load each once and sweep the grid.
  const SampleWindows windows(f, spec, n, samples, horizon);
  std::vector<Complex> zs(static_cast<std::size_t>(grid_size));
  for (int k = 0; k < grid_size; ++k)
    zs[static_cast<std::size_t>(k)] = std::polar(1.0, kTwoPi * k / grid_size);

  std::vector<double> sum(static_cast<std::size_t>(grid_size), 0.0);
  std::vector<double> lo(static_cast<std::size_t>(grid_size), 0.0);
  std::vector<double> hi(static_cast<std::size_t>(grid_size), 0.0);
  std::vector<Complex> alphas;
  std::vector<double> inv_rho;
  for (int s = 0; s < samples; ++s) {
    windows.load(s, alphas, inv_rho);
    for (int k = 0; k < grid_size; ++k) {
      const double g = sample_log_growth(alphas, inv_rho, zs[static_cast<std::size_t>(k)]);
      auto idx = static_cast<std::size_t>(k);
      sum[idx] += g;
      if (s == 0) {
        lo[idx] = hi[idx] = g;
      } else {
        lo[idx] = std::min(lo[idx], g);
        hi[idx] = std::max(hi[idx], g);
      }
    }
  }

  SpectrumReport report;
  report.grid_size = grid_size;
  report.steps = n;
  report.samples = samples;
  report.gamma_floor = floor;
  report.defect_cap = thresholds.defect_cap;
  report.sampling_note = kSamplingNote;
  report.rows.reserve(static_cast<std::size_t>(grid_size));

  int spectral = 0;
  for (int k = 0; k < grid_size; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    SpectrumRow row;
    row.theta = kTwoPi * k / grid_size;
    row.gamma = sum[idx] / samples;
    row.defect = hi[idx] - lo[idx];
    LyapunovEstimate est{zs[idx], n, row.gamma, row.defect, samples};
    row.cls = classify_estimate(est, floor, thresholds.defect_cap);
    if (row.cls != PointClass::Resolvent) ++spectral;
    report.rows.push_back(row);
  }
  report.measure_estimate = kTwoPi * spectral / grid_size;
  return report;
}

BandAgreement compare_with_bands(const SpectrumReport& report, const BandSpectrum& bands) {
  BandAgreement out;
  const int grid = report.grid_size;
  int matches = 0;
  std::vector<bool> mismatch(static_cast<std::size_t>(grid), false);
  for (int k = 0; k < grid; ++k) {
    const SpectrumRow& row = report.rows[static_cast<std::size_t>(k)];
    const bool spectral = row.cls != PointClass::Resolvent;
    const bool in_band = band_contains(bands, row.theta);
    if (spectral == in_band)
      ++matches;
    else
      mismatch[static_cast<std::size_t>(k)] = true;
  }
  out.agreement = static_cast<double>(matches) / grid;

  for (int k = 0; k < grid;) {
    if (!mismatch[static_cast<std::size_t>(k)]) {
      ++k;
      continue;
    }
    int end = k;
    while (end + 1 < grid && mismatch[static_cast<std::size_t>(end + 1)]) ++end;
    out.disagreement_arcs.emplace_back(kTwoPi * k / grid, kTwoPi * end / grid);
    k = end + 1;
  }
  return out;
}

}  // namespace szegolab
