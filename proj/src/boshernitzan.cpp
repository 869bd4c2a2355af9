#include "szegolab/boshernitzan.hpp"

#include <algorithm>

namespace szegolab {

double eta(const SymbolSequence& seq, int n, std::int64_t sample_length) {
  const FrequencyTable table = cylinder_frequencies(seq, n, sample_length);
  return static_cast<double>(n) * table.min_frequency();
}

BoshReport bosh_scan(const SymbolSequence& seq, const std::vector<int>& lengths,
                     std::int64_t sample_length, double threshold) {
  if (lengths.empty()) throw ConfigError("bosh_scan: empty length list");
  for (std::size_t i = 0; i + 1 < lengths.size(); ++i)
    if (lengths[i] >= lengths[i + 1])
      throw ConfigError("bosh_scan: lengths must be strictly increasing");

  BoshReport report;
  report.lengths = lengths;
  report.sample_length = sample_length;
  report.threshold = threshold;
  for (int n : lengths) report.eta_values.push_back(eta(seq, n, sample_length));

  int qualifying = 0;
  double min_qualifying = 0.0;
  for (double e : report.eta_values)
    if (e >= threshold) {
      min_qualifying = qualifying == 0 ? e : std::min(min_qualifying, e);
      ++qualifying;
    }
  const bool largest_ok = report.eta_values.back() >= threshold;

  if (largest_ok && 2 * qualifying >= static_cast<int>(lengths.size()))
    report.verdict = BoshVerdict::SupportsB;
  else if (qualifying > 0)
    report.verdict = BoshVerdict::Weak;
  else
    report.verdict = BoshVerdict::Inconclusive;

  // The best constant the data supports along the qualifying lengths; with
  // none qualifying, fall back to the floor over all tested lengths.
  report.constant_estimate =
      qualifying > 0 ? min_qualifying
                     : *std::min_element(report.eta_values.begin(), report.eta_values.end());
  return report;
}

const char* to_string(BoshVerdict v) {
  switch (v) {
    case BoshVerdict::SupportsB: return "SupportsB";
    case BoshVerdict::Weak: return "Weak";
    case BoshVerdict::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

}  // namespace szegolab
