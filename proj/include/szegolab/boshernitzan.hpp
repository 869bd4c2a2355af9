#ifndef SZEGOLAB_BOSHERNITZAN_HPP
#define SZEGOLAB_BOSHERNITZAN_HPP

#include <cstdint>
#include <vector>

#include "szegolab/symbolic.hpp"

namespace szegolab {

// eta(n) = n * (minimum empirical frequency over observed length-n words).
double eta(const SymbolSequence& seq, int n, std::int64_t sample_length);

enum class BoshVerdict { SupportsB, Weak, Inconclusive };

// Finite-length stand-in for "(B) holds along (l_n)": SupportsB needs
// eta >= threshold on at least half of the tested lengths including the
// largest one.
struct BoshReport {
  std::vector<int> lengths;
  std::vector<double> eta_values;
  BoshVerdict verdict = BoshVerdict::Inconclusive;
  double constant_estimate = 0.0;  // largest C the qualifying lengths support
  std::int64_t sample_length = 0;
  double threshold = 0.0;
};

BoshReport bosh_scan(const SymbolSequence& seq, const std::vector<int>& lengths,
                     std::int64_t sample_length, double threshold = 0.1);

const char* to_string(BoshVerdict v);

}  // namespace szegolab

#endif  // SZEGOLAB_BOSHERNITZAN_HPP
