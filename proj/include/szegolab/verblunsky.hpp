#ifndef SZEGOLAB_VERBLUNSKY_HPP
#define SZEGOLAB_VERBLUNSKY_HPP

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "szegolab/symbolic.hpp"

namespace szegolab {

using Complex = std::complex<double>;

// Uniform margin keeping 1/sqrt(1-|alpha|^2) finite.
inline constexpr double kAlphaBound = 1.0 - 1e-6;

// Locally constant map: the coefficient at position n depends only on the
// window word seq(n-N) ... seq(n+N).
class VerblunskyMap {
 public:
  VerblunskyMap(int window, std::map<Word, Complex> table,
                std::optional<Complex> fallback = std::nullopt);

  // N = 0 table keyed by single symbols.
  static VerblunskyMap from_symbols(const std::map<Symbol, Complex>& values);
  // Constant map (empty table, fallback only).
  static VerblunskyMap constant(Complex value);

  int window() const { return window_; }
  const std::map<Word, Complex>& table() const { return table_; }
  const std::optional<Complex>& fallback() const { return fallback_; }

  Complex evaluate(const SymbolSequence& seq, std::int64_t n) const;

 private:
  int window_;
  std::map<Word, Complex> table_;
  std::optional<Complex> fallback_;
};

// alpha_n and rho_n = sqrt(1 - |alpha_n|^2) for n in [lo, hi].
struct CoefficientSequence {
  std::int64_t lo = 0;
  std::vector<Complex> values;
  std::vector<double> rho;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(values.size()) - 1; }
  bool covers(std::int64_t n) const { return n >= lo && n <= hi(); }

  Complex alpha(std::int64_t n) const {
    if (!covers(n))
      throw InsufficientCoefficients("coefficient sequence: index outside covered range");
    return values[static_cast<std::size_t>(n - lo)];
  }
  double rho_at(std::int64_t n) const {
    if (!covers(n))
      throw InsufficientCoefficients("coefficient sequence: index outside covered range");
    return rho[static_cast<std::size_t>(n - lo)];
  }
};

CoefficientSequence coefficient_sequence(const VerblunskyMap& f, const SymbolSequence& seq,
                                         std::int64_t lo, std::int64_t hi);

}  // namespace szegolab

#endif  // SZEGOLAB_VERBLUNSKY_HPP
