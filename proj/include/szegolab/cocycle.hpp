#ifndef SZEGOLAB_COCYCLE_HPP
#define SZEGOLAB_COCYCLE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "szegolab/mat2.hpp"
#include "szegolab/verblunsky.hpp"

namespace szegolab {

// One-step Szego transfer matrix
//   (1 - |f|^2)^{-1/2} * ( z   -conj(f) ;  -f z   1 ),
// an element of U(1,1) with determinant z.
Mat2c szego_one_step(Complex f, Complex z);

// A Verblunsky map and a base sequence evaluated at a fixed spectral
// parameter z on the unit circle. The map and sequence must outlive the
// cocycle; evaluation is pure.
class SzegoCocycle {
 public:
  SzegoCocycle(const VerblunskyMap& f, const SymbolSequence& seq, Complex z);

  Complex z() const { return z_; }
  const VerblunskyMap& map() const { return *f_; }
  const SymbolSequence& sequence() const { return *seq_; }

  Mat2c one_step(std::int64_t n) const;

  // Ordered iterate over n steps starting at `base`:
  //   n > 0 : A(base+n-1) ... A(base)
  //   n = 0 : identity
  //   n < 0 : A(base+n)^{-1} ... A(base-1)^{-1}
  LogScaledProduct transfer(std::int64_t n, std::int64_t base = 0) const;

 private:
  const VerblunskyMap* f_;
  const SymbolSequence* seq_;
  Complex z_;
};

struct LyapunovEstimate {
  Complex z;
  std::int64_t n = 0;
  double gamma = 0.0;   // mean of per-sample (1/n) log ||A(n,.)||, nats/step
  double defect = 0.0;  // max - min over samples; uniformity diagnostic
  int samples = 0;
};

// Stand-in for "all omega in Omega": phase-shifted sequences for rotation
// codings, base offsets into one long orbit for substitution and periodic
// specs. Windows are loaded one sample at a time so long runs stay cheap.
class SampleWindows {
 public:
  SampleWindows(const VerblunskyMap& f, const SubshiftSpec& spec, std::int64_t n,
                int samples, std::int64_t horizon = SymbolSequence::kDefaultHorizon);

  int samples() const { return samples_; }
  std::int64_t steps() const { return n_; }

  // Coefficient window of sample s: alphas[k] = alpha_{base_s + k} and
  // inv_rho[k] = (1 - |alpha|^2)^{-1/2}, k in [0, n).
  void load(int s, std::vector<Complex>& alphas, std::vector<double>& inv_rho) const;

 private:
  const VerblunskyMap* f_;
  std::int64_t n_;
  int samples_;
  std::vector<SymbolSequence> sequences_;  // one per phase, or a single orbit
  std::vector<std::int64_t> offsets_;      // base offset per sample
};

// (1/n) log ||A(n)|| over one coefficient window at parameter z.
double sample_log_growth(std::span<const Complex> alphas, std::span<const double> inv_rho,
                         Complex z);

// Mean/defect Lyapunov estimate sampled over phases or base offsets.
LyapunovEstimate lyapunov(const VerblunskyMap& f, const SubshiftSpec& spec, Complex z,
                          std::int64_t n, int samples,
                          std::int64_t horizon = SymbolSequence::kDefaultHorizon);

// Estimates at each n in an increasing list; one pass per sample with
// checkpoints, so the estimates share their orbit windows.
std::vector<LyapunovEstimate> uniformity_profile(const VerblunskyMap& f,
                                                 const SubshiftSpec& spec, Complex z,
                                                 const std::vector<std::int64_t>& n_list,
                                                 int samples,
                                                 std::int64_t horizon = SymbolSequence::kDefaultHorizon);

// Numerical stable/unstable directions of the exponential dichotomy.
struct DichotomyDirections {
  Vec2c stable;    // contracted by forward iterates
  Vec2c unstable;  // contracted by backward iterates
  double decay_rate_estimate = 0.0;
};

// Right-singular-vector extraction at finite n. Throws DegenerateSplit
// when the singular values of the forward product are within a factor 2.
DichotomyDirections dichotomy_directions(const SzegoCocycle& c, std::int64_t n);

}  // namespace szegolab

#endif  // SZEGOLAB_COCYCLE_HPP
