#include "szegolab/cmv.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "szegolab/cocycle.hpp"

namespace szegolab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

CmvOperator build_cmv(const CoefficientSequence& coeffs, int size, CmvVariant variant) {
  if (size < 1) throw ConfigError("build_cmv: size must be positive");

  const std::int64_t offset = variant == CmvVariant::HalfLine ? 0 : size / 2;

  auto alpha = [&](std::int64_t n) -> Complex {
    if (variant == CmvVariant::HalfLine && n == -1) return Complex(-1.0, 0.0);
    return coeffs.alpha(n);
  };
  auto rho = [&](std::int64_t n) -> double {
    if (variant == CmvVariant::HalfLine && n == -1) return 0.0;
    return coeffs.rho_at(n);
  };

  CmvOperator op;
  op.size = size;
  op.variant = variant;
  op.entries = Eigen::MatrixXcd::Zero(size, size);

  const std::int64_t lo_n = -offset;
  const std::int64_t hi_n = size - 1 - offset;
  for (std::int64_t n = lo_n; n <= hi_n; ++n) {
    // Entries evaluated lazily so a cut column never touches coefficients
    // outside the covered window.
    auto put = [&](std::int64_t m, auto make) {
      if (m >= lo_n && m <= hi_n)
        op.entries(static_cast<int>(n + offset), static_cast<int>(m + offset)) = make();
    };
    if (((n % 2) + 2) % 2 == 0) {
      put(n - 1, [&] { return std::conj(alpha(n)) * rho(n - 1); });
      put(n, [&] { return -std::conj(alpha(n)) * alpha(n - 1); });
      put(n + 1, [&] { return std::conj(alpha(n + 1)) * rho(n); });
      put(n + 2, [&] { return Complex(rho(n + 1) * rho(n), 0.0); });
    } else {
      put(n - 2, [&] { return Complex(rho(n - 1) * rho(n - 2), 0.0); });
      put(n - 1, [&] { return -rho(n - 1) * alpha(n - 2); });
      put(n, [&] { return -std::conj(alpha(n)) * alpha(n - 1); });
      put(n + 1, [&] { return -rho(n) * alpha(n - 1); });
    }
  }
  return op;
}

EigenphaseList eigenphases(const CmvOperator& op) {
  if (op.size > 4096) throw ConfigError("eigenphases: size exceeds the desk-scale bound 4096");
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(op.entries, false);
  if (solver.info() != Eigen::Success)
    throw EigensolveFailure("eigenphases: dense eigensolve did not converge");

  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(static_cast<std::size_t>(op.size));
  for (int k = 0; k < op.size; ++k) {
    const Complex ev = solver.eigenvalues()(k);
    double phase = std::arg(ev);
    if (phase < 0.0) phase += kTwoPi;
    if (phase >= kTwoPi) phase = 0.0;
    pairs.emplace_back(phase, std::abs(ev));
  }
  std::sort(pairs.begin(), pairs.end());

  EigenphaseList out;
  for (const auto& [phase, modulus] : pairs) {
    out.phases.push_back(phase);
    out.moduli.push_back(modulus);
  }
  return out;
}

namespace {

// Discriminant evaluation split into magnitude (log scale) and the phase
// part; the product is kept renormalized so long periods cannot overflow.
struct DiscriminantValue {
  double log_abs_re;     // log |Re Delta|
  double realness;       // |Im w| / max(|w|, e^{-log_scale}); w the scaled trace
  bool real_ok;
  bool inside;           // Delta real and |Delta| <= 2
};

class DiscriminantEvaluator {
 public:
  DiscriminantEvaluator(const CoefficientSequence& coeffs, int period) {
    if (period < 1) throw ConfigError("discriminant_bands: period must be positive");
    const int copies = period % 2 == 1 ? 2 : 1;  // keep z^{p/2} single-valued
    effective_period_ = period * copies;
    alphas_.reserve(static_cast<std::size_t>(effective_period_));
    inv_rho_.reserve(static_cast<std::size_t>(effective_period_));
    for (int c = 0; c < copies; ++c)
      for (int k = 0; k < period; ++k) {
        const Complex a = coeffs.alpha(k);
        alphas_.push_back(a);
        inv_rho_.push_back(1.0 / std::sqrt(1.0 - std::norm(a)));
      }
  }

  int effective_period() const { return effective_period_; }

  DiscriminantValue eval(double theta) const {
    const Complex z = std::polar(1.0, theta);
    LogScaledProduct p;
    for (int k = 0; k < effective_period_; ++k) {
      const Complex a = alphas_[static_cast<std::size_t>(k)];
      const double c = inv_rho_[static_cast<std::size_t>(k)];
      Mat2c step;
      step << c * z, -c * std::conj(a), -c * (a * z), Complex(c, 0.0);
      p = absorb(p, step);
    }
    // w = e^{-i theta p/2} tr(mat); Delta = e^{log_scale} w.
    const Complex w =
        std::polar(1.0, -0.5 * theta * effective_period_) * (p.mat(0, 0) + p.mat(1, 1));
    DiscriminantValue v{};
    const double floor = std::exp(-p.log_scale);  // |Delta| = 1 reference in w units
    v.realness = std::abs(w.imag()) / std::max(std::abs(w), floor);
    v.real_ok = v.realness <= kRealTol;
    v.log_abs_re = p.log_scale + std::log(std::abs(w.real()));
    // closure of {|Delta| <= 2}: the epsilon keeps tangential band
    // touchings (Delta = +-2 exactly, e.g. at a doubled odd period) from
    // splitting on roundoff
    v.inside = v.real_ok && v.log_abs_re <= std::log(2.0) + kEdgeTol;
    return v;
  }

  static constexpr double kRealTol = 1e-8;
  static constexpr double kEdgeTol = 1e-12;

 private:
  int effective_period_ = 0;
  std::vector<Complex> alphas_;
  std::vector<double> inv_rho_;
};

}  // namespace

BandSpectrum discriminant_bands(const CoefficientSequence& coeffs, int period,
                                int grid_size) {
  if (grid_size < 16) throw ConfigError("discriminant_bands: grid too coarse");
  const DiscriminantEvaluator disc(coeffs, period);

  std::vector<bool> inside(static_cast<std::size_t>(grid_size));
  int real_failures = 0;
  for (int k = 0; k < grid_size; ++k) {
    const DiscriminantValue v = disc.eval(kTwoPi * k / grid_size);
    if (!v.real_ok) ++real_failures;
    inside[static_cast<std::size_t>(k)] = v.inside;
  }
  if (real_failures * 1000 > grid_size)
    throw NonRealDiscriminant(
        "discriminant_bands: realness check failed on more than 0.1% of grid points");

  BandSpectrum out;
  out.period = disc.effective_period();

  const int inside_count = static_cast<int>(std::count(inside.begin(), inside.end(), true));
  if (inside_count == grid_size) {
    out.bands = {{0.0, kTwoPi}};
    out.total_measure = kTwoPi;
    return out;
  }
  if (inside_count == 0) return out;

  // Band edges by bisection of log|Re Delta| - log 2 between flips.
  auto refine = [&](double lo, double hi, bool lo_inside) {
    for (int it = 0; it < 60 && hi - lo > 1e-10; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (disc.eval(mid).inside == lo_inside)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi);
  };

  struct Edge {
    double theta;
    bool opens;  // entering the band as theta increases
  };
  std::vector<Edge> edges;
  for (int k = 0; k < grid_size; ++k) {
    const int k1 = (k + 1) % grid_size;
    const bool a = inside[static_cast<std::size_t>(k)];
    const bool b = inside[static_cast<std::size_t>(k1)];
    if (a == b) continue;
    const double lo = kTwoPi * k / grid_size;
    const double hi = kTwoPi * (k + 1) / grid_size;
    edges.push_back({refine(lo, hi, a), !a});
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& x, const Edge& y) { return x.theta < y.theta; });

  // Walk [0, 2pi] with the known state at theta = 0; a band through the
  // origin is emitted as two arcs.
  double open_at = inside[0] ? 0.0 : -1.0;
  for (const Edge& e : edges) {
    if (e.opens) {
      open_at = e.theta;
    } else if (open_at >= 0.0) {
      out.bands.emplace_back(open_at, e.theta);
      open_at = -1.0;
    }
  }
  if (open_at >= 0.0) out.bands.emplace_back(open_at, kTwoPi);

  for (const auto& [lo, hi] : out.bands) out.total_measure += hi - lo;
  return out;
}

bool band_contains(const BandSpectrum& bands, double theta) {
  for (const auto& [lo, hi] : bands.bands)
    if (theta >= lo && theta <= hi) return true;
  return false;
}

}  // namespace szegolab
