// Acceptance suite: one pass/fail line per criterion, exit 0 only if all
// criteria hold. argv[1] names the CLI binary (used by the determinism
// criterion).

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "szegolab/commands.hpp"

using namespace szegolab;

namespace {

const double kTwoPi = 2.0 * M_PI;
const double kLnSqrt3 = std::log(std::sqrt(3.0));

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int g_failures = 0;

void run_criterion(int number, const std::string& name, double budget_seconds,
                   const std::function<void(Check&)>& body) {
  Check check;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(check);
  } catch (const std::exception& e) {
    check.expect(false, std::string("exception: ") + e.what());
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  check.expect(elapsed < budget_seconds, "runtime " + std::to_string(elapsed) +
                                             " s exceeds budget " +
                                             std::to_string(budget_seconds) + " s");
  if (!check.ok) ++g_failures;
  std::printf("%s criterion %d: %s (%.1f s)%s%s\n", check.ok ? "PASS" : "FAIL", number,
              name.c_str(), elapsed, check.detail.empty() ? "" : " -- ",
              check.detail.c_str());
  std::fflush(stdout);
}

SubshiftSpec golden_sturmian() {
  RotationCodingParams rot;
  rot.quotient_pattern = {1};
  rot.depth = 35;
  rot.betas = {1.0 - (std::sqrt(5.0) - 1.0) / 2.0};
  return SubshiftSpec(rot);
}

SubshiftSpec constant_spec() { return SubshiftSpec(PeriodicParams{"a"}); }

VerblunskyMap golden_map() {
  return VerblunskyMap::from_symbols({{'a', 0.5}, {'b', -0.5}});
}

CoefficientSequence periodized_golden(int period) {
  const SymbolSequence seq(golden_sturmian(), 10'000);
  return approximant_coefficients(golden_map(), seq, period);
}

CoefficientSequence periodized_constant_half() {
  CoefficientSequence cs;
  cs.lo = 0;
  cs.values = {Complex(0.5, 0.0)};
  cs.rho = {std::sqrt(0.75)};
  return cs;
}

double vector_gap(const Vec2c& u, const Vec2c& v) {
  // min over phases of ||u - e^{i phi} v|| for unit vectors
  const double inner = std::abs(u.dot(v)) / (u.norm() * v.norm());
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * inner));
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// ---------------------------------------------------------------------------

void criterion1_group_structure(Check& check) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> radius(0.0, 0.999);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  const Mat2c j = j_form();
  double worst_j = 0.0, worst_det = 0.0, worst_imag = 0.0, worst_unit_det = 0.0;
  for (int trial = 0; trial < 10'000; ++trial) {
    const Complex f = std::polar(radius(rng), angle(rng));
    const Complex z = std::polar(1.0, angle(rng));
    const Mat2c a = szego_one_step(f, z);
    worst_j = std::max(worst_j, (a.adjoint() * j * a - j).cwiseAbs().maxCoeff());
    worst_det = std::max(worst_det, std::abs(a.determinant() - z));
    const Mat2c real_form = conjugate_to_sl2r(normalize_det(a));
    worst_imag = std::max(worst_imag, real_form.imag().cwiseAbs().maxCoeff());
    worst_unit_det =
        std::max(worst_unit_det, std::abs(real_form.determinant() - Complex(1.0, 0.0)));
  }
  check.expect(worst_j <= 1e-9, "m*Jm defect " + std::to_string(worst_j));
  check.expect(worst_det <= 1e-9, "det defect " + std::to_string(worst_det));
  check.expect(worst_imag <= 1e-9, "imaginary residue " + std::to_string(worst_imag));
  check.expect(worst_unit_det <= 1e-9, "det-1 defect " + std::to_string(worst_unit_det));
}

void criterion2_free_case(Check& check) {
  const auto zero = VerblunskyMap::constant(0.0);
  const auto spec = constant_spec();
  const std::int64_t n = 1'000'000;
  const int samples = 8;

  // hoisted evaluation of the 16 grid points (same aggregation as lyapunov)
  const SampleWindows windows(zero, spec, n, samples);
  std::vector<Complex> zs;
  for (int k = 0; k < 16; ++k) zs.push_back(std::polar(1.0, kTwoPi * k / 16));
  std::vector<double> sum(16, 0.0), lo(16, 0.0), hi(16, 0.0);
  std::vector<Complex> alphas;
  std::vector<double> inv_rho;
  for (int s = 0; s < samples; ++s) {
    windows.load(s, alphas, inv_rho);
    for (int k = 0; k < 16; ++k) {
      const double g = sample_log_growth(alphas, inv_rho, zs[static_cast<std::size_t>(k)]);
      sum[static_cast<std::size_t>(k)] += g;
      if (s == 0)
        lo[static_cast<std::size_t>(k)] = hi[static_cast<std::size_t>(k)] = g;
      else {
        lo[static_cast<std::size_t>(k)] = std::min(lo[static_cast<std::size_t>(k)], g);
        hi[static_cast<std::size_t>(k)] = std::max(hi[static_cast<std::size_t>(k)], g);
      }
    }
  }
  for (int k = 0; k < 16; ++k) {
    check.expect(std::abs(sum[static_cast<std::size_t>(k)] / samples) <= 1e-12,
                 "gamma nonzero at grid point " + std::to_string(k));
    check.expect(hi[static_cast<std::size_t>(k)] - lo[static_cast<std::size_t>(k)] == 0.0,
                 "defect nonzero at grid point " + std::to_string(k));
  }

  // the public operation agrees at one point
  const auto est = lyapunov(zero, spec, zs[3], n, samples);
  check.expect(std::abs(est.gamma) <= 1e-12, "lyapunov() gamma nonzero");
  check.expect(est.defect == 0.0, "lyapunov() defect nonzero");

  const auto report = scan(zero, spec, 64, 10'000, samples);
  check.expect(report.measure_estimate == kTwoPi,
               "free measure " + std::to_string(report.measure_estimate));
}

void criterion3_constant_oracle(Check& check) {
  const auto half = VerblunskyMap::constant(0.5);
  const auto spec = constant_spec();

  const auto est = lyapunov(half, spec, 1.0, 100'000, 8);
  check.expect(std::abs(est.gamma - kLnSqrt3) <= 1e-4,
               "gamma(1) = " + std::to_string(est.gamma));

  const auto bands = discriminant_bands(periodized_constant_half(), 1, 8192);
  check.expect(bands.bands.size() == 1, "expected a single band");
  if (bands.bands.size() == 1) {
    check.expect(std::abs(bands.bands[0].first - M_PI / 3.0) <= 1e-8,
                 "lower edge " + std::to_string(bands.bands[0].first));
    check.expect(std::abs(bands.bands[0].second - 5.0 * M_PI / 3.0) <= 1e-8,
                 "upper edge " + std::to_string(bands.bands[0].second));
  }

  const auto report = scan(half, spec, 1024, 10'000, 8);
  check.expect(std::abs(report.measure_estimate - 4.0 * M_PI / 3.0) <= 0.1,
               "measure " + std::to_string(report.measure_estimate));
  const auto agreement = compare_with_bands(report, bands);
  check.expect(agreement.agreement >= 0.95,
               "band agreement " + std::to_string(agreement.agreement));

  // eigenphases of the size-512 truncation
  const SymbolSequence seq(spec, 10'000);
  const auto coeffs = coefficient_sequence(half, seq, 0, 511);
  const auto list = eigenphases(build_cmv(coeffs, 512, CmvVariant::HalfLine));
  int inside = 0;
  for (double phase : list.phases)
    if (phase >= M_PI / 3.0 - 0.05 && phase <= 5.0 * M_PI / 3.0 + 0.05) ++inside;
  check.expect(inside >= static_cast<int>(0.95 * 512.0),
               "only " + std::to_string(inside) + "/512 phases in the band window");
}

void criterion4_cmv_structure(Check& check) {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> radius(0.0, 0.95);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    CoefficientSequence cs;
    cs.lo = 0;
    for (int k = 0; k < 64; ++k) {
      const Complex a = std::polar(radius(rng), angle(rng));
      cs.values.push_back(a);
      cs.rho.push_back(std::sqrt(1.0 - std::norm(a)));
    }
    const auto op = build_cmv(cs, 64, CmvVariant::HalfLine);
    for (int jc = 2; jc < 62; ++jc) {
      worst = std::max(worst, std::abs(op.entries.col(jc).norm() - 1.0));
      for (int jc2 = jc + 1; jc2 < 62; ++jc2)
        worst = std::max(worst, std::abs(op.entries.col(jc).dot(op.entries.col(jc2))));
    }
    // bit-for-formula identity on the displayed entry
    if (op.entries(0, 1) != std::conj(cs.alpha(1)) * cs.rho_at(0)) {
      check.expect(false, "entry (0,1) differs from conj(alpha_1) rho_0");
      return;
    }
  }
  check.expect(worst <= 1e-10, "orthonormality defect " + std::to_string(worst));
}

void criterion5_boshernitzan(Check& check) {
  SymbolSequence seq(golden_sturmian(), 1'100'000);
  const std::vector<int> fib{1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233};
  const auto report = bosh_scan(seq, fib, 1'000'000, 0.1);
  check.expect(report.verdict == BoshVerdict::SupportsB, "golden verdict not SupportsB");
  for (std::size_t i = 0; i < fib.size(); ++i)
    check.expect(report.eta_values[i] >= 0.2,
                 "eta(" + std::to_string(fib[i]) + ") = " +
                     std::to_string(report.eta_values[i]) + " below 0.2");

  RotationCodingParams big;
  big.quotient_pattern = {1, 50};
  big.depth = 6;
  big.betas = {0.3};
  SymbolSequence rare(SubshiftSpec(big), 1'100'000);
  const auto dip =
      bosh_scan(rare, {1, 51, 52, 104, 2651, 2703, 5406}, 1'000'000, 0.1);
  double min_eta = 1e300;
  for (double e : dip.eta_values) min_eta = std::min(min_eta, e);
  check.expect(min_eta < 0.05, "large-quotient eta floor " + std::to_string(min_eta));
}

void criterion6_main_trend(Check& check) {
  // (a) band measures of the convergent approximants. The regression
  // values were frozen from the band computation run as its own oracle
  // (grid 32768, window [1, q_k]).
  const double frozen[5] = {2.556003277945, 2.052314531435, 1.748512100479,
                            1.475164211036, 1.271076085992};
  std::vector<double> measures;
  for (int order = 4; order <= 8; ++order) {
    const int period = approximant_period(golden_sturmian(), order);
    const auto bands = discriminant_bands(periodized_golden(period), period, 32768);
    measures.push_back(bands.total_measure);
    check.expect(std::abs(bands.total_measure - frozen[order - 4]) <= 1e-6,
                 "order " + std::to_string(order) + " measure " +
                     std::to_string(bands.total_measure) + " drifted from frozen " +
                     std::to_string(frozen[order - 4]));
  }
  for (std::size_t k = 1; k < measures.size(); ++k)
    check.expect(measures[k] < measures[k - 1],
                 "band measure not strictly decreasing at order " + std::to_string(4 + k));
  check.expect(measures.back() < 0.6 * measures.front(),
               "order-8 measure " + std::to_string(measures.back()) + " not below 60% of " +
                   std::to_string(measures.front()));

  // (b) spectrum-scan measure shrinks from n = 1e3 to n = 1e4; the two
  // values are also pinned near their frozen oracle runs
  const auto map = golden_map();
  const auto spec = golden_sturmian();
  const auto coarse = scan(map, spec, 1024, 1'000, 8);
  const auto fine = scan(map, spec, 1024, 10'000, 8);
  check.expect(fine.measure_estimate < coarse.measure_estimate,
               "measure did not shrink: " + std::to_string(coarse.measure_estimate) +
                   " -> " + std::to_string(fine.measure_estimate));
  check.expect(std::abs(coarse.measure_estimate - 1.417398) <= 0.05,
               "n=1e3 measure drifted: " + std::to_string(coarse.measure_estimate));
  check.expect(std::abs(fine.measure_estimate - 0.705631) <= 0.05,
               "n=1e4 measure drifted: " + std::to_string(fine.measure_estimate));

  // (c) the non-uniform class is nearly empty at n = 1e4
  int undecided = 0;
  for (const auto& row : fine.rows)
    if (row.cls == PointClass::Undecided) ++undecided;
  check.expect(undecided < static_cast<int>(0.02 * 1024.0),
               std::to_string(undecided) + " undecided points");
}

void criterion7_dichotomy(Check& check) {
  SymbolSequence seq(constant_spec(), 10'000);
  const auto half = VerblunskyMap::constant(0.5);
  const SzegoCocycle hyperbolic(half, seq, 1.0);
  const auto d = dichotomy_directions(hyperbolic, 500);

  Vec2c plus, minus;
  plus << Complex(1.0, 0.0), Complex(1.0, 0.0);
  minus << Complex(1.0, 0.0), Complex(-1.0, 0.0);
  check.expect(vector_gap(d.stable, plus) <= 1e-6, "stable direction off");
  check.expect(vector_gap(d.unstable, minus) <= 1e-6, "unstable direction off");
  check.expect(std::abs(d.decay_rate_estimate - kLnSqrt3) <= 1e-4,
               "decay rate " + std::to_string(d.decay_rate_estimate));

  // contraction bound ||A(n) stable_n|| = sigma_2(A(n)) <= e^{-rate/2 n}
  for (std::int64_t n : {100, 250, 500, 1000}) {
    const double log_contraction = -log_norm(hyperbolic.transfer(n));
    check.expect(log_contraction <= -(d.decay_rate_estimate / 2.0) * static_cast<double>(n),
                 "contraction bound fails at n = " + std::to_string(n));
  }

  const SzegoCocycle elliptic(half, seq, -1.0);
  bool threw = false;
  try {
    (void)dichotomy_directions(elliptic, 100);
  } catch (const DegenerateSplit&) {
    threw = true;
  }
  check.expect(threw, "z = -1 did not raise DegenerateSplit");
}

void criterion8_cli_determinism(Check& check, const std::string& cli) {
  namespace fs = std::filesystem;
  if (cli.empty() || !fs::exists(cli)) {
    check.expect(false, "CLI binary path not supplied");
    return;
  }
  const fs::path root = fs::temp_directory_path() / "szegolab_acceptance_cli";
  fs::remove_all(root);
  fs::create_directories(root);

  const Json config = Json::parse(R"({
    "subshift": {"kind": "rotation", "quotients": [1], "depth": 35,
                 "betas": [0.3819660112501051], "theta": 0.0},
    "map": {"window": 0,
            "entries": [{"word": "a", "re": 0.5, "im": 0.0},
                        {"word": "b", "re": -0.5, "im": 0.0}]},
    "bosh": {"lengths": [2, 3, 5, 8], "sampleLength": 20000},
    "lyapunov": {"grid": 4, "steps": 2000, "samples": 8},
    "spectrum": {"grid": 64, "steps": 1000, "samples": 8,
                 "approximantOrder": 4, "bandGrid": 1024},
    "cmvEig": {"size": 48, "dumpMatrix": true}
  })");
  const std::string config_path = (root / "config.json").string();
  std::ofstream(config_path) << config.dump(2) << "\n";

  for (const std::string sub : {"bosh", "lyapunov", "spectrum", "classify-beta", "cmv-eig"}) {
    const fs::path dir1 = root / (sub + "_run1");
    const fs::path dir2 = root / (sub + "_run2");
    for (const fs::path& dir : {dir1, dir2}) {
      const std::string cmdline = "\"" + cli + "\" " + sub + " --config \"" + config_path +
                                  "\" --out \"" + dir.string() + "\" > /dev/null 2>&1";
      const int rc = std::system(cmdline.c_str());
      check.expect(rc == 0, sub + " exited with status " + std::to_string(rc));
    }
    // byte-compare every produced file
    if (!fs::exists(dir1)) continue;
    std::size_t compared = 0;
    for (const auto& entry : fs::directory_iterator(dir1)) {
      const auto other = dir2 / entry.path().filename();
      check.expect(fs::exists(other), sub + ": missing rerun file " +
                                          entry.path().filename().string());
      if (!fs::exists(other)) continue;
      check.expect(slurp(entry.path().string()) == slurp(other.string()),
                   sub + ": rerun differs in " + entry.path().filename().string());
      ++compared;
    }
    check.expect(compared > 0, sub + ": no output files produced");
  }
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";

  run_criterion(1, "group structure of the one-step cocycle", 5.0,
                criterion1_group_structure);
  run_criterion(2, "free-case exactness", 10.0, criterion2_free_case);
  run_criterion(3, "constant-coefficient oracle", 120.0, criterion3_constant_oracle);
  run_criterion(4, "CMV section structure", 5.0, criterion4_cmv_structure);
  run_criterion(5, "Boshernitzan diagnostics", 60.0, criterion5_boshernitzan);
  run_criterion(6, "zero-measure trend", 600.0, criterion6_main_trend);
  run_criterion(7, "exponential dichotomy", 5.0, criterion7_dichotomy);
  run_criterion(8, "CLI determinism", 120.0,
                [&](Check& check) { criterion8_cli_determinism(check, cli); });

  if (g_failures == 0) {
    std::printf("acceptance: all criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", g_failures);
  return 1;
}
