#ifndef SZEGOLAB_COMMANDS_HPP
#define SZEGOLAB_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "szegolab/json_io.hpp"

namespace szegolab {

// Fully validated run description. All computations downstream are
// deterministic; identical configs produce byte-identical output files.
struct RunConfig {
  std::optional<SubshiftSpec> subshift;
  std::optional<VerblunskyMap> map;
  std::int64_t horizon = SymbolSequence::kDefaultHorizon;

  struct BoshParams {
    std::vector<int> lengths;  // empty = convergent denominators / powers of two
    std::int64_t sample_length = 1'000'000;
    double threshold = 0.1;
  } bosh;

  struct LyapunovParams {
    int grid = 16;
    std::int64_t steps = 100'000;
    int samples = 8;
  } lyapunov;

  struct SpectrumParams {
    int grid = 1024;
    std::int64_t steps = 10'000;
    int samples = 8;
    double gamma_floor = 0.0;  // 0 = default 10/steps
    double defect_cap = 0.5;
    int approximant_order = 0;  // 0 = skip the band comparison
    int band_grid = 4096;
  } spectrum;

  struct ClassifyBetaParams {
    std::int64_t search_bound = 50;
    double tol = 1e-9;
  } classify_beta;

  struct CmvEigParams {
    int size = 256;
    CmvVariant variant = CmvVariant::HalfLine;
    bool dump_matrix = false;
  } cmv_eig;

  Json resolved;  // the config as parsed, embedded in every output file
};

RunConfig parse_config(const Json& doc);
RunConfig load_config(const std::string& path);

// Flag overrides (precedence: flags > config > defaults).
struct FlagOverrides {
  std::optional<int> grid;
  std::optional<std::int64_t> steps;
  std::optional<int> samples;
};
void apply_overrides(RunConfig& config, const FlagOverrides& flags);

// Period of the order-k periodic approximant: convergent denominator q_k
// for rotation codings, |sigma^k(first letter)| for substitutions, the
// word length for periodic specs.
int approximant_period(const SubshiftSpec& spec, int order);

// Coefficient window [1, period] used for periodization, re-based to 0.
// Index 0 of a theta = 0 rotation coding sits on a singular orbit point;
// the shifted window is cyclically equivalent to the substitution-word
// approximant.
CoefficientSequence approximant_coefficients(const VerblunskyMap& map,
                                             const SymbolSequence& seq, int period);

// Default Boshernitzan test lengths for a spec.
std::vector<int> default_bosh_lengths(const SubshiftSpec& spec, std::int64_t sample_length);

// Subcommand runners; outputs under out_dir. Exit codes: 0 success
// (bosh: SupportsB), 1 invalid config or error, 2 Weak, 3 Inconclusive.
int cmd_bosh(const RunConfig& config, const std::string& out_dir);
int cmd_lyapunov(const RunConfig& config, const std::string& out_dir);
int cmd_spectrum(const RunConfig& config, const std::string& out_dir);
int cmd_classify_beta(const RunConfig& config, const std::string& out_dir);
int cmd_cmv_eig(const RunConfig& config, const std::string& out_dir);

}  // namespace szegolab

#endif  // SZEGOLAB_COMMANDS_HPP
