#include "szegolab/commands.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

namespace szegolab {

namespace {

void require_keys(const Json& doc, const std::set<std::string>& allowed,
                  const std::string& context) {
  if (!doc.is_object()) throw ConfigError(context + ": expected a JSON object");
  for (const auto& [key, _] : doc.items())
    if (allowed.find(key) == allowed.end())
      throw ConfigError(context + ": unknown key \"" + key + "\"");
}

template <typename T>
void read_into(const Json& doc, const std::string& key, T& target,
               const std::string& context) {
  if (!doc.contains(key)) return;
  try {
    target = doc.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(context + ": key \"" + key + "\" has the wrong type");
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file " + path);
  out << contents;
  if (!out) throw Error("failed writing " + path);
}

// '#'-prefixed provenance header embedding the resolved config.
std::string provenance(const RunConfig& config, const std::string& command) {
  return "# szegolab " + command + "\n# config " + config.resolved.dump() + "\n";
}

Json json_payload(const RunConfig& config, const std::string& command, Json payload) {
  payload["command"] = command;
  payload["config"] = config.resolved;
  return payload;
}

const SubshiftSpec& need_subshift(const RunConfig& config) {
  if (!config.subshift) throw ConfigError("config: missing \"subshift\" section");
  return *config.subshift;
}

const VerblunskyMap& need_map(const RunConfig& config) {
  if (!config.map) throw ConfigError("config: missing \"map\" section");
  return *config.map;
}

std::string out_path(const std::string& out_dir, const std::string& name) {
  std::filesystem::create_directories(out_dir);
  return (std::filesystem::path(out_dir) / name).string();
}

}  // namespace

RunConfig parse_config(const Json& doc) {
  require_keys(doc,
               {"subshift", "map", "horizon", "bosh", "lyapunov", "spectrum",
                "classifyBeta", "cmvEig"},
               "config");
  RunConfig config;
  config.resolved = doc;

  if (doc.contains("subshift")) config.subshift = subshift_from_json(doc.at("subshift"));
  if (doc.contains("map")) config.map = verblunsky_from_json(doc.at("map"));
  read_into(doc, "horizon", config.horizon, "config");
  if (config.horizon <= 0) throw ConfigError("config: \"horizon\" must be positive");

  if (doc.contains("bosh")) {
    const Json& section = doc.at("bosh");
    require_keys(section, {"lengths", "sampleLength", "threshold"}, "config.bosh");
    read_into(section, "lengths", config.bosh.lengths, "config.bosh");
    read_into(section, "sampleLength", config.bosh.sample_length, "config.bosh");
    read_into(section, "threshold", config.bosh.threshold, "config.bosh");
  }
  if (doc.contains("lyapunov")) {
    const Json& section = doc.at("lyapunov");
    require_keys(section, {"grid", "steps", "samples"}, "config.lyapunov");
    read_into(section, "grid", config.lyapunov.grid, "config.lyapunov");
    read_into(section, "steps", config.lyapunov.steps, "config.lyapunov");
    read_into(section, "samples", config.lyapunov.samples, "config.lyapunov");
  }
  if (doc.contains("spectrum")) {
    const Json& section = doc.at("spectrum");
    require_keys(section,
                 {"grid", "steps", "samples", "gammaFloor", "defectCap",
                  "approximantOrder", "bandGrid"},
                 "config.spectrum");
    read_into(section, "grid", config.spectrum.grid, "config.spectrum");
    read_into(section, "steps", config.spectrum.steps, "config.spectrum");
    read_into(section, "samples", config.spectrum.samples, "config.spectrum");
    read_into(section, "gammaFloor", config.spectrum.gamma_floor, "config.spectrum");
    read_into(section, "defectCap", config.spectrum.defect_cap, "config.spectrum");
    read_into(section, "approximantOrder", config.spectrum.approximant_order,
              "config.spectrum");
    read_into(section, "bandGrid", config.spectrum.band_grid, "config.spectrum");
  }
  if (doc.contains("classifyBeta")) {
    const Json& section = doc.at("classifyBeta");
    require_keys(section, {"searchBound", "tol"}, "config.classifyBeta");
    read_into(section, "searchBound", config.classify_beta.search_bound,
              "config.classifyBeta");
    read_into(section, "tol", config.classify_beta.tol, "config.classifyBeta");
  }
  if (doc.contains("cmvEig")) {
    const Json& section = doc.at("cmvEig");
    require_keys(section, {"size", "variant", "dumpMatrix"}, "config.cmvEig");
    read_into(section, "size", config.cmv_eig.size, "config.cmvEig");
    std::string variant = "halfline";
    read_into(section, "variant", variant, "config.cmvEig");
    if (variant == "halfline")
      config.cmv_eig.variant = CmvVariant::HalfLine;
    else if (variant == "extended")
      config.cmv_eig.variant = CmvVariant::ExtendedTruncated;
    else
      throw ConfigError("config.cmvEig: variant must be \"halfline\" or \"extended\"");
    read_into(section, "dumpMatrix", config.cmv_eig.dump_matrix, "config.cmvEig");
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

void apply_overrides(RunConfig& config, const FlagOverrides& flags) {
  if (flags.grid) {
    config.lyapunov.grid = *flags.grid;
    config.spectrum.grid = *flags.grid;
    config.resolved["_flags"]["grid"] = *flags.grid;
  }
  if (flags.steps) {
    config.lyapunov.steps = *flags.steps;
    config.spectrum.steps = *flags.steps;
    config.resolved["_flags"]["steps"] = *flags.steps;
  }
  if (flags.samples) {
    config.lyapunov.samples = *flags.samples;
    config.spectrum.samples = *flags.samples;
    config.resolved["_flags"]["samples"] = *flags.samples;
  }
}

int approximant_period(const SubshiftSpec& spec, int order) {
  if (order < 1) throw ConfigError("approximant order must be positive");
  switch (spec.kind()) {
    case SubshiftKind::RotationCoding: {
      const auto& rot = spec.rotation();
      const auto cf = cf_from_pattern(rot.quotient_pattern, rot.depth);
      if (order > cf.depth())
        throw ConfigError("approximant order exceeds the continued-fraction depth");
      return static_cast<int>(cf.convergents[static_cast<std::size_t>(order - 1)].second);
    }
    case SubshiftKind::Substitution: {
      Word w(1, spec.alphabet().symbols.front());
      for (int k = 0; k < order; ++k) {
        Word next;
        for (Symbol s : w) next += spec.substitution().rules.at(s);
        w = std::move(next);
        if (w.size() > 100000) throw ConfigError("approximant period too large");
      }
      return static_cast<int>(w.size());
    }
    case SubshiftKind::Periodic:
      return static_cast<int>(spec.periodic().word.size());
  }
  throw Error("approximant_period: unreachable");
}

CoefficientSequence approximant_coefficients(const VerblunskyMap& map,
                                             const SymbolSequence& seq, int period) {
  CoefficientSequence window = coefficient_sequence(map, seq, 1, period);
  window.lo = 0;
  return window;
}

std::vector<int> default_bosh_lengths(const SubshiftSpec& spec,
                                      std::int64_t sample_length) {
  const auto cap = static_cast<int>(sample_length / 100);
  std::vector<int> lengths;
  if (spec.kind() == SubshiftKind::RotationCoding) {
    const auto& rot = spec.rotation();
    const auto cf = cf_from_pattern(rot.quotient_pattern, rot.depth);
    for (const auto& [p, q] : cf.convergents) {
      if (q > cap) break;
      if (lengths.empty() || lengths.back() != static_cast<int>(q))
        lengths.push_back(static_cast<int>(q));
    }
  } else {
    for (int n = 1; n <= cap && n <= 1024; n *= 2) lengths.push_back(n);
  }
  if (lengths.empty()) throw ConfigError("bosh: no usable default lengths; give \"lengths\"");
  return lengths;
}

int cmd_bosh(const RunConfig& config, const std::string& out_dir) {
  const SubshiftSpec& spec = need_subshift(config);
  const SymbolSequence seq(spec, config.horizon);
  std::vector<int> lengths = config.bosh.lengths;
  if (lengths.empty()) lengths = default_bosh_lengths(spec, config.bosh.sample_length);

  const BoshReport report =
      bosh_scan(seq, lengths, config.bosh.sample_length, config.bosh.threshold);

  Json payload = json_payload(config, "bosh", Json{{"report", to_json(report)}});
  payload["testedLengthsNote"] =
      "tested lengths are a finite stand-in for an unbounded length sequence; defaults use "
      "convergent denominators for rotation codings";
  write_file(out_path(out_dir, "bosh.json"), payload.dump(2) + "\n");
  write_file(out_path(out_dir, "bosh.csv"), provenance(config, "bosh") + csv_bosh(report));

  switch (report.verdict) {
    case BoshVerdict::SupportsB: return 0;
    case BoshVerdict::Weak: return 2;
    case BoshVerdict::Inconclusive: return 3;
  }
  return 3;
}

int cmd_lyapunov(const RunConfig& config, const std::string& out_dir) {
  const SubshiftSpec& spec = need_subshift(config);
  const VerblunskyMap& map = need_map(config);
  const auto& params = config.lyapunov;
  if (params.grid < 1) throw ConfigError("config.lyapunov: grid must be positive");

  std::vector<LyapunovEstimate> rows;
  for (int k = 0; k < params.grid; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / params.grid;
    rows.push_back(lyapunov(map, spec, std::polar(1.0, theta), params.steps,
                            params.samples, config.horizon));
  }
  write_file(out_path(out_dir, "lyapunov.csv"),
             provenance(config, "lyapunov") + csv_lyapunov(rows));
  return 0;
}

int cmd_spectrum(const RunConfig& config, const std::string& out_dir) {
  const SubshiftSpec& spec = need_subshift(config);
  const VerblunskyMap& map = need_map(config);
  const auto& params = config.spectrum;

  SpectrumThresholds thresholds{params.gamma_floor, params.defect_cap};
  const SpectrumReport report = scan(map, spec, params.grid, params.steps,
                                     params.samples, thresholds, config.horizon);

  Json payload = Json{{"report", to_json(report)}};

  if (params.approximant_order > 0) {
    const int period = approximant_period(spec, params.approximant_order);
    const SymbolSequence seq(spec, config.horizon);
    const CoefficientSequence coeffs = approximant_coefficients(map, seq, period);
    const BandSpectrum bands = discriminant_bands(coeffs, period, params.band_grid);
    const BandAgreement agreement = compare_with_bands(report, bands);
    payload["bands"] = to_json(bands);
    payload["agreement"] = to_json(agreement);
    write_file(out_path(out_dir, "bands.json"),
               json_payload(config, "spectrum", Json{{"bands", to_json(bands)}}).dump(2) + "\n");
    write_file(out_path(out_dir, "bands.csv"),
               provenance(config, "spectrum") + csv_bands(bands));
  }

  write_file(out_path(out_dir, "spectrum.json"),
             json_payload(config, "spectrum", std::move(payload)).dump(2) + "\n");
  write_file(out_path(out_dir, "spectrum.csv"),
             provenance(config, "spectrum") + csv_spectrum(report));
  write_file(out_path(out_dir, "spectrum_gamma.dat"),
             provenance(config, "spectrum") + plot_gamma_profile(report));
  return 0;
}

int cmd_classify_beta(const RunConfig& config, const std::string& out_dir) {
  const SubshiftSpec& spec = need_subshift(config);
  if (spec.kind() != SubshiftKind::RotationCoding)
    throw ConfigError("classify-beta: requires a rotation-coding subshift");
  const auto& rot = spec.rotation();
  const auto cf = cf_from_pattern(rot.quotient_pattern, rot.depth);

  Json classifications = Json::array();
  bool any_unbounded = false;
  for (double beta : rot.betas) {
    const auto c =
        classify_beta(cf, beta, config.classify_beta.search_bound, config.classify_beta.tol);
    if (!c.case_b) any_unbounded = true;
    classifications.push_back(to_json(c));
  }

  Json payload = json_payload(config, "classify-beta",
                              Json{{"classifications", classifications}});
  if (any_unbounded)
    payload["note"] =
        "quotients exceed the inspected bound: such rotations admit partition points "
        "that break the scaled-frequency condition, but no constructive witness is "
        "attempted here";
  write_file(out_path(out_dir, "classify_beta.json"), payload.dump(2) + "\n");
  return 0;
}

int cmd_cmv_eig(const RunConfig& config, const std::string& out_dir) {
  const SubshiftSpec& spec = need_subshift(config);
  const VerblunskyMap& map = need_map(config);
  const auto& params = config.cmv_eig;
  if (params.size < 1) throw ConfigError("config.cmvEig: size must be positive");

  const SymbolSequence seq(spec, config.horizon);
  const std::int64_t lo =
      params.variant == CmvVariant::HalfLine ? 0 : -(static_cast<std::int64_t>(params.size) / 2);
  const CoefficientSequence coeffs =
      coefficient_sequence(map, seq, lo, lo + params.size - 1);
  const CmvOperator op = build_cmv(coeffs, params.size, params.variant);
  const EigenphaseList list = eigenphases(op);

  write_file(out_path(out_dir, "cmv_eigenphases.csv"),
             provenance(config, "cmv-eig") + csv_eigenphases(list));
  if (params.dump_matrix)
    write_file(out_path(out_dir, "cmv_matrix.txt"),
               provenance(config, "cmv-eig") + coordinate_dump(op.entries));
  return 0;
}

}  // namespace szegolab
