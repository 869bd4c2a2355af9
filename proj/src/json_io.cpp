#include "szegolab/json_io.hpp"

#include <cstdio>
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
T get_required(const Json& doc, const std::string& key, const std::string& context) {
  if (!doc.contains(key)) throw ConfigError(context + ": missing key \"" + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(context + ": key \"" + key + "\" has the wrong type");
  }
}

template <typename T>
T get_optional(const Json& doc, const std::string& key, T fallback,
               const std::string& context) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const Json::exception&) {
    throw ConfigError(context + ": key \"" + key + "\" has the wrong type");
  }
}

Complex complex_from_json(const Json& doc, const std::string& context) {
  require_keys(doc, {"re", "im"}, context);
  return {get_required<double>(doc, "re", context),
          get_optional<double>(doc, "im", 0.0, context)};
}

Json complex_to_json(Complex v) {
  return Json{{"re", v.real()}, {"im", v.imag()}};
}

}  // namespace

SubshiftSpec subshift_from_json(const Json& doc) {
  const std::string context = "subshift";
  const auto kind = get_required<std::string>(doc, "kind", context);
  if (kind == "rotation") {
    require_keys(doc, {"kind", "quotients", "depth", "betas", "theta", "symbols"}, context);
    RotationCodingParams rot;
    rot.quotient_pattern = get_required<std::vector<std::int64_t>>(doc, "quotients", context);
    rot.depth = get_optional<int>(doc, "depth", 35, context);
    rot.betas = get_required<std::vector<double>>(doc, "betas", context);
    rot.theta = get_optional<double>(doc, "theta", 0.0, context);
    const auto symbols = get_optional<std::string>(doc, "symbols", "", context);
    rot.symbols.assign(symbols.begin(), symbols.end());
    return SubshiftSpec(rot);
  }
  if (kind == "substitution") {
    require_keys(doc, {"kind", "rules"}, context);
    if (!doc.contains("rules") || !doc.at("rules").is_object())
      throw ConfigError("subshift: substitution needs a \"rules\" object");
    SubstitutionParams sub;
    for (const auto& [sym, image] : doc.at("rules").items()) {
      if (sym.size() != 1)
        throw ConfigError("subshift: substitution symbols must be single characters");
      if (!image.is_string())
        throw ConfigError("subshift: substitution images must be strings");
      sub.rules[sym[0]] = image.get<std::string>();
    }
    return SubshiftSpec(sub);
  }
  if (kind == "periodic") {
    require_keys(doc, {"kind", "word"}, context);
    PeriodicParams per;
    per.word = get_required<std::string>(doc, "word", context);
    return SubshiftSpec(per);
  }
  throw ConfigError("subshift: kind must be rotation, substitution, or periodic");
}

Json to_json(const SubshiftSpec& spec) {
  Json doc;
  switch (spec.kind()) {
    case SubshiftKind::RotationCoding: {
      const auto& rot = spec.rotation();
      doc["kind"] = "rotation";
      doc["quotients"] = rot.quotient_pattern;
      doc["depth"] = rot.depth;
      doc["betas"] = rot.betas;
      doc["theta"] = rot.theta;
      doc["symbols"] = std::string(spec.alphabet().symbols.begin(),
                                   spec.alphabet().symbols.end());
      break;
    }
    case SubshiftKind::Substitution: {
      doc["kind"] = "substitution";
      Json rules = Json::object();
      for (const auto& [sym, image] : spec.substitution().rules)
        rules[std::string(1, sym)] = image;
      doc["rules"] = rules;
      break;
    }
    case SubshiftKind::Periodic:
      doc["kind"] = "periodic";
      doc["word"] = spec.periodic().word;
      break;
  }
  return doc;
}

VerblunskyMap verblunsky_from_json(const Json& doc) {
  const std::string context = "map";
  require_keys(doc, {"window", "entries", "default"}, context);
  const int window = get_required<int>(doc, "window", context);
  std::map<Word, Complex> table;
  if (doc.contains("entries")) {
    if (!doc.at("entries").is_array())
      throw ConfigError("map: \"entries\" must be an array of (word, re, im) objects");
    for (const auto& item : doc.at("entries")) {
      require_keys(item, {"word", "re", "im"}, "map entry");
      const auto word = get_required<std::string>(item, "word", "map entry");
      if (table.count(word)) throw ConfigError("map: duplicate word \"" + word + "\"");
      table[word] = {get_required<double>(item, "re", "map entry"),
                     get_optional<double>(item, "im", 0.0, "map entry")};
    }
  }
  std::optional<Complex> fallback;
  if (doc.contains("default")) fallback = complex_from_json(doc.at("default"), "map default");
  return VerblunskyMap(window, std::move(table), fallback);
}

Json to_json(const VerblunskyMap& map) {
  Json doc;
  doc["window"] = map.window();
  Json entries = Json::array();
  for (const auto& [word, value] : map.table()) {
    Json item = complex_to_json(value);
    item["word"] = word;
    entries.push_back(item);
  }
  doc["entries"] = entries;
  if (map.fallback()) doc["default"] = complex_to_json(*map.fallback());
  return doc;
}

Json to_json(const BoshReport& report) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < report.lengths.size(); ++i)
    rows.push_back(Json{{"n", report.lengths[i]}, {"eta", report.eta_values[i]}});
  return Json{{"rows", rows},
              {"verdict", to_string(report.verdict)},
              {"constantEstimate", report.constant_estimate},
              {"sampleLength", report.sample_length},
              {"threshold", report.threshold}};
}

Json to_json(const BetaClassification& c) {
  Json doc{{"alpha", c.alpha},
           {"beta", c.beta},
           {"inspectedDepth", c.inspected_depth},
           {"searchBound", c.search_bound},
           {"tol", c.tol},
           {"caseA", c.case_a},
           {"caseB", c.case_b},
           {"rationalBeta", c.rational_beta},
           {"maxQuotient", c.max_quotient},
           {"supportsB", c.any_sufficient_condition()},
           {"verdict", c.any_sufficient_condition() ? "sufficient condition found"
                                                    : "inconclusive"}};
  if (c.case_a) doc["witness"] = Json{{"m", c.witness_m}, {"n", c.witness_n}};
  if (c.rational_beta)
    doc["rationalWitness"] = Json{{"p", c.rational_p}, {"q", c.rational_q}};
  return doc;
}

Json to_json(const BandSpectrum& bands) {
  Json arcs = Json::array();
  for (const auto& [lo, hi] : bands.bands)
    arcs.push_back(Json{{"thetaLo", lo}, {"thetaHi", hi}});
  return Json{{"period", bands.period},
              {"bands", arcs},
              {"totalMeasure", bands.total_measure}};
}

Json to_json(const SpectrumReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows)
    rows.push_back(Json{{"theta", row.theta},
                        {"gamma", row.gamma},
                        {"defect", row.defect},
                        {"class", to_string(row.cls)}});
  return Json{{"gridSize", report.grid_size},
              {"steps", report.steps},
              {"samples", report.samples},
              {"gammaFloor", report.gamma_floor},
              {"defectCap", report.defect_cap},
              {"rows", rows},
              {"measureEstimate", report.measure_estimate},
              {"samplingNote", report.sampling_note}};
}

Json to_json(const BandAgreement& agreement) {
  Json arcs = Json::array();
  for (const auto& [lo, hi] : agreement.disagreement_arcs)
    arcs.push_back(Json{{"thetaLo", lo}, {"thetaHi", hi}});
  return Json{{"agreement", agreement.agreement}, {"disagreementArcs", arcs}};
}

const char* to_string(PointClass cls) {
  switch (cls) {
    case PointClass::Resolvent: return "Resolvent";
    case PointClass::SpectrumCandidate: return "SpectrumCandidate";
    case PointClass::Undecided: return "Undecided";
  }
  return "Undecided";
}

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string csv_word_set(const std::set<Word>& words) {
  std::string out = "word\n";
  for (const Word& w : words) out += w + "\n";
  return out;
}

std::string csv_frequency_table(const FrequencyTable& table) {
  std::string out = "word,frequency\n";
  for (const auto& [word, freq] : table.entries)
    out += word + "," + fmt_double(freq) + "\n";
  return out;
}

std::string csv_bosh(const BoshReport& report) {
  std::string out = "n,eta\n";
  for (std::size_t i = 0; i < report.lengths.size(); ++i)
    out += std::to_string(report.lengths[i]) + "," + fmt_double(report.eta_values[i]) + "\n";
  return out;
}

std::string csv_lyapunov(const std::vector<LyapunovEstimate>& rows) {
  std::string out = "theta,gamma,defect,n,samples\n";
  for (const auto& row : rows) {
    double theta = std::arg(row.z);
    if (theta < 0.0) theta += 2.0 * std::numbers::pi;
    out += fmt_double(theta) + "," + fmt_double(row.gamma) + "," + fmt_double(row.defect) +
           "," + std::to_string(row.n) + "," + std::to_string(row.samples) + "\n";
  }
  return out;
}

std::string csv_spectrum(const SpectrumReport& report) {
  std::string out = "theta,gamma,defect,class\n";
  for (const auto& row : report.rows)
    out += fmt_double(row.theta) + "," + fmt_double(row.gamma) + "," +
           fmt_double(row.defect) + "," + to_string(row.cls) + "\n";
  return out;
}

std::string csv_bands(const BandSpectrum& bands) {
  std::string out = "thetaLo,thetaHi\n";
  for (const auto& [lo, hi] : bands.bands)
    out += fmt_double(lo) + "," + fmt_double(hi) + "\n";
  return out;
}

std::string csv_eigenphases(const EigenphaseList& list) {
  std::string out = "phase,modulus\n";
  for (std::size_t i = 0; i < list.phases.size(); ++i)
    out += fmt_double(list.phases[i]) + "," + fmt_double(list.moduli[i]) + "\n";
  return out;
}

std::string plot_gamma_profile(const SpectrumReport& report) {
  std::string out;
  for (const auto& row : report.rows)
    out += fmt_double(row.theta) + " " + fmt_double(row.gamma) + "\n";
  return out;
}

std::string coordinate_dump(const Eigen::MatrixXcd& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const Complex v = m(i, j);
      if (v == Complex(0.0, 0.0)) continue;
      out += std::to_string(i) + " " + std::to_string(j) + " " + fmt_double(v.real()) +
             " " + fmt_double(v.imag()) + "\n";
    }
  return out;
}

}  // namespace szegolab
