#ifndef SZEGOLAB_JSON_IO_HPP
#define SZEGOLAB_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "szegolab/boshernitzan.hpp"
#include "szegolab/cmv.hpp"
#include "szegolab/cocycle.hpp"
#include "szegolab/rotations.hpp"
#include "szegolab/spectrum.hpp"
#include "szegolab/symbolic.hpp"
#include "szegolab/verblunsky.hpp"

namespace szegolab {

using Json = nlohmann::json;

// Strict (unknown keys rejected) document parsing.
SubshiftSpec subshift_from_json(const Json& doc);
VerblunskyMap verblunsky_from_json(const Json& doc);

Json to_json(const SubshiftSpec& spec);
Json to_json(const VerblunskyMap& map);
Json to_json(const BoshReport& report);
Json to_json(const BetaClassification& c);
Json to_json(const BandSpectrum& bands);
Json to_json(const SpectrumReport& report);
Json to_json(const BandAgreement& agreement);

const char* to_string(PointClass cls);

// Shortest-exact decimal: 17 significant digits, '.' decimal point.
std::string fmt_double(double x);

// CSV payloads; every table is preceded by '#' provenance lines added by
// the caller.
std::string csv_word_set(const std::set<Word>& words);
std::string csv_frequency_table(const FrequencyTable& table);
std::string csv_bosh(const BoshReport& report);
std::string csv_lyapunov(const std::vector<LyapunovEstimate>& rows);
std::string csv_spectrum(const SpectrumReport& report);
std::string csv_bands(const BandSpectrum& bands);
std::string csv_eigenphases(const EigenphaseList& list);
// Two-column (theta, gamma) file for external plotting.
std::string plot_gamma_profile(const SpectrumReport& report);
// Coordinate triplet dump (row, col, re, im) of the nonzero entries.
std::string coordinate_dump(const Eigen::MatrixXcd& m);

}  // namespace szegolab

#endif  // SZEGOLAB_JSON_IO_HPP
