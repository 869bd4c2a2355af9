#ifndef SZEGOLAB_SYMBOLIC_HPP
#define SZEGOLAB_SYMBOLIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "szegolab/errors.hpp"
#include "szegolab/rotations.hpp"

namespace szegolab {

using Symbol = char;
using Word = std::string;

struct Alphabet {
  std::vector<Symbol> symbols;  // nonempty, distinct, in fixed order

  explicit Alphabet(std::vector<Symbol> syms);
  int size() const { return static_cast<int>(symbols.size()); }
  bool contains(Symbol s) const;
};

// Coding of the rotation x -> x + alpha mod 1 against the partition
// 0 = beta_0 < beta_1 < ... < beta_{p-1} < 1, started at phase theta.
// alpha is given by continued-fraction partial quotients (a pattern,
// cycled) truncated at `depth`, so the realized alpha is the exact
// rational convergent p_depth/q_depth.
struct RotationCodingParams {
  std::vector<std::int64_t> quotient_pattern;
  int depth = 35;
  std::vector<double> betas;  // beta_1 .. beta_{p-1}
  double theta = 0.0;
  std::vector<Symbol> symbols;  // one per partition interval; empty = a,b,c,...
};

struct SubstitutionParams {
  std::map<Symbol, Word> rules;  // must be primitive
};

struct PeriodicParams {
  Word word;  // nonempty
};

using SubshiftParams = std::variant<RotationCodingParams, SubstitutionParams, PeriodicParams>;

enum class SubshiftKind { RotationCoding, Substitution, Periodic };

struct SubshiftSpec {
  SubshiftParams params;

  explicit SubshiftSpec(SubshiftParams p);
  SubshiftKind kind() const;
  const Alphabet& alphabet() const { return alphabet_; }

  const RotationCodingParams& rotation() const;
  const SubstitutionParams& substitution() const;
  const PeriodicParams& periodic() const;

 private:
  Alphabet alphabet_{std::vector<Symbol>{'a'}};
};

// Deterministic two-sided symbol accessor for n in [-horizon, horizon].
class SymbolSequence {
 public:
  explicit SymbolSequence(SubshiftSpec spec, std::int64_t horizon = kDefaultHorizon);

  Symbol at(std::int64_t n) const;
  std::int64_t horizon() const { return horizon_; }
  const SubshiftSpec& spec() const { return spec_; }
  const Alphabet& alphabet() const { return spec_.alphabet(); }

  static constexpr std::int64_t kDefaultHorizon = 4'000'000;

 private:
  void check(std::int64_t n) const;

  SubshiftSpec spec_;
  std::int64_t horizon_;

  // rotation coding: exact rational alpha = p/q
  std::int64_t rot_p_ = 0, rot_q_ = 1;
  // substitution: text_[text_origin_ + n] holds symbol n
  std::string text_;
  std::int64_t text_origin_ = 0;
};

// Empirical cylinder-set frequencies of the length-n factors seen in a
// length-sampleLength orbit window.
struct FrequencyTable {
  int word_length = 0;
  std::map<Word, double> entries;
  std::int64_t sample_length = 0;

  double min_frequency() const;
};

// Symbols at positions start .. start+len-1.
Word segment(const SymbolSequence& seq, std::int64_t start, std::int64_t len);

// All distinct length-n windows starting in [0, sampleLength).
std::set<Word> factors(const SymbolSequence& seq, int n, std::int64_t sample_length);

// Sliding-window counts over starts in [0, sampleLength), divided by the
// window count.
FrequencyTable cylinder_frequencies(const SymbolSequence& seq, int n,
                                    std::int64_t sample_length);

// Smallest q <= maxPeriod with seq(i) = seq(i+q) throughout the sampled
// range, if any.
std::optional<std::int64_t> detect_period(const SymbolSequence& seq, std::int64_t max_period,
                                          std::int64_t sample_length);

}  // namespace szegolab

#endif  // SZEGOLAB_SYMBOLIC_HPP
