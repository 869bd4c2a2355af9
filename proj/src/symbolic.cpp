#include "szegolab/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <unordered_map>

namespace szegolab {

namespace {

struct WindowHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const {
    return std::hash<std::string_view>{}(s);
  }
  std::size_t operator()(const std::string& s) const {
    return std::hash<std::string_view>{}(s);
  }
};

using WindowCounts =
    std::unordered_map<std::string, std::int64_t, WindowHash, std::equal_to<>>;

// Sliding-window counts over starts in [0, sampleLength); allocates only
// for words seen the first time.
WindowCounts count_windows(const SymbolSequence& seq, int n, std::int64_t sample_length,
                           const char* op_name) {
  if (n <= 0) throw ConfigError(std::string(op_name) + ": n must be positive");
  if (sample_length + n - 1 > seq.horizon())
    throw HorizonExceeded(std::string(op_name) + ": sample window exceeds the horizon");
  std::string text;
  text.reserve(static_cast<std::size_t>(sample_length + n - 1));
  for (std::int64_t i = 0; i < sample_length + n - 1; ++i) text.push_back(seq.at(i));

  WindowCounts counts;
  const std::string_view view(text);
  for (std::int64_t start = 0; start < sample_length; ++start) {
    const std::string_view w = view.substr(static_cast<std::size_t>(start),
                                           static_cast<std::size_t>(n));
    if (auto it = counts.find(w); it != counts.end())
      ++it->second;
    else
      counts.emplace(Word(w), 1);
  }
  return counts;
}

std::vector<Symbol> default_symbols(int p) {
  std::vector<Symbol> syms;
  for (int k = 0; k < p; ++k) syms.push_back(static_cast<Symbol>('a' + k));
  return syms;
}

// Entrywise-positive power test for the substitution matrix.
bool is_primitive(const std::map<Symbol, Word>& rules) {
  const int p = static_cast<int>(rules.size());
  std::map<Symbol, int> index;
  for (const auto& [s, _] : rules) index[s] = static_cast<int>(index.size());
  std::vector<std::vector<bool>> reach(p, std::vector<bool>(p, false));
  for (const auto& [s, image] : rules) {
    if (image.empty()) return false;
    for (Symbol t : image) {
      auto it = index.find(t);
      if (it == index.end()) return false;  // image symbol outside alphabet
      reach[index[s]][it->second] = true;
    }
  }
  // Boolean powers of the incidence matrix; primitive iff some power is full.
  std::vector<std::vector<bool>> acc = reach;
  for (int step = 0; step < 4 * p * p + 4; ++step) {
    bool full = true;
    for (int i = 0; i < p && full; ++i)
      for (int j = 0; j < p && full; ++j)
        if (!acc[i][j]) full = false;
    if (full) return true;
    std::vector<std::vector<bool>> next(p, std::vector<bool>(p, false));
    for (int i = 0; i < p; ++i)
      for (int k = 0; k < p; ++k)
        if (acc[i][k])
          for (int j = 0; j < p; ++j)
            if (reach[k][j]) next[i][j] = true;
    acc = next;
  }
  return false;
}

Word apply_rules(const std::map<Symbol, Word>& rules, const Word& w) {
  Word out;
  out.reserve(w.size() * 2);
  for (Symbol s : w) out += rules.at(s);
  return out;
}

// Two-sided fixed-point scaffold: a power e and a seed pair (l, r) with
// sigma^e(l) ending in l, sigma^e(r) starting with r, and "lr" a factor of
// the language. Deterministic: smallest e, then lexicographic (l, r).
struct SeedPair {
  int power = 1;
  Symbol left = 0, right = 0;
};

SeedPair find_seed_pair(const std::map<Symbol, Word>& rules) {
  // Long sample word; by primitivity it contains every legal pair we need.
  Word sample(1, rules.begin()->first);
  while (sample.size() < 4096) {
    Word next = apply_rules(rules, sample);
    if (next.size() == sample.size()) break;  // non-expanding rule set
    sample = std::move(next);
  }

  for (int e = 1; e <= 8; ++e) {
    std::vector<Symbol> lefts, rights;
    for (const auto& [s, _] : rules) {
      Word img(1, s);
      for (int k = 0; k < e; ++k) img = apply_rules(rules, img);
      if (img.front() == s) rights.push_back(s);
      if (img.back() == s) lefts.push_back(s);
    }
    for (Symbol l : lefts)
      for (Symbol r : rights) {
        const Word pair{l, r};
        if (sample.find(pair) != Word::npos) return {e, l, r};
      }
  }
  throw ConfigError("substitution: no two-sided fixed-point seed pair found");
}

}  // namespace

Alphabet::Alphabet(std::vector<Symbol> syms) : symbols(std::move(syms)) {
  if (symbols.empty()) throw ConfigError("alphabet: empty symbol list");
  std::set<Symbol> seen;
  for (Symbol s : symbols)
    if (!seen.insert(s).second) throw ConfigError("alphabet: duplicate symbol");
}

bool Alphabet::contains(Symbol s) const {
  return std::find(symbols.begin(), symbols.end(), s) != symbols.end();
}

SubshiftSpec::SubshiftSpec(SubshiftParams p) : params(std::move(p)) {
  if (const auto* rot = std::get_if<RotationCodingParams>(&params)) {
    const int intervals = static_cast<int>(rot->betas.size()) + 1;
    if (rot->betas.empty()) throw ConfigError("rotation coding: needs at least one partition point");
    double prev = 0.0;
    for (double b : rot->betas) {
      if (!(b > prev && b < 1.0))
        throw ConfigError("rotation coding: betas must satisfy 0 < beta_1 < ... < beta_{p-1} < 1");
      prev = b;
    }
    if (!(rot->theta >= 0.0 && rot->theta < 1.0))
      throw ConfigError("rotation coding: theta must lie in [0,1)");
    auto syms = rot->symbols.empty() ? default_symbols(intervals) : rot->symbols;
    if (static_cast<int>(syms.size()) != intervals)
      throw ConfigError("rotation coding: symbol count must equal interval count");
    alphabet_ = Alphabet(std::move(syms));
    const auto cf = cf_from_pattern(rot->quotient_pattern, rot->depth);
    if (cf.p() >= cf.q())
      throw ConfigError("rotation coding: realized alpha is not in (0,1); increase depth");
  } else if (const auto* sub = std::get_if<SubstitutionParams>(&params)) {
    if (sub->rules.empty()) throw ConfigError("substitution: empty rule set");
    for (const auto& [s, image] : sub->rules) {
      if (image.empty())
        throw ConfigError(std::string("substitution: empty image for symbol '") + s + "'");
      for (Symbol t : image)
        if (!sub->rules.count(t))
          throw ConfigError(std::string("substitution: image of '") + s +
                            "' uses symbol '" + t + "' with no rule");
    }
    if (!is_primitive(sub->rules)) throw ConfigError("substitution: rules are not primitive");
    std::vector<Symbol> syms;
    for (const auto& [s, _] : sub->rules) syms.push_back(s);
    alphabet_ = Alphabet(std::move(syms));
  } else {
    const auto& per = std::get<PeriodicParams>(params);
    if (per.word.empty()) throw ConfigError("periodic: empty period word");
    std::vector<Symbol> syms;
    std::set<Symbol> seen;
    for (Symbol s : per.word)
      if (seen.insert(s).second) syms.push_back(s);
    alphabet_ = Alphabet(std::move(syms));
  }
}

SubshiftKind SubshiftSpec::kind() const {
  if (std::holds_alternative<RotationCodingParams>(params)) return SubshiftKind::RotationCoding;
  if (std::holds_alternative<SubstitutionParams>(params)) return SubshiftKind::Substitution;
  return SubshiftKind::Periodic;
}

const RotationCodingParams& SubshiftSpec::rotation() const {
  return std::get<RotationCodingParams>(params);
}
const SubstitutionParams& SubshiftSpec::substitution() const {
  return std::get<SubstitutionParams>(params);
}
const PeriodicParams& SubshiftSpec::periodic() const {
  return std::get<PeriodicParams>(params);
}

SymbolSequence::SymbolSequence(SubshiftSpec spec, std::int64_t horizon)
    : spec_(std::move(spec)), horizon_(horizon) {
  if (horizon_ <= 0) throw ConfigError("symbol sequence: horizon must be positive");
  switch (spec_.kind()) {
    case SubshiftKind::RotationCoding: {
      const auto& rot = spec_.rotation();
      const auto cf = cf_from_pattern(rot.quotient_pattern, rot.depth);
      rot_p_ = cf.p();
      rot_q_ = cf.q();
      break;
    }
    case SubshiftKind::Substitution: {
      const auto& rules = spec_.substitution().rules;
      const auto needed = static_cast<std::size_t>(horizon_) + 1;

      bool expands = false;
      for (const auto& [_, image] : rules)
        if (image.size() > 1) expands = true;
      if (!expands) {
        // Primitivity forces a single letter here; the sequence is constant.
        text_.assign(2 * needed, rules.begin()->first);
        text_origin_ = static_cast<std::int64_t>(needed);
        break;
      }

      // Right half: nested prefixes of the one-sided fixed point of
      // sigma^e from the seed; truncation keeps the prefix property.
      const SeedPair seed = find_seed_pair(rules);
      Word right(1, seed.right);
      while (right.size() < needed) {
        const std::size_t before = right.size();
        for (int k = 0; k < seed.power; ++k) {
          right = apply_rules(rules, right);
          if (right.size() > needed) right.resize(needed);
        }
        if (right.size() == before)
          throw ConfigError("substitution: fixed-point seed does not grow");
      }
      // Left half: nested suffixes, truncated from the front.
      Word left(1, seed.left);
      while (left.size() < needed) {
        const std::size_t before = left.size();
        for (int k = 0; k < seed.power; ++k) {
          left = apply_rules(rules, left);
          if (left.size() > needed) left.erase(0, left.size() - needed);
        }
        if (left.size() == before)
          throw ConfigError("substitution: fixed-point seed does not grow");
      }
      text_ = left + right;
      text_origin_ = static_cast<std::int64_t>(left.size());
      break;
    }
    case SubshiftKind::Periodic:
      break;
  }
}

void SymbolSequence::check(std::int64_t n) const {
  if (n < -horizon_ || n > horizon_)
    throw HorizonExceeded("symbol sequence: index outside the declared horizon");
}

Symbol SymbolSequence::at(std::int64_t n) const {
  check(n);
  switch (spec_.kind()) {
    case SubshiftKind::RotationCoding: {
      const auto& rot = spec_.rotation();
      // Exact orbit arithmetic: frac(theta + n p/q) = frac(theta + ((n p) mod q)/q).
      std::int64_t r = n % rot_q_;
      if (r < 0) r += rot_q_;
      const std::int64_t m =
          static_cast<std::int64_t>((static_cast<__int128>(r) * rot_p_) % rot_q_);
      double x = rot.theta + static_cast<double>(m) / static_cast<double>(rot_q_);
      if (x >= 1.0) x -= 1.0;
      // Half-open intervals [beta_{k-1}, beta_k).
      int idx = 0;
      for (double b : rot.betas) {
        if (x < b) break;
        ++idx;
      }
      return spec_.alphabet().symbols[static_cast<std::size_t>(idx)];
    }
    case SubshiftKind::Substitution:
      return text_[static_cast<std::size_t>(text_origin_ + n)];
    case SubshiftKind::Periodic: {
      const Word& w = spec_.periodic().word;
      const auto q = static_cast<std::int64_t>(w.size());
      std::int64_t r = n % q;
      if (r < 0) r += q;
      return w[static_cast<std::size_t>(r)];
    }
  }
  throw Error("symbol sequence: unreachable");
}

double FrequencyTable::min_frequency() const {
  double m = 1.0;
  for (const auto& [_, f] : entries) m = std::min(m, f);
  return m;
}

Word segment(const SymbolSequence& seq, std::int64_t start, std::int64_t len) {
  if (len <= 0) throw ConfigError("segment: length must be positive");
  Word out;
  out.reserve(static_cast<std::size_t>(len));
  for (std::int64_t k = 0; k < len; ++k) out.push_back(seq.at(start + k));
  return out;
}

std::set<Word> factors(const SymbolSequence& seq, int n, std::int64_t sample_length) {
  if (n > 0 && sample_length < 10 * static_cast<std::int64_t>(n))
    throw ConfigError("factors: sampleLength must be at least 10*n");
  std::set<Word> seen;
  for (const auto& [w, _] : count_windows(seq, n, sample_length, "factors"))
    seen.insert(w);
  return seen;
}

FrequencyTable cylinder_frequencies(const SymbolSequence& seq, int n,
                                    std::int64_t sample_length) {
  if (n > 0 && sample_length < 100 * static_cast<std::int64_t>(n))
    throw ConfigError("cylinder_frequencies: sampleLength must be at least 100*n");
  const auto counts = count_windows(seq, n, sample_length, "cylinder_frequencies");

  FrequencyTable table;
  table.word_length = n;
  table.sample_length = sample_length;
  for (const auto& [w, c] : counts)
    table.entries[w] = static_cast<double>(c) / static_cast<double>(sample_length);
  return table;
}

std::optional<std::int64_t> detect_period(const SymbolSequence& seq, std::int64_t max_period,
                                          std::int64_t sample_length) {
  if (max_period <= 0) throw ConfigError("detect_period: maxPeriod must be positive");
  if (sample_length < 4 * max_period)
    throw ConfigError("detect_period: sampleLength must be at least 4*maxPeriod");
  if (sample_length + max_period > seq.horizon())
    throw HorizonExceeded("detect_period: sample window exceeds the horizon");
  std::vector<Symbol> buf(static_cast<std::size_t>(sample_length + max_period));
  for (std::int64_t i = 0; i < sample_length + max_period; ++i)
    buf[static_cast<std::size_t>(i)] = seq.at(i);
  for (std::int64_t q = 1; q <= max_period; ++q) {
    bool ok = true;
    for (std::int64_t i = 0; i < sample_length; ++i) {
      if (buf[static_cast<std::size_t>(i)] != buf[static_cast<std::size_t>(i + q)]) {
        ok = false;
        break;
      }
    }
    if (ok) return q;
  }
  return std::nullopt;
}

}  // namespace szegolab
