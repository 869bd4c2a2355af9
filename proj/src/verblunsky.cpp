#include "szegolab/verblunsky.hpp"

#include <cmath>

namespace szegolab {

namespace {

void check_value(Complex a) {
  if (!(std::abs(a) <= kAlphaBound))
    throw ConfigError("verblunsky map: |alpha| must stay <= 1 - 1e-6");
}

}  // namespace

VerblunskyMap::VerblunskyMap(int window, std::map<Word, Complex> table,
                             std::optional<Complex> fallback)
    : window_(window), table_(std::move(table)), fallback_(fallback) {
  if (window_ < 0) throw ConfigError("verblunsky map: window must be nonnegative");
  const auto word_len = static_cast<std::size_t>(2 * window_ + 1);
  for (const auto& [w, a] : table_) {
    if (w.size() != word_len)
      throw ConfigError("verblunsky map: table words must have length 2N+1");
    check_value(a);
  }
  if (fallback_) check_value(*fallback_);
}

VerblunskyMap VerblunskyMap::from_symbols(const std::map<Symbol, Complex>& values) {
  std::map<Word, Complex> table;
  for (const auto& [s, a] : values) table[Word(1, s)] = a;
  return VerblunskyMap(0, std::move(table));
}

VerblunskyMap VerblunskyMap::constant(Complex value) {
  return VerblunskyMap(0, {}, value);
}

Complex VerblunskyMap::evaluate(const SymbolSequence& seq, std::int64_t n) const {
  const Word w = segment(seq, n - window_, 2 * static_cast<std::int64_t>(window_) + 1);
  const auto it = table_.find(w);
  if (it != table_.end()) return it->second;
  if (fallback_) return *fallback_;
  throw UnmappedWord("verblunsky map: no entry for window word \"" + w + "\"");
}

CoefficientSequence coefficient_sequence(const VerblunskyMap& f, const SymbolSequence& seq,
                                         std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ConfigError("coefficient_sequence: lo must not exceed hi");
  CoefficientSequence out;
  out.lo = lo;
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  out.values.reserve(count);
  out.rho.reserve(count);
  for (std::int64_t n = lo; n <= hi; ++n) {
    const Complex a = f.evaluate(seq, n);
    out.values.push_back(a);
    out.rho.push_back(std::sqrt(1.0 - std::norm(a)));
  }
  return out;
}

}  // namespace szegolab
