#include "szegolab/rotations.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

namespace szegolab {

namespace {

// Denominator guard keeping n*p products inside __int128 comfortably.
constexpr std::int64_t kMaxDenominator = std::int64_t(1) << 52;

}  // namespace

ContinuedFraction cf_from_quotients(const std::vector<std::int64_t>& quotients) {
  if (quotients.empty()) throw ConfigError("continued fraction: empty quotient list");
  ContinuedFraction cf;
  cf.partial_quotients = quotients;
  std::int64_t p_prev = 0, q_prev = 1;  // p_0 / q_0 = 0/1
  std::int64_t p_pp = 1, q_pp = 0;      // p_{-1} / q_{-1} = 1/0
  for (std::int64_t a : quotients) {
    if (a <= 0) throw ConfigError("continued fraction: partial quotients must be positive");
    if (q_prev > (kMaxDenominator - q_pp) / a)
      throw DepthUnreliable("continued fraction: denominator overflow at this depth");
    const std::int64_t p = a * p_prev + p_pp;
    const std::int64_t q = a * q_prev + q_pp;
    cf.convergents.emplace_back(p, q);
    p_pp = p_prev; q_pp = q_prev;
    p_prev = p; q_prev = q;
  }
  return cf;
}

ContinuedFraction cf_from_pattern(const std::vector<std::int64_t>& pattern, int depth) {
  if (pattern.empty()) throw ConfigError("continued fraction: empty quotient pattern");
  if (depth <= 0) throw ConfigError("continued fraction: depth must be positive");
  std::vector<std::int64_t> quotients(static_cast<std::size_t>(depth));
  for (int k = 0; k < depth; ++k) quotients[k] = pattern[k % pattern.size()];
  return cf_from_quotients(quotients);
}

ContinuedFraction continued_fraction(double alpha, int depth) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw ConfigError("continued_fraction: alpha must lie in (0,1)");
  if (depth <= 0 || depth > 40)
    throw ConfigError("continued_fraction: depth must be in [1, 40]");
  std::vector<std::int64_t> quotients;
  double x = alpha;
  for (int k = 0; k < depth; ++k) {
    if (x < 1e-14)
      throw DepthUnreliable("continued_fraction: remainder underflow before requested depth");
    const double inv = 1.0 / x;
    double a = std::floor(inv);
    double rem = inv - a;
    // Snap near-integer reciprocals; the tail below roundoff is meaningless.
    if (rem > 1.0 - 1e-12) {
      a += 1.0;
      rem = 0.0;
    }
    quotients.push_back(static_cast<std::int64_t>(a));
    x = rem;
  }
  return cf_from_quotients(quotients);
}

bool has_bounded_quotients(const ContinuedFraction& cf, std::int64_t bound) {
  if (cf.partial_quotients.empty()) throw ConfigError("has_bounded_quotients: empty quotient list");
  for (std::int64_t a : cf.partial_quotients)
    if (a > bound) return false;
  return true;
}

BetaClassification classify_beta(const ContinuedFraction& alpha_cf, double beta,
                                 std::int64_t search_bound, double tol) {
  if (!(tol > 0.0)) throw ConfigError("classify_beta: tol must be positive");
  if (search_bound <= 0) throw ConfigError("classify_beta: searchBound must be positive");

  BetaClassification out;
  out.alpha = alpha_cf.value();
  out.beta = beta;
  out.inspected_depth = alpha_cf.depth();
  out.search_bound = search_bound;
  out.tol = tol;

  // Case (a): beta = m*alpha + n mod 1. For each |m| <= bound the integer
  // witness is n = round(beta - m*alpha); accept it when |n| <= bound too.
  for (std::int64_t m = 0; m <= search_bound && !out.case_a; ++m) {
    for (std::int64_t sm : {m, -m}) {
      const double n_real = beta - static_cast<double>(sm) * out.alpha;
      const double n = std::round(n_real);
      if (std::abs(n) > static_cast<double>(search_bound)) continue;
      if (std::abs(n_real - n) <= tol) {
        out.case_a = true;
        out.witness_m = sm;
        out.witness_n = static_cast<std::int64_t>(n);
        break;
      }
      if (sm == 0) break;  // -0 is the same witness
    }
  }

  // Case (b) at finite depth: all inspected quotients stay <= searchBound.
  out.max_quotient = 0;
  for (std::int64_t a : alpha_cf.partial_quotients)
    if (a > out.max_quotient) out.max_quotient = a;
  out.case_b = has_bounded_quotients(alpha_cf, search_bound);

  for (std::int64_t q = 1; q <= search_bound && !out.rational_beta; ++q) {
    const double p = std::round(beta * static_cast<double>(q));
    if (std::abs(beta - p / static_cast<double>(q)) <= tol) {
      out.rational_beta = true;
      out.rational_p = static_cast<std::int64_t>(p);
      out.rational_q = q;
    }
  }

  return out;
}

}  // namespace szegolab
