#ifndef SZEGOLAB_ROTATIONS_HPP
#define SZEGOLAB_ROTATIONS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "szegolab/errors.hpp"

namespace szegolab {

// Finite continued-fraction data: alpha = [0; a_1, a_2, ...] together
// with the convergents p_k/q_k from the standard recurrence.
struct ContinuedFraction {
  std::vector<std::int64_t> partial_quotients;
  std::vector<std::pair<std::int64_t, std::int64_t>> convergents;  // (p_k, q_k), k >= 1

  int depth() const { return static_cast<int>(partial_quotients.size()); }
  std::int64_t p() const { return convergents.back().first; }
  std::int64_t q() const { return convergents.back().second; }
  // Value of the deepest convergent p_depth / q_depth.
  double value() const { return static_cast<double>(p()) / static_cast<double>(q()); }
};

// Builds the convergent table for a given quotient list.
// Throws DepthUnreliable if a denominator would overflow the exact range.
ContinuedFraction cf_from_quotients(const std::vector<std::int64_t>& quotients);

// Quotient pattern cycled to the requested depth, then expanded.
ContinuedFraction cf_from_pattern(const std::vector<std::int64_t>& pattern, int depth);

// Gauss-map expansion of alpha in (0,1) to the requested depth (<= 40).
// Throws DepthUnreliable if an intermediate remainder underflows.
ContinuedFraction continued_fraction(double alpha, int depth);

// Finite-depth verdict: all computed partial quotients <= bound.
bool has_bounded_quotients(const ContinuedFraction& cf, std::int64_t bound);

// Outcome of the sufficient-condition checks for a rotation-coding
// partition point beta. Every verdict is relative to the inspected depth.
struct BetaClassification {
  double alpha = 0.0;
  double beta = 0.0;
  int inspected_depth = 0;
  std::int64_t search_bound = 0;
  double tol = 0.0;

  // beta = m*alpha + n (mod 1) with |m|,|n| <= search_bound.
  bool case_a = false;
  std::int64_t witness_m = 0;
  std::int64_t witness_n = 0;

  // alpha has bounded partial quotients at the available depth.
  bool case_b = false;
  std::int64_t max_quotient = 0;

  // beta within tol of a rational with denominator <= search_bound.
  bool rational_beta = false;
  std::int64_t rational_p = 0;
  std::int64_t rational_q = 0;

  bool any_sufficient_condition() const { return case_a || case_b || rational_beta; }
};

BetaClassification classify_beta(const ContinuedFraction& alpha_cf, double beta,
                                 std::int64_t search_bound = 50, double tol = 1e-9);

}  // namespace szegolab

#endif  // SZEGOLAB_ROTATIONS_HPP
