#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "runprob/rational.hpp"
#include "runprob/trial.hpp"

namespace runprob {

/// Exact law of the longest success run L_n.
///
/// Holds pmf[k] = P(L_n = k) for k = 0..n and the tail probabilities
/// tail(r) = P(L_n >= r) for r = 0..n+1, with tail(0) = 1 and tail(n+1) = 0.
/// Tails are kept alongside the pmf so that quantities with two algebraic
/// routes (expectation) can be computed both ways.
class RunDistribution {
 public:
  RunDistribution(TrialSpec spec, std::vector<Rational> pmf, std::vector<Rational> tails);

  /// Tails obtained by suffix-summing the pmf.
  static RunDistribution from_pmf(TrialSpec spec, std::vector<Rational> pmf);

  const TrialSpec& spec() const { return spec_; }
  std::span<const Rational> pmf() const { return pmf_; }
  std::span<const Rational> tails() const { return tails_; }

  /// P(L_n >= r); 1 for r = 0 and 0 for r > n.
  Rational tail(std::uint64_t r) const;
  /// P(L_n <= k).
  Rational cdf(std::uint64_t k) const;

 private:
  TrialSpec spec_;
  std::vector<Rational> pmf_;
  std::vector<Rational> tails_;
};

/// pmf[k] = y(n,k) - y(n,k+1), one recurrence sweep per k, spread over
/// `workers` OpenMP threads (0 = runtime default). Result is independent of
/// the thread count.
RunDistribution pmf_of_longest_run(const TrialSpec& spec, int workers = 0);

/// Single-threaded reference for pmf_of_longest_run.
RunDistribution pmf_of_longest_run_serial(const TrialSpec& spec);

/// E[L_n] as sum k pmf[k]; cross-checked against sum_{r>=1} tail(r) and
/// throws std::logic_error if the two disagree.
Rational expectation(const RunDistribution& dist);

/// Smallest k with P(L_n <= k) >= alpha. alpha must lie in [0, 1].
std::uint64_t quantile(const RunDistribution& dist, const Rational& alpha);

}  // namespace runprob
