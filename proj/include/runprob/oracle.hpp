#pragma once

// Ground truth that shares no code with the recurrence or the closed forms:
// exhaustive enumeration of all 2^n outcomes, and a seeded Monte Carlo
// estimator whose result does not depend on the number of worker threads.

#include <cstdint>
#include <span>
#include <vector>

#include "runprob/distribution.hpp"
#include "runprob/rational.hpp"
#include "runprob/trial.hpp"

namespace runprob {

inline constexpr unsigned kDefaultBruteForceCap = 20;
inline constexpr unsigned kHardBruteForceCap = 62;

/// Longest block of consecutive 1s; 0 for an empty or all-zero sequence.
std::uint32_t longest_run_of(std::span<const std::uint8_t> bits);

/// Longest block of consecutive set bits in a word.
std::uint32_t longest_run_in_word(std::uint64_t word);

/// Number of length-n sequences with a given (ones, longest run) pair.
class OutcomeCounts {
 public:
  explicit OutcomeCounts(unsigned n);

  unsigned n() const { return n_; }
  std::uint64_t at(unsigned ones, unsigned longest) const { return table_[ones * (n_ + 1) + longest]; }
  std::uint64_t& at(unsigned ones, unsigned longest) { return table_[ones * (n_ + 1) + longest]; }

  OutcomeCounts& operator+=(const OutcomeCounts& other);
  friend bool operator==(const OutcomeCounts&, const OutcomeCounts&) = default;

 private:
  unsigned n_;
  std::vector<std::uint64_t> table_;
};

/// Visits every integer in [0, 2^n) with OpenMP; 0 workers = runtime default.
OutcomeCounts enumerate_outcomes(unsigned n, int workers = 0);
OutcomeCounts enumerate_outcomes_serial(unsigned n);

/// Sum over all sequences s with longest_run_of(s) >= r of p^ones(s) q^zeros(s).
/// Throws CapExceededError if n > cap.
Rational brute_force_y(const TrialSpec& spec, std::uint64_t r, unsigned cap = kDefaultBruteForceCap);
double brute_force_y(const FloatTrialSpec& spec, std::uint64_t r, unsigned cap = kDefaultBruteForceCap);

RunDistribution brute_force_pmf(const TrialSpec& spec, unsigned cap = kDefaultBruteForceCap);

struct McConfig {
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 0;
  std::uint64_t chunk_size = 1U << 16;
  int workers = 0;  // OpenMP threads; 0 = runtime default. Does not affect the result.
};

struct McEstimate {
  double estimate = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double std_error = 0.0;  // sqrt(est (1 - est) / samples)
};

/// Counter-based generator: output i of the stream keyed by (seed, chunk) is a
/// pure function of (seed, chunk, i). SplitMix64 finalizer over a Weyl sequence.
class ChunkStream {
 public:
  ChunkStream(std::uint64_t seed, std::uint64_t chunk);

  std::uint64_t next();
  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Fraction of simulated sequences whose longest run reaches r. Chunk i of
/// cfg.chunk_size samples draws from ChunkStream(cfg.seed, i); chunk hit counts
/// are merged in chunk order.
McEstimate monte_carlo_y(const FloatTrialSpec& spec, std::uint64_t r, const McConfig& cfg);
McEstimate monte_carlo_y_serial(const FloatTrialSpec& spec, std::uint64_t r, const McConfig& cfg);

}  // namespace runprob
