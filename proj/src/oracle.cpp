#include "runprob/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <omp.h>

namespace runprob {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

unsigned checked_length(std::uint64_t n, unsigned cap) {
  const unsigned limit = std::min(cap, kHardBruteForceCap);
  if (n > limit) {
    throw CapExceededError("brute-force enumeration is capped at n <= " + std::to_string(limit) +
                           " (2^n outcomes); got n=" + std::to_string(n));
  }
  return static_cast<unsigned>(n);
}

int thread_count(int workers) { return workers > 0 ? workers : omp_get_max_threads(); }

// weights[k] = a^k (b-a)^(n-k), the numerator of p^k q^(n-k) over b^n.
std::vector<BigInt> outcome_weights(const TrialSpec& spec, unsigned n) {
  const BigInt a = spec.p().numerator();
  const BigInt fail = spec.p().denominator() - a;
  std::vector<BigInt> weights(n + 1);
  for (unsigned k = 0; k <= n; ++k) weights[k] = big_pow(a, k) * big_pow(fail, n - k);
  return weights;
}

bool sample_has_run(ChunkStream& stream, std::uint64_t n, std::uint64_t r, double p) {
  std::uint64_t run = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (stream.uniform() < p) {
      if (++run >= r) return true;
    } else {
      run = 0;
    }
  }
  return false;
}

std::uint64_t simulate_chunk(const FloatTrialSpec& spec, std::uint64_t r, const McConfig& cfg,
                             std::uint64_t chunk) {
  ChunkStream stream(cfg.seed, chunk);
  const std::uint64_t begin = chunk * cfg.chunk_size;
  const std::uint64_t count = std::min(cfg.chunk_size, cfg.samples - begin);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < count; ++s) {
    if (sample_has_run(stream, spec.n(), r, spec.p())) ++hits;
  }
  return hits;
}

void validate(std::uint64_t r, const McConfig& cfg) {
  require_positive_run(r);
  if (cfg.samples == 0) throw std::invalid_argument("Monte Carlo needs at least one sample");
  if (cfg.chunk_size == 0) throw std::invalid_argument("Monte Carlo chunk size must be positive");
}

McEstimate summarize(std::uint64_t hits, std::uint64_t samples) {
  McEstimate out;
  out.samples = samples;
  out.hits = hits;
  out.estimate = static_cast<double>(hits) / static_cast<double>(samples);
  out.std_error = std::sqrt(out.estimate * (1.0 - out.estimate) / static_cast<double>(samples));
  return out;
}

}  // namespace

std::uint32_t longest_run_of(std::span<const std::uint8_t> bits) {
  std::uint32_t best = 0;
  std::uint32_t run = 0;
  for (const auto bit : bits) {
    run = bit != 0 ? run + 1 : 0;
    best = std::max(best, run);
  }
  return best;
}

std::uint32_t longest_run_in_word(std::uint64_t word) {
  // Each step strips the last bit of every block; blocks of length L survive L steps.
  std::uint32_t steps = 0;
  while (word != 0) {
    word &= word << 1;
    ++steps;
  }
  return steps;
}

OutcomeCounts::OutcomeCounts(unsigned n) : n_(n), table_(static_cast<std::size_t>(n + 1) * (n + 1), 0) {}

OutcomeCounts& OutcomeCounts::operator+=(const OutcomeCounts& other) {
  if (other.n_ != n_) throw std::invalid_argument("outcome tables differ in length");
  for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += other.table_[i];
  return *this;
}

OutcomeCounts enumerate_outcomes(unsigned n, int workers) {
  checked_length(n, kHardBruteForceCap);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << n);
  OutcomeCounts counts(n);
#pragma omp parallel num_threads(thread_count(workers))
  {
    OutcomeCounts local(n);
#pragma omp for schedule(static)
    for (std::int64_t x = 0; x < total; ++x) {
      const auto word = static_cast<std::uint64_t>(x);
      ++local.at(static_cast<unsigned>(std::popcount(word)), longest_run_in_word(word));
    }
    // Integer addition commutes, so merge order does not matter.
#pragma omp critical
    counts += local;
  }
  return counts;
}

OutcomeCounts enumerate_outcomes_serial(unsigned n) {
  checked_length(n, kHardBruteForceCap);
  const std::uint64_t total = std::uint64_t{1} << n;
  OutcomeCounts counts(n);
  std::vector<std::uint8_t> bits(n);
  for (std::uint64_t x = 0; x < total; ++x) {
    // Materialize the sequence so the serial path also exercises longest_run_of.
    unsigned ones = 0;
    for (unsigned i = 0; i < n; ++i) {
      bits[i] = static_cast<std::uint8_t>((x >> i) & 1U);
      ones += bits[i];
    }
    ++counts.at(ones, longest_run_of(bits));
  }
  return counts;
}

Rational brute_force_y(const TrialSpec& spec, std::uint64_t r, unsigned cap) {
  require_positive_run(r);
  const unsigned n = checked_length(spec.n(), cap);
  if (r > n) return Rational(0);
  const OutcomeCounts counts = enumerate_outcomes(n);
  const std::vector<BigInt> weights = outcome_weights(spec, n);
  BigInt numerator(0);
  for (unsigned ones = 0; ones <= n; ++ones) {
    std::uint64_t hits = 0;
    for (auto longest = static_cast<unsigned>(r); longest <= n; ++longest) hits += counts.at(ones, longest);
    numerator += BigInt(static_cast<unsigned long>(hits)) * weights[ones];
  }
  return Rational(numerator, big_pow(spec.p().denominator(), n));
}

double brute_force_y(const FloatTrialSpec& spec, std::uint64_t r, unsigned cap) {
  require_positive_run(r);
  const unsigned n = checked_length(spec.n(), cap);
  if (r > n) return 0.0;
  const OutcomeCounts counts = enumerate_outcomes(n);
  double total = 0.0;
  for (unsigned ones = 0; ones <= n; ++ones) {
    std::uint64_t hits = 0;
    for (auto longest = static_cast<unsigned>(r); longest <= n; ++longest) hits += counts.at(ones, longest);
    if (hits == 0) continue;
    total += static_cast<double>(hits) * std::pow(spec.p(), ones) * std::pow(spec.q(), n - ones);
  }
  return total;
}

RunDistribution brute_force_pmf(const TrialSpec& spec, unsigned cap) {
  const unsigned n = checked_length(spec.n(), cap);
  const OutcomeCounts counts = enumerate_outcomes(n);
  const std::vector<BigInt> weights = outcome_weights(spec, n);
  const BigInt scale = big_pow(spec.p().denominator(), n);
  std::vector<Rational> pmf(n + 1);
  for (unsigned longest = 0; longest <= n; ++longest) {
    BigInt numerator(0);
    for (unsigned ones = 0; ones <= n; ++ones) {
      numerator += BigInt(static_cast<unsigned long>(counts.at(ones, longest))) * weights[ones];
    }
    pmf[longest] = Rational(numerator, scale);
  }
  return RunDistribution::from_pmf(spec, std::move(pmf));
}

ChunkStream::ChunkStream(std::uint64_t seed, std::uint64_t chunk)
    : state_(mix64(seed ^ mix64(chunk * kGolden + 1))) {}

std::uint64_t ChunkStream::next() {
  state_ += kGolden;
  return mix64(state_);
}

McEstimate monte_carlo_y(const FloatTrialSpec& spec, std::uint64_t r, const McConfig& cfg) {
  validate(r, cfg);
  const std::uint64_t chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
  std::vector<std::uint64_t> chunk_hits(chunks, 0);
#pragma omp parallel for schedule(dynamic, 1) num_threads(thread_count(cfg.workers))
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    chunk_hits[static_cast<std::size_t>(c)] = simulate_chunk(spec, r, cfg, static_cast<std::uint64_t>(c));
  }
  std::uint64_t hits = 0;
  for (const auto h : chunk_hits) hits += h;
  return summarize(hits, cfg.samples);
}

McEstimate monte_carlo_y_serial(const FloatTrialSpec& spec, std::uint64_t r, const McConfig& cfg) {
  validate(r, cfg);
  const std::uint64_t chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
  std::uint64_t hits = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) hits += simulate_chunk(spec, r, cfg, c);
  return summarize(hits, cfg.samples);
}

}  // namespace runprob
