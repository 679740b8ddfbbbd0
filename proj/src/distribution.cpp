#include "runprob/distribution.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include <omp.h>

#include "runprob/methods.hpp"

namespace runprob {

RunDistribution::RunDistribution(TrialSpec spec, std::vector<Rational> pmf, std::vector<Rational> tails)
    : spec_(std::move(spec)), pmf_(std::move(pmf)), tails_(std::move(tails)) {
  const std::uint64_t n = spec_.n();
  if (pmf_.size() != n + 1 || tails_.size() != n + 2) {
    throw std::invalid_argument("distribution over n=" + std::to_string(n) +
                                " needs n+1 pmf entries and n+2 tails");
  }
}

RunDistribution RunDistribution::from_pmf(TrialSpec spec, std::vector<Rational> pmf) {
  std::vector<Rational> tails(pmf.size() + 1);
  for (std::size_t k = pmf.size(); k-- > 0;) tails[k] = tails[k + 1] + pmf[k];
  return RunDistribution(std::move(spec), std::move(pmf), std::move(tails));
}

Rational RunDistribution::tail(std::uint64_t r) const {
  return r < tails_.size() ? tails_[r] : Rational(0);
}

Rational RunDistribution::cdf(std::uint64_t k) const { return Rational(1) - tail(k + 1); }

namespace {

std::vector<Rational> tails_to_pmf(const std::vector<Rational>& tails) {
  std::vector<Rational> pmf(tails.size() - 1);
  for (std::size_t k = 0; k < pmf.size(); ++k) pmf[k] = tails[k] - tails[k + 1];
  return pmf;
}

}  // namespace

RunDistribution pmf_of_longest_run(const TrialSpec& spec, int workers) {
  const auto n = static_cast<std::int64_t>(spec.n());
  std::vector<Rational> tails(static_cast<std::size_t>(n) + 2);
  tails[0] = Rational(1);
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  // Long runs are cheap (few steps past r), short runs cost O(n); dynamic
  // scheduling keeps threads busy.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t r = 1; r <= n; ++r) {
    tails[static_cast<std::size_t>(r)] = y_recurrence(spec, static_cast<std::uint64_t>(r));
  }
  auto pmf = tails_to_pmf(tails);
  return RunDistribution(spec, std::move(pmf), std::move(tails));
}

RunDistribution pmf_of_longest_run_serial(const TrialSpec& spec) {
  const std::uint64_t n = spec.n();
  std::vector<Rational> tails(n + 2);
  tails[0] = Rational(1);
  for (std::uint64_t r = 1; r <= n; ++r) tails[r] = y_recurrence(spec, r);
  auto pmf = tails_to_pmf(tails);
  return RunDistribution(spec, std::move(pmf), std::move(tails));
}

Rational expectation(const RunDistribution& dist) {
  Rational weighted(0);
  const auto pmf = dist.pmf();
  for (std::size_t k = 1; k < pmf.size(); ++k) {
    weighted += Rational(static_cast<long>(k)) * pmf[k];
  }
  Rational tail_sum(0);
  const auto tails = dist.tails();
  for (std::size_t r = 1; r < tails.size(); ++r) tail_sum += tails[r];
  if (weighted != tail_sum) {
    throw std::logic_error("expectation mismatch: sum k*pmf = " + weighted.to_string() +
                           ", sum of tails = " + tail_sum.to_string());
  }
  return weighted;
}

std::uint64_t quantile(const RunDistribution& dist, const Rational& alpha) {
  if (alpha < Rational(0) || alpha > Rational(1)) {
    throw std::invalid_argument("quantile level must lie in [0, 1], got " + alpha.to_string());
  }
  Rational cumulative(0);
  const auto pmf = dist.pmf();
  for (std::size_t k = 0; k < pmf.size(); ++k) {
    cumulative += pmf[k];
    if (cumulative >= alpha) return k;
  }
  // Unreachable for a normalized pmf.
  throw std::logic_error("pmf does not reach level " + alpha.to_string());
}

}  // namespace runprob
