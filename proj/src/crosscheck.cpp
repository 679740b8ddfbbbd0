#include "runprob/crosscheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "runprob/methods.hpp"

namespace runprob {

namespace {

template <typename F>
auto timed(F&& f, std::int64_t& elapsed_ns) {
  const auto start = std::chrono::steady_clock::now();
  auto value = f();
  elapsed_ns =
      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start).count();
  return value;
}

}  // namespace

std::vector<Method> methods_in_domain(std::uint64_t n, std::uint64_t r, unsigned brute_force_cap) {
  std::vector<Method> out{Method::Recurrence, Method::Uspensky};
  if (corollary_in_domain(n, r)) out.push_back(Method::Corollary);
  if (n <= std::min(brute_force_cap, kHardBruteForceCap)) out.push_back(Method::BruteForce);
  return out;
}

double relative_difference(double a, double b) {
  const double scale = std::max(std::fabs(a), std::fabs(b));
  return scale == 0.0 ? 0.0 : std::fabs(a - b) / scale;
}

// Methods run one after another so the timings are not skewed by each other.
MethodReport crosscheck(const RunQuery& query, const CrosscheckOptions& options) {
  require_positive_run(query.r);
  MethodReport report{query, {}, {}, true};
  const TrialSpec& spec = query.spec;
  for (const Method m : methods_in_domain(spec.n(), query.r, options.brute_force_cap)) {
    std::int64_t ns = 0;
    Rational value = timed(
        [&] {
          if (m == Method::BruteForce) return brute_force_y(spec, query.r, options.brute_force_cap);
          return y_evaluate(RunQuery{spec, query.r, m});
        },
        ns);
    report.values.emplace(m, std::move(value));
    report.timings_ns.emplace(m, ns);
  }
  const Rational& first = report.values.begin()->second;
  report.agree = std::all_of(report.values.begin(), report.values.end(),
                             [&](const auto& entry) { return entry.second == first; });
  return report;
}

FloatMethodReport crosscheck(const FloatRunQuery& query, const CrosscheckOptions& options) {
  require_positive_run(query.r);
  FloatMethodReport report{query, {}, {}, true, 0.0, options.float_tolerance, false};
  const FloatTrialSpec& spec = query.spec;
  for (const Method m : methods_in_domain(spec.n(), query.r, options.brute_force_cap)) {
    std::int64_t ns = 0;
    const double value = timed(
        [&] {
          switch (m) {
            case Method::Uspensky: {
              const FloatUspensky u = y_uspensky_checked(spec, query.r);
              report.uspensky_fell_back = u.fell_back;
              return u.value;
            }
            case Method::BruteForce:
              return brute_force_y(spec, query.r, options.brute_force_cap);
            default:
              return y_evaluate(FloatRunQuery{spec, query.r, m});
          }
        },
        ns);
    report.values.emplace(m, value);
    report.timings_ns.emplace(m, ns);
  }
  for (auto i = report.values.begin(); i != report.values.end(); ++i) {
    for (auto j = std::next(i); j != report.values.end(); ++j) {
      report.max_discrepancy = std::max(report.max_discrepancy, relative_difference(i->second, j->second));
    }
  }
  report.agree = report.max_discrepancy <= report.tolerance;
  return report;
}

}  // namespace runprob
