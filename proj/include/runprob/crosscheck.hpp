#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "runprob/oracle.hpp"
#include "runprob/rational.hpp"
#include "runprob/trial.hpp"

namespace runprob {

/// Per-method values for one query plus the agreement verdict. Disagreement
/// is data, not an exception.
struct MethodReport {
  RunQuery query;
  std::map<Method, Rational> values;
  std::map<Method, std::int64_t> timings_ns;
  bool agree = true;
};

struct FloatMethodReport {
  FloatRunQuery query;
  std::map<Method, double> values;
  std::map<Method, std::int64_t> timings_ns;
  bool agree = true;
  double max_discrepancy = 0.0;  // largest pairwise relative difference
  double tolerance = 1e-9;
  bool uspensky_fell_back = false;
};

struct CrosscheckOptions {
  unsigned brute_force_cap = kDefaultBruteForceCap;
  double float_tolerance = 1e-9;
};

/// Methods whose domain contains (n, r): recurrence and Uspensky always,
/// corollary iff 2r >= n and r <= n, brute force iff n <= cap.
std::vector<Method> methods_in_domain(std::uint64_t n, std::uint64_t r, unsigned brute_force_cap);

MethodReport crosscheck(const RunQuery& query, const CrosscheckOptions& options = {});
FloatMethodReport crosscheck(const FloatRunQuery& query, const CrosscheckOptions& options = {});

/// |a - b| / max(|a|, |b|), and 0 when both are 0.
double relative_difference(double a, double b);

}  // namespace runprob
