#pragma once

// Tail probability y(n, r) = P(longest success run in n trials >= r).
//
// Three independent routes are provided:
//   recurrence  y(n) = y(n-1) + (1 - y(n-1-r)) q p^r, seeded with
//               y(0..r-1) = 0 and y(r) = p^r;
//   uspensky    y(n) = 1 - beta(n) + p^r beta(n-r), where
//               beta(m) = sum_{l=0}^{floor(m/(r+1))} (-1)^l C(m-lr, l) (q p^r)^l;
//   corollary   y(n) = p^r + (n-r) p^r q, valid only for n/2 <= r <= n.
//
// Every exact routine returns 0 for r > n (a run longer than the sequence is
// impossible), which also covers n = 0.

#include <cstdint>

#include "runprob/rational.hpp"
#include "runprob/trial.hpp"

namespace runprob {

Rational y_recurrence(const TrialSpec& spec, std::uint64_t r);

/// Alternating binomial sum beta(n_eff, r). Negative n_eff yields 1.
Rational uspensky_beta(const TrialSpec& spec, std::int64_t n_eff, std::uint64_t r);
Rational y_uspensky(const TrialSpec& spec, std::uint64_t r);

/// Throws MethodDomainError unless 2r >= n and r <= n.
Rational y_corollary(const TrialSpec& spec, std::uint64_t r);

bool corollary_in_domain(std::uint64_t n, std::uint64_t r);

/// 0 for r > n, corollary when 2r >= n, recurrence otherwise.
Rational y_auto(const RunQuery& query);

/// Evaluates query.method; BruteForce goes through the enumeration oracle.
Rational y_evaluate(const RunQuery& query);

// ---- floating-point mode ----

double y_recurrence(const FloatTrialSpec& spec, std::uint64_t r);
double y_corollary(const FloatTrialSpec& spec, std::uint64_t r);

struct FloatBeta {
  double value;
  double error_bound;  // absolute, from the compensated sum and term rounding
};
FloatBeta uspensky_beta(const FloatTrialSpec& spec, std::int64_t n_eff, std::uint64_t r);

struct FloatUspensky {
  double value;
  double relative_error_estimate;
  bool fell_back;  // estimate exceeded kUspenskyFallbackThreshold; value is the recurrence's
};
inline constexpr double kUspenskyFallbackThreshold = 1e-12;
FloatUspensky y_uspensky_checked(const FloatTrialSpec& spec, std::uint64_t r);
double y_uspensky(const FloatTrialSpec& spec, std::uint64_t r);

double y_auto(const FloatRunQuery& query);
double y_evaluate(const FloatRunQuery& query);

}  // namespace runprob
