#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "runprob/rational.hpp"

namespace runprob {

/// n i.i.d. Bernoulli(p) trials with exact p.
class TrialSpec {
 public:
  TrialSpec(std::uint64_t n, Rational p);

  std::uint64_t n() const { return n_; }
  const Rational& p() const { return p_; }
  const Rational& q() const { return q_; }

 private:
  std::uint64_t n_;
  Rational p_;
  Rational q_;
};

/// Floating-point counterpart of TrialSpec.
class FloatTrialSpec {
 public:
  FloatTrialSpec(std::uint64_t n, double p);

  std::uint64_t n() const { return n_; }
  double p() const { return p_; }
  double q() const { return 1.0 - p_; }

 private:
  std::uint64_t n_;
  double p_;
};

enum class Method { Recurrence, Uspensky, Corollary, BruteForce, Auto };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

struct RunQuery {
  TrialSpec spec;
  std::uint64_t r;
  Method method = Method::Auto;
};

struct FloatRunQuery {
  FloatTrialSpec spec;
  std::uint64_t r;
  Method method = Method::Auto;
};

/// A method was asked for an input outside the range where it is valid.
class MethodDomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Enumeration would exceed the configured size cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Throws std::invalid_argument unless r >= 1.
void require_positive_run(std::uint64_t r);

}  // namespace runprob
