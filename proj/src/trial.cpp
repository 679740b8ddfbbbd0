#include "runprob/trial.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace runprob {

TrialSpec::TrialSpec(std::uint64_t n, Rational p) : n_(n), p_(std::move(p)), q_(Rational(1) - p_) {
  if (p_ < Rational(0) || p_ > Rational(1)) {
    throw std::invalid_argument("p must lie in [0, 1], got " + p_.to_string());
  }
}

FloatTrialSpec::FloatTrialSpec(std::uint64_t n, double p) : n_(n), p_(p) {
  if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
    throw std::invalid_argument("p must lie in [0, 1], got " + std::to_string(p));
  }
}

namespace {
constexpr std::array<std::pair<Method, std::string_view>, 5> kMethodNames{{
    {Method::Recurrence, "recurrence"},
    {Method::Uspensky, "uspensky"},
    {Method::Corollary, "corollary"},
    {Method::BruteForce, "brute"},
    {Method::Auto, "auto"},
}};
}  // namespace

std::string_view method_name(Method m) {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (const auto& [method, text] : kMethodNames) {
    if (text == name) return method;
  }
  return std::nullopt;
}

void require_positive_run(std::uint64_t r) {
  if (r == 0) throw std::invalid_argument("run length r must be at least 1");
}

}  // namespace runprob
