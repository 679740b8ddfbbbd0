#include "runprob/methods.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <string>
#include <utility>

#include "runprob/compensated.hpp"
#include "runprob/oracle.hpp"

namespace runprob {

namespace {

// Values of the sequence with index in [r, n-1-r] are read back exactly once,
// r+1 steps after they were produced. Earlier indices are initial conditions
// and are never stored, so at most min(r+1, n-2r) values are live at a time.
bool read_back_later(std::uint64_t index, std::uint64_t n, std::uint64_t r) {
  return index + 1 + r <= n;
}

}  // namespace

// Works on the complement z(k) = 1 - y(k) scaled by b^k, where p = a/b. With
// c = (b-a) a^r the recurrence becomes the integer recurrence
//   Z(k) = b Z(k-1) - c Z(k-1-r),  Z(k) = b^k for k < r,  Z(r) = b^r - a^r,
// so a single reduction at the end replaces a gcd per step.
Rational y_recurrence(const TrialSpec& spec, std::uint64_t r) {
  require_positive_run(r);
  const std::uint64_t n = spec.n();
  if (r > n) return Rational(0);

  const BigInt a = spec.p().numerator();
  const BigInt b = spec.p().denominator();
  const BigInt c = BigInt(b - a) * big_pow(a, r);
  // b = 2^s turns the scaling into a shift; a one-limb c avoids a full multiply.
  const bool b_power_of_two = mpz_popcount(b.get_mpz_t()) == 1;
  const auto b_shift = static_cast<mp_bitcnt_t>(mpz_scan1(b.get_mpz_t(), 0));
  const bool small_c = c.fits_ulong_p();
  const unsigned long c_ui = small_c ? c.get_ui() : 0;

  auto scale_and_subtract = [&](BigInt& out, const BigInt& scaled, const BigInt& lagged) {
    if (b_power_of_two) {
      mpz_mul_2exp(out.get_mpz_t(), scaled.get_mpz_t(), b_shift);
    } else {
      mpz_mul(out.get_mpz_t(), scaled.get_mpz_t(), b.get_mpz_t());
    }
    if (small_c) {
      mpz_submul_ui(out.get_mpz_t(), lagged.get_mpz_t(), c_ui);
    } else {
      mpz_submul(out.get_mpz_t(), c.get_mpz_t(), lagged.get_mpz_t());
    }
  };

  BigInt current = big_pow(b, r) - big_pow(a, r);  // Z(r)
  BigInt initial_power(1);                         // b^m while m < r
  std::deque<BigInt> window;
  BigInt next;

  for (std::uint64_t k = r + 1; k <= n; ++k) {
    const std::uint64_t m = k - 1 - r;
    if (m < r) {
      scale_and_subtract(next, current, initial_power);
      initial_power *= b;
    } else {
      scale_and_subtract(next, current, window.front());
    }
    if (read_back_later(k - 1, n, r)) {
      window.push_back(std::move(current));
    }
    if (m >= r) {
      // Reuse the consumed limb storage for the next step's output.
      current = std::move(window.front());
      window.pop_front();
    }
    current.swap(next);
  }

  const BigInt scale = big_pow(b, n);
  return Rational(BigInt(scale - current), scale);
}

Rational uspensky_beta(const TrialSpec& spec, std::int64_t n_eff, std::uint64_t r) {
  require_positive_run(r);
  if (n_eff < 0) return Rational(1);
  const auto m = static_cast<std::uint64_t>(n_eff);
  const std::uint64_t last = m / (r + 1);

  // q p^r = c / d; sum over a common denominator d^last.
  const BigInt a = spec.p().numerator();
  const BigInt b = spec.p().denominator();
  const BigInt c = BigInt(b - a) * big_pow(a, r);
  const BigInt d = big_pow(b, r + 1);

  BigInt numerator(0);
  BigInt c_power(1);
  BigInt d_power = big_pow(d, last);
  for (std::uint64_t l = 0; l <= last; ++l) {
    const BigInt term = binomial(m - l * r, static_cast<std::int64_t>(l)) * c_power * d_power;
    if (l % 2 == 0) {
      numerator += term;
    } else {
      numerator -= term;
    }
    c_power *= c;
    if (l < last) mpz_divexact(d_power.get_mpz_t(), d_power.get_mpz_t(), d.get_mpz_t());
  }
  return Rational(numerator, big_pow(d, last));
}

Rational y_uspensky(const TrialSpec& spec, std::uint64_t r) {
  require_positive_run(r);
  const std::uint64_t n = spec.n();
  if (r > n) return Rational(0);
  const auto n_signed = static_cast<std::int64_t>(n);
  const auto r_signed = static_cast<std::int64_t>(r);
  return Rational(1) - uspensky_beta(spec, n_signed, r) +
         rat_pow(spec.p(), r) * uspensky_beta(spec, n_signed - r_signed, r);
}

bool corollary_in_domain(std::uint64_t n, std::uint64_t r) { return r >= 1 && r <= n && 2 * r >= n; }

Rational y_corollary(const TrialSpec& spec, std::uint64_t r) {
  require_positive_run(r);
  const std::uint64_t n = spec.n();
  if (!corollary_in_domain(n, r)) {
    throw MethodDomainError("corollary requires 2r ≥ n and r ≤ n; got n=" +
                            std::to_string(n) + ", r=" + std::to_string(r));
  }
  const Rational p_r = rat_pow(spec.p(), r);
  return p_r + Rational(BigInt(n - r), BigInt(1)) * p_r * spec.q();
}

Rational y_auto(const RunQuery& query) {
  require_positive_run(query.r);
  const std::uint64_t n = query.spec.n();
  if (query.r > n) return Rational(0);
  if (corollary_in_domain(n, query.r)) return y_corollary(query.spec, query.r);
  return y_recurrence(query.spec, query.r);
}

Rational y_evaluate(const RunQuery& query) {
  switch (query.method) {
    case Method::Recurrence:
      return y_recurrence(query.spec, query.r);
    case Method::Uspensky:
      return y_uspensky(query.spec, query.r);
    case Method::Corollary:
      return y_corollary(query.spec, query.r);
    case Method::BruteForce:
      return brute_force_y(query.spec, query.r);
    case Method::Auto:
      break;
  }
  return y_auto(query);
}

// ---- floating-point mode ----

double y_recurrence(const FloatTrialSpec& spec, std::uint64_t r) {
  require_positive_run(r);
  const std::uint64_t n = spec.n();
  if (r > n) return 0.0;

  const double p_r = std::pow(spec.p(), static_cast<double>(r));
  const double increment = spec.q() * p_r;
  double current = p_r;
  std::deque<double> window;
  // Every step adds a nonnegative amount, so no cancellation occurs.
  for (std::uint64_t k = r + 1; k <= n; ++k) {
    const std::uint64_t m = k - 1 - r;
    double lagged = 0.0;
    if (m >= r) {
      lagged = window.front();
      window.pop_front();
    }
    const double next = current + (1.0 - lagged) * increment;
    if (read_back_later(k - 1, n, r)) window.push_back(current);
    current = next;
  }
  return current;
}

double y_corollary(const FloatTrialSpec& spec, std::uint64_t r) {
  require_positive_run(r);
  const std::uint64_t n = spec.n();
  if (!corollary_in_domain(n, r)) {
    throw MethodDomainError("corollary requires 2r ≥ n and r ≤ n; got n=" +
                            std::to_string(n) + ", r=" + std::to_string(r));
  }
  const double p_r = std::pow(spec.p(), static_cast<double>(r));
  return p_r + static_cast<double>(n - r) * p_r * spec.q();
}

FloatBeta uspensky_beta(const FloatTrialSpec& spec, std::int64_t n_eff, std::uint64_t r) {
  require_positive_run(r);
  if (n_eff < 0) return {1.0, 0.0};
  const double x = spec.q() * std::pow(spec.p(), static_cast<double>(r));
  if (x == 0.0) return {1.0, 0.0};

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double log_x = std::log(x);
  const auto m = static_cast<std::uint64_t>(n_eff);
  const std::uint64_t last = m / (r + 1);

  CompensatedSum sum;
  double term_error = 0.0;
  for (std::uint64_t l = 0; l <= last; ++l) {
    const auto top = static_cast<double>(m - l * r);
    const auto ld = static_cast<double>(l);
    const double lg_top = std::lgamma(top + 1.0);
    const double lg_l = std::lgamma(ld + 1.0);
    const double lg_rest = std::lgamma(top - ld + 1.0);
    const double log_term = lg_top - lg_l - lg_rest + ld * log_x;
    const double magnitude = std::exp(log_term);
    sum.add(l % 2 == 0 ? magnitude : -magnitude);
    // exp() turns the absolute error of log_term into a relative error.
    const double log_error = 4.0 * eps * (1.0 + lg_top + lg_l + lg_rest + ld * std::fabs(log_x));
    term_error += magnitude * (log_error + 2.0 * eps);
  }
  const double value = sum.value();
  return {value, term_error + 2.0 * eps * std::fabs(value) + eps * eps * sum.magnitude()};
}

FloatUspensky y_uspensky_checked(const FloatTrialSpec& spec, std::uint64_t r) {
  require_positive_run(r);
  const std::uint64_t n = spec.n();
  if (r > n) return {0.0, 0.0, false};
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const auto n_signed = static_cast<std::int64_t>(n);
  const auto r_signed = static_cast<std::int64_t>(r);
  const double p_r = std::pow(spec.p(), static_cast<double>(r));
  const FloatBeta full = uspensky_beta(spec, n_signed, r);
  const FloatBeta shifted = uspensky_beta(spec, n_signed - r_signed, r);

  const double value = 1.0 - full.value + p_r * shifted.value;
  const double bound = full.error_bound + p_r * shifted.error_bound +
                       2.0 * eps * (1.0 + std::fabs(full.value) + p_r * std::fabs(shifted.value));
  const double relative = value > 0.0 ? bound / value : std::numeric_limits<double>::infinity();
  if (relative > kUspenskyFallbackThreshold || value > 1.0) {
    return {y_recurrence(spec, r), relative, true};
  }
  return {value, relative, false};
}

double y_uspensky(const FloatTrialSpec& spec, std::uint64_t r) { return y_uspensky_checked(spec, r).value; }

double y_auto(const FloatRunQuery& query) {
  require_positive_run(query.r);
  const std::uint64_t n = query.spec.n();
  if (query.r > n) return 0.0;
  if (corollary_in_domain(n, query.r)) return y_corollary(query.spec, query.r);
  return y_recurrence(query.spec, query.r);
}

double y_evaluate(const FloatRunQuery& query) {
  switch (query.method) {
    case Method::Recurrence:
      return y_recurrence(query.spec, query.r);
    case Method::Uspensky:
      return y_uspensky(query.spec, query.r);
    case Method::Corollary:
      return y_corollary(query.spec, query.r);
    case Method::BruteForce:
      return brute_force_y(query.spec, query.r);
    case Method::Auto:
      break;
  }
  return y_auto(query);
}

}  // namespace runprob
