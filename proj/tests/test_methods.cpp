#include <doctest.h>

#include <cmath>
#include <vector>

#include "runprob/methods.hpp"
#include "runprob/oracle.hpp"

using namespace runprob;

namespace {

TrialSpec spec(std::uint64_t n, long a, long b) { return TrialSpec(n, Rational(a, b)); }
Rational R(long a, long b) { return Rational(a, b); }

const std::vector<Rational> kProbabilities{R(1, 2), R(1, 3), R(3, 10), R(9, 10)};

}  // namespace

TEST_CASE("TrialSpec validates p and derives q") {
  const TrialSpec s = spec(5, 3, 10);
  CHECK(s.q() == R(7, 10));
  CHECK_THROWS_AS(TrialSpec(3, R(3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(TrialSpec(3, R(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(FloatTrialSpec(3, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(FloatTrialSpec(3, std::nan("")), std::invalid_argument);
  CHECK_NOTHROW(TrialSpec(0, Rational(0)));
  CHECK_NOTHROW(TrialSpec(0, Rational(1)));
}

TEST_CASE("method names") {
  for (const Method m : {Method::Recurrence, Method::Uspensky, Method::Corollary, Method::BruteForce, Method::Auto}) {
    CHECK(parse_method(method_name(m)) == m);
  }
  CHECK_FALSE(parse_method("fft").has_value());
}

TEST_CASE("y_recurrence examples") {
  CHECK(y_recurrence(spec(10, 1, 2), 3) == R(65, 128));
  CHECK(y_recurrence(spec(3, 1, 2), 3) == R(1, 8));
  // y_2 = 1/4, y_3 = 3/8, y_4 = 1/2.
  CHECK(y_recurrence(spec(2, 1, 2), 2) == R(1, 4));
  CHECK(y_recurrence(spec(3, 1, 2), 2) == R(3, 8));
  CHECK(y_recurrence(spec(4, 1, 2), 2) == R(1, 2));
  CHECK(y_recurrence(spec(2, 1, 2), 3) == Rational(0));
  CHECK(y_recurrence(spec(12, 3, 10), 4) == R(265416993, 5000000000L));
  CHECK_THROWS_AS(y_recurrence(spec(4, 1, 2), 0), std::invalid_argument);
}

TEST_CASE("uspensky_beta examples") {
  CHECK(uspensky_beta(spec(10, 1, 2), 10, 3) == R(75, 128));
  CHECK(uspensky_beta(spec(10, 1, 2), 7, 3) == R(3, 4));
  CHECK(uspensky_beta(spec(10, 1, 2), 0, 5) == Rational(1));
  CHECK(uspensky_beta(spec(10, 1, 2), -3, 5) == Rational(1));
  // Terms 1 - 7/16 + 6/256 assembled by hand.
  CHECK(uspensky_beta(spec(10, 1, 2), 10, 3) == Rational(1) - R(7, 16) + R(6, 256));
}

TEST_CASE("y_uspensky examples") {
  CHECK(y_uspensky(spec(10, 1, 2), 3) == Rational(1) - R(75, 128) + R(1, 8) * R(3, 4));
  CHECK(y_uspensky(spec(10, 1, 2), 3) == R(65, 128));
  CHECK(y_uspensky(spec(3, 1, 2), 3) == R(1, 8));
  // 281/729 from exhaustive enumeration (frozen).
  CHECK(y_uspensky(spec(6, 1, 3), 2) == R(281, 729));
  CHECK(y_recurrence(spec(6, 1, 3), 2) == R(281, 729));
  CHECK(y_uspensky(spec(4, 1, 2), 5) == Rational(0));
}

TEST_CASE("y_corollary examples and domain") {
  CHECK(y_corollary(spec(4, 1, 2), 2) == R(1, 2));
  CHECK(y_corollary(spec(10, 1, 2), 5) == R(7, 64));
  CHECK(y_corollary(spec(10, 1, 2), 5) == y_recurrence(spec(10, 1, 2), 5));
  for (const auto& p : kProbabilities) {
    CHECK(y_corollary(TrialSpec(7, p), 7) == rat_pow(p, 7));
  }
  CHECK_THROWS_AS(y_corollary(spec(10, 1, 2), 4), MethodDomainError);
  CHECK_THROWS_AS(y_corollary(spec(10, 1, 2), 11), MethodDomainError);
  try {
    y_corollary(spec(10, 1, 2), 3);
    FAIL("expected a domain error");
  } catch (const MethodDomainError& e) {
    CHECK(std::string(e.what()).find("requires 2r ≥ n") != std::string::npos);
  }
  CHECK(corollary_in_domain(10, 5));
  CHECK(corollary_in_domain(9, 5));
  CHECK_FALSE(corollary_in_domain(9, 4));
  CHECK_FALSE(corollary_in_domain(3, 4));
}

TEST_CASE("y_auto dispatch") {
  CHECK(y_auto(RunQuery{spec(5, 1, 2), 6}) == Rational(0));
  CHECK(y_auto(RunQuery{spec(10, 1, 2), 3}) == R(65, 128));
  CHECK(y_auto(RunQuery{spec(10, 1, 2), 5}) == R(7, 64));
  CHECK(y_auto(RunQuery{spec(0, 1, 2), 1}) == Rational(0));
}

TEST_CASE("y_evaluate routes every method") {
  const TrialSpec s = spec(8, 1, 3);
  const Rational expected = brute_force_y(s, 4);
  for (const Method m : {Method::Recurrence, Method::Uspensky, Method::Corollary, Method::BruteForce, Method::Auto}) {
    CAPTURE(method_name(m));
    CHECK(y_evaluate(RunQuery{s, 4, m}) == expected);
  }
}

TEST_CASE("recurrence and Uspensky agree exactly") {
  for (const auto& p : kProbabilities) {
    for (std::uint64_t n = 0; n <= 30; ++n) {
      const TrialSpec s(n, p);
      for (std::uint64_t r = 1; r <= n + 1; ++r) {
        CAPTURE(n);
        CAPTURE(r);
        REQUIRE(y_recurrence(s, r) == y_uspensky(s, r));
      }
    }
  }
}

TEST_CASE("corollary matches the recurrence on its whole domain") {
  for (std::uint64_t n = 1; n <= 60; ++n) {
    for (std::uint64_t r = (n + 1) / 2; r <= n; ++r) {
      for (const auto& p : {R(1, 2), R(3, 10)}) {
        REQUIRE(y_corollary(TrialSpec(n, p), r) == y_recurrence(TrialSpec(n, p), r));
      }
    }
  }
}

TEST_CASE("monotone in n, anti-monotone in r, within [0, 1]") {
  for (const auto& p : kProbabilities) {
    for (std::uint64_t r = 1; r <= 6; ++r) {
      Rational previous(0);
      for (std::uint64_t n = 0; n <= 40; ++n) {
        const Rational y = y_recurrence(TrialSpec(n, p), r);
        REQUIRE(y >= previous);
        REQUIRE(y >= Rational(0));
        REQUIRE(y <= Rational(1));
        previous = y;
      }
    }
    for (std::uint64_t n = 2; n <= 40; n += 3) {
      const TrialSpec s(n, p);
      for (std::uint64_t r = 1; r < n; ++r) REQUIRE(y_recurrence(s, r + 1) <= y_recurrence(s, r));
    }
  }
}

TEST_CASE("degenerate probabilities") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    for (std::uint64_t r = 1; r <= n; ++r) {
      const TrialSpec never(n, Rational(0));
      const TrialSpec always(n, Rational(1));
      CHECK(y_recurrence(never, r) == Rational(0));
      CHECK(y_uspensky(never, r) == Rational(0));
      CHECK(brute_force_y(never, r) == Rational(0));
      CHECK(y_recurrence(always, r) == Rational(1));
      CHECK(y_uspensky(always, r) == Rational(1));
      CHECK(brute_force_y(always, r) == Rational(1));
      if (corollary_in_domain(n, r)) {
        CHECK(y_corollary(never, r) == Rational(0));
        CHECK(y_corollary(always, r) == Rational(1));
      }
    }
  }
}

TEST_CASE("recurrence keeps exactness with a large denominator") {
  const TrialSpec s(40, R(123456789, 1000000007));
  for (std::uint64_t r = 1; r <= 40; r += 3) REQUIRE(y_recurrence(s, r) == y_uspensky(s, r));
}

TEST_CASE("float recurrence and corollary track exact values") {
  for (const double p : {0.5, 0.3}) {
    const Rational p_exact = Rational::parse(p == 0.5 ? "1/2" : "3/10");
    for (std::uint64_t n = 0; n <= 80; ++n) {
      for (std::uint64_t r = 1; r <= n + 1; ++r) {
        const double exact = y_recurrence(TrialSpec(n, p_exact), r).to_double();
        const FloatTrialSpec fs(n, p);
        const double rec = y_recurrence(fs, r);
        REQUIRE(std::fabs(rec - exact) <= 1e-9 * std::fabs(exact));
        if (corollary_in_domain(n, r)) {
          REQUIRE(std::fabs(y_corollary(fs, r) - exact) <= 1e-9 * std::fabs(exact));
        }
      }
    }
  }
}

TEST_CASE("float Uspensky either meets tolerance or falls back") {
  std::size_t direct = 0;
  std::size_t fallbacks = 0;
  for (const double p : {0.5, 0.3}) {
    const Rational p_exact = Rational::parse(p == 0.5 ? "1/2" : "3/10");
    for (std::uint64_t n = 1; n <= 80; ++n) {
      for (std::uint64_t r = 1; r <= n; ++r) {
        const double exact = y_recurrence(TrialSpec(n, p_exact), r).to_double();
        const FloatUspensky u = y_uspensky_checked(FloatTrialSpec(n, p), r);
        REQUIRE(std::fabs(u.value - exact) <= 1e-9 * exact);
        if (!u.fell_back) {
          // The reported estimate must actually bound the error.
          REQUIRE(std::fabs(u.value - exact) <= u.relative_error_estimate * exact + 1e-15 * exact);
          ++direct;
        } else {
          ++fallbacks;
        }
      }
    }
  }
  // Both branches are exercised on this grid.
  CHECK(direct > 0);
  CHECK(fallbacks > 0);
}

TEST_CASE("float Uspensky is used directly on the worked example") {
  const FloatUspensky u = y_uspensky_checked(FloatTrialSpec(10, 0.5), 3);
  CHECK_FALSE(u.fell_back);
  CHECK(u.value == doctest::Approx(0.5078125).epsilon(1e-12));
}

TEST_CASE("float auto dispatch") {
  CHECK(y_auto(FloatRunQuery{FloatTrialSpec(5, 0.5), 6}) == 0.0);
  CHECK(y_auto(FloatRunQuery{FloatTrialSpec(10, 0.5), 5}) == doctest::Approx(7.0 / 64.0));
  CHECK(y_auto(FloatRunQuery{FloatTrialSpec(10, 0.5), 3}) == doctest::Approx(65.0 / 128.0));
  CHECK_THROWS_AS(y_corollary(FloatTrialSpec(10, 0.5), 2), MethodDomainError);
}
