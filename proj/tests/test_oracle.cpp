#include <doctest.h>

#include <cmath>
#include <vector>

#include "runprob/methods.hpp"
#include "runprob/oracle.hpp"

using namespace runprob;

namespace {

Rational R(long a, long b) { return Rational(a, b); }

std::vector<Rational> to_vector(std::span<const Rational> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("longest_run_of") {
  CHECK(longest_run_of(std::vector<std::uint8_t>{1, 1, 0, 1, 1, 1, 0, 1, 0, 0}) == 3);
  CHECK(longest_run_of(std::vector<std::uint8_t>{}) == 0);
  CHECK(longest_run_of(std::vector<std::uint8_t>{1, 1, 1, 1}) == 4);
  CHECK(longest_run_of(std::vector<std::uint8_t>{0, 0, 0}) == 0);
}

TEST_CASE("longest_run_in_word matches the sequence scan") {
  CHECK(longest_run_in_word(0) == 0);
  CHECK(longest_run_in_word(~std::uint64_t{0}) == 64);
  CHECK(longest_run_in_word(0b1011101110111) == 3);
  std::vector<std::uint8_t> bits(16);
  for (std::uint64_t x = 0; x < (1U << 16); ++x) {
    for (unsigned i = 0; i < 16; ++i) bits[i] = static_cast<std::uint8_t>((x >> i) & 1U);
    REQUIRE(longest_run_in_word(x) == longest_run_of(bits));
  }
}

TEST_CASE("enumeration: parallel kernel equals serial reference") {
  for (unsigned n = 0; n <= 16; ++n) {
    const auto reference = enumerate_outcomes_serial(n);
    for (const int workers : {1, 2, 8}) REQUIRE(enumerate_outcomes(n, workers) == reference);
  }
  // Row sums are binomial coefficients, total is 2^n.
  const auto counts = enumerate_outcomes(12);
  std::uint64_t total = 0;
  for (unsigned ones = 0; ones <= 12; ++ones) {
    std::uint64_t row = 0;
    for (unsigned l = 0; l <= 12; ++l) row += counts.at(ones, l);
    CHECK(BigInt(static_cast<unsigned long>(row)) == binomial(12, ones));
    total += row;
  }
  CHECK(total == 4096);
}

TEST_CASE("brute_force_y examples") {
  CHECK(brute_force_y(TrialSpec(10, R(1, 2)), 3) == R(65, 128));
  CHECK(brute_force_y(TrialSpec(4, R(1, 2)), 2) == R(1, 2));
  CHECK(brute_force_y(TrialSpec(3, R(1, 3)), 4) == Rational(0));
  CHECK(brute_force_y(TrialSpec(0, R(1, 3)), 1) == Rational(0));
  CHECK(brute_force_y(FloatTrialSpec(10, 0.5), 3) == doctest::Approx(0.5078125).epsilon(1e-14));
}

TEST_CASE("brute force cap") {
  CHECK_THROWS_AS(brute_force_y(TrialSpec(21, R(1, 2)), 3), CapExceededError);
  CHECK_THROWS_AS(brute_force_y(TrialSpec(12, R(1, 2)), 3, 10), CapExceededError);
  CHECK_THROWS_AS(brute_force_pmf(TrialSpec(21, R(1, 2))), CapExceededError);
  CHECK_THROWS_AS(brute_force_y(FloatTrialSpec(21, 0.5), 3), CapExceededError);
  CHECK(brute_force_y(TrialSpec(12, R(1, 2)), 3, 12) == y_recurrence(TrialSpec(12, R(1, 2)), 3));
  try {
    brute_force_y(TrialSpec(25, R(1, 2)), 3);
    FAIL("expected cap error");
  } catch (const CapExceededError& e) {
    CHECK(std::string(e.what()).find("20") != std::string::npos);
  }
}

TEST_CASE("brute_force_pmf examples") {
  CHECK(to_vector(brute_force_pmf(TrialSpec(2, R(1, 2))).pmf()) == std::vector<Rational>{R(1, 4), R(1, 2), R(1, 4)});
  CHECK(to_vector(brute_force_pmf(TrialSpec(1, R(1, 3))).pmf()) == std::vector<Rational>{R(2, 3), R(1, 3)});
  CHECK(to_vector(brute_force_pmf(TrialSpec(0, R(1, 3))).pmf()) == std::vector<Rational>{Rational(1)});
}

TEST_CASE("brute force agrees with both closed routes") {
  for (const auto& p : {R(1, 2), R(1, 3)}) {
    for (std::uint64_t n = 1; n <= 12; ++n) {
      const TrialSpec s(n, p);
      for (std::uint64_t r = 1; r <= n; ++r) {
        const Rational b = brute_force_y(s, r);
        REQUIRE(b == y_recurrence(s, r));
        REQUIRE(b == y_uspensky(s, r));
      }
    }
  }
}

TEST_CASE("disjoint run starts give the closed form when 2r >= n") {
  // At most one run of length r fits, so P(run) is a sum over its start position.
  for (std::uint64_t n = 1; n <= 14; ++n) {
    for (std::uint64_t r = (n + 1) / 2; r <= n; ++r) {
      const TrialSpec s(n, R(2, 7));
      const Rational p_r = rat_pow(s.p(), r);
      Rational by_position = p_r;
      for (std::uint64_t start = 2; start + r - 1 <= n; ++start) by_position += s.q() * p_r;
      REQUIRE(brute_force_y(s, r) == by_position);
    }
  }
}

TEST_CASE("ChunkStream is a pure function of (seed, chunk, index)") {
  ChunkStream a(42, 7);
  ChunkStream b(42, 7);
  ChunkStream other_chunk(42, 8);
  ChunkStream other_seed(43, 7);
  int differs_chunk = 0;
  int differs_seed = 0;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    REQUIRE(x == b.next());
    differs_chunk += x != other_chunk.next();
    differs_seed += x != other_seed.next();
  }
  CHECK(differs_chunk == 100);
  CHECK(differs_seed == 100);
  ChunkStream u(1, 0);
  for (int i = 0; i < 10000; ++i) {
    const double v = u.uniform();
    REQUIRE(v >= 0.0);
    REQUIRE(v < 1.0);
  }
}

TEST_CASE("monte carlo degenerate probabilities") {
  const McConfig cfg{100, 1, 16, 0};
  CHECK(monte_carlo_y(FloatTrialSpec(5, 1.0), 5, cfg).estimate == 1.0);
  CHECK(monte_carlo_y(FloatTrialSpec(5, 0.0), 1, cfg).estimate == 0.0);
  CHECK(monte_carlo_y(FloatTrialSpec(5, 1.0), 6, cfg).estimate == 0.0);
  const auto e = monte_carlo_y(FloatTrialSpec(5, 1.0), 5, cfg);
  CHECK(e.std_error == 0.0);
  CHECK(e.samples == 100);
  CHECK(e.hits == 100);
}

TEST_CASE("monte carlo is reproducible across thread counts and the serial path") {
  const FloatTrialSpec s(20, 0.3);
  McConfig cfg{200'000, 99, 4096, 1};
  const McEstimate reference = monte_carlo_y_serial(s, 4, cfg);
  for (const int workers : {1, 2, 8}) {
    cfg.workers = workers;
    const McEstimate e = monte_carlo_y(s, 4, cfg);
    REQUIRE(e.hits == reference.hits);
    REQUIRE(e.estimate == reference.estimate);
  }
  // A different chunking draws different substreams.
  cfg.chunk_size = 1000;
  CHECK(monte_carlo_y(s, 4, cfg).hits != reference.hits);
}

TEST_CASE("monte carlo stays within four standard errors") {
  const McConfig cfg{1'000'000, 42, 1U << 16, 0};
  const McEstimate e = monte_carlo_y(FloatTrialSpec(10, 0.5), 3, cfg);
  CHECK(std::fabs(e.estimate - 65.0 / 128.0) <= 4.0 * e.std_error);
  CHECK(e.std_error == doctest::Approx(std::sqrt(e.estimate * (1 - e.estimate) / 1e6)));
}

TEST_CASE("monte carlo rejects bad configuration") {
  CHECK_THROWS_AS(monte_carlo_y(FloatTrialSpec(5, 0.5), 1, McConfig{0, 1, 16, 0}), std::invalid_argument);
  CHECK_THROWS_AS(monte_carlo_y(FloatTrialSpec(5, 0.5), 1, McConfig{10, 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(monte_carlo_y(FloatTrialSpec(5, 0.5), 0, McConfig{10, 1, 16, 0}), std::invalid_argument);
}
