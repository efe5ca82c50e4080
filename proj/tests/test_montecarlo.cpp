#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "patrace/competition.hpp"
#include "patrace/montecarlo.hpp"

using namespace patrace;

namespace {
Rational rat(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("splitmix64 reference stream") {
  // First outputs for seed 1234567; frozen from the published algorithm.
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ull);
  CHECK(rng.next() == 3203168211198807973ull);

  SplitMix64 unit(42);
  for (int i = 0; i < 1000; ++i) {
    const double u = unit.next_unit();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("identical configuration reproduces the report bit for bit") {
  SimConfig config;
  config.patterns = {Pattern::parse("SSF"), Pattern::parse("FFS")};
  config.p = rat(1, 2);
  config.games = 5000;
  config.seed = 99;

  const SimReport a = simulate(config);
  const SimReport b = simulate(config);
  CHECK(a.win_counts == b.win_counts);
  CHECK(a.mean_duration == b.mean_duration);
  CHECK(a.std_error_win == b.std_error_win);
  CHECK(a.std_error_duration == b.std_error_duration);

  std::uint64_t total = 0;
  for (const auto c : a.win_counts) total += c;
  CHECK(total == config.games);

  // a different seed gives a different sample
  config.seed = 100;
  const SimReport c = simulate(config);
  CHECK(a.win_counts != c.win_counts);
}

TEST_CASE("geometric waiting time within statistical tolerance") {
  SimConfig config;
  config.patterns = {Pattern::parse("S")};
  config.p = rat(1, 2);
  config.games = 100000;
  config.seed = 7;

  const SimReport report = simulate(config);
  CHECK(report.win_counts[0] == config.games);
  CHECK(std::abs(report.mean_duration - 2.0) < 4.0 * report.std_error_duration);
}

TEST_CASE("three-pattern race frequencies near the exact values") {
  SimConfig config;
  config.patterns = {Pattern::parse("SSFFS"), Pattern::parse("FSFSSF"),
                     Pattern::parse("FSSSF")};
  config.p = rat(1, 2);
  config.games = 20000;
  config.seed = 2024;

  const SimReport report = simulate(config);
  const TrioOutcome exact = trio(config.patterns[0], config.patterns[1],
                                 config.patterns[2], ProbParams::from_p(config.p));
  const double n = static_cast<double>(config.games);
  for (std::size_t i = 0; i < 3; ++i) {
    const double freq = static_cast<double>(report.win_counts[i]) / n;
    const double se = report.std_error_win[i];
    CHECK(std::abs(freq - exact.win_prob[i].to_double()) < 4.0 * se);
  }
  CHECK(std::abs(report.mean_duration - exact.expected_duration.to_double()) <
        4.0 * report.std_error_duration);
}

TEST_CASE("race frequencies near the quoted minimum point") {
  SimConfig config;
  config.patterns = {Pattern::parse("SSFFS"), Pattern::parse("FSFSSF"),
                     Pattern::parse("FSSSF")};
  config.p = Rational::parse("0.2495");
  config.games = 100000;
  config.seed = 11;

  const SimReport report = simulate(config);
  const double freq =
      static_cast<double>(report.win_counts[0]) / static_cast<double>(config.games);
  CHECK(std::abs(freq - 0.2859) < 4.0 * report.std_error_win[0] + 5e-5);
}

TEST_CASE("simulation validates its inputs") {
  SimConfig config;
  config.patterns = {Pattern::parse("SS"), Pattern::parse("SSF")};
  config.p = rat(1, 2);
  config.games = 10;
  config.seed = 1;
  CHECK_THROWS_AS(simulate(config), std::invalid_argument);

  config.patterns = {Pattern::parse("SS")};
  config.games = 0;
  CHECK_THROWS_AS(simulate(config), std::invalid_argument);

  config.games = 10;
  config.p = rat(0);
  CHECK_THROWS_AS(simulate(config), std::invalid_argument);
}
