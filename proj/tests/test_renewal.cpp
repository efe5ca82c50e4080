#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "patrace/renewal.hpp"
#include "test_util.hpp"

using namespace patrace;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

Polynomial one_minus_s() {
  return Polynomial(std::vector<Rational>{rat(1), rat(-1)});
}

const std::vector<Rational> p_grid = {rat(1, 2), rat(1, 3), rat(2, 5),
                                      rat(7, 10), rat(9, 11)};

}  // namespace

TEST_CASE("occurrence SGF of SSFFS") {
  for (const Rational& pv : p_grid) {
    const ProbParams params = ProbParams::from_p(pv);
    const Rational p = params.p, q = params.q;
    const OccurrenceSgf u = scratch_occurrence_sgf(Pattern::parse("SSFFS"), params);
    CHECK(u.kind == SgfKind::from_scratch);

    // U - 1 = p^3 q^2 s^5 / ((1-s)(1 + p^2 q^2 s^4))
    const Rational w = p * p * p * q * q;
    const Polynomial corr =
        Polynomial(rat(1)) + Polynomial::monomial(p * p * q * q, 4);
    const RationalFunction expected(Polynomial::monomial(w, 5),
                                    one_minus_s() * corr);
    CHECK(u.fn - RationalFunction(rat(1)) == expected);

    // U(1) diverges: the u_n are not a distribution
    CHECK_FALSE(limit_at_one(u.fn).is_finite);
  }
}

TEST_CASE("occurrence SGF without self-overlap, against renewal counting") {
  const ProbParams params = ProbParams::from_p(rat(1, 2));
  const Pattern w = Pattern::parse("SSFF");
  const OccurrenceSgf u = scratch_occurrence_sgf(w, params);

  const Rational w4 = pow(rat(1, 2), 4);
  const RationalFunction expected(Polynomial::monomial(w4, 4), one_minus_s());
  CHECK(u.fn - RationalFunction(rat(1)) == expected);

  const auto series = series_coefficients(u.fn, 12);
  const auto brute = testutil::renewal_occurrence_dp(w, "", params, 12);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(series[n] == brute[n]);
}

TEST_CASE("occurrence series vanishes strictly below the pattern length") {
  std::mt19937 rng(41);
  const ProbParams params = ProbParams::from_p(rat(2, 7));
  for (int round = 0; round < 40; ++round) {
    const Pattern w = testutil::random_pattern(rng, 1, 8);
    const auto series =
        series_coefficients(scratch_occurrence_sgf(w, params).fn, w.length());
    CHECK(series[0] == rat(1));
    for (std::size_t j = 1; j < w.length(); ++j) CHECK(series[j] == rat(0));
    CHECK(series[w.length()] == word_probability(w.text(), params));
  }
}

TEST_CASE("first-occurrence PGF of SSFFS") {
  for (const Rational& pv : p_grid) {
    const ProbParams params = ProbParams::from_p(pv);
    const Rational p = params.p, q = params.q;
    const FirstOccurrencePgf f = scratch_pgf(Pattern::parse("SSFFS"), params);

    // 1 / (1 + (1-s)(1 + p^2 q^2 s^4)/(p^3 q^2 s^5))
    const Rational w = p * p * p * q * q;
    const Polynomial corr =
        Polynomial(rat(1)) + Polynomial::monomial(p * p * q * q, 4);
    const RationalFunction expected =
        RationalFunction(rat(1)) /
        (RationalFunction(rat(1)) +
         RationalFunction(one_minus_s() * corr, Polynomial::monomial(w, 5)));
    CHECK(f.fn == expected);

    // F(1) = 1 exactly; f_0 = 0
    CHECK(f.fn(rat(1)) == rat(1));
    CHECK(series_coefficients(f.fn, 0)[0] == rat(0));
  }
}

TEST_CASE("first-occurrence series against exhaustive enumeration") {
  const ProbParams params = ProbParams::from_p(rat(1, 2));
  const Pattern w = Pattern::parse("SSFFS");
  const auto series = series_coefficients(scratch_pgf(w, params).fn, 12);
  CHECK(series[5] == rat(1, 32));
  for (std::size_t n = 0; n < 5; ++n) CHECK(series[n] == rat(0));

  const auto brute = testutil::first_occurrence_exhaustive(w, params, 12);
  for (std::size_t n = 0; n <= 12; ++n) CHECK(series[n] == brute[n]);

  // partial sums increase toward 1 and stay below it
  Rational sum;
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(series[n] >= rat(0));
    sum += series[n];
  }
  CHECK(sum < rat(1));
  const auto longer = series_coefficients(scratch_pgf(w, params).fn, 60);
  Rational long_sum;
  for (const auto& c : longer) long_sum += c;
  CHECK(long_sum > sum);
  CHECK(long_sum < rat(1));
}

TEST_CASE("head-start occurrence SGF") {
  const ProbParams params = ProbParams::from_p(rat(3, 10));
  const Rational p = params.p, q = params.q;

  SUBCASE("solved form for the SSF head start") {
    const OccurrenceSgf u = head_start_occurrence_sgf(
        Pattern::parse("SSFFS"), Pattern::parse("SSF"), params);
    CHECK(u.kind == SgfKind::head_start);
    // (p^3 q^2 s^5/(1-s) + p q s^2) / (1 + p^2 q^2 s^4)
    const Polynomial corr =
        Polynomial(rat(1)) + Polynomial::monomial(p * p * q * q, 4);
    const RationalFunction expected =
        (RationalFunction(Polynomial::monomial(p * p * p * q * q, 5),
                          one_minus_s()) +
         RationalFunction(Polynomial::monomial(p * q, 2))) /
        RationalFunction(corr);
    CHECK(u.fn == expected);
    CHECK(series_coefficients(u.fn, 0)[0] == rat(0));
  }

  SUBCASE("four-term recursion display for SSSS given SSS") {
    const OccurrenceSgf u = head_start_occurrence_sgf(
        Pattern::parse("SSSS"), Pattern::parse("SSS"), params);
    // p^4 s^4/(1-s) = (U - ps) + ps (U - sp) + p^2 s^2 (U - sp) + p^3 s^3 U
    const RationalFunction U = u.fn;
    const RationalFunction ps(Polynomial::monomial(p, 1));
    const RationalFunction lhs(Polynomial::monomial(pow(p, 4), 4), one_minus_s());
    const RationalFunction rhs =
        (U - ps) + RationalFunction(Polynomial::monomial(p, 1)) * (U - ps) +
        RationalFunction(Polynomial::monomial(p * p, 2)) * (U - ps) +
        RationalFunction(Polynomial::monomial(p * p * p, 3)) * U;
    CHECK(lhs == rhs);
  }

  SUBCASE("useless head start reduces to scratch minus one") {
    const Pattern w = Pattern::parse("SSS");
    const Pattern head = Pattern::parse("FFF");
    const OccurrenceSgf uh = head_start_occurrence_sgf(w, head, params);
    const OccurrenceSgf u = scratch_occurrence_sgf(w, params);
    CHECK(uh.fn == u.fn - RationalFunction(rat(1)));

    const auto series = series_coefficients(uh.fn, 20);
    const auto brute = testutil::renewal_occurrence_dp(w, "FFF", params, 20);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(series[n] == brute[n]);
  }
}

TEST_CASE("head-start PGF closed form and its properties") {
  for (const Rational& pv : p_grid) {
    const ProbParams params = ProbParams::from_p(pv);
    const Rational p = params.p, q = params.q;
    const FirstOccurrencePgf f = head_start_pgf(Pattern::parse("SSFFS"),
                                                Pattern::parse("SSF"), params);

    // (1 - s + p^2 q s^3) p q s^2 / (1 - s + p^2 q^2 s^4 - p^2 q^3 s^5)
    const Polynomial num_core(
        std::vector<Rational>{rat(1), rat(-1), rat(0), p * p * q});
    const Polynomial num = num_core * Polynomial::monomial(p * q, 2);
    const Polynomial den(std::vector<Rational>{rat(1), rat(-1), rat(0), rat(0),
                                               p * p * q * q,
                                               -(p * p * q * q * q)});
    CHECK(f.fn == RationalFunction(num, den));
    CHECK(f.fn(rat(1)) == rat(1));
  }

  // a head start with no usable overlap leaves the distribution unchanged
  const ProbParams params = ProbParams::from_p(rat(4, 9));
  const Pattern w = Pattern::parse("SSF");
  CHECK(head_start_pgf(w, Pattern::parse("FF"), params).fn ==
        scratch_pgf(w, params).fn);
}

TEST_CASE("renewal identities tie U and F together") {
  const ProbParams params = ProbParams::from_p(rat(1, 3));
  const Pattern w = Pattern::parse("SSFFS");

  const auto u = series_coefficients(scratch_occurrence_sgf(w, params).fn, 30);
  const auto f = series_coefficients(scratch_pgf(w, params).fn, 30);
  for (std::size_t n = 1; n <= 30; ++n) {
    Rational conv;
    for (std::size_t i = 0; i <= n; ++i) conv += f[i] * u[n - i];
    CHECK(u[n] == conv);
  }

  const Pattern head = Pattern::parse("FSFSSF");
  const auto uh =
      series_coefficients(head_start_occurrence_sgf(w, head, params).fn, 30);
  const auto fh = series_coefficients(head_start_pgf(w, head, params).fn, 30);
  for (std::size_t n = 0; n <= 30; ++n) {
    Rational conv;
    for (std::size_t i = 0; i <= n; ++i) conv += fh[i] * u[n - i];
    CHECK(uh[n] == conv);
  }
}

TEST_CASE("means of the running examples") {
  for (const Rational& pv : p_grid) {
    const ProbParams params = ProbParams::from_p(pv);
    const Rational p = params.p, q = params.q;

    const Rational mu1 = mean_trials(scratch_pgf(Pattern::parse("SSFFS"), params));
    CHECK(mu1 == (rat(1) + p * p * q * q) / (p * p * p * q * q));

    const Rational mu1_ssf = mean_trials(
        head_start_pgf(Pattern::parse("SSFFS"), Pattern::parse("SSF"), params));
    CHECK(mu1_ssf == (rat(1) + p * p * q * q - p * q) / (p * p * p * q * q));

    const Rational mu2 = mean_trials(scratch_pgf(Pattern::parse("FSFSSF"), params));
    CHECK(mu2 == (rat(1) + p * p * p * q * q) / (p * p * p * q * q * q));
  }

  const ProbParams half = ProbParams::from_p(rat(1, 2));
  CHECK(mean_trials(scratch_pgf(Pattern::parse("SSFFS"), half)) == rat(34));
  CHECK(mean_trials(head_start_pgf(Pattern::parse("SSFFS"),
                                   Pattern::parse("SSF"), half)) == rat(26));
  CHECK(mean_trials(scratch_pgf(Pattern::parse("FSFSSF"), half)) == rat(66));
}

TEST_CASE("mean routes agree on a random corpus") {
  std::mt19937 rng(43);
  for (int round = 0; round < 50; ++round) {
    const Pattern w = testutil::random_pattern(rng, 1, 8);
    for (const Rational& pv : {rat(1, 2), rat(1, 3), rat(7, 10)}) {
      const ProbParams params = ProbParams::from_p(pv);
      CHECK(mean_trials(scratch_pgf(w, params)) ==
            mean_trials_from_correlation(w, params));
    }
  }
  const ProbParams half = ProbParams::from_p(rat(1, 2));
  CHECK(mean_trials_from_correlation(Pattern::parse("SSSS"), half) == rat(30));
  CHECK(mean_trials_from_correlation(Pattern::parse("S"), half) == rat(2));
  const ProbParams third = ProbParams::from_p(rat(1, 3));
  CHECK(mean_trials_from_correlation(Pattern::parse("S"), third) == rat(3));
}

TEST_CASE("mean table of the three-pattern example") {
  const ProbParams half = ProbParams::from_p(rat(1, 2));
  const std::vector<Pattern> trio = {Pattern::parse("SSFFS"),
                                     Pattern::parse("FSFSSF"),
                                     Pattern::parse("FSSSF")};
  const MeanTable table = mean_table(trio, half);
  CHECK(table.mu(0) == rat(34));
  CHECK(table.mu(1) == rat(66));
  CHECK(table.mu(2) == rat(34));
  CHECK(table.mu_given(0, 1) == rat(26));
  CHECK(table.mu_given(1, 0) == rat(62));
  CHECK(table.mu_given(0, 2) == rat(26));
  CHECK(table.mu_given(1, 2) == rat(64));
  CHECK(table.mu_given(2, 0) == rat(30));
  CHECK(table.mu_given(2, 1) == rat(32));

  // symbolic forms at several p
  for (const Rational& pv : p_grid) {
    const ProbParams params = ProbParams::from_p(pv);
    const Rational p = params.p, q = params.q;
    const MeanTable t = mean_table(trio, params);
    CHECK(t.mu(2) == (rat(1) + p * p * p * q) / (p * p * p * q * q));
    CHECK(t.mu_given(2, 0) == (rat(1) - p * p * q * q) / (p * p * p * q * q));
    CHECK(t.mu_given(2, 1) == rat(1) / (p * p * p * q * q));
    CHECK(t.mu_given(1, 0) ==
          (rat(1) - p * p * q * q * q) / (p * p * p * q * q * q));
    CHECK(t.mu_given(0, 2) == t.mu_given(0, 1));
    CHECK(t.mu_given(1, 2) == rat(1) / (p * p * p * q * q * q));
  }
}

TEST_CASE("a head start never hurts, and helps exactly when it overlaps") {
  std::mt19937 rng(47);
  const ProbParams params = ProbParams::from_p(rat(2, 5));
  for (int round = 0; round < 60; ++round) {
    const auto pair = testutil::random_valid_set(rng, 2, 2, 7);
    const Rational mu = mean_trials(scratch_pgf(pair[0], params));
    const Rational mu_given =
        mean_trials(head_start_pgf(pair[0], pair[1], params));
    CHECK(mu_given <= mu);
    const bool no_overlap = effective_head(pair[0], pair[1]).empty();
    CHECK((mu_given == mu) == no_overlap);
  }
}
