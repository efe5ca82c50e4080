#include "patrace/competition.hpp"

#include <stdexcept>
#include <vector>

namespace patrace {

namespace {

const RationalFunction kOne{Rational(1)};

void require_equal(const Rational& a, const Rational& b, const char* what) {
  if (!(a == b))
    throw std::logic_error(std::string(what) + " routes disagree: " + a.str() +
                           " vs " + b.str());
}

// F_i and F_{i|j} for every pattern in the set.
struct PgfSet {
  std::vector<RationalFunction> scratch;             // F_i
  std::vector<std::vector<RationalFunction>> given;  // [i][j] = F_{i|j}
};

PgfSet build_pgfs(std::span<const Pattern> patterns, const ProbParams& params) {
  validate_pattern_set(patterns);
  const std::size_t n = patterns.size();
  PgfSet set;
  set.scratch.resize(n);
  set.given.assign(n, std::vector<RationalFunction>(n));
  for (std::size_t i = 0; i < n; ++i) {
    set.scratch[i] = scratch_pgf(patterns[i], params).fn;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      set.given[i][j] = head_start_pgf(patterns[i], patterns[j], params).fn;
    }
  }
  return set;
}

Rational duel_win_from_means(const MeanTable& m, std::size_t i, std::size_t j) {
  return (m.mu(j) - m.mu(i) + m.mu_given(i, j)) /
         (m.mu_given(i, j) + m.mu_given(j, i));
}

// Numerator of the three-pattern win SGF for `t` against `a` and `b`;
// symmetric in (a, b).
RationalFunction trio_numerator(const PgfSet& f, std::size_t t, std::size_t a,
                                std::size_t b) {
  const auto& F = f.scratch;
  const auto& G = f.given;
  return F[t] * (kOne - G[a][b] * G[b][a]) -
         F[a] * (G[t][a] - G[t][b] * G[b][a]) -
         F[b] * (G[t][b] - G[t][a] * G[a][b]);
}

// Common denominator of all three win SGFs; fully symmetric.
RationalFunction trio_denominator(const PgfSet& f) {
  const auto& G = f.given;
  return kOne - G[0][1] * G[1][0] - G[0][2] * G[2][0] - G[1][2] * G[2][1] +
         G[0][1] * G[1][2] * G[2][0] + G[0][2] * G[2][1] * G[1][0];
}

}  // namespace

DuelOutcome duel(const Pattern& w1, const Pattern& w2, const ProbParams& params) {
  const Pattern patterns[] = {w1, w2};
  const PgfSet f = build_pgfs(patterns, params);
  const RationalFunction den = kOne - f.given[0][1] * f.given[1][0];

  DuelOutcome out;
  out.win_sgf[0] = (f.scratch[0] - f.scratch[1] * f.given[0][1]) / den;
  out.win_sgf[1] = (f.scratch[1] - f.scratch[0] * f.given[1][0]) / den;

  const MeanTable means = mean_table(patterns, params);
  for (std::size_t i = 0; i < 2; ++i) {
    out.win_prob[i] = finite_limit_at_one(out.win_sgf[i]);
    require_equal(out.win_prob[i], duel_win_from_means(means, i, 1 - i),
                  "duel win probability");
  }
  require_equal(out.win_prob[0] + out.win_prob[1], Rational(1),
                "duel total probability");
  return out;
}

DuelOutcome duel_given(const Pattern& w1, const Pattern& w2,
                       const Pattern& given, const ProbParams& params) {
  const Pattern patterns[] = {w1, w2, given};
  validate_pattern_set(patterns);

  const RationalFunction f12 = head_start_pgf(w1, w2, params).fn;
  const RationalFunction f21 = head_start_pgf(w2, w1, params).fn;
  const RationalFunction f13 = head_start_pgf(w1, given, params).fn;
  const RationalFunction f23 = head_start_pgf(w2, given, params).fn;
  const RationalFunction den = kOne - f12 * f21;

  DuelOutcome out;
  out.win_sgf[0] = (f13 - f23 * f12) / den;
  out.win_sgf[1] = (f23 - f13 * f21) / den;
  for (std::size_t i = 0; i < 2; ++i)
    out.win_prob[i] = finite_limit_at_one(out.win_sgf[i]);
  require_equal(out.win_prob[0] + out.win_prob[1], Rational(1),
                "conditional duel total probability");
  return out;
}

TrioOutcome trio(const Pattern& w1, const Pattern& w2, const Pattern& w3,
                 const ProbParams& params) {
  const Pattern patterns[] = {w1, w2, w3};
  const PgfSet f = build_pgfs(patterns, params);
  const RationalFunction den = trio_denominator(f);
  const MeanTable means = mean_table(patterns, params);

  TrioOutcome out;
  for (std::size_t t = 0; t < 3; ++t) {
    const std::size_t a = (t + 1) % 3;
    const std::size_t b = (t + 2) % 3;
    out.win_sgf[t] = trio_numerator(f, t, a, b) / den;
    out.win_prob[t] = finite_limit_at_one(out.win_sgf[t]);
    require_equal(out.win_prob[t], win_prob_from_means(means, t),
                  "trio win probability");
  }
  require_equal(out.win_prob[0] + out.win_prob[1] + out.win_prob[2],
                Rational(1), "trio total probability");

  out.duration_pgf = out.win_sgf[0] + out.win_sgf[1] + out.win_sgf[2];
  out.expected_duration = finite_limit_at_one(out.duration_pgf.derivative());
  require_equal(out.expected_duration, duration_from_means(means),
                "expected duration");
  return out;
}

Rational win_prob_from_means(const MeanTable& m, std::size_t t) {
  if (m.size() != 3)
    throw std::invalid_argument("three-pattern mean table required");
  const std::size_t a = (t + 1) % 3;
  const std::size_t b = (t + 2) % 3;
  const Rational num =
      m.mu(t) * (m.mu_given(a, b) + m.mu_given(b, a)) +
      m.mu(a) * (m.mu_given(t, a) - m.mu_given(t, b) - m.mu_given(b, a)) +
      m.mu(b) * (m.mu_given(t, b) - m.mu_given(t, a) - m.mu_given(a, b)) +
      m.mu_given(a, b) * m.mu_given(b, a) -
      m.mu_given(t, b) * m.mu_given(b, a) -
      m.mu_given(t, a) * m.mu_given(a, b);
  const Rational den =
      m.mu_given(0, 1) * m.mu_given(1, 0) + m.mu_given(0, 2) * m.mu_given(2, 0) +
      m.mu_given(1, 2) * m.mu_given(2, 1) - m.mu_given(0, 1) * m.mu_given(1, 2) -
      m.mu_given(0, 2) * m.mu_given(2, 1) - m.mu_given(1, 0) * m.mu_given(0, 2) -
      m.mu_given(1, 2) * m.mu_given(2, 0) - m.mu_given(2, 0) * m.mu_given(0, 1) -
      m.mu_given(2, 1) * m.mu_given(1, 0);
  if (den.is_zero())
    throw std::domain_error("degenerate mean configuration: zero denominator");
  return num / den;
}

Rational duration_from_means(const MeanTable& m) {
  if (m.size() != 3)
    throw std::invalid_argument("three-pattern mean table required");
  Rational num;
  for (std::size_t t = 0; t < 3; ++t) {
    const std::size_t a = (t + 1) % 3;
    const std::size_t b = (t + 2) % 3;
    num += m.mu(t) * (m.mu_given(a, b) * m.mu_given(b, a) -
                      m.mu_given(a, b) * m.mu_given(b, t) -
                      m.mu_given(b, a) * m.mu_given(a, t));
  }
  num += m.mu_given(0, 1) * m.mu_given(1, 2) * m.mu_given(2, 0) +
         m.mu_given(0, 2) * m.mu_given(2, 1) * m.mu_given(1, 0);
  const Rational den =
      m.mu_given(0, 1) * m.mu_given(1, 0) + m.mu_given(0, 2) * m.mu_given(2, 0) +
      m.mu_given(1, 2) * m.mu_given(2, 1) - m.mu_given(0, 1) * m.mu_given(1, 2) -
      m.mu_given(0, 2) * m.mu_given(2, 1) - m.mu_given(1, 0) * m.mu_given(0, 2) -
      m.mu_given(1, 2) * m.mu_given(2, 0) - m.mu_given(2, 0) * m.mu_given(0, 1) -
      m.mu_given(2, 1) * m.mu_given(1, 0);
  if (den.is_zero())
    throw std::domain_error("degenerate mean configuration: zero denominator");
  return num / den;
}

RationalFunction trio_win_sgf_pairwise(const Pattern& wt, const Pattern& wa,
                                       const Pattern& wb,
                                       const ProbParams& params) {
  const Pattern patterns[] = {wt, wa, wb};
  validate_pattern_set(patterns);
  // X_{t{a}} = X_{t{a,b}} + X_{b{a,t}} X_{t{a}|b} and its (t <-> b)
  // counterpart, solved for X_{t{a,b}}.
  const RationalFunction x_ta = duel(wt, wa, params).win_sgf[0];
  const RationalFunction x_ba = duel(wb, wa, params).win_sgf[0];
  const RationalFunction x_ta_b = duel_given(wt, wa, wb, params).win_sgf[0];
  const RationalFunction x_ba_t = duel_given(wb, wa, wt, params).win_sgf[0];
  return (x_ta - x_ba * x_ta_b) / (kOne - x_ba_t * x_ta_b);
}

}  // namespace patrace
