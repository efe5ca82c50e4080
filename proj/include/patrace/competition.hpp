#pragma once

#include <array>

#include "patrace/renewal.hpp"

namespace patrace {

// Result of a two-pattern race. win_sgf[i] is the generating function of
// the probabilities that pattern i wins exactly at trial n; win_prob[i]
// its limit at s = 1. The probabilities sum to exactly 1.
struct DuelOutcome {
  std::array<RationalFunction, 2> win_sgf;
  std::array<Rational, 2> win_prob;
};

// Race between w1 and w2 from scratch. The win probabilities are computed
// both as the s->1 limit of the win SGFs and through the mean closed form
// (mu_2 - mu_1 + mu_{1|2}) / (mu_{1|2} + mu_{2|1}); disagreement between
// the routes is a hard error.
DuelOutcome duel(const Pattern& w1, const Pattern& w2, const ProbParams& params);

// Same race, given that `given` has just been completed and either
// competitor may use its symbols as a head start.
DuelOutcome duel_given(const Pattern& w1, const Pattern& w2,
                       const Pattern& given, const ProbParams& params);

// Result of a three-pattern race. duration_pgf is H(s), the PGF of the
// trial at which the game ends (whoever wins).
struct TrioOutcome {
  std::array<RationalFunction, 3> win_sgf;
  std::array<Rational, 3> win_prob;
  RationalFunction duration_pgf;
  Rational expected_duration;
};

// Three-pattern race. Win probabilities come from both the SGF limits and
// the mean closed form, the expected duration from both H'(s->1) and its
// mean closed form; each pair must agree exactly.
TrioOutcome trio(const Pattern& w1, const Pattern& w2, const Pattern& w3,
                 const ProbParams& params);

// Closed-form limiting win probability of pattern `target` in a
// three-pattern race, evaluated from the mean table alone.
Rational win_prob_from_means(const MeanTable& means, std::size_t target);

// Closed-form expected game duration of a three-pattern race from the
// mean table alone.
Rational duration_from_means(const MeanTable& means);

// X_{t{a,b}} assembled from pairwise duel SGFs by partitioning on b; the
// (a, b) and (b, a) orderings must produce the same reduced function.
RationalFunction trio_win_sgf_pairwise(const Pattern& wt, const Pattern& wa,
                                       const Pattern& wb,
                                       const ProbParams& params);

}  // namespace patrace
