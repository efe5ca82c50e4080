#pragma once

#include <span>
#include <vector>

#include "patrace/pattern.hpp"
#include "patrace/rational_function.hpp"

namespace patrace {

enum class SgfKind { from_scratch, head_start };

// Sequence generating function U(s) of the renewal-occurrence
// probabilities u_n. From scratch the series starts with u_0 = 1; with a
// head start the constant term is 0. U(1) diverges: the u_n are not a
// distribution.
struct OccurrenceSgf {
  RationalFunction fn;
  SgfKind kind = SgfKind::from_scratch;
};

// Probability generating function F(s) = E(s^X) of the trial X at which
// the pattern first occurs. F(1) = 1 and the constant term is 0.
struct FirstOccurrencePgf {
  RationalFunction fn;
};

// U(s) = 1 + P s^m / ((1-s) C(s)), with P the pattern probability and
// C(s) the autocorrelation polynomial.
OccurrenceSgf scratch_occurrence_sgf(const Pattern& w, const ProbParams& params);

// F(s) = (U(s) - 1) / U(s).
FirstOccurrencePgf scratch_pgf(const Pattern& w, const ProbParams& params);

// U^H(s) for pattern w given the head start H already emitted; built from
// the same renewal recursion with the head-start initial terms spliced in.
OccurrenceSgf head_start_occurrence_sgf(const Pattern& w, const Pattern& head,
                                        const ProbParams& params);

// F^H(s) = U^H(s) / U(s).
FirstOccurrencePgf head_start_pgf(const Pattern& w, const Pattern& head,
                                  const ProbParams& params);

// mu = F'(1): expected trials to the first occurrence.
Rational mean_trials(const FirstOccurrencePgf& f);

// The same mean through the correlation identity C(1)/P(w), with no
// derivative involved.
Rational mean_trials_from_correlation(const Pattern& w, const ProbParams& params);

// Expected values mu_i (from scratch) and mu_{i|j} (pattern i right after
// a completed pattern j) for a set of competing patterns.
class MeanTable {
 public:
  explicit MeanTable(std::size_t n)
      : mu_(n), given_(n, std::vector<Rational>(n)) {}

  std::size_t size() const { return mu_.size(); }

  const Rational& mu(std::size_t i) const { return mu_[i]; }
  const Rational& mu_given(std::size_t i, std::size_t j) const {
    return given_[i][j];
  }

  void set_mu(std::size_t i, Rational v) { mu_[i] = std::move(v); }
  void set_mu_given(std::size_t i, std::size_t j, Rational v) {
    given_[i][j] = std::move(v);
  }

 private:
  std::vector<Rational> mu_;
  std::vector<std::vector<Rational>> given_;  // [i][j] = mu_{i|j}, i != j
};

// Builds the full table; the scratch means are computed both by the
// derivative limit and the correlation identity and must agree.
MeanTable mean_table(std::span<const Pattern> patterns, const ProbParams& params);

}  // namespace patrace
