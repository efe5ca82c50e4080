#include "patrace/renewal.hpp"

#include <stdexcept>

namespace patrace {

namespace {

Polynomial one_minus_s() {
  return Polynomial(std::vector<Rational>{Rational(1), Rational(-1)});
}

}  // namespace

OccurrenceSgf scratch_occurrence_sgf(const Pattern& w, const ProbParams& params) {
  const CorrelationSet corr = autocorrelation(w, params);
  const Rational pattern_prob = word_probability(w.text(), params);
  const RationalFunction tail(Polynomial::monomial(pattern_prob, w.length()),
                              one_minus_s() * corr.polynomial());
  return {RationalFunction(Rational(1)) + tail, SgfKind::from_scratch};
}

FirstOccurrencePgf scratch_pgf(const Pattern& w, const ProbParams& params) {
  const RationalFunction u = scratch_occurrence_sgf(w, params).fn;
  return {(u - RationalFunction(Rational(1))) / u};
}

OccurrenceSgf head_start_occurrence_sgf(const Pattern& w, const Pattern& head,
                                        const ProbParams& params) {
  const std::size_t m = w.length();
  const CorrelationSet corr = autocorrelation(w, params);
  const Rational pattern_prob = word_probability(w.text(), params);
  const std::vector<Rational> initials = head_start_initials(w, head, params);

  // Summing the renewal recursion from n = m onward leaves, for each
  // overlap k, the truncated series B_k(s) = sum_{j<k} u_j s^j of initial
  // terms outside the recursion's range (the full overlap k = m
  // contributes all of them).
  Polynomial initial_terms;
  Polynomial b_k;  // running B_k while k sweeps the overlaps in order
  std::size_t next_j = 1;
  for (const auto& [k, weight] : corr.entries) {
    for (; next_j < k; ++next_j)
      b_k += Polynomial::monomial(initials[next_j], next_j);
    initial_terms += Polynomial::monomial(weight, m - k) * b_k;
  }

  const RationalFunction lhs(Polynomial::monomial(pattern_prob, m),
                             one_minus_s());
  const RationalFunction u_head =
      (lhs + RationalFunction(initial_terms)) /
      RationalFunction(corr.polynomial());
  return {u_head, SgfKind::head_start};
}

FirstOccurrencePgf head_start_pgf(const Pattern& w, const Pattern& head,
                                  const ProbParams& params) {
  const RationalFunction u_head = head_start_occurrence_sgf(w, head, params).fn;
  const RationalFunction u = scratch_occurrence_sgf(w, params).fn;
  return {u_head / u};
}

Rational mean_trials(const FirstOccurrencePgf& f) {
  return finite_limit_at_one(f.fn.derivative());
}

Rational mean_trials_from_correlation(const Pattern& w, const ProbParams& params) {
  return autocorrelation(w, params).total() / word_probability(w.text(), params);
}

MeanTable mean_table(std::span<const Pattern> patterns, const ProbParams& params) {
  validate_pattern_set(patterns);
  MeanTable table(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    Rational by_derivative = mean_trials(scratch_pgf(patterns[i], params));
    const Rational by_correlation =
        mean_trials_from_correlation(patterns[i], params);
    if (!(by_derivative == by_correlation))
      throw std::logic_error("mean routes disagree for " + patterns[i].text() +
                             ": " + by_derivative.str() + " vs " +
                             by_correlation.str());
    table.set_mu(i, std::move(by_derivative));
    for (std::size_t j = 0; j < patterns.size(); ++j) {
      if (j == i) continue;
      table.set_mu_given(
          i, j, mean_trials(head_start_pgf(patterns[i], patterns[j], params)));
    }
  }
  return table;
}

}  // namespace patrace
