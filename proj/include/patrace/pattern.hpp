#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patrace/polynomial.hpp"
#include "patrace/rational.hpp"

namespace patrace {

// A finite nonempty word over the two-outcome alphabet {S, F}.
class Pattern {
 public:
  // Accepts S/F or the H/T alias pair, case-insensitive, but not a mix of
  // the two families in one string. Throws std::invalid_argument.
  static Pattern parse(std::string_view text);

  std::size_t length() const { return text_.size(); }
  char symbol(std::size_t i) const { return text_[i]; }
  const std::string& text() const { return text_; }

  std::string_view prefix(std::size_t k) const {
    return std::string_view(text_).substr(0, k);
  }
  std::string_view suffix(std::size_t k) const {
    return std::string_view(text_).substr(text_.size() - k);
  }

  friend bool operator==(const Pattern&, const Pattern&) = default;

 private:
  explicit Pattern(std::string text) : text_(std::move(text)) {}
  std::string text_;  // canonical S/F form
};

// Exact success/failure probabilities of one Bernoulli trial.
struct ProbParams {
  Rational p;
  Rational q;  // always exactly 1 - p

  static ProbParams from_p(Rational p);  // requires 0 < p < 1
};

// Probability of emitting exactly the given S/F word; the empty word has
// probability 1.
Rational word_probability(std::string_view word, const ProbParams& params);

// Overlap structure of a pattern with itself: k is an entry iff the
// length-k prefix equals the length-k suffix; the weight P_k is the
// probability of the uncovered tail (the last m-k symbols). The full
// overlap k = m is always present with weight 1.
struct CorrelationSet {
  std::size_t pattern_length = 0;
  std::map<std::size_t, Rational> entries;  // overlap length k -> P_k

  Polynomial polynomial() const;  // C(s) = sum_k P_k s^(m-k)
  Rational total() const;         // C(1)
};

CorrelationSet autocorrelation(const Pattern& w, const ProbParams& params);

// Renewal-occurrence probabilities u_j of w at trials j = 0..m-1 when the
// word `head` is assumed already emitted. u_0 is always 0; the remaining
// values solve a triangular system that discounts renewal-forbidden
// double counts through the autocorrelation weights.
std::vector<Rational> head_start_initials(const Pattern& w, const Pattern& head,
                                          const ProbParams& params);

// Longest suffix of `head` that is a proper prefix of `w`; may be empty.
// Diagnostic view of the usable part of a head start.
std::string effective_head(const Pattern& w, const Pattern& head);

// Enforces pairwise distinctness and substring-freeness over all pairs.
// Throws std::invalid_argument naming the offending pair. Vacuous for
// fewer than two patterns.
void validate_pattern_set(std::span<const Pattern> patterns);

}  // namespace patrace
