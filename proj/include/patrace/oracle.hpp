#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "patrace/pattern.hpp"

namespace patrace {

// Deterministic prefix automaton for a set of competing patterns. Each
// transient state is the longest suffix of the emitted text that is a
// prefix of at least one pattern; emitting a symbol that completes a
// pattern absorbs into that pattern (unique by substring-freeness).
//
// This machine never touches correlation polynomials or generating
// functions, which is what makes its answers independent ground truth.
class PrefixAutomaton {
 public:
  struct Transition {
    int next = -1;    // transient successor, or -1 when absorbing
    int winner = -1;  // absorbing pattern index, or -1
    bool absorbs() const { return winner >= 0; }
  };

  static PrefixAutomaton build(std::span<const Pattern> patterns);

  std::size_t transient_count() const { return labels_.size(); }
  std::size_t pattern_count() const { return pattern_count_; }
  int initial_state() const { return 0; }

  const Transition& step(int state, char symbol) const {
    return transitions_[static_cast<std::size_t>(state)][symbol == 'S' ? 0 : 1];
  }
  const std::string& label(int state) const {
    return labels_[static_cast<std::size_t>(state)];
  }

  // State reached by feeding `head` from the empty state. Feeding must
  // not absorb; throws std::invalid_argument otherwise.
  int state_after(const Pattern& head) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::array<Transition, 2>> transitions_;
  std::size_t pattern_count_ = 0;
};

struct AbsorptionResult {
  std::vector<Rational> win_prob;  // per pattern, sums to 1
  Rational expected_steps;
};

// Exact absorption probabilities and expected steps from `start`, by
// Gaussian elimination over rationals.
AbsorptionResult absorption(const PrefixAutomaton& automaton, int start,
                            const ProbParams& params);

// result[i][n] is the exact probability that pattern i wins exactly at
// trial n (n = 0..n_max), by forward dynamic programming over state
// occupancy.
std::vector<std::vector<Rational>> finite_horizon(const PrefixAutomaton& automaton,
                                                  int start,
                                                  const ProbParams& params,
                                                  std::size_t n_max);

}  // namespace patrace
