#include "patrace/oracle.hpp"

#include <map>
#include <stdexcept>

namespace patrace {

namespace {

bool is_prefix_of_some(std::string_view text, std::span<const Pattern> patterns) {
  for (const Pattern& w : patterns) {
    if (text.size() <= w.length() &&
        std::string_view(w.text()).substr(0, text.size()) == text)
      return true;
  }
  return false;
}

}  // namespace

PrefixAutomaton PrefixAutomaton::build(std::span<const Pattern> patterns) {
  if (patterns.empty())
    throw std::invalid_argument("at least one pattern required");
  validate_pattern_set(patterns);

  PrefixAutomaton a;
  a.pattern_count_ = patterns.size();
  std::map<std::string, int> index;
  index.emplace("", 0);
  a.labels_.push_back("");

  for (std::size_t s = 0; s < a.labels_.size(); ++s) {
    std::array<Transition, 2> row;
    for (int ci = 0; ci < 2; ++ci) {
      const char c = ci == 0 ? 'S' : 'F';
      const std::string extended = a.labels_[s] + c;
      const std::string_view x = extended;

      int winner = -1;
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        const std::string& w = patterns[i].text();
        if (x.size() >= w.size() && x.substr(x.size() - w.size()) == w) {
          if (winner >= 0)
            throw std::logic_error(
                "simultaneous completion contradicts substring-freeness");
          winner = static_cast<int>(i);
        }
      }
      if (winner >= 0) {
        row[static_cast<std::size_t>(ci)] = Transition{-1, winner};
        continue;
      }

      std::string_view next = x.substr(x.size());  // empty fallback
      for (std::size_t len = x.size(); len >= 1; --len) {
        if (is_prefix_of_some(x.substr(x.size() - len), patterns)) {
          next = x.substr(x.size() - len);
          break;
        }
      }
      auto [it, inserted] =
          index.emplace(std::string(next), static_cast<int>(a.labels_.size()));
      if (inserted) a.labels_.emplace_back(next);
      row[static_cast<std::size_t>(ci)] = Transition{it->second, -1};
    }
    a.transitions_.push_back(row);
  }
  return a;
}

int PrefixAutomaton::state_after(const Pattern& head) const {
  int state = initial_state();
  for (std::size_t i = 0; i < head.length(); ++i) {
    const Transition& t = step(state, head.symbol(i));
    if (t.absorbs())
      throw std::invalid_argument("head start '" + head.text() +
                                  "' completes a competing pattern");
    state = t.next;
  }
  return state;
}

namespace {

// Solves A x = B for several right-hand sides by Gauss-Jordan
// elimination, picking the cheapest nonzero pivot (smallest combined
// numerator/denominator size) in each column.
void solve_in_place(std::vector<std::vector<Rational>>& a,
                    std::vector<std::vector<Rational>>& b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    std::size_t pivot_size = 0;
    for (std::size_t r = col; r < n; ++r) {
      if (a[r][col].is_zero()) continue;
      const std::size_t size = mpz_sizeinbase(a[r][col].num().get_mpz_t(), 2) +
                               mpz_sizeinbase(a[r][col].den().get_mpz_t(), 2);
      if (pivot == n || size < pivot_size) {
        pivot = r;
        pivot_size = size;
      }
    }
    if (pivot == n)
      throw std::logic_error("singular absorption system");
    std::swap(a[col], a[pivot]);
    std::swap(b[col], b[pivot]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (auto& v : b[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational factor = a[r][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= factor * a[col][k];
      for (std::size_t k = 0; k < b[r].size(); ++k) b[r][k] -= factor * b[col][k];
    }
  }
}

}  // namespace

AbsorptionResult absorption(const PrefixAutomaton& automaton, int start,
                            const ProbParams& params) {
  const std::size_t n = automaton.transient_count();
  const std::size_t patterns = automaton.pattern_count();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(patterns + 1));

  for (std::size_t s = 0; s < n; ++s) {
    a[s][s] += Rational(1);
    for (const char c : {'S', 'F'}) {
      const Rational& prob = c == 'S' ? params.p : params.q;
      const auto& t = automaton.step(static_cast<int>(s), c);
      if (t.absorbs())
        b[s][static_cast<std::size_t>(t.winner)] += prob;
      else
        a[s][static_cast<std::size_t>(t.next)] -= prob;
    }
    b[s][patterns] = Rational(1);  // one step taken from every state
  }

  solve_in_place(a, b);

  AbsorptionResult result;
  auto& row = b[static_cast<std::size_t>(start)];
  result.win_prob.assign(row.begin(), row.begin() + static_cast<long>(patterns));
  result.expected_steps = row[patterns];
  return result;
}

std::vector<std::vector<Rational>> finite_horizon(const PrefixAutomaton& automaton,
                                                  int start,
                                                  const ProbParams& params,
                                                  std::size_t n_max) {
  const std::size_t n = automaton.transient_count();
  std::vector<std::vector<Rational>> wins(
      automaton.pattern_count(), std::vector<Rational>(n_max + 1));
  std::vector<Rational> occupancy(n);
  occupancy[static_cast<std::size_t>(start)] = Rational(1);

  for (std::size_t trial = 1; trial <= n_max; ++trial) {
    std::vector<Rational> next(n);
    for (std::size_t s = 0; s < n; ++s) {
      if (occupancy[s].is_zero()) continue;
      for (const char c : {'S', 'F'}) {
        const Rational& prob = c == 'S' ? params.p : params.q;
        const auto& t = automaton.step(static_cast<int>(s), c);
        if (t.absorbs())
          wins[static_cast<std::size_t>(t.winner)][trial] += occupancy[s] * prob;
        else
          next[static_cast<std::size_t>(t.next)] += occupancy[s] * prob;
      }
    }
    occupancy.swap(next);
  }
  return wins;
}

}  // namespace patrace
