#include "patrace/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "patrace/oracle.hpp"

namespace patrace {

std::uint64_t game_stream_seed(std::uint64_t seed, std::uint64_t game_index) {
  // One splitmix64 output of (seed advanced by game_index + 1 steps'
  // worth of gamma) decorrelates the per-game streams.
  SplitMix64 g(seed + (game_index + 1) * 0x9E3779B97F4A7C15ull);
  return g.next();
}

SimReport simulate(const SimConfig& config) {
  if (config.games == 0) throw std::invalid_argument("games must be >= 1");
  const ProbParams params = ProbParams::from_p(config.p);
  const PrefixAutomaton automaton = PrefixAutomaton::build(config.patterns);
  // p enters sampling as a double once per run; the conversion error is
  // far below any statistical tolerance.
  const double p = params.p.to_double();

  SimReport report;
  report.games = config.games;
  report.win_counts.assign(config.patterns.size(), 0);

  double duration_sum = 0.0;
  double duration_sq_sum = 0.0;
  for (std::uint64_t g = 0; g < config.games; ++g) {
    SplitMix64 rng(game_stream_seed(config.seed, g));
    int state = automaton.initial_state();
    std::uint64_t steps = 0;
    for (;;) {
      const char symbol = rng.next_unit() < p ? 'S' : 'F';
      ++steps;
      const auto& t = automaton.step(state, symbol);
      if (t.absorbs()) {
        ++report.win_counts[static_cast<std::size_t>(t.winner)];
        break;
      }
      state = t.next;
    }
    const double d = static_cast<double>(steps);
    duration_sum += d;
    duration_sq_sum += d * d;
  }

  const double n = static_cast<double>(config.games);
  report.mean_duration = duration_sum / n;
  report.std_error_win.resize(config.patterns.size());
  for (std::size_t i = 0; i < config.patterns.size(); ++i) {
    const double freq = static_cast<double>(report.win_counts[i]) / n;
    report.std_error_win[i] = std::sqrt(freq * (1.0 - freq) / n);
  }
  if (config.games > 1) {
    const double var =
        (duration_sq_sum - n * report.mean_duration * report.mean_duration) /
        (n - 1.0);
    report.std_error_duration = std::sqrt(std::max(var, 0.0) / n);
  }
  return report;
}

}  // namespace patrace
