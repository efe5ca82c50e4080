#pragma once

#include <cstdint>
#include <vector>

#include "patrace/pattern.hpp"

namespace patrace {

// splitmix64. Update: state += 0x9E3779B97F4A7C15; output: xor-shift/
// multiply mix with 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB. The exact
// constants are part of the reproducibility contract (see README).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Seed of the per-game generator: games are independent substreams, so a
// report never depends on how they are partitioned across workers.
std::uint64_t game_stream_seed(std::uint64_t seed, std::uint64_t game_index);

struct SimConfig {
  std::vector<Pattern> patterns;
  Rational p;
  std::uint64_t games = 0;
  std::uint64_t seed = 0;
};

struct SimReport {
  std::uint64_t games = 0;
  std::vector<std::uint64_t> win_counts;     // sums to games
  double mean_duration = 0.0;
  std::vector<double> std_error_win;         // binomial SE of each frequency
  double std_error_duration = 0.0;           // sample sd / sqrt(games)
};

// Runs `games` independent races to absorption; fully deterministic in
// (config.seed, config.games, patterns, p).
SimReport simulate(const SimConfig& config);

}  // namespace patrace
