// patrace: exact first-occurrence and race statistics for S/F outcome
// patterns, with an independent Markov-chain oracle and a seeded Monte
// Carlo simulator for cross-validation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "patrace/competition.hpp"
#include "patrace/minimize.hpp"
#include "patrace/montecarlo.hpp"
#include "patrace/oracle.hpp"
#include "patrace/renewal.hpp"

namespace {

using nlohmann::json;
using namespace patrace;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitVerifyMismatch = 3;

std::string decimal12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string decimal12(const Rational& r) { return decimal12(r.to_double()); }

std::string exact_and_decimal(const Rational& r) {
  return r.str() + " (" + decimal12(r) + ")";
}

json value_json(const Rational& r) {
  return json{{"exact", r.str()}, {"decimal", decimal12(r)}};
}

void emit_json(const json& j) { std::cout << j.dump(2) << "\n"; }

Rational parse_probability(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse probability '" + text + "'");
  }
}

std::vector<Pattern> parse_patterns(const std::vector<std::string>& texts) {
  std::vector<Pattern> patterns;
  patterns.reserve(texts.size());
  for (const auto& t : texts) patterns.push_back(Pattern::parse(t));
  return patterns;
}

// ---------------------------------------------------------------- mean --

struct MeanArgs {
  std::string pattern;
  std::string p;
  std::string head;
  bool print_pgf = false;
  std::string format = "human";
};

int cmd_mean(const MeanArgs& args) {
  const Pattern w = Pattern::parse(args.pattern);
  const ProbParams params = ProbParams::from_p(parse_probability(args.p));

  FirstOccurrencePgf pgf;
  std::string route;
  if (args.head.empty()) {
    pgf = scratch_pgf(w, params);
    const Rational by_corr = mean_trials_from_correlation(w, params);
    const Rational by_deriv = mean_trials(pgf);
    if (!(by_corr == by_deriv))
      throw std::logic_error("mean routes disagree: " + by_deriv.str() +
                             " vs " + by_corr.str());
    route = "derivative limit of F(s), cross-checked against C(1)/P";
  } else {
    pgf = head_start_pgf(w, Pattern::parse(args.head), params);
    route = "derivative limit of the head-start PGF";
  }
  const Rational mu = mean_trials(pgf);

  if (args.format == "json") {
    json j{{"command", "mean"},
           {"pattern", w.text()},
           {"p", value_json(params.p)},
           {"mean", value_json(mu)},
           {"route", route}};
    if (!args.head.empty()) j["head"] = Pattern::parse(args.head).text();
    if (args.print_pgf) j["pgf"] = pgf.fn.str();
    emit_json(j);
  } else if (args.format == "csv") {
    std::cout << "p,mean\n"
              << decimal12(params.p) << "," << decimal12(mu) << "\n";
  } else {
    std::cout << "pattern: " << w.text() << "\n";
    if (!args.head.empty())
      std::cout << "head:    " << Pattern::parse(args.head).text() << "\n";
    std::cout << "p:       " << exact_and_decimal(params.p) << "\n";
    std::cout << "mean:    " << exact_and_decimal(mu) << "\n";
    if (args.print_pgf) std::cout << "pgf:     " << pgf.fn.str() << "\n";
    std::cout << "route:   " << route << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------ duel/trio/race --

struct RaceArgs {
  std::vector<std::string> patterns;
  std::string p;
  std::string given;
  std::string format = "human";
};

struct RaceResult {
  std::vector<Rational> win_prob;
  std::optional<Rational> duration;
  std::string route;
};

void emit_race(const char* command, const std::vector<Pattern>& patterns,
               const ProbParams& params, const RaceResult& result,
               const std::string& format, const std::string& given = {}) {
  if (format == "json") {
    json wins = json::array();
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      json w = value_json(result.win_prob[i]);
      w["pattern"] = patterns[i].text();
      wins.push_back(w);
    }
    json j{{"command", command},
           {"p", value_json(params.p)},
           {"win", wins},
           {"route", result.route}};
    json names = json::array();
    for (const auto& w : patterns) names.push_back(w.text());
    j["patterns"] = names;
    if (!given.empty()) j["given"] = given;
    if (result.duration) j["duration"] = value_json(*result.duration);
    emit_json(j);
  } else if (format == "csv") {
    std::cout << "p";
    for (std::size_t i = 1; i <= patterns.size(); ++i) std::cout << ",win" << i;
    if (result.duration) std::cout << ",duration";
    std::cout << "\n" << decimal12(params.p);
    for (const auto& w : result.win_prob) std::cout << "," << decimal12(w);
    if (result.duration) std::cout << "," << decimal12(*result.duration);
    std::cout << "\n";
  } else {
    std::cout << "patterns:";
    for (const auto& w : patterns) std::cout << " " << w.text();
    std::cout << "\n";
    if (!given.empty()) std::cout << "given:    " << given << "\n";
    std::cout << "p:        " << exact_and_decimal(params.p) << "\n";
    for (std::size_t i = 0; i < patterns.size(); ++i)
      std::cout << "win[" << patterns[i].text()
                << "]: " << exact_and_decimal(result.win_prob[i]) << "\n";
    if (result.duration)
      std::cout << "duration: " << exact_and_decimal(*result.duration) << "\n";
    std::cout << "route:    " << result.route << "\n";
  }
}

int cmd_duel(const RaceArgs& args) {
  const std::vector<Pattern> patterns = parse_patterns(args.patterns);
  const ProbParams params = ProbParams::from_p(parse_probability(args.p));

  RaceResult result;
  if (args.given.empty()) {
    const DuelOutcome out = duel(patterns[0], patterns[1], params);
    result.win_prob = {out.win_prob[0], out.win_prob[1]};
    result.route = "win SGF limits, cross-checked against the mean closed form";
  } else {
    const DuelOutcome out =
        duel_given(patterns[0], patterns[1], Pattern::parse(args.given), params);
    result.win_prob = {out.win_prob[0], out.win_prob[1]};
    result.route = "conditional win SGF limits";
  }
  emit_race("duel", patterns, params, result, args.format,
            args.given.empty() ? "" : Pattern::parse(args.given).text());
  return kExitOk;
}

int cmd_trio(const RaceArgs& args) {
  const std::vector<Pattern> patterns = parse_patterns(args.patterns);
  const ProbParams params = ProbParams::from_p(parse_probability(args.p));
  const TrioOutcome out = trio(patterns[0], patterns[1], patterns[2], params);

  RaceResult result;
  result.win_prob = {out.win_prob[0], out.win_prob[1], out.win_prob[2]};
  result.duration = out.expected_duration;
  result.route =
      "win SGF limits and mean closed forms (cross-checked); "
      "duration from H'(1) and its closed form";
  emit_race("trio", patterns, params, result, args.format);
  return kExitOk;
}

int cmd_race(const RaceArgs& args) {
  const std::vector<Pattern> patterns = parse_patterns(args.patterns);
  const ProbParams params = ProbParams::from_p(parse_probability(args.p));

  RaceResult result;
  if (patterns.size() == 2) {
    const DuelOutcome out = duel(patterns[0], patterns[1], params);
    result.win_prob = {out.win_prob[0], out.win_prob[1]};
    const PrefixAutomaton a = PrefixAutomaton::build(patterns);
    result.duration = absorption(a, a.initial_state(), params).expected_steps;
    result.route =
        "win SGF limits (cross-checked); duration from the markov oracle";
  } else if (patterns.size() == 3) {
    const TrioOutcome out = trio(patterns[0], patterns[1], patterns[2], params);
    result.win_prob = {out.win_prob[0], out.win_prob[1], out.win_prob[2]};
    result.duration = out.expected_duration;
    result.route =
        "win SGF limits and mean closed forms (cross-checked); "
        "duration from H'(1) and its closed form";
  } else {
    const PrefixAutomaton a = PrefixAutomaton::build(patterns);
    const AbsorptionResult r = absorption(a, a.initial_state(), params);
    result.win_prob = r.win_prob;
    result.duration = r.expected_steps;
    result.route =
        "markov-chain oracle (no generating-function closed form for four or "
        "more patterns)";
  }
  emit_race("race", patterns, params, result, args.format);
  return kExitOk;
}

// -------------------------------------------------------------- verify --

struct VerifyArgs {
  std::vector<std::string> patterns;
  std::string p;
  std::size_t nmax = 30;
};

class CheckReporter {
 public:
  void equal(const Rational& a, const Rational& b, const std::string& what) {
    if (a == b) {
      std::cout << "ok       " << what << " = " << a.str() << "\n";
    } else {
      std::cout << "MISMATCH " << what << ": " << a.str() << " vs " << b.str()
                << "\n";
      ++mismatches_;
    }
  }

  void require(bool condition, const std::string& what) {
    if (condition) {
      std::cout << "ok       " << what << "\n";
    } else {
      std::cout << "MISMATCH " << what << "\n";
      ++mismatches_;
    }
  }

  int mismatches() const { return mismatches_; }

 private:
  int mismatches_ = 0;
};

void verify_series(CheckReporter& check, const RationalFunction& sgf,
                   const std::vector<Rational>& horizon, std::size_t nmax,
                   const std::string& what) {
  const auto series = series_coefficients(sgf, nmax);
  bool all_equal = true;
  for (std::size_t n = 0; n <= nmax; ++n)
    if (!(series[n] == horizon[n])) all_equal = false;
  check.require(all_equal, what + " coefficients match the oracle horizon (n <= " +
                               std::to_string(nmax) + ")");
}

int cmd_verify(const VerifyArgs& args) {
  const std::vector<Pattern> patterns = parse_patterns(args.patterns);
  const ProbParams params = ProbParams::from_p(parse_probability(args.p));
  validate_pattern_set(patterns);

  CheckReporter check;
  const PrefixAutomaton automaton = PrefixAutomaton::build(patterns);
  const MeanTable means = mean_table(patterns, params);

  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const Pattern single[] = {patterns[i]};
    const PrefixAutomaton own = PrefixAutomaton::build(single);
    const Rational by_deriv = mean_trials(scratch_pgf(patterns[i], params));
    const Rational by_corr = mean_trials_from_correlation(patterns[i], params);
    const Rational by_oracle =
        absorption(own, own.initial_state(), params).expected_steps;
    check.equal(by_deriv, by_corr, "mu[" + patterns[i].text() + "] derivative vs correlation");
    check.equal(by_deriv, by_oracle, "mu[" + patterns[i].text() + "] engine vs oracle");

    for (std::size_t j = 0; j < patterns.size(); ++j) {
      if (i == j) continue;
      const Rational head_mean =
          mean_trials(head_start_pgf(patterns[i], patterns[j], params));
      const Rational oracle_mean =
          absorption(own, own.state_after(patterns[j]), params).expected_steps;
      const std::string name =
          "mu[" + patterns[i].text() + " | " + patterns[j].text() + "]";
      check.equal(head_mean, oracle_mean, name + " engine vs oracle");
      check.require(head_mean <= means.mu(i), name + " <= mu");
    }
  }

  const AbsorptionResult oracle =
      absorption(automaton, automaton.initial_state(), params);
  const auto horizon =
      finite_horizon(automaton, automaton.initial_state(), params, args.nmax);

  if (patterns.size() == 2) {
    const DuelOutcome out = duel(patterns[0], patterns[1], params);
    Rational total;
    for (std::size_t i = 0; i < 2; ++i) {
      check.equal(out.win_prob[i], oracle.win_prob[i],
                  "win[" + patterns[i].text() + "] engine vs oracle");
      verify_series(check, out.win_sgf[i], horizon[i], args.nmax,
                    "win SGF of " + patterns[i].text());
      total += out.win_prob[i];
    }
    check.equal(total, Rational(1), "win probabilities sum");
  } else {
    const TrioOutcome out = trio(patterns[0], patterns[1], patterns[2], params);
    Rational total;
    for (std::size_t i = 0; i < 3; ++i) {
      check.equal(out.win_prob[i], oracle.win_prob[i],
                  "win[" + patterns[i].text() + "] engine vs oracle");
      check.equal(out.win_prob[i], win_prob_from_means(means, i),
                  "win[" + patterns[i].text() + "] limit vs mean closed form");
      verify_series(check, out.win_sgf[i], horizon[i], args.nmax,
                    "win SGF of " + patterns[i].text());
      total += out.win_prob[i];
    }
    check.equal(total, Rational(1), "win probabilities sum");
    check.equal(out.expected_duration, duration_from_means(means),
                "duration H'(1) vs mean closed form");
    check.equal(out.expected_duration, oracle.expected_steps,
                "duration engine vs oracle");

    // opponent-order invariance of the win SGFs
    for (std::size_t t = 0; t < 3; ++t) {
      const std::size_t a = (t + 1) % 3;
      const std::size_t b = (t + 2) % 3;
      const RationalFunction via_ab =
          trio_win_sgf_pairwise(patterns[t], patterns[a], patterns[b], params);
      const RationalFunction via_ba =
          trio_win_sgf_pairwise(patterns[t], patterns[b], patterns[a], params);
      check.require(via_ab == via_ba && via_ab == out.win_sgf[t],
                    "win SGF of " + patterns[t].text() +
                        " is opponent-order invariant");
    }

    // conditional duels against the oracle started from the completed
    // third pattern
    for (std::size_t g = 0; g < 3; ++g) {
      const std::size_t i = (g + 1) % 3;
      const std::size_t j = (g + 2) % 3;
      const DuelOutcome cond =
          duel_given(patterns[i], patterns[j], patterns[g], params);
      const Pattern live[] = {patterns[i], patterns[j]};
      const PrefixAutomaton pair_automaton = PrefixAutomaton::build(live);
      const AbsorptionResult cond_oracle = absorption(
          pair_automaton, pair_automaton.state_after(patterns[g]), params);
      check.equal(cond.win_prob[0], cond_oracle.win_prob[0],
                  "win[" + patterns[i].text() + " vs " + patterns[j].text() +
                      " | " + patterns[g].text() + "] engine vs oracle");
    }
  }

  if (check.mismatches() == 0) {
    std::cout << "verified: all routes agree\n";
    return kExitOk;
  }
  std::cout << check.mismatches() << " mismatch(es) found\n";
  return kExitVerifyMismatch;
}

// --------------------------------------------------------------- sweep --

struct SweepArgs {
  std::string mode;
  std::vector<std::string> patterns;
  std::size_t grid = 99;
  std::string find_min;
};

int cmd_sweep(const SweepArgs& args) {
  if (args.mode != "duel" && args.mode != "trio")
    throw std::invalid_argument("sweep mode must be 'duel' or 'trio'");
  const std::vector<Pattern> patterns = parse_patterns(args.patterns);
  const std::size_t want = args.mode == "duel" ? 2 : 3;
  if (patterns.size() != want)
    throw std::invalid_argument("sweep " + args.mode + " needs " +
                                std::to_string(want) + " patterns");
  if (args.grid < 2) throw std::invalid_argument("grid must be >= 2");
  validate_pattern_set(patterns);

  const std::size_t columns = patterns.size() + (args.mode == "trio" ? 1 : 0);
  // column c: win probabilities, then duration for trio
  auto evaluate = [&](const Rational& pv) {
    const ProbParams params = ProbParams::from_p(pv);
    const MeanTable means = mean_table(patterns, params);
    std::vector<Rational> row;
    if (args.mode == "duel") {
      const Rational win1 =
          (means.mu(1) - means.mu(0) + means.mu_given(0, 1)) /
          (means.mu_given(0, 1) + means.mu_given(1, 0));
      row.push_back(win1);
      row.push_back(Rational(1) - win1);
    } else {
      for (std::size_t i = 0; i < 3; ++i)
        row.push_back(win_prob_from_means(means, i));
      row.push_back(duration_from_means(means));
    }
    return row;
  };

  int min_column = -1;
  if (!args.find_min.empty()) {
    if (args.find_min == "duration" && args.mode == "trio") {
      min_column = static_cast<int>(patterns.size());
    } else if (args.find_min.rfind("win", 0) == 0) {
      const int k = std::stoi(args.find_min.substr(3));
      if (k >= 1 && k <= static_cast<int>(patterns.size())) min_column = k - 1;
    }
    if (min_column < 0)
      throw std::invalid_argument("unknown --find-min column '" +
                                  args.find_min + "'");
  }

  std::cout << "p";
  for (std::size_t i = 1; i <= patterns.size(); ++i) std::cout << ",win" << i;
  if (args.mode == "trio") std::cout << ",duration";
  std::cout << "\n";

  double best_value = 0.0;
  std::size_t best_index = 0;
  for (std::size_t i = 1; i <= args.grid; ++i) {
    const Rational pv(static_cast<long>(i), static_cast<long>(args.grid + 1));
    const auto row = evaluate(pv);
    std::cout << decimal12(pv);
    for (const auto& v : row) std::cout << "," << decimal12(v);
    std::cout << "\n";
    if (min_column >= 0) {
      const double v = row[static_cast<std::size_t>(min_column)].to_double();
      if (i == 1 || v < best_value) {
        best_value = v;
        best_index = i;
      }
    }
  }

  if (min_column >= 0) {
    const double h = 1.0 / static_cast<double>(args.grid + 1);
    const double center = static_cast<double>(best_index) * h;
    const double lo = std::max(center - h, h * 0.5);
    const double hi = std::min(center + h, 1.0 - h * 0.5);
    const auto value_at = [&](double x) {
      return evaluate(Rational::from_double(x))[static_cast<std::size_t>(
                                                    min_column)]
          .to_double();
    };
    const double p_star = golden_section_min(value_at, lo, hi, 1e-6);
    char p4[32];
    std::snprintf(p4, sizeof p4, "%.4f", p_star);
    std::cout << "# minimum " << args.find_min << ": p*=" << p4
              << " value=" << decimal12(value_at(p_star)) << "\n";
  }
  return kExitOk;
}

// ------------------------------------------------------------ simulate --

struct SimulateArgs {
  std::vector<std::string> patterns;
  std::string p;
  std::uint64_t games = 100000;
  std::uint64_t seed = 0;
  std::string format = "human";
};

int cmd_simulate(const SimulateArgs& args) {
  SimConfig config;
  config.patterns = parse_patterns(args.patterns);
  config.p = parse_probability(args.p);
  config.games = args.games;
  config.seed = args.seed;
  const ProbParams params = ProbParams::from_p(config.p);

  // exact references for the z-scores
  std::vector<Rational> exact_win;
  Rational exact_duration;
  if (config.patterns.size() == 1) {
    exact_win = {Rational(1)};
    exact_duration = mean_trials_from_correlation(config.patterns[0], params);
  } else if (config.patterns.size() == 2) {
    const DuelOutcome out = duel(config.patterns[0], config.patterns[1], params);
    exact_win = {out.win_prob[0], out.win_prob[1]};
    const PrefixAutomaton a = PrefixAutomaton::build(config.patterns);
    exact_duration = absorption(a, a.initial_state(), params).expected_steps;
  } else if (config.patterns.size() == 3) {
    const TrioOutcome out =
        trio(config.patterns[0], config.patterns[1], config.patterns[2], params);
    exact_win = {out.win_prob[0], out.win_prob[1], out.win_prob[2]};
    exact_duration = out.expected_duration;
  } else {
    const PrefixAutomaton a = PrefixAutomaton::build(config.patterns);
    const AbsorptionResult r = absorption(a, a.initial_state(), params);
    exact_win = r.win_prob;
    exact_duration = r.expected_steps;
  }

  const SimReport report = simulate(config);
  const double n = static_cast<double>(report.games);

  auto z_score = [](double observed, double exact, double se) {
    if (se == 0.0) return observed == exact ? 0.0 : HUGE_VAL;
    return (observed - exact) / se;
  };
  const double duration_z = z_score(
      report.mean_duration, exact_duration.to_double(), report.std_error_duration);

  if (args.format == "json") {
    json wins = json::array();
    for (std::size_t i = 0; i < config.patterns.size(); ++i) {
      const double freq = static_cast<double>(report.win_counts[i]) / n;
      wins.push_back(json{
          {"pattern", config.patterns[i].text()},
          {"count", report.win_counts[i]},
          {"frequency", decimal12(freq)},
          {"exact", value_json(exact_win[i])},
          {"std_error", decimal12(report.std_error_win[i])},
          {"z", decimal12(z_score(freq, exact_win[i].to_double(),
                                  report.std_error_win[i]))}});
    }
    json names = json::array();
    for (const auto& w : config.patterns) names.push_back(w.text());
    emit_json(json{{"command", "simulate"},
                   {"patterns", names},
                   {"p", value_json(params.p)},
                   {"games", report.games},
                   {"seed", config.seed},
                   {"win", wins},
                   {"duration", json{{"mean", decimal12(report.mean_duration)},
                                     {"exact", value_json(exact_duration)},
                                     {"std_error", decimal12(report.std_error_duration)},
                                     {"z", decimal12(duration_z)}}},
                   {"route", "splitmix64 Monte Carlo vs exact engine"}});
  } else if (args.format == "csv") {
    std::cout << "p";
    for (std::size_t i = 1; i <= config.patterns.size(); ++i)
      std::cout << ",freq" << i;
    std::cout << ",mean_duration\n" << decimal12(params.p);
    for (std::size_t i = 0; i < config.patterns.size(); ++i)
      std::cout << ","
                << decimal12(static_cast<double>(report.win_counts[i]) / n);
    std::cout << "," << decimal12(report.mean_duration) << "\n";
  } else {
    std::cout << "patterns:";
    for (const auto& w : config.patterns) std::cout << " " << w.text();
    std::cout << "\n";
    std::cout << "p:        " << exact_and_decimal(params.p)
              << "   games: " << report.games << "   seed: " << config.seed
              << "\n";
    for (std::size_t i = 0; i < config.patterns.size(); ++i) {
      const double freq = static_cast<double>(report.win_counts[i]) / n;
      std::cout << "win[" << config.patterns[i].text()
                << "]: " << report.win_counts[i] << "/" << report.games << " = "
                << decimal12(freq) << "  exact "
                << exact_and_decimal(exact_win[i]) << "  z = "
                << decimal12(z_score(freq, exact_win[i].to_double(),
                                     report.std_error_win[i]))
                << "\n";
    }
    std::cout << "duration: mean " << decimal12(report.mean_duration)
              << "  exact " << exact_and_decimal(exact_duration) << "  z = "
              << decimal12(duration_z) << "\n";
    std::cout << "route:    splitmix64 Monte Carlo vs exact engine\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact first-occurrence statistics and races of S/F outcome patterns"};
  app.require_subcommand(1);

  MeanArgs mean_args;
  CLI::App* mean_cmd =
      app.add_subcommand("mean", "expected trials to the first occurrence");
  mean_cmd->add_option("pattern", mean_args.pattern, "pattern over S/F (or H/T)")
      ->required();
  mean_cmd->add_option("--p", mean_args.p, "success probability, 'a/b' or decimal")
      ->required();
  mean_cmd->add_option("--head", mean_args.head, "head start already emitted");
  mean_cmd->add_flag("--pgf", mean_args.print_pgf, "also print the PGF in s");
  mean_cmd->add_option("--format", mean_args.format, "human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  RaceArgs duel_args;
  CLI::App* duel_cmd = app.add_subcommand("duel", "two-pattern race");
  duel_cmd->add_option("patterns", duel_args.patterns, "the two patterns")
      ->required()
      ->expected(2);
  duel_cmd->add_option("--p", duel_args.p, "success probability")->required();
  duel_cmd->add_option("--given", duel_args.given,
                       "pattern assumed just completed");
  duel_cmd->add_option("--format", duel_args.format, "human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  RaceArgs trio_args;
  CLI::App* trio_cmd = app.add_subcommand("trio", "three-pattern race");
  trio_cmd->add_option("patterns", trio_args.patterns, "the three patterns")
      ->required()
      ->expected(3);
  trio_cmd->add_option("--p", trio_args.p, "success probability")->required();
  trio_cmd->add_option("--format", trio_args.format, "human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  RaceArgs race_args;
  CLI::App* race_cmd = app.add_subcommand(
      "race", "race of N >= 2 patterns (oracle-only beyond three)");
  race_cmd->add_option("patterns", race_args.patterns, "the patterns")
      ->required()
      ->expected(2, -1);
  race_cmd->add_option("--p", race_args.p, "success probability")->required();
  race_cmd->add_option("--format", race_args.format, "human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "cross-check every route; exit 3 on any mismatch");
  verify_cmd->add_option("patterns", verify_args.patterns, "2 or 3 patterns")
      ->required()
      ->expected(2, 3);
  verify_cmd->add_option("--p", verify_args.p, "success probability")->required();
  verify_cmd->add_option("--nmax", verify_args.nmax,
                         "horizon for coefficient comparison");

  SweepArgs sweep_args;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "CSV of win probabilities over a p grid");
  sweep_cmd->add_option("mode", sweep_args.mode, "duel|trio")->required();
  sweep_cmd->add_option("patterns", sweep_args.patterns, "the patterns")
      ->required()
      ->expected(2, 3);
  sweep_cmd->add_option("--grid", sweep_args.grid, "grid points (p = i/(grid+1))");
  sweep_cmd->add_option("--find-min", sweep_args.find_min,
                        "refine the minimizer of win<k> or duration");

  SimulateArgs sim_args;
  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "seeded Monte Carlo cross-validation");
  sim_cmd->add_option("patterns", sim_args.patterns, "the patterns")
      ->required()
      ->expected(1, -1);
  sim_cmd->add_option("--p", sim_args.p, "success probability")->required();
  sim_cmd->add_option("--games", sim_args.games, "number of games");
  sim_cmd->add_option("--seed", sim_args.seed, "RNG seed");
  sim_cmd->add_option("--format", sim_args.format, "human|json|csv")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  try {
    if (mean_cmd->parsed()) return cmd_mean(mean_args);
    if (duel_cmd->parsed()) return cmd_duel(duel_args);
    if (trio_cmd->parsed()) return cmd_trio(trio_args);
    if (race_cmd->parsed()) return cmd_race(race_args);
    if (verify_cmd->parsed()) return cmd_verify(verify_args);
    if (sweep_cmd->parsed()) return cmd_sweep(sweep_args);
    if (sim_cmd->parsed()) return cmd_simulate(sim_args);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerifyMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitOk;
}
