// Copyright 2026 The Strategem Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance gate. Prints one PASS/FAIL line per criterion; with a criterion
// name as the only argument, runs just that one. Exit status is nonzero iff
// any selected criterion failed.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>

#include "commands.h"
#include "document.h"
#include "scenario_files.h"
#include "service.h"
#include "test_support.h"

namespace strategem {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok) failures_.push_back(what);
  }
  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool ok() const { return failures_.empty(); }

  std::string summary() const {
    std::ostringstream out;
    if (ok()) {
      out << total_ << " checks";
    } else {
      out << failures_.size() << "/" << total_ << " checks failed: ";
      for (std::size_t i = 0; i < failures_.size(); ++i) out << (i ? "; " : "") << failures_[i];
    }
    for (const auto& n : notes_) out << " [" << n << "]";
    return out.str();
  }

 private:
  int total_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

bool near(double a, double b, double tol) { return std::abs(a - b) <= tol; }

// Min over columns of the row mixture and max over rows of the column mixture
// must bracket the value.
bool guarantee_holds(const PayoffMatrix& m, const GameSolution& s, double tol) {
  if (s.row_strategy.size() != m.rows() || s.col_strategy.size() != m.cols()) return false;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double v = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) v += s.row_strategy[i] * m.at(i, j);
    if (v < s.value - tol) return false;
  }
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double v = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) v += s.col_strategy[j] * m.at(i, j);
    if (v > s.value + tol) return false;
  }
  return true;
}

// Binary game.

Checks binary_game() {
  Checks c;
  const Scenario scenario = testing::intro_binary_scenario();
  const PayoffMatrix built = build_diff_matrix(scenario);
  const PayoffMatrix expected =
      make_payoff_matrix({"A", "B"}, {"C", "D", "E"}, {{2, 0, -1}, {2, -1, -2}});
  std::ostringstream got;
  for (std::size_t i = 0; i < built.rows(); ++i) {
    got << (i ? " / " : "");
    for (std::size_t j = 0; j < built.cols(); ++j) got << (j ? "," : "") << built.at(i, j);
  }
  c.expect(built == expected,
           "built matrix " + got.str() + " != 2,0,-1 / 2,-1,-2 (B row from the stated B "
           "vector gives payoff(B,C)=1)");

  const GameSolution s = solve(built);
  c.expect(s.kind == SolutionKind::kPureSaddle && s.saddle == Cell{"A", "E"},
           "saddle is not (A,E)");
  c.expect(s.value == -1.0, "value " + fmt(s.value) + " != -1");
  const GameSolution printed = solve(expected);
  c.expect(printed.saddle == Cell{"A", "E"} && printed.value == -1.0,
           "printed matrix does not solve to (A,E) = -1");

  constexpr int kRuns = 1000;
  std::vector<double> times;
  for (int i = 0; i < kRuns; ++i) {
    const auto start = Clock::now();
    const GameSolution t = solve(build_diff_matrix(scenario));
    times.push_back(seconds_since(start));
    if (t.value != -1.0) c.expect(false, "unstable value");
  }
  std::sort(times.begin(), times.end());
  const double worst = times.back();
  c.expect(worst < 1e-3, "build+solve took " + fmt(worst * 1e3) + " ms");
  c.note("worst build+solve " + fmt(worst * 1e6) + " us over " + std::to_string(kRuns) +
         " runs");
  return c;
}

// Real-valued game.

Checks real_game() {
  Checks c;
  const PayoffMatrix m = build_diff_matrix(testing::real_scenario());
  c.expect(near(m.at(*m.row_index("A"), *m.col_index("D")), 0.08, 1e-9), "(A,D) != 0.08");
  const auto oracle = testing::real_matrix_oracle();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      c.expect(near(m.at(i, j), oracle[i][j], 1e-9),
               "entry " + m.row_labels[i] + m.col_labels[j] + " " + fmt(m.at(i, j)) +
                   " != oracle " + fmt(oracle[i][j]));
  const Reduction r = reduce(m, Dominance::kWeak);
  c.expect(r.matrix.row_labels == std::vector<std::string>{"A"} &&
               r.matrix.col_labels == std::vector<std::string>{"D"},
           "weak reduction does not leave (A,D)");
  const GameSolution s = solve(m, Dominance::kWeak);
  c.expect(s.saddle == Cell{"A", "D"}, "saddle is not (A,D)");
  c.expect(near(s.value, 0.08, 1e-9), "value " + fmt(s.value) + " != 0.08");
  return c;
}

// Saddle movement.

Checks saddle_movement() {
  Checks c;
  const GameSolution before = solve(build_diff_matrix(testing::intro_binary_scenario()));
  const GameSolution after = solve(build_diff_matrix(testing::real_scenario()));
  const MovementReport r = compare_solutions(before, after);
  c.expect(r.saddle_moved, "saddle not reported as moved");
  c.expect(r.saddle_before == Cell{"A", "E"}, "before is not (A,E)");
  c.expect(r.saddle_after == Cell{"A", "D"}, "after is not (A,D)");
  c.expect(r.value_before == -1.0, "value before " + fmt(r.value_before));
  c.expect(near(r.value_after, 0.08, 1e-9), "value after " + fmt(r.value_after));
  c.note(r.describe());
  return c;
}

// Mixed game.

Checks mixed_game() {
  Checks c;
  const PayoffMatrix m = testing::added_strategy_reduced_matrix();
  c.expect(m == make_payoff_matrix({"A", "X"}, {"D", "E"}, {{0.08, 0.14}, {0.24, 0.14}}),
           "reduced matrix differs");
  const GameSolution solved = solve(m, Dominance::kStrict);
  const GameSolution odd = solve_2x2(m);
  const GameSolution lp = solve_lp(m);
  for (const auto* s : {&solved, &odd}) {
    const std::string path = s == &odd ? "oddments" : "solve";
    c.expect(near(s->value, 0.14, 1e-9), path + " value " + fmt(s->value));
    c.expect(s->row_strategy.size() == 2 && near(s->row_strategy[0], 0.625, 1e-9) &&
                 near(s->row_strategy[1], 0.375, 1e-9),
             path + " row strategy");
    c.expect(guarantee_holds(m, *s, 1e-9), path + " guarantee");
  }
  c.expect(near(lp.value, odd.value, 1e-9), "lp value " + fmt(lp.value) + " != oddments");
  c.expect(guarantee_holds(m, lp, 1e-9), "lp guarantee");
  GameSolution odd_at_lp = odd;
  odd_at_lp.value = lp.value;
  c.expect(guarantee_holds(m, odd_at_lp, 1e-9), "oddments strategy not optimal for the lp value");
  if (lp.row_strategy != odd.row_strategy) {
    c.note("lp picks the other optimal vertex (" + fmt(lp.row_strategy[0]) + ", " +
           fmt(lp.row_strategy[1]) + "); column E is constant so p(A) in [0, 0.625] is optimal");
  }
  const GameSolution full =
      solve(build_diff_matrix(testing::added_strategy_scenario()), Dominance::kStrict);
  c.expect(near(full.value, 0.14, 1e-9), "full scenario value " + fmt(full.value));
  return c;
}

// Interval arithmetic.

Interval random_interval(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5, 5);
  const double a = u(rng), b = u(rng);
  return Interval(std::min(a, b), std::max(a, b));
}

double sample(std::mt19937_64& rng, const Interval& x) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  return std::min(x.hi(), x.lo() + u(rng) * (x.hi() - x.lo()));
}

bool contains_with_slack(const Interval& x, double v) {
  const double slack = 1e-12 * (1.0 + std::abs(v));
  return !x.is_empty() && x.lo() <= v + slack && v - slack <= x.hi();
}

Checks interval_arithmetic() {
  Checks c;
  constexpr double kInf = Interval::kInf;
  c.expect(recip(Interval::point(0)).is_empty(), "1/[0,0] is not empty");
  c.expect(recip({2, 4}) == Interval(0.25, 0.5), "1/[2,4]");
  c.expect(recip({-4, -2}) == Interval(-0.5, -0.25), "1/[-4,-2]");
  c.expect(recip({0, 2}) == Interval(0.5, kInf), "1/[0,2]");
  c.expect(recip({-2, 0}) == Interval(-kInf, -0.5), "1/[-2,0]");
  c.expect(recip({-1, 2}) == Interval::whole(), "1/[-1,2]");
  c.expect(recip({0, kInf}) == Interval(0, kInf), "1/[0,inf]");
  c.expect(div({1, 2}, Interval::point(0)).is_empty(), "[1,2]/[0,0] is not empty");

  std::mt19937_64 rng(101);
  constexpr int kSamples = 10000;
  int bad[5] = {0, 0, 0, 0, 0};
  for (int i = 0; i < kSamples; ++i) {
    const Interval x = random_interval(rng), y = random_interval(rng);
    const double a = sample(rng, x), b = sample(rng, y);
    if (!add(x, y).contains(a + b)) ++bad[0];
    if (!sub(x, y).contains(a - b)) ++bad[1];
    if (!mul(x, y).contains(a * b)) ++bad[2];
    if (b != 0.0 && !contains_with_slack(div(x, y), a / b)) ++bad[3];
    if (b != 0.0 && !contains_with_slack(recip(y), 1.0 / b)) ++bad[4];
  }
  const char* names[] = {"add", "sub", "mul", "div", "recip"};
  for (int k = 0; k < 5; ++k)
    c.expect(bad[k] == 0, std::string(names[k]) + " lost " + std::to_string(bad[k]) + " of " +
                              std::to_string(kSamples) + " samples");
  return c;
}

// Solver properties.

Checks solver_properties() {
  Checks c;
  const auto start = Clock::now();
  std::mt19937_64 rng(103);
  int reduction = 0, monotone = 0, guarantee = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const PayoffMatrix m = trial % 2 ? testing::random_matrix(rng, 4, 4)
                                     : testing::random_lattice_matrix(rng, 4, 4, 3);
    const double reference = solve_lp(m).value;
    for (Dominance mode : {Dominance::kWeak, Dominance::kStrict}) {
      if (!near(solve_lp(reduce(m, mode).matrix).value, reference, 1e-6)) ++reduction;
      const GameSolution s = solve(m, mode);
      if (!near(s.value, reference, 1e-6)) ++reduction;
      if (!guarantee_holds(m, s, 1e-9)) ++guarantee;
    }
    std::uniform_real_distribution<double> bump(0.01, 0.5);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        PayoffMatrix up = m;
        up.entries(i, j) += bump(rng);
        if (solve(up).value < reference - 1e-9) ++monotone;
      }
    }
  }
  c.expect(reduction == 0, std::to_string(reduction) + " reductions changed the value");
  c.expect(monotone == 0, std::to_string(monotone) + " entry raises lowered the value");
  c.expect(guarantee == 0, std::to_string(guarantee) + " strategies broke the guarantee");

  double worst_gap = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const PayoffMatrix m = testing::random_matrix(rng, 3, 3);
    worst_gap = std::max(worst_gap, std::abs(solve_lp(m).value - testing::grid_maximin(m, 0.01)));
  }
  c.expect(worst_gap <= 0.02, "lp vs grid oracle gap " + fmt(worst_gap));
  const double elapsed = seconds_since(start);
  c.expect(elapsed < 30.0, "took " + fmt(elapsed) + " s");
  c.note("lp/grid gap " + fmt(worst_gap) + ", " + fmt(elapsed) + " s");
  return c;
}

// Entropy rule.

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> v(n);
  for (double& x : v) x = u(rng);
  return v;
}

Checks entropy_rule() {
  Checks c;
  std::mt19937_64 rng(107);
  std::uniform_real_distribution<double> cost(0.5, 3.0);
  int asymmetric = 0, nonzero = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_vector(rng, 6), b = random_vector(rng, 6), t = random_vector(rng, 6);
    EntropyConfig cfg;
    if (trial % 2) {
      for (int k = 0; k < 6; ++k) cfg.costs.push_back(cost(rng));
    }
    Scenario s;
    s.scheme = testing::six_parameter_scheme();
    s.assets = {testing::real_profile("A", Role::kAsset, a),
                testing::real_profile("B", Role::kAsset, b)};
    s.threats = {testing::real_profile("T", Role::kThreat, t),
                 testing::real_profile("U", Role::kThreat, a)};
    Scenario swapped;
    swapped.scheme = s.scheme;
    swapped.assets = {testing::real_profile("T", Role::kAsset, t),
                      testing::real_profile("U", Role::kAsset, a)};
    swapped.threats = {testing::real_profile("A", Role::kThreat, a),
                       testing::real_profile("B", Role::kThreat, b)};
    const PayoffMatrix m = build_entropy_matrix(s, cfg);
    const PayoffMatrix w = build_entropy_matrix(swapped, cfg);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j)
        if (!near(m.at(i, j), -w.at(j, i), 1e-12)) ++asymmetric;
    if (!near(m.at(0, 1), 0.0, 1e-12)) ++nonzero;
  }
  c.expect(asymmetric == 0, std::to_string(asymmetric) + " entries not antisymmetric");
  c.expect(nonzero == 0, std::to_string(nonzero) + " identical pairs with nonzero payoff");
  c.note("absolute -0.16 at (B,E) not reproducible: cost vector and normalization unstated");
  return c;
}

// What-if.

IntervalPayoffMatrix random_interval_matrix(std::mt19937_64& rng, std::size_t rows,
                                            std::size_t cols) {
  std::uniform_real_distribution<double> u(-1, 1), w(0.05, 0.4);
  IntervalPayoffMatrix m;
  for (std::size_t i = 0; i < rows; ++i) m.row_labels.push_back("R" + std::to_string(i));
  for (std::size_t j = 0; j < cols; ++j) m.col_labels.push_back("C" + std::to_string(j));
  m.entries = Matrix<Interval>(rows, cols);
  for (auto& e : m.entries.data()) {
    const double lo = u(rng);
    e = Interval(lo, lo + w(rng));
  }
  return m;
}

Checks whatif() {
  Checks c;
  std::mt19937_64 rng(109);
  std::uniform_real_distribution<double> d(-0.5, 0.5);
  std::uniform_int_distribution<std::size_t> cell(0, 3);
  int wrong_sign = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const PayoffMatrix m = testing::random_matrix(rng, 4, 4);
    const double delta = d(rng);
    const SensitivityResult r =
        sensitivity(m, m.row_labels[cell(rng)], m.col_labels[cell(rng)], delta);
    if ((delta > 0 && r.change < -1e-9) || (delta < 0 && r.change > 1e-9)) ++wrong_sign;
  }
  c.expect(wrong_sign == 0, std::to_string(wrong_sign) + " changes against the delta sign");

  int upper = 0, nominal = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const IntervalPayoffMatrix im = random_interval_matrix(rng, 1 + trial % 4, 1 + trial % 3);
    const WhatIfResult free = optimize_within_intervals(im, std::nullopt);
    if (free.achieved != interval_game_bounds(im).high) ++upper;
    const WhatIfResult zero = optimize_within_intervals(im, 0.0, 0.05);
    if (zero.realization != midpoint_matrix(im) || zero.delta != 0.0) ++nominal;
  }
  c.expect(upper == 0, std::to_string(upper) + " unconstrained optima differ from the bound");
  c.expect(nominal == 0, std::to_string(nominal) + " zero-budget results differ from nominal");
  c.note("figure matrices not reproducible: data only in figure images");
  return c;
}

// CLI and service contract.

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(STRATEGEM_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

ResultDocument random_result(std::mt19937_64& rng, int which) {
  std::uniform_int_distribution<std::size_t> dim(1, 4);
  std::uniform_real_distribution<double> u(-2, 2);
  const std::size_t r = dim(rng), k = dim(rng);
  switch (which % 7) {
    case 0: return testing::random_matrix(rng, r, k, -5, 5);
    case 1: return random_interval_matrix(rng, r, k);
    case 2: return solve(testing::random_lattice_matrix(rng, r, k, 2),
                         which % 2 ? Dominance::kWeak : Dominance::kStrict);
    case 3: {
      ValueSeries v;
      for (std::size_t p = 0; p < r + 2; ++p) {
        const GameSolution s = solve(testing::random_matrix(rng, 2, 2));
        v.periods.push_back({p, s.value, s.kind, s.saddle});
      }
      return v;
    }
    case 4: return optimize_within_intervals(
        random_interval_matrix(rng, std::min<std::size_t>(r, 3), std::min<std::size_t>(k, 3)),
        std::abs(u(rng)), 0.05);
    case 5: {
      const PayoffMatrix m = testing::random_matrix(rng, r, k);
      return sensitivity(m, m.row_labels[0], m.col_labels[k - 1], u(rng));
    }
    default:
      return compare_solutions(solve(testing::random_matrix(rng, r, k)),
                               solve(testing::random_matrix(rng, r, k)));
  }
}

Checks cli_service() {
  Checks c;
  const struct {
    const char* name;
    int exit_code;
  } expectations[] = {
      {"intro_binary", kExitNegativeValue},
      {"real", kExitOk},
      {"added_strategy_x", kExitOk},
      {"mixed_scales", kExitInvalid},
  };
  for (const auto& e : expectations) {
    const Run r = run_cli("solve " + testing::scenario_path(e.name));
    c.expect(r.status == e.exit_code, std::string(e.name) + " exit " + std::to_string(r.status) +
                                          " != " + std::to_string(e.exit_code));
  }
  c.expect(run_cli("solve " + testing::scenario_path("intro_binary") + " --rule fuzzy").status ==
               kExitInvalid,
           "unknown rule does not exit 2");
  c.expect(run_cli("build " + testing::scenario_path("intro_binary")).status == kExitOk,
           "build of a negative game does not exit 0");

  const auto dir = std::filesystem::temp_directory_path() /
                   ("strategem_acceptance_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  {
    ScenarioStore store(dir);
    httplib::Server server;
    install_routes(server, store);
    const int port = server.bind_to_any_port("127.0.0.1");
    std::thread listener([&server] { server.listen_after_bind(); });
    server.wait_until_ready();
    httplib::Client client("127.0.0.1", port);
    for (const char* name : {"intro_binary", "real", "added_strategy_x"}) {
      const std::string text = testing::read_scenario(name);
      const auto put = client.Put(std::string("/scenarios/") + name, text, "application/json");
      c.expect(put && put->status == 201, std::string("PUT ") + name);
      for (const char* mode : {"weak", "strict"}) {
        const auto res = client.Post(std::string("/scenarios/") + name +
                                         "/solve?dominance=" + mode,
                                     "", "application/json");
        const Run cli = run_cli("solve " + testing::scenario_path(name) +
                                " --format machine --dominance " + mode);
        c.expect(res && res->status == 200 && res->body == cli.out,
                 std::string("service solve differs from CLI for ") + name + " " + mode);
      }
    }
    const auto missing = client.Post("/scenarios/nowhere/solve", "", "application/json");
    c.expect(missing && missing->status == 404, "unknown id is not 404");
    const auto invalid =
        client.Put("/scenarios/bad", testing::read_scenario("mixed_scales"), "application/json");
    c.expect(invalid && invalid->status == 400, "invalid document is not 400");
    const auto scale = client.Post("/scenarios/intro_binary/solve?rule=interval", "",
                                   "application/json");
    c.expect(scale && scale->status == 422, "rule/scale mismatch is not 422");
    server.stop();
    listener.join();
  }
  std::filesystem::remove_all(dir);

  std::mt19937_64 rng(113);
  int broken = 0;
  for (int i = 0; i < 100; ++i) {
    const ResultDocument original = random_result(rng, i);
    const std::string text = serialize_result(original);
    if (!(parse_result(text) == original)) ++broken;
  }
  c.expect(broken == 0, std::to_string(broken) + " of 100 results did not round-trip");
  return c;
}

struct Criterion {
  const char* name;
  std::function<Checks()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {"binary_game", binary_game},
      {"real_game", real_game},
      {"saddle_movement", saddle_movement},
      {"mixed_game", mixed_game},
      {"interval_arithmetic", interval_arithmetic},
      {"solver_properties", solver_properties},
      {"entropy_rule", entropy_rule},
      {"whatif", whatif},
      {"cli_service", cli_service},
  };
  return all;
}

int run(const std::string& only) {
  bool any = false, failed = false;
  for (const auto& crit : criteria()) {
    if (!only.empty() && only != crit.name) continue;
    any = true;
    Checks result;
    try {
      result = crit.run();
    } catch (const std::exception& e) {
      result.expect(false, std::string("threw: ") + e.what());
    }
    failed |= !result.ok();
    std::cout << (result.ok() ? "PASS " : "FAIL ") << crit.name << ": " << result.summary()
              << std::endl;
  }
  if (!any) {
    std::cerr << "unknown criterion '" << only << "'\n";
    return 2;
  }
  return failed ? 1 : 0;
}

}  // namespace
}  // namespace strategem

int main(int argc, char** argv) {
  if (argc > 2) {
    std::cerr << "usage: " << argv[0] << " [criterion]\n";
    return 2;
  }
  return strategem::run(argc == 2 ? argv[1] : "");
}
