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

// What-if exploration on top of the solver: single-entry sensitivity,
// searching realizations inside interval payoffs, per-period value series
// and comparison of two solutions.

#ifndef STRATEGEM_WHATIF_H_
#define STRATEGEM_WHATIF_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "strategem/matrix.h"
#include "strategem/payoff.h"
#include "strategem/solver.h"
#include "strategem/strategy_model.h"

namespace strategem {

struct SensitivityResult {
  std::string row;
  std::string col;
  double delta = 0.0;
  double baseline = 0.0;
  double change = 0.0;
  GameSolution solution;

  friend bool operator==(const SensitivityResult&, const SensitivityResult&) = default;
};

// Re-solves with entry (row, col) moved by delta. Throws LabelError.
SensitivityResult sensitivity(const PayoffMatrix& matrix, const std::string& row,
                              const std::string& col, double delta,
                              Dominance mode = Dominance::kWeak);

struct WhatIfResult {
  PayoffMatrix realization;
  double achieved = 0.0;
  double baseline = 0.0;
  double delta = 0.0;
  // realization - nominal (midpoints), entrywise.
  Matrix<double> deviations;

  friend bool operator==(const WhatIfResult&, const WhatIfResult&) = default;
};

enum class SearchMethod {
  kAuto,        // exhaustive up to 3x3, greedy above
  kExhaustive,  // SizeError above 3x3
  kGreedy,
};

constexpr double kDefaultStep = 0.01;

// Baseline is the game at the interval midpoints. Without a budget the
// all-upper realization is returned, which is optimal because the value is
// monotone in every entry. With budget B the value is maximized over grid
// realizations {lo, lo + step, ..., hi} (plus the midpoint) whose total
// absolute deviation from the midpoints is at most B.
//
// Throws StepError when step <= 0 or exceeds the widest interval, SizeError
// for an exhaustive search above 3x3, RangeError on a negative budget.
WhatIfResult optimize_within_intervals(const IntervalPayoffMatrix& matrix,
                                       std::optional<double> budget,
                                       double step = kDefaultStep,
                                       Dominance mode = Dominance::kWeak,
                                       SearchMethod method = SearchMethod::kAuto);

struct PeriodValue {
  std::size_t period = 0;
  double value = 0.0;
  SolutionKind kind = SolutionKind::kMixed;
  std::optional<Cell> saddle;

  friend bool operator==(const PeriodValue&, const PeriodValue&) = default;
};

struct ValueSeries {
  std::vector<PeriodValue> periods;
  friend bool operator==(const ValueSeries&, const ValueSeries&) = default;
};

// Solves the time-weighted game of every period. Periods are independent
// and run concurrently; results are ordered by period.
// Throws ConfigError when the scenario has no timeline and ScaleError for
// the interval rule.
ValueSeries timeline_values(const Scenario& scenario, PayoffRule rule,
                            const EntropyConfig& entropy = {},
                            Dominance mode = Dominance::kWeak);

struct MovementReport {
  double value_before = 0.0;
  double value_after = 0.0;
  double value_delta = 0.0;
  SolutionKind kind_before = SolutionKind::kMixed;
  SolutionKind kind_after = SolutionKind::kMixed;
  bool kind_changed = false;
  std::optional<Cell> saddle_before;
  std::optional<Cell> saddle_after;
  bool saddle_moved = false;

  // e.g. "saddle (A,E) -> (A,D); value -1 -> 0.08"
  std::string describe() const;

  friend bool operator==(const MovementReport&, const MovementReport&) = default;
};

// Purely descriptive. Strategies may be added or dropped between the two
// solutions, but on each side one label set must contain the other;
// otherwise LabelError.
MovementReport compare_solutions(const GameSolution& before, const GameSolution& after);

}  // namespace strategem

#endif  // STRATEGEM_WHATIF_H_
