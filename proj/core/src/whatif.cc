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

#include "strategem/whatif.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <sstream>

#include "strategem/error.h"

namespace strategem {
namespace {

// Improvements smaller than this do not replace an earlier realization.
constexpr double kGain = 1e-12;
constexpr double kBudgetSlack = 1e-12;

// Values an entry may take during a budgeted search, ascending, starting at
// the midpoint. Points below the midpoint are never useful: lowering an entry
// cannot raise the value and still spends budget.
std::vector<double> entry_candidates(const Interval& x, double step) {
  const double mid = x.midpoint();
  std::vector<double> out{mid};
  if (x.width() <= 0.0) return out;
  const auto count = static_cast<long>(std::floor(x.width() / step + 1e-9));
  for (long k = 0; k <= count; ++k) {
    const double g = std::min(x.lo() + static_cast<double>(k) * step, x.hi());
    if (g > out.back() + kBudgetSlack) out.push_back(g);
  }
  if (x.hi() > out.back() + kBudgetSlack) out.push_back(x.hi());
  return out;
}

struct Search {
  Dominance mode;
  double budget;
  std::vector<std::vector<double>> candidates;  // per entry, row-major
  std::vector<double> mids;

  PayoffMatrix current;
  double best_value = 0.0;
  PayoffMatrix best;

  double value_of(const PayoffMatrix& m) const { return solve(m, mode).value; }

  void consider(const PayoffMatrix& m) {
    const double v = value_of(m);
    if (v > best_value + kGain) {
      best_value = v;
      best = m;
    }
  }

  // Depth-first over entries; the last entry always takes the highest value
  // the remaining budget affords, since raising it never hurts.
  void exhaustive(std::size_t entry, double remaining) {
    const std::size_t cols = current.cols();
    const std::size_t r = entry / cols;
    const std::size_t c = entry % cols;
    const auto& options = candidates[entry];
    if (entry + 1 == candidates.size()) {
      double chosen = options.front();
      for (double g : options) {
        if (g - mids[entry] <= remaining + kBudgetSlack) chosen = g;
      }
      current.entries(r, c) = chosen;
      consider(current);
      current.entries(r, c) = mids[entry];
      return;
    }
    for (double g : options) {
      const double cost = g - mids[entry];
      if (cost > remaining + kBudgetSlack) break;
      current.entries(r, c) = g;
      exhaustive(entry + 1, remaining - cost);
    }
    current.entries(r, c) = mids[entry];
  }

  void greedy() {
    std::vector<std::size_t> position(candidates.size(), 0);
    double remaining = budget;
    double value = best_value;
    for (;;) {
      std::optional<std::size_t> move;
      double move_value = value;
      for (std::size_t e = 0; e < candidates.size(); ++e) {
        if (position[e] + 1 >= candidates[e].size()) continue;
        const double next = candidates[e][position[e] + 1];
        const double cost = next - candidates[e][position[e]];
        if (cost > remaining + kBudgetSlack) continue;
        const std::size_t r = e / current.cols(), c = e % current.cols();
        const double saved = current.entries(r, c);
        current.entries(r, c) = next;
        const double v = value_of(current);
        current.entries(r, c) = saved;
        if (v > move_value + kGain) {
          move = e;
          move_value = v;
        }
      }
      if (!move) break;
      const std::size_t e = *move;
      remaining -= candidates[e][position[e] + 1] - candidates[e][position[e]];
      ++position[e];
      current.entries(e / current.cols(), e % current.cols()) = candidates[e][position[e]];
      value = move_value;
    }
    if (value > best_value + kGain) {
      best_value = value;
      best = current;
    }
  }

  // Walks raised entries of `best` back toward their midpoints while the
  // value holds, so no budget is spent on entries that do not matter.
  void trim() {
    const std::size_t cols = best.cols();
    for (std::size_t e = 0; e < candidates.size(); ++e) {
      double& entry = best.entries(e / cols, e % cols);
      const auto& options = candidates[e];
      for (auto it = options.rbegin(); it != options.rend(); ++it) {
        if (*it >= entry) continue;
        const double saved = entry;
        entry = *it;
        if (value_of(best) + kGain < best_value) {
          entry = saved;
          break;
        }
      }
    }
    best_value = value_of(best);
  }
};

void require_labels(const PayoffMatrix& m, const std::string& row, const std::string& col) {
  if (!m.row_index(row)) throw Error(ErrorKind::kLabel, "unknown row '" + row + "'", row);
  if (!m.col_index(col)) throw Error(ErrorKind::kLabel, "unknown column '" + col + "'", col);
}

bool nested(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  const std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  return std::includes(sa.begin(), sa.end(), sb.begin(), sb.end()) ||
         std::includes(sb.begin(), sb.end(), sa.begin(), sa.end());
}

std::string cell_text(const std::optional<Cell>& c) {
  if (!c) return "mixed";
  return "(" + c->row + "," + c->col + ")";
}

}  // namespace

SensitivityResult sensitivity(const PayoffMatrix& matrix, const std::string& row,
                              const std::string& col, double delta, Dominance mode) {
  require_labels(matrix, row, col);
  PayoffMatrix moved = matrix;
  moved.entries(*matrix.row_index(row), *matrix.col_index(col)) += delta;
  SensitivityResult out;
  out.row = row;
  out.col = col;
  out.delta = delta;
  out.baseline = solve(matrix, mode).value;
  out.solution = solve(moved, mode);
  out.change = out.solution.value - out.baseline;
  return out;
}

WhatIfResult optimize_within_intervals(const IntervalPayoffMatrix& matrix,
                                       std::optional<double> budget, double step,
                                       Dominance mode, SearchMethod method) {
  matrix.check_shape();
  double widest = 0.0;
  for (const auto& e : matrix.entries.data()) {
    if (!e.is_bounded()) {
      throw Error(ErrorKind::kRange, "interval payoffs must be non-empty and bounded");
    }
    widest = std::max(widest, e.width());
  }
  if (!(step > 0.0) || (widest > 0.0 && step > widest)) {
    std::ostringstream msg;
    msg << "step " << step << " must be positive and no larger than the widest interval ("
        << widest << ")";
    throw Error(ErrorKind::kStep, msg.str());
  }
  if (budget && !(*budget >= 0.0)) {
    throw Error(ErrorKind::kRange, "budget must be non-negative");
  }
  const bool small = matrix.rows() <= 3 && matrix.cols() <= 3;
  if (method == SearchMethod::kExhaustive && !small) {
    throw Error(ErrorKind::kSize, "exhaustive grid search is limited to 3x3 games");
  }

  const PayoffMatrix nominal = midpoint_matrix(matrix);
  WhatIfResult out;
  out.baseline = solve(nominal, mode).value;

  if (!budget) {
    out.realization = upper_matrix(matrix);
    out.achieved = solve(out.realization, mode).value;
  } else {
    Search s{mode, *budget, {}, {}, nominal, out.baseline, nominal};
    for (const auto& e : matrix.entries.data()) {
      s.candidates.push_back(entry_candidates(e, step));
      s.mids.push_back(e.midpoint());
    }
    const bool use_grid = method == SearchMethod::kExhaustive ||
                          (method == SearchMethod::kAuto && small);
    if (use_grid) {
      s.exhaustive(0, *budget);
    } else {
      s.greedy();
    }
    s.trim();
    out.realization = s.best;
    out.achieved = s.best_value;
  }

  out.delta = out.achieved - out.baseline;
  out.deviations = Matrix<double>(matrix.rows(), matrix.cols());
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j)
      out.deviations(i, j) = out.realization.at(i, j) - nominal.at(i, j);
  return out;
}

ValueSeries timeline_values(const Scenario& scenario, PayoffRule rule,
                            const EntropyConfig& entropy, Dominance mode) {
  if (!scenario.timeline) {
    throw Error(ErrorKind::kConfig, "scenario has no threat timeline");
  }
  PayoffMatrix base;
  switch (rule) {
    case PayoffRule::kDiff: base = build_diff_matrix(scenario); break;
    case PayoffRule::kEntropy: base = build_entropy_matrix(scenario, entropy); break;
    case PayoffRule::kInterval:
      throw Error(ErrorKind::kScale, "timeline values need the diff or entropy rule");
  }
  const ThreatTimeline& timeline = *scenario.timeline;

  std::vector<std::future<PeriodValue>> pending;
  pending.reserve(timeline.periods);
  for (std::size_t p = 0; p < timeline.periods; ++p) {
    pending.push_back(std::async(std::launch::async, [&base, &timeline, mode, p] {
      const GameSolution s = solve(time_weighted_matrix(base, timeline, p), mode);
      return PeriodValue{p, s.value, s.kind, s.saddle};
    }));
  }
  ValueSeries out;
  for (auto& f : pending) out.periods.push_back(f.get());
  return out;
}

std::string MovementReport::describe() const {
  std::ostringstream out;
  if (saddle_moved) {
    out << "saddle " << cell_text(saddle_before) << " -> " << cell_text(saddle_after);
  } else if (saddle_before) {
    out << "saddle stays at " << cell_text(saddle_before);
  } else {
    out << "no saddle";
  }
  if (kind_changed) {
    out << "; kind " << kind_name(kind_before) << " -> " << kind_name(kind_after);
  }
  out << "; value " << value_before << " -> " << value_after;
  return out.str();
}

MovementReport compare_solutions(const GameSolution& before, const GameSolution& after) {
  if (!nested(before.row_labels, after.row_labels) ||
      !nested(before.col_labels, after.col_labels)) {
    throw Error(ErrorKind::kLabel, "solutions are over unrelated strategy sets");
  }
  MovementReport r;
  r.value_before = before.value;
  r.value_after = after.value;
  r.value_delta = after.value - before.value;
  r.kind_before = before.kind;
  r.kind_after = after.kind;
  r.kind_changed = before.kind != after.kind;
  r.saddle_before = before.saddle;
  r.saddle_after = after.saddle;
  r.saddle_moved = before.saddle != after.saddle;
  return r;
}

}  // namespace strategem
