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

#include "strategem/solver.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "strategem/error.h"
#include "strategem/payoff.h"
#include "strategem/simplex.h"

namespace strategem {
namespace {

// Payoffs closer than this compare as equal.
constexpr double kTie = 1e-12;
// Feasibility / optimality tolerance for the LP and the oddments check.
constexpr double kLpTolerance = 1e-9;

struct Comparison {
  bool dominates = false;
  bool strict = false;
};

// Does `better` dominate `worse`, where larger is better?
Comparison compare(const std::vector<double>& better, const std::vector<double>& worse,
                   Dominance mode) {
  bool all_strict = true;
  bool any_strict = false;
  for (std::size_t k = 0; k < better.size(); ++k) {
    const double d = better[k] - worse[k];
    if (d < -kTie) return {};
    if (d > kTie) {
      any_strict = true;
    } else {
      all_strict = false;
    }
  }
  const bool ok = mode == Dominance::kStrict ? all_strict : any_strict;
  return {ok, all_strict};
}

std::vector<double> negated(std::vector<double> v) {
  for (double& x : v) x = -x;
  return v;
}

double sum(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0);
}

// Dominated lines of one kind; `lines` are oriented so that larger is better
// for the player owning them.
void collect(const std::vector<std::vector<double>>& lines,
             const std::vector<std::string>& labels, Line kind, Dominance mode,
             std::vector<Elimination>& out) {
  for (std::size_t target = 0; target < lines.size(); ++target) {
    std::optional<std::size_t> best;
    bool best_strict = false;
    for (std::size_t other = 0; other < lines.size(); ++other) {
      if (other == target) continue;
      const Comparison c = compare(lines[other], lines[target], mode);
      if (!c.dominates) continue;
      if (!best || sum(lines[other]) > sum(lines[*best])) {
        best = other;
        best_strict = c.strict;
      }
    }
    if (best) {
      out.push_back({kind, labels[target], labels[*best],
                     best_strict ? Dominance::kStrict : Dominance::kWeak});
    }
  }
}

struct IndexReduction {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  ReductionTrace trace;
};

IndexReduction reduce_indices(const PayoffMatrix& matrix, Dominance mode) {
  IndexReduction r;
  r.rows.resize(matrix.rows());
  r.cols.resize(matrix.cols());
  std::iota(r.rows.begin(), r.rows.end(), 0);
  std::iota(r.cols.begin(), r.cols.end(), 0);
  for (;;) {
    const PayoffMatrix current = matrix.select(r.rows, r.cols);
    const auto candidates = find_dominated(current, mode);
    if (candidates.empty()) break;
    const Elimination& e = candidates.front();
    if (e.line == Line::kRow) {
      r.rows.erase(r.rows.begin() + *current.row_index(e.label));
    } else {
      r.cols.erase(r.cols.begin() + *current.col_index(e.label));
    }
    r.trace.push_back(e);
  }
  return r;
}

void require_nonempty(const PayoffMatrix& m) {
  m.check_shape();
  if (m.rows() == 0 || m.cols() == 0) {
    throw Error(ErrorKind::kDimension, "payoff matrix is empty");
  }
}

GameSolution pure_solution(const PayoffMatrix& m, std::size_t r, std::size_t c) {
  GameSolution s;
  s.value = m.at(r, c);
  s.row_labels = m.row_labels;
  s.col_labels = m.col_labels;
  s.row_strategy.assign(m.rows(), 0.0);
  s.col_strategy.assign(m.cols(), 0.0);
  s.row_strategy[r] = 1.0;
  s.col_strategy[c] = 1.0;
  s.kind = SolutionKind::kPureSaddle;
  s.saddle = Cell{m.row_labels[r], m.col_labels[c]};
  return s;
}

std::optional<std::size_t> unit_index(const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] >= 1.0 - kLpTolerance) return i;
  }
  return std::nullopt;
}

// Marks a solution pure when both strategies are unit vectors.
void classify(GameSolution& s) {
  const auto r = unit_index(s.row_strategy);
  const auto c = unit_index(s.col_strategy);
  if (r && c) {
    s.kind = SolutionKind::kPureSaddle;
    s.saddle = Cell{s.row_labels[*r], s.col_labels[*c]};
  } else {
    s.kind = SolutionKind::kMixed;
    s.saddle.reset();
  }
}

std::vector<double> normalized(std::vector<double> v) {
  const double total = sum(v);
  for (double& x : v) x /= total;
  return v;
}

}  // namespace

std::string_view dominance_name(Dominance mode) {
  return mode == Dominance::kStrict ? "strict" : "weak";
}

Dominance parse_dominance(std::string_view name) {
  if (name == "weak") return Dominance::kWeak;
  if (name == "strict") return Dominance::kStrict;
  throw Error(ErrorKind::kParse,
              "unknown dominance mode '" + std::string(name) + "' (expected weak or strict)");
}

std::string_view kind_name(SolutionKind kind) {
  return kind == SolutionKind::kPureSaddle ? "pure_saddle" : "mixed";
}

std::string Elimination::describe() const {
  std::ostringstream out;
  out << (line == Line::kRow ? "row " : "column ") << label << " eliminated: "
      << (strength == Dominance::kStrict ? "strictly" : "weakly") << " dominated by "
      << dominated_by;
  return out.str();
}

std::vector<Elimination> find_dominated(const PayoffMatrix& matrix, Dominance mode) {
  require_nonempty(matrix);
  std::vector<Elimination> out;
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < matrix.rows(); ++i) rows.push_back(matrix.entries.row(i));
  collect(rows, matrix.row_labels, Line::kRow, mode, out);

  // The column player minimizes, so compare negated columns.
  std::vector<std::vector<double>> cols;
  for (std::size_t j = 0; j < matrix.cols(); ++j) {
    cols.push_back(negated(matrix.entries.col(j)));
  }
  collect(cols, matrix.col_labels, Line::kColumn, mode, out);
  return out;
}

Reduction reduce(const PayoffMatrix& matrix, Dominance mode) {
  require_nonempty(matrix);
  IndexReduction r = reduce_indices(matrix, mode);
  return {matrix.select(r.rows, r.cols), std::move(r.trace)};
}

std::optional<SaddlePoint> saddle_point(const PayoffMatrix& matrix) {
  require_nonempty(matrix);
  std::vector<double> row_min(matrix.rows(), Interval::kInf);
  std::vector<double> col_max(matrix.cols(), -Interval::kInf);
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      row_min[i] = std::min(row_min[i], matrix.at(i, j));
      col_max[j] = std::max(col_max[j], matrix.at(i, j));
    }
  }
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      const double v = matrix.at(i, j);
      if (v <= row_min[i] + kTie && v >= col_max[j] - kTie) {
        return SaddlePoint{{matrix.row_labels[i], matrix.col_labels[j]}, v};
      }
    }
  }
  return std::nullopt;
}

GameSolution solve_2x2(const PayoffMatrix& matrix) {
  require_nonempty(matrix);
  if (matrix.rows() != 2 || matrix.cols() != 2) {
    throw Error(ErrorKind::kDimension, "solve_2x2 needs a 2x2 matrix");
  }
  const double a = matrix.at(0, 0), b = matrix.at(0, 1);
  const double c = matrix.at(1, 0), d = matrix.at(1, 1);

  // Each player's oddment for a line is the absolute difference of the
  // opposite line.
  const double p1 = std::abs(d - c), p2 = std::abs(a - b);
  const double q1 = std::abs(d - b), q2 = std::abs(a - c);
  const double scale = 1.0 + std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
  if (p1 + p2 > kTie && q1 + q2 > kTie) {
    const double x1 = p1 / (p1 + p2), x2 = p2 / (p1 + p2);
    const double y1 = q1 / (q1 + q2), y2 = q2 / (q1 + q2);
    const double vs_col1 = x1 * a + x2 * c;
    const double vs_col2 = x1 * b + x2 * d;
    const double vs_row1 = y1 * a + y2 * b;
    const double vs_row2 = y1 * c + y2 * d;
    const double tol = kLpTolerance * scale;
    if (std::abs(vs_col1 - vs_col2) <= tol && std::abs(vs_row1 - vs_row2) <= tol &&
        std::abs(vs_col1 - vs_row1) <= tol) {
      GameSolution s;
      s.row_labels = matrix.row_labels;
      s.col_labels = matrix.col_labels;
      s.row_strategy = {x1, x2};
      s.col_strategy = {y1, y2};
      s.value = expected_payoff(matrix, s.row_strategy, s.col_strategy);
      classify(s);
      return s;
    }
  }
  const auto saddle = saddle_point(matrix);
  if (!saddle) {
    throw Error(ErrorKind::kDegenerate, "oddments vanished on a saddle-free 2x2 game");
  }
  return pure_solution(matrix, *matrix.row_index(saddle->cell.row),
                       *matrix.col_index(saddle->cell.col));
}

GameSolution solve_lp(const PayoffMatrix& matrix) {
  require_nonempty(matrix);
  const double lowest = *std::min_element(matrix.entries.data().begin(),
                                          matrix.entries.data().end());
  const double shift = 1.0 + std::max(0.0, -lowest);
  Matrix<double> shifted = matrix.entries;
  for (std::size_t i = 0; i < shifted.rows(); ++i)
    for (std::size_t j = 0; j < shifted.cols(); ++j) shifted(i, j) += shift;

  const PackingSolution lp = solve_packing_lp(shifted, kLpTolerance);
  if (!(lp.objective > 0.0)) {
    throw Error(ErrorKind::kNumericalFailure, "simplex returned a non-positive objective");
  }
  GameSolution s;
  s.row_labels = matrix.row_labels;
  s.col_labels = matrix.col_labels;
  s.col_strategy = normalized(lp.primal);
  s.row_strategy = normalized(lp.dual);
  s.value = 1.0 / lp.objective - shift;
  classify(s);
  return s;
}

GameSolution solve(const PayoffMatrix& matrix, Dominance mode) {
  require_nonempty(matrix);
  IndexReduction r = reduce_indices(matrix, mode);
  const PayoffMatrix reduced = matrix.select(r.rows, r.cols);

  GameSolution inner;
  if (reduced.rows() == 1 && reduced.cols() == 1) {
    inner = pure_solution(reduced, 0, 0);
  } else if (reduced.rows() == 2 && reduced.cols() == 2) {
    inner = solve_2x2(reduced);
  } else if (const auto saddle = saddle_point(reduced)) {
    inner = pure_solution(reduced, *reduced.row_index(saddle->cell.row),
                          *reduced.col_index(saddle->cell.col));
  } else {
    inner = solve_lp(reduced);
  }

  GameSolution s;
  s.value = inner.value;
  s.row_labels = matrix.row_labels;
  s.col_labels = matrix.col_labels;
  s.row_strategy.assign(matrix.rows(), 0.0);
  s.col_strategy.assign(matrix.cols(), 0.0);
  for (std::size_t i = 0; i < r.rows.size(); ++i) s.row_strategy[r.rows[i]] = inner.row_strategy[i];
  for (std::size_t j = 0; j < r.cols.size(); ++j) s.col_strategy[r.cols[j]] = inner.col_strategy[j];
  s.kind = inner.kind;
  s.saddle = inner.saddle;
  s.trace = std::move(r.trace);
  return s;
}

double expected_payoff(const PayoffMatrix& matrix, const std::vector<double>& row_strategy,
                       const std::vector<double>& col_strategy) {
  if (row_strategy.size() != matrix.rows() || col_strategy.size() != matrix.cols()) {
    throw Error(ErrorKind::kDimension, "strategy length does not match the matrix");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    for (std::size_t j = 0; j < matrix.cols(); ++j)
      total += row_strategy[i] * matrix.at(i, j) * col_strategy[j];
  return total;
}

ValueBounds interval_game_bounds(const IntervalPayoffMatrix& matrix, Dominance mode) {
  for (const auto& e : matrix.entries.data()) {
    if (!e.is_bounded()) {
      throw Error(ErrorKind::kRange, "interval game entries must be non-empty and bounded");
    }
  }
  return {solve(lower_matrix(matrix), mode).value, solve(upper_matrix(matrix), mode).value};
}

}  // namespace strategem
