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

// Zero-sum matrix game solver. The row player (assets) maximizes, the
// column player (threats) minimizes.
//
// The full pipeline is
//
//   reduce (iterated dominance) -> 1x1: pure
//                               -> 2x2: oddments, saddle fallback
//                               -> otherwise: saddle point, else simplex LP
//
// and reports strategies over the original labels with zero weight on
// eliminated lines.

#ifndef STRATEGEM_SOLVER_H_
#define STRATEGEM_SOLVER_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strategem/matrix.h"

namespace strategem {

enum class Dominance { kWeak, kStrict };
enum class Line { kRow, kColumn };

std::string_view dominance_name(Dominance mode);
// Throws ParseError for anything but "weak" and "strict".
Dominance parse_dominance(std::string_view name);

struct Elimination {
  Line line = Line::kRow;
  std::string label;
  std::string dominated_by;
  // Kind of the relationship itself: kStrict when every comparison is strict.
  Dominance strength = Dominance::kWeak;

  // e.g. "row B eliminated: weakly dominated by A"
  std::string describe() const;

  friend bool operator==(const Elimination&, const Elimination&) = default;
};

using ReductionTrace = std::vector<Elimination>;

struct Cell {
  std::string row;
  std::string col;
  friend bool operator==(const Cell&, const Cell&) = default;
};

struct SaddlePoint {
  Cell cell;
  double value = 0.0;
};

enum class SolutionKind { kPureSaddle, kMixed };

std::string_view kind_name(SolutionKind kind);

struct GameSolution {
  double value = 0.0;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  std::vector<double> row_strategy;
  std::vector<double> col_strategy;
  SolutionKind kind = SolutionKind::kMixed;
  // Set iff kind == kPureSaddle.
  std::optional<Cell> saddle;
  ReductionTrace trace;

  friend bool operator==(const GameSolution&, const GameSolution&) = default;
};

// Every dominated row (some other row >= it entrywise; Weak needs one strict
// inequality, Strict needs all) followed by every dominated column (some other
// column <= it). Each candidate names one dominator: the one with the best
// line sum, which is itself undominated; ties go to the lowest index.
std::vector<Elimination> find_dominated(const PayoffMatrix& matrix, Dominance mode);

struct Reduction {
  PayoffMatrix matrix;
  ReductionTrace trace;
};

// Removes the first candidate of find_dominated until none remain, so rows go
// before columns and lower indices first.
Reduction reduce(const PayoffMatrix& matrix, Dominance mode = Dominance::kWeak);

// Cell that is a minimum of its row and a maximum of its column; the lowest
// row index, then the lowest column index, wins.
std::optional<SaddlePoint> saddle_point(const PayoffMatrix& matrix);

// Oddments on a 2x2 game. When the oddments strategies do not equalize the
// payoffs, the game has a saddle point and that is returned instead.
// Throws DimensionError on a non-2x2 matrix.
GameSolution solve_2x2(const PayoffMatrix& matrix);

// Maximin via the packing LP after shifting payoffs by 1 + |min entry|; the
// column strategy is recovered from the primal, the row strategy from the
// duals. Throws NumericalFailureError if the simplex fails.
GameSolution solve_lp(const PayoffMatrix& matrix);

GameSolution solve(const PayoffMatrix& matrix, Dominance mode = Dominance::kWeak);

// Expected payoff of mixed strategies.
double expected_payoff(const PayoffMatrix& matrix, const std::vector<double>& row_strategy,
                       const std::vector<double>& col_strategy);

struct ValueBounds {
  double low = 0.0;
  double high = 0.0;
};

// Values of the all-lower and all-upper realizations.
ValueBounds interval_game_bounds(const IntervalPayoffMatrix& matrix,
                                 Dominance mode = Dominance::kWeak);

}  // namespace strategem

#endif  // STRATEGEM_SOLVER_H_
