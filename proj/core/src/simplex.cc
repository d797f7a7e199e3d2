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

#include "strategem/simplex.h"

#include <algorithm>
#include <limits>

#include "strategem/error.h"

namespace strategem {

PackingSolution solve_packing_lp(const Matrix<double>& a, double tolerance) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m == 0 || n == 0) {
    throw Error(ErrorKind::kNumericalFailure, "empty constraint matrix");
  }
  for (double v : a.data()) {
    if (!(v > 0.0)) {
      throw Error(ErrorKind::kNumericalFailure,
                  "packing LP needs a strictly positive constraint matrix");
    }
  }

  // Tableau columns: n structural, m slack, then the right-hand side.
  // Row m is the objective row holding reduced costs (negated objective).
  const std::size_t width = n + m + 1;
  const std::size_t rhs = n + m;
  Matrix<double> t(m + 1, width, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t(i, j) = a(i, j);
    t(i, n + i) = 1.0;
    t(i, rhs) = 1.0;
  }
  for (std::size_t j = 0; j < n; ++j) t(m, j) = -1.0;

  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  const std::size_t max_pivots = 50 * (m + n) + 1000;
  std::size_t pivots = 0;
  for (;;) {
    // Bland: lowest-index column with a negative reduced cost.
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j) {
      if (t(m, j) < -tolerance) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = m;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, enter) > tolerance) {
        const double ratio = t(i, rhs) / t(i, enter);
        if (ratio < best_ratio - tolerance ||
            (ratio <= best_ratio + tolerance && leave < m && basis[i] < basis[leave])) {
          best_ratio = std::min(best_ratio, ratio);
          leave = i;
        }
      }
    }
    if (leave == m) {
      throw Error(ErrorKind::kNumericalFailure, "packing LP reported unbounded");
    }
    if (++pivots > max_pivots) {
      throw Error(ErrorKind::kNumericalFailure, "simplex did not converge");
    }

    const double pivot = t(leave, enter);
    for (std::size_t j = 0; j < width; ++j) t(leave, j) /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const double factor = t(i, enter);
      if (factor == 0.0) continue;
      for (std::size_t j = 0; j < width; ++j) t(i, j) -= factor * t(leave, j);
    }
    basis[leave] = enter;
  }

  PackingSolution out;
  out.pivots = pivots;
  out.objective = t(m, rhs);
  out.primal.assign(n, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) out.primal[basis[i]] = std::max(0.0, t(i, rhs));
  }
  out.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.dual[i] = std::max(0.0, t(m, n + i));
  return out;
}

}  // namespace strategem
