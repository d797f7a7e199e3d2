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

#ifndef STRATEGEM_SIMPLEX_H_
#define STRATEGEM_SIMPLEX_H_

#include <cstddef>
#include <vector>

#include "strategem/matrix.h"

namespace strategem {

struct PackingSolution {
  double objective = 0.0;
  // Primal variables, one per column of the constraint matrix.
  std::vector<double> primal;
  // Dual prices, one per constraint row.
  std::vector<double> dual;
  std::size_t pivots = 0;
};

// Dense tableau simplex for the packing LP
//
//   maximize  sum_j w_j   s.t.  A w <= 1,  w >= 0
//
// with A strictly positive, so the origin is feasible and the optimum is
// bounded. Bland's rule prevents cycling. Throws NumericalFailureError when
// the pivot budget is exhausted or A has a non-positive entry.
PackingSolution solve_packing_lp(const Matrix<double>& a,
                                 double tolerance = 1e-9);

}  // namespace strategem

#endif  // STRATEGEM_SIMPLEX_H_
