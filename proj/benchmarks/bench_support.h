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

#ifndef STRATEGEM_BENCHMARKS_BENCH_SUPPORT_H_
#define STRATEGEM_BENCHMARKS_BENCH_SUPPORT_H_

#include <random>
#include <string>

#include "strategem/matrix.h"

namespace strategem::bench {

inline PayoffMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1, 1);
  PayoffMatrix m;
  for (std::size_t i = 0; i < n; ++i) {
    m.row_labels.push_back("R" + std::to_string(i));
    m.col_labels.push_back("C" + std::to_string(i));
  }
  m.entries = Matrix<double>(n, n);
  for (double& v : m.entries.data()) v = u(rng);
  return m;
}

inline IntervalPayoffMatrix random_interval_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1, 1), w(0.05, 0.4);
  IntervalPayoffMatrix m;
  for (std::size_t i = 0; i < n; ++i) {
    m.row_labels.push_back("R" + std::to_string(i));
    m.col_labels.push_back("C" + std::to_string(i));
  }
  m.entries = Matrix<Interval>(n, n);
  for (auto& e : m.entries.data()) {
    const double lo = u(rng);
    e = Interval(lo, lo + w(rng));
  }
  return m;
}

}  // namespace strategem::bench

#endif  // STRATEGEM_BENCHMARKS_BENCH_SUPPORT_H_
