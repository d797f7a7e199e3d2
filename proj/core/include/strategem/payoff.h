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

// Payoff matrices from strategy vectors: difference, profit-entropy and
// interval rules, plus chronological threat weighting.

#ifndef STRATEGEM_PAYOFF_H_
#define STRATEGEM_PAYOFF_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "strategem/matrix.h"
#include "strategem/strategy_model.h"

namespace strategem {

enum class PayoffRule { kDiff, kEntropy, kInterval };

std::string_view rule_name(PayoffRule rule);
// Throws ParseError for anything but "diff", "entropy", "interval".
PayoffRule parse_rule(std::string_view name);

struct EntropyConfig {
  // One positive cost per parameter; empty means all ones.
  std::vector<double> costs;
  // Substituted for non-positive entries before logarithms are taken.
  double probability_floor = 1e-9;
  // Scale every term's cost by the profile's own value at the scheme's
  // cost_index parameter.
  bool use_scheme_cost = false;

  friend bool operator==(const EntropyConfig&, const EntropyConfig&) = default;
};

// sum_i (asset_i - threat_i). Throws DimensionError on length mismatch.
double diff_payoff(std::span<const double> asset_values,
                   std::span<const double> threat_values);

// Entry (i, j) = diff_payoff(asset_i, threat_j). Real overrides are used
// verbatim. Throws ScaleError for interval profiles or interval overrides.
PayoffMatrix build_diff_matrix(const Scenario& scenario);

// Raw parameter vector -> probability simplex. Non-positive entries are
// replaced by the floor before renormalizing.
std::vector<double> entropy_probabilities(std::span<const double> raw,
                                          double probability_floor);

// sum_i -(v_i / cost_i) * log2(v_i) over a normalized vector.
// Throws ConfigError on non-positive costs or a cost vector of the wrong
// length, RangeError on entries outside (0, 1].
double entropy_score(std::span<const double> probabilities,
                     const EntropyConfig& config);

// Entry (i, j) = score(asset_i) - score(threat_j).
PayoffMatrix build_entropy_matrix(const Scenario& scenario,
                                  const EntropyConfig& config);

// Entry (i, j) = sum_k sub(asset_i[k], threat_j[k]). Interval overrides are
// used verbatim and real overrides embed as point intervals.
// Throws ScaleError for scalar profiles without overrides.
IntervalPayoffMatrix build_interval_matrix(const Scenario& scenario);

// Column j scaled by columns * w_j, where w is the period's normalized
// threat probability row; a uniform row leaves the matrix unchanged.
// Throws IndexError on a bad period, LabelError on uncovered columns,
// DegenerateError on an all-zero row.
PayoffMatrix time_weighted_matrix(const PayoffMatrix& base,
                                  const ThreatTimeline& timeline,
                                  std::size_t period);

// Entry-wise lower / upper endpoints and midpoints.
PayoffMatrix lower_matrix(const IntervalPayoffMatrix& m);
PayoffMatrix upper_matrix(const IntervalPayoffMatrix& m);
PayoffMatrix midpoint_matrix(const IntervalPayoffMatrix& m);

}  // namespace strategem

#endif  // STRATEGEM_PAYOFF_H_
