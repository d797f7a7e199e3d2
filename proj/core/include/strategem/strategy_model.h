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

// Scenario vocabulary: parameter schemes, asset and threat strategy
// profiles, per-period threat probabilities, and scenario validation.

#ifndef STRATEGEM_STRATEGY_MODEL_H_
#define STRATEGEM_STRATEGY_MODEL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "strategem/interval.h"
#include "strategem/matrix.h"

namespace strategem {

struct ParameterScheme {
  std::vector<std::string> names;
  // Index of the cost-like parameter, consumed by the entropy rule.
  std::optional<std::size_t> cost_index;

  friend bool operator==(const ParameterScheme&, const ParameterScheme&) = default;
};

enum class ScaleKind { kBinary, kReal, kSpan };

std::string_view scale_name(ScaleKind kind);

// One coded parameter: a bit, a real in [-1, 1], or an interval inside
// [-1, 1]. Ranges are checked by validate_scenario, not on construction.
class ParameterValue {
 public:
  static ParameterValue binary(int bit) {
    return ParameterValue(ScaleKind::kBinary, Interval::point(bit));
  }
  static ParameterValue real(double v) {
    return ParameterValue(ScaleKind::kReal, Interval::point(v));
  }
  static ParameterValue span(Interval v) {
    return ParameterValue(ScaleKind::kSpan, v);
  }

  ScaleKind kind() const noexcept { return kind_; }
  // Scalar value of a Binary or Real parameter.
  double scalar() const noexcept { return value_.lo(); }
  // Span value; scalars embed as point intervals.
  const Interval& span() const noexcept { return value_; }

  friend bool operator==(const ParameterValue&, const ParameterValue&) = default;

 private:
  ParameterValue(ScaleKind kind, Interval v) : kind_(kind), value_(v) {}

  ScaleKind kind_;
  Interval value_;
};

enum class Role { kAsset, kThreat };

struct StrategyProfile {
  std::string label;
  Role role = Role::kAsset;
  std::vector<ParameterValue> values;

  // Scale of the first value; Real for label-only profiles.
  ScaleKind scale() const;
  // Scalar values; requires a Binary or Real profile.
  std::vector<double> scalars() const;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

// Occurrence probability of each threat per period. Rows need not sum to
// one: each probability is completed only by its own non-occurrence.
struct ThreatTimeline {
  std::size_t periods = 0;
  std::map<std::string, std::vector<double>> pp;

  // Raw probabilities of the given threats in one period.
  // Throws IndexError / LabelError.
  std::vector<double> period_row(std::size_t period,
                                 const std::vector<std::string>& threats) const;

  friend bool operator==(const ThreatTimeline&, const ThreatTimeline&) = default;
};

// Explicit payoffs replacing derivation from vectors; rows follow asset
// order, columns threat order.
using PayoffOverrides = std::variant<Matrix<double>, Matrix<Interval>>;

struct Scenario {
  ParameterScheme scheme;
  std::vector<StrategyProfile> assets;
  std::vector<StrategyProfile> threats;
  std::optional<ThreatTimeline> timeline;
  std::optional<PayoffOverrides> overrides;

  std::vector<std::string> asset_labels() const;
  std::vector<std::string> threat_labels() const;
  // Common scale of all vector-carrying profiles, if any carry values.
  std::optional<ScaleKind> scale() const;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// Returns the scenario unchanged when every invariant holds. Profiles may
// omit their values entirely only when the scenario carries overrides.
// Throws MixedScaleError, DimensionError, LabelError or RangeError.
Scenario validate_scenario(const Scenario& raw);

// pp_i / sum(pp). Throws RangeError for entries outside [0, 1] and
// DegenerateError when every entry is zero.
std::vector<double> normalize_threat_probabilities(std::span<const double> pp_row);

}  // namespace strategem

#endif  // STRATEGEM_STRATEGY_MODEL_H_
