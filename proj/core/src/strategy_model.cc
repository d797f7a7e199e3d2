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

#include "strategem/strategy_model.h"

#include <cmath>
#include <numeric>
#include <sstream>
#include <type_traits>
#include <unordered_set>

#include "strategem/error.h"

namespace strategem {
namespace {

constexpr double kRealMin = -1.0;
constexpr double kRealMax = 1.0;

std::string role_name(Role role) {
  return role == Role::kAsset ? "asset" : "threat";
}

void check_scheme(const ParameterScheme& scheme) {
  if (scheme.names.empty()) {
    throw Error(ErrorKind::kDimension, "parameter scheme has no names", "names");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : scheme.names) {
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::kLabel, "duplicate parameter name '" + n + "'", n);
    }
  }
  if (scheme.cost_index && *scheme.cost_index >= scheme.names.size()) {
    throw Error(ErrorKind::kRange, "cost_index out of range", "cost_index");
  }
}

void check_value_range(const StrategyProfile& p, std::size_t i) {
  const ParameterValue& v = p.values[i];
  auto fail = [&](const std::string& why) {
    std::ostringstream msg;
    msg << role_name(p.role) << " '" << p.label << "' parameter " << i << ": "
        << why;
    throw Error(ErrorKind::kRange, msg.str(), p.label);
  };
  switch (v.kind()) {
    case ScaleKind::kBinary:
      if (v.scalar() != 0.0 && v.scalar() != 1.0) fail("binary value must be 0 or 1");
      break;
    case ScaleKind::kReal:
      if (!(v.scalar() >= kRealMin && v.scalar() <= kRealMax)) {
        fail("real value outside [-1, 1]");
      }
      break;
    case ScaleKind::kSpan:
      if (v.span().is_empty() || !v.span().is_bounded() ||
          v.span().lo() < kRealMin || v.span().hi() > kRealMax) {
        fail("interval value must be non-empty and inside [-1, 1]");
      }
      break;
  }
}

void check_profiles(const Scenario& s) {
  if (s.assets.empty() || s.threats.empty()) {
    throw Error(ErrorKind::kDimension,
                "scenario needs at least one asset and one threat",
                "threats");
  }
  const std::size_t n = s.scheme.names.size();
  std::unordered_set<std::string> labels;
  std::optional<ScaleKind> common;

  for (const auto* group : {&s.assets, &s.threats}) {
    const Role expected = group == &s.assets ? Role::kAsset : Role::kThreat;
    for (const auto& p : *group) {
      if (p.label.empty()) {
        throw Error(ErrorKind::kLabel, "profile with empty label");
      }
      if (!labels.insert(p.label).second) {
        throw Error(ErrorKind::kLabel, "duplicate strategy label '" + p.label + "'",
                    p.label);
      }
      if (p.role != expected) {
        throw Error(ErrorKind::kLabel,
                    "profile '" + p.label + "' listed as " + role_name(expected) +
                        " but has role " + role_name(p.role),
                    p.label);
      }
      if (p.values.empty() && s.overrides) continue;
      if (p.values.size() != n) {
        std::ostringstream msg;
        msg << role_name(p.role) << " '" << p.label << "' has " << p.values.size()
            << " values, scheme has " << n;
        throw Error(ErrorKind::kDimension, msg.str(), p.label);
      }
      for (const auto& v : p.values) {
        if (v.kind() != p.values.front().kind()) {
          throw Error(ErrorKind::kMixedScale,
                      "profile '" + p.label + "' mixes scale kinds", p.label);
        }
      }
      if (common && *common != p.scale()) {
        throw Error(ErrorKind::kMixedScale,
                    "profile '" + p.label + "' is " +
                        std::string(scale_name(p.scale())) + " but earlier profiles are " +
                        std::string(scale_name(*common)),
                    p.label);
      }
      common = p.scale();
      for (std::size_t i = 0; i < p.values.size(); ++i) check_value_range(p, i);
    }
  }
}

void check_timeline(const Scenario& s) {
  if (!s.timeline) return;
  const ThreatTimeline& t = *s.timeline;
  if (t.periods == 0) {
    throw Error(ErrorKind::kDimension, "timeline has no periods", "periods");
  }
  std::unordered_set<std::string> threats;
  for (const auto& p : s.threats) {
    threats.insert(p.label);
    if (!t.pp.contains(p.label)) {
      throw Error(ErrorKind::kLabel,
                  "timeline does not cover threat '" + p.label + "'", p.label);
    }
  }
  for (const auto& [label, row] : t.pp) {
    if (!threats.contains(label)) {
      throw Error(ErrorKind::kLabel, "timeline names unknown threat '" + label + "'",
                  label);
    }
    if (row.size() != t.periods) {
      std::ostringstream msg;
      msg << "timeline for '" << label << "' has " << row.size()
          << " entries, expected " << t.periods;
      throw Error(ErrorKind::kDimension, msg.str(), label);
    }
    for (double v : row) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorKind::kRange,
                    "timeline probability for '" + label + "' outside [0, 1]", label);
      }
    }
  }
}

void check_overrides(const Scenario& s) {
  if (!s.overrides) return;
  std::visit(
      [&](const auto& m) {
        if (m.rows() != s.assets.size() || m.cols() != s.threats.size()) {
          std::ostringstream msg;
          msg << "override matrix is " << m.rows() << "x" << m.cols()
              << ", scenario has " << s.assets.size() << " assets and "
              << s.threats.size() << " threats";
          throw Error(ErrorKind::kDimension, msg.str(), "overrides");
        }
        for (const auto& e : m.data()) {
          if constexpr (std::is_same_v<std::decay_t<decltype(e)>, Interval>) {
            if (!e.is_bounded()) {
              throw Error(ErrorKind::kRange,
                          "override intervals must be non-empty and bounded", "overrides");
            }
          } else if (!std::isfinite(e)) {
            throw Error(ErrorKind::kRange, "override payoffs must be finite", "overrides");
          }
        }
      },
      *s.overrides);
}

}  // namespace

std::string_view scale_name(ScaleKind kind) {
  switch (kind) {
    case ScaleKind::kBinary: return "binary";
    case ScaleKind::kReal: return "real";
    case ScaleKind::kSpan: return "interval";
  }
  return "unknown";
}

ScaleKind StrategyProfile::scale() const {
  return values.empty() ? ScaleKind::kReal : values.front().kind();
}

std::vector<double> StrategyProfile::scalars() const {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (v.kind() == ScaleKind::kSpan) {
      throw Error(ErrorKind::kScale,
                  "profile '" + label + "' holds intervals, not scalars", label);
    }
    out.push_back(v.scalar());
  }
  return out;
}

std::vector<double> ThreatTimeline::period_row(
    std::size_t period, const std::vector<std::string>& threats) const {
  if (period >= periods) {
    std::ostringstream msg;
    msg << "period " << period << " out of range (timeline has " << periods << ")";
    throw Error(ErrorKind::kIndex, msg.str());
  }
  std::vector<double> row;
  row.reserve(threats.size());
  for (const auto& label : threats) {
    auto it = pp.find(label);
    if (it == pp.end() || it->second.size() <= period) {
      throw Error(ErrorKind::kLabel, "timeline does not cover threat '" + label + "'",
                  label);
    }
    row.push_back(it->second[period]);
  }
  return row;
}

std::vector<std::string> Scenario::asset_labels() const {
  std::vector<std::string> out;
  for (const auto& p : assets) out.push_back(p.label);
  return out;
}

std::vector<std::string> Scenario::threat_labels() const {
  std::vector<std::string> out;
  for (const auto& p : threats) out.push_back(p.label);
  return out;
}

std::optional<ScaleKind> Scenario::scale() const {
  for (const auto* group : {&assets, &threats})
    for (const auto& p : *group)
      if (!p.values.empty()) return p.scale();
  return std::nullopt;
}

Scenario validate_scenario(const Scenario& raw) {
  check_scheme(raw.scheme);
  check_profiles(raw);
  check_timeline(raw);
  check_overrides(raw);
  return raw;
}

std::vector<double> normalize_threat_probabilities(std::span<const double> pp_row) {
  double total = 0.0;
  for (double v : pp_row) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw Error(ErrorKind::kRange, "threat probability outside [0, 1]");
    }
    total += v;
  }
  if (total <= 0.0) {
    throw Error(ErrorKind::kDegenerate,
                "cannot normalize threat probabilities that are all zero");
  }
  std::vector<double> out(pp_row.begin(), pp_row.end());
  for (double& v : out) v /= total;
  return out;
}

}  // namespace strategem
