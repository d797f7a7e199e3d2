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

#include "strategem/payoff.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "strategem/error.h"

namespace strategem {
namespace {

void require_scalar_profiles(const Scenario& s, const char* rule) {
  if (s.scale() == ScaleKind::kSpan) {
    throw Error(ErrorKind::kScale, std::string("the ") + rule +
                                       " rule needs binary or real profiles; "
                                       "use the interval rule for interval values");
  }
}

const Matrix<double>* real_overrides(const Scenario& s, const char* rule) {
  if (!s.overrides) return nullptr;
  if (const auto* m = std::get_if<Matrix<double>>(&*s.overrides)) return m;
  throw Error(ErrorKind::kScale, std::string("interval overrides cannot feed the ") +
                                     rule + " rule");
}

void require_values(const StrategyProfile& p) {
  if (p.values.empty()) {
    throw Error(ErrorKind::kDimension,
                "profile '" + p.label + "' has no parameter values", p.label);
  }
}

// Cost vector applied to one profile's terms.
std::vector<double> profile_costs(const Scenario& s, const StrategyProfile& p,
                                  const EntropyConfig& config) {
  const std::size_t n = p.values.size();
  std::vector<double> costs =
      config.costs.empty() ? std::vector<double>(n, 1.0) : config.costs;
  if (config.use_scheme_cost) {
    if (!s.scheme.cost_index) {
      throw Error(ErrorKind::kConfig, "use_scheme_cost set but the scheme has no cost_index");
    }
    const double scale = p.values[*s.scheme.cost_index].scalar();
    if (!(scale > 0.0)) {
      throw Error(ErrorKind::kConfig,
                  "profile '" + p.label + "' has a non-positive cost parameter", p.label);
    }
    for (double& c : costs) c *= scale;
  }
  return costs;
}

double profile_entropy(const Scenario& s, const StrategyProfile& p,
                       const EntropyConfig& config) {
  require_values(p);
  const auto probs = entropy_probabilities(p.scalars(), config.probability_floor);
  EntropyConfig bound = config;
  bound.costs = profile_costs(s, p, config);
  return entropy_score(probs, bound);
}

}  // namespace

std::string_view rule_name(PayoffRule rule) {
  switch (rule) {
    case PayoffRule::kDiff: return "diff";
    case PayoffRule::kEntropy: return "entropy";
    case PayoffRule::kInterval: return "interval";
  }
  return "diff";
}

PayoffRule parse_rule(std::string_view name) {
  if (name == "diff") return PayoffRule::kDiff;
  if (name == "entropy") return PayoffRule::kEntropy;
  if (name == "interval") return PayoffRule::kInterval;
  throw Error(ErrorKind::kParse, "unknown rule '" + std::string(name) +
                                     "' (expected diff, entropy or interval)");
}

double diff_payoff(std::span<const double> asset_values,
                   std::span<const double> threat_values) {
  if (asset_values.size() != threat_values.size()) {
    std::ostringstream msg;
    msg << "cannot compare vectors of length " << asset_values.size() << " and "
        << threat_values.size();
    throw Error(ErrorKind::kDimension, msg.str());
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < asset_values.size(); ++i) {
    sum += asset_values[i] - threat_values[i];
  }
  return sum;
}

PayoffMatrix build_diff_matrix(const Scenario& scenario) {
  PayoffMatrix out{scenario.asset_labels(), scenario.threat_labels(), {}};
  if (const auto* m = real_overrides(scenario, "diff")) {
    out.entries = *m;
    return out;
  }
  require_scalar_profiles(scenario, "diff");
  out.entries = Matrix<double>(scenario.assets.size(), scenario.threats.size());
  for (std::size_t i = 0; i < scenario.assets.size(); ++i) {
    require_values(scenario.assets[i]);
    const auto a = scenario.assets[i].scalars();
    for (std::size_t j = 0; j < scenario.threats.size(); ++j) {
      require_values(scenario.threats[j]);
      out.entries(i, j) = diff_payoff(a, scenario.threats[j].scalars());
    }
  }
  return out;
}

std::vector<double> entropy_probabilities(std::span<const double> raw,
                                          double probability_floor) {
  if (!(probability_floor > 0.0 && probability_floor < 1.0)) {
    throw Error(ErrorKind::kConfig, "probability floor must lie in (0, 1)");
  }
  std::vector<double> out(raw.begin(), raw.end());
  double total = 0.0;
  for (double& v : out) {
    if (!(v > 0.0)) v = probability_floor;
    total += v;
  }
  for (double& v : out) v /= total;
  return out;
}

double entropy_score(std::span<const double> probabilities,
                     const EntropyConfig& config) {
  if (!config.costs.empty() && config.costs.size() != probabilities.size()) {
    std::ostringstream msg;
    msg << "entropy cost vector has " << config.costs.size() << " entries for "
        << probabilities.size() << " parameters";
    throw Error(ErrorKind::kConfig, msg.str());
  }
  for (double c : config.costs) {
    if (!(c > 0.0)) throw Error(ErrorKind::kConfig, "entropy costs must be positive");
  }
  double score = 0.0;
  for (std::size_t i = 0; i < probabilities.size(); ++i) {
    const double p = probabilities[i];
    if (!(p > 0.0 && p <= 1.0)) {
      throw Error(ErrorKind::kRange, "entropy probabilities must lie in (0, 1]");
    }
    const double cost = config.costs.empty() ? 1.0 : config.costs[i];
    score -= (p / cost) * std::log2(p);
  }
  return score;
}

PayoffMatrix build_entropy_matrix(const Scenario& scenario,
                                  const EntropyConfig& config) {
  PayoffMatrix out{scenario.asset_labels(), scenario.threat_labels(), {}};
  if (const auto* m = real_overrides(scenario, "entropy")) {
    out.entries = *m;
    return out;
  }
  require_scalar_profiles(scenario, "entropy");
  std::vector<double> asset_scores;
  for (const auto& p : scenario.assets) {
    asset_scores.push_back(profile_entropy(scenario, p, config));
  }
  out.entries = Matrix<double>(scenario.assets.size(), scenario.threats.size());
  for (std::size_t j = 0; j < scenario.threats.size(); ++j) {
    const double threat_score = profile_entropy(scenario, scenario.threats[j], config);
    for (std::size_t i = 0; i < scenario.assets.size(); ++i) {
      out.entries(i, j) = asset_scores[i] - threat_score;
    }
  }
  return out;
}

IntervalPayoffMatrix build_interval_matrix(const Scenario& scenario) {
  IntervalPayoffMatrix out{scenario.asset_labels(), scenario.threat_labels(), {}};
  if (scenario.overrides) {
    if (const auto* m = std::get_if<Matrix<Interval>>(&*scenario.overrides)) {
      out.entries = *m;
    } else {
      const auto& real = std::get<Matrix<double>>(*scenario.overrides);
      out.entries = Matrix<Interval>(real.rows(), real.cols());
      for (std::size_t i = 0; i < real.rows(); ++i)
        for (std::size_t j = 0; j < real.cols(); ++j)
          out.entries(i, j) = Interval::point(real(i, j));
    }
    return out;
  }
  if (scenario.scale() != ScaleKind::kSpan) {
    throw Error(ErrorKind::kScale,
                "the interval rule needs interval profiles or interval overrides");
  }
  out.entries = Matrix<Interval>(scenario.assets.size(), scenario.threats.size());
  for (std::size_t i = 0; i < scenario.assets.size(); ++i) {
    const auto& a = scenario.assets[i];
    require_values(a);
    for (std::size_t j = 0; j < scenario.threats.size(); ++j) {
      const auto& t = scenario.threats[j];
      require_values(t);
      if (a.values.size() != t.values.size()) {
        throw Error(ErrorKind::kDimension, "profiles '" + a.label + "' and '" +
                                               t.label + "' differ in length");
      }
      Interval sum = Interval::point(0.0);
      for (std::size_t k = 0; k < a.values.size(); ++k) {
        sum = add(sum, sub(a.values[k].span(), t.values[k].span()));
      }
      out.entries(i, j) = sum;
    }
  }
  return out;
}

PayoffMatrix time_weighted_matrix(const PayoffMatrix& base,
                                  const ThreatTimeline& timeline,
                                  std::size_t period) {
  const auto row = timeline.period_row(period, base.col_labels);
  const auto weights = normalize_threat_probabilities(row);
  // A uniform row is the identity exactly, not up to rounding of p/sum * n.
  const bool uniform = std::all_of(row.begin(), row.end(),
                                   [&](double p) { return p == row.front(); });
  PayoffMatrix out = base;
  const double columns = static_cast<double>(base.cols());
  for (std::size_t j = 0; j < base.cols(); ++j) {
    const double scale = uniform ? 1.0 : weights[j] * columns;
    for (std::size_t i = 0; i < base.rows(); ++i) out.entries(i, j) *= scale;
  }
  return out;
}

namespace {

template <typename F>
PayoffMatrix map_entries(const IntervalPayoffMatrix& m, F f) {
  PayoffMatrix out{m.row_labels, m.col_labels, Matrix<double>(m.rows(), m.cols())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.entries(i, j) = f(m.at(i, j));
  return out;
}

}  // namespace

PayoffMatrix lower_matrix(const IntervalPayoffMatrix& m) {
  return map_entries(m, [](const Interval& x) { return x.lo(); });
}

PayoffMatrix upper_matrix(const IntervalPayoffMatrix& m) {
  return map_entries(m, [](const Interval& x) { return x.hi(); });
}

PayoffMatrix midpoint_matrix(const IntervalPayoffMatrix& m) {
  return map_entries(m, [](const Interval& x) { return x.midpoint(); });
}

}  // namespace strategem
