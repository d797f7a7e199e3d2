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

#include "commands.h"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace strategem {
namespace {

PayoffRule rule_for(const ScenarioDocument& doc, const CommandOptions& opts) {
  return opts.rule.value_or(doc.rule);
}

Json period_json(const CommandOptions& opts) {
  return opts.period ? Json(*opts.period) : Json(nullptr);
}

// Scalar matrix for the diff / entropy rules, weighted by the requested period.
PayoffMatrix scalar_matrix(const ScenarioDocument& doc, PayoffRule rule,
                           const CommandOptions& opts) {
  PayoffMatrix m = rule == PayoffRule::kEntropy ? build_entropy_matrix(doc.scenario, doc.entropy)
                                                : build_diff_matrix(doc.scenario);
  if (opts.period) {
    if (!doc.scenario.timeline) {
      throw Error(ErrorKind::kConfig, "--period needs a scenario with a timeline", "timeline");
    }
    m = time_weighted_matrix(m, *doc.scenario.timeline, *opts.period);
  }
  return m;
}

IntervalPayoffMatrix interval_matrix(const ScenarioDocument& doc, const CommandOptions& opts) {
  if (opts.period) {
    throw Error(ErrorKind::kScale, "time weighting needs the diff or entropy rule", "rule");
  }
  return build_interval_matrix(doc.scenario);
}

Json header(const char* command, PayoffRule rule, const CommandOptions& opts) {
  return {{"command", command},
          {"rule", rule_name(rule)},
          {"dominance", dominance_name(opts.dominance)},
          {"period", period_json(opts)}};
}

// Text rendering of the machine reports.

std::string num(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  std::ostringstream out;
  out << v.get<double>();
  return out.str();
}

std::string cell_text(const Json& entry) {
  if (entry.is_array()) return "[" + num(entry[0]) + ", " + num(entry[1]) + "]";
  return num(entry);
}

void render_matrix(std::ostream& out, const Json& m) {
  std::size_t width = 1;
  for (const auto& r : m["rows"]) width = std::max(width, r.get<std::string>().size());
  std::size_t cell = 1;
  for (const auto& row : m["entries"])
    for (const auto& e : row) cell = std::max(cell, cell_text(e).size());
  for (const auto& c : m["cols"]) cell = std::max(cell, c.get<std::string>().size());

  out << std::setw(static_cast<int>(width)) << "";
  for (const auto& c : m["cols"]) {
    out << "  " << std::setw(static_cast<int>(cell)) << c.get<std::string>();
  }
  out << "\n";
  for (std::size_t i = 0; i < m["rows"].size(); ++i) {
    out << std::left << std::setw(static_cast<int>(width)) << m["rows"][i].get<std::string>()
        << std::right;
    for (const auto& e : m["entries"][i]) {
      out << "  " << std::setw(static_cast<int>(cell)) << cell_text(e);
    }
    out << "\n";
  }
}

std::string saddle_text(const Json& s) {
  if (s.is_null()) return "";
  return "(" + s["row"].get<std::string>() + "," + s["col"].get<std::string>() + ")";
}

void render_strategy(std::ostream& out, const char* name, const Json& labels,
                     const Json& probs) {
  out << name << ":";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out << " " << labels[i].get<std::string>() << "=" << num(probs[i]);
  }
  out << "\n";
}

void render_solution(std::ostream& out, const Json& s) {
  for (const auto& e : s["trace"]) out << "  " << e["text"].get<std::string>() << "\n";
  out << "value: " << num(s["value"]) << "\n";
  if (s["kind"] == "pure_saddle") {
    out << "solution: pure saddle at " << saddle_text(s["saddle"]) << "\n";
  } else {
    out << "solution: mixed\n";
  }
  render_strategy(out, "row strategy", s["rows"], s["row_strategy"]);
  render_strategy(out, "column strategy", s["cols"], s["col_strategy"]);
}

void render_header(std::ostream& out, const Json& r) {
  out << "rule: " << r["rule"].get<std::string>()
      << "  dominance: " << r["dominance"].get<std::string>();
  if (!r["period"].is_null()) out << "  period: " << r["period"].get<std::size_t>();
  out << "\n";
}

std::string build_text(const Json& r) {
  std::ostringstream out;
  render_header(out, r);
  render_matrix(out, r["matrix"]);
  return out.str();
}

std::string solve_text(const Json& r) {
  std::ostringstream out;
  render_header(out, r);
  render_matrix(out, r["matrix"]);
  if (r.contains("bounds")) {
    out << "value bounds: [" << num(r["bounds"]["low"]) << ", " << num(r["bounds"]["high"])
        << "]\nnominal (midpoint) game:\n";
  }
  render_solution(out, r["solution"]);
  if (r["withdraw"].get<bool>()) {
    out << "negative game value: change the strategy or withdraw\n";
  }
  return out.str();
}

// Columns separated by single spaces so the table feeds plotting tools.
std::string timeline_text(const Json& r) {
  std::ostringstream out;
  out << "# period value kind saddle\n";
  for (const auto& p : r["series"]["periods"]) {
    out << p["period"].get<std::size_t>() << " " << num(p["value"]) << " "
        << p["kind"].get<std::string>();
    if (!p["saddle"].is_null()) out << " " << saddle_text(p["saddle"]);
    out << "\n";
  }
  return out.str();
}

std::string whatif_text(const Json& r) {
  std::ostringstream out;
  render_header(out, r);
  if (r["mode"] == "sensitivity") {
    const Json& s = r["sensitivity"];
    out << "entry (" << s["row"].get<std::string>() << "," << s["col"].get<std::string>()
        << ") " << (s["delta"].get<double>() >= 0 ? "+" : "") << num(s["delta"]) << "\n"
        << "baseline: " << num(s["baseline"]) << "\n"
        << "achieved: " << num(s["solution"]["value"]) << "\n"
        << "change: " << num(s["change"]) << "\n";
    render_solution(out, s["solution"]);
  } else {
    const Json& w = r["result"];
    out << "budget: " << (r["budget"].is_null() ? "unlimited" : num(r["budget"]))
        << "  step: " << num(r["step"]) << "\n"
        << "baseline: " << num(w["baseline"]) << "\n"
        << "achieved: " << num(w["achieved"]) << "\n"
        << "delta: " << num(w["delta"]) << "\n"
        << "realization:\n";
    render_matrix(out, w["realization"]);
  }
  return out.str();
}

using Builder = Json (*)(const ScenarioDocument&, const CommandOptions&);
using Renderer = std::string (*)(const Json&);

CommandResult run(std::string_view document, std::string_view source,
                  const CommandOptions& opts, Builder build, Renderer render,
                  bool signal_negative) {
  CommandResult result;
  try {
    const ScenarioDocument doc = parse_scenario_document(document);
    Json report;
    try {
      report = build(doc, opts);
    } catch (const DocumentError&) {
      throw;
    } catch (const Error& e) {
      throw anchor_error(document, e);
    }
    result.output = opts.format == OutputFormat::kMachine ? machine_text(report) : render(report);
    if (signal_negative && report["solution"]["value"].is_number() &&
        report["solution"]["value"].get<double>() < 0.0) {
      result.exit_code = kExitNegativeValue;
    }
  } catch (const DocumentError& e) {
    result.exit_code = kExitInvalid;
    result.error = e.anchored(source);
  }
  return result;
}

}  // namespace

Json build_report(const ScenarioDocument& doc, const CommandOptions& opts) {
  const PayoffRule rule = rule_for(doc, opts);
  Json r = header("build", rule, opts);
  if (rule == PayoffRule::kInterval) {
    r["matrix"] = interval_matrix(doc, opts);
  } else {
    r["matrix"] = scalar_matrix(doc, rule, opts);
  }
  return r;
}

Json solve_report(const ScenarioDocument& doc, const CommandOptions& opts) {
  const PayoffRule rule = rule_for(doc, opts);
  Json r = header("solve", rule, opts);
  GameSolution solution;
  if (rule == PayoffRule::kInterval) {
    const IntervalPayoffMatrix im = interval_matrix(doc, opts);
    const ValueBounds b = interval_game_bounds(im, opts.dominance);
    r["matrix"] = im;
    r["bounds"] = {{"low", b.low}, {"high", b.high}};
    solution = solve(midpoint_matrix(im), opts.dominance);
  } else {
    const PayoffMatrix m = scalar_matrix(doc, rule, opts);
    r["matrix"] = m;
    solution = solve(m, opts.dominance);
  }
  r["solution"] = solution;
  r["withdraw"] = solution.value < 0.0;
  return r;
}

Json timeline_report(const ScenarioDocument& doc, const CommandOptions& opts) {
  const PayoffRule rule = rule_for(doc, opts);
  ValueSeries series = timeline_values(doc.scenario, rule, doc.entropy, opts.dominance);
  if (opts.period) {
    if (*opts.period >= series.periods.size()) {
      throw Error(ErrorKind::kIndex, "period " + std::to_string(*opts.period) +
                                         " out of range (timeline has " +
                                         std::to_string(series.periods.size()) + ")",
                  "periods");
    }
    series.periods = {series.periods[*opts.period]};
  }
  Json r = header("timeline", rule, opts);
  r["series"] = series;
  return r;
}

Json whatif_report(const ScenarioDocument& doc, const CommandOptions& opts) {
  const PayoffRule rule = rule_for(doc, opts);
  Json r = header("whatif", rule, opts);
  if (opts.entry) {
    const PayoffMatrix m = rule == PayoffRule::kInterval
                               ? midpoint_matrix(interval_matrix(doc, opts))
                               : scalar_matrix(doc, rule, opts);
    r["mode"] = "sensitivity";
    r["sensitivity"] =
        sensitivity(m, opts.entry->first, opts.entry->second, opts.delta, opts.dominance);
    return r;
  }
  if (rule != PayoffRule::kInterval) {
    throw Error(ErrorKind::kScale, "budget search needs the interval rule", "rule");
  }
  const IntervalPayoffMatrix im = interval_matrix(doc, opts);
  r["mode"] = "search";
  r["budget"] = opts.budget ? Json(*opts.budget) : Json(nullptr);
  r["step"] = opts.step;
  r["result"] = optimize_within_intervals(im, opts.budget, opts.step, opts.dominance);
  return r;
}

std::string machine_text(const Json& report) { return report.dump(2) + "\n"; }

CommandResult cmd_build(std::string_view document, std::string_view source,
                        const CommandOptions& opts) {
  return run(document, source, opts, build_report, build_text, false);
}

CommandResult cmd_solve(std::string_view document, std::string_view source,
                        const CommandOptions& opts) {
  return run(document, source, opts, solve_report, solve_text, true);
}

CommandResult cmd_timeline(std::string_view document, std::string_view source,
                           const CommandOptions& opts) {
  return run(document, source, opts, timeline_report, timeline_text, false);
}

CommandResult cmd_whatif(std::string_view document, std::string_view source,
                         const CommandOptions& opts) {
  return run(document, source, opts, whatif_report, whatif_text, false);
}

}  // namespace strategem
