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

#include "document.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace strategem {
namespace {

Error parse_error(const std::string& message, const std::string& key) {
  return Error(ErrorKind::kParse, message, key);
}

int line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<int>(std::count(text.begin(), text.begin() + offset, '\n'));
}

std::string_view line_text(std::string_view text, std::size_t pos) {
  const std::size_t start = text.rfind('\n', pos == 0 ? 0 : pos - 1);
  const std::size_t begin = start == std::string_view::npos ? 0 : start + 1;
  const std::size_t end = text.find('\n', pos);
  return text.substr(begin, end == std::string_view::npos ? text.size() - begin : end - begin);
}

// Best guess at the line a failure is about: the profile line carrying the
// subject as its label, then any occurrence of the quoted subject, searched
// from `from` onwards.
int anchor_line(std::string_view text, const Error& e, std::size_t from) {
  std::string subject = e.subject();
  if (subject.empty()) {
    switch (e.kind()) {
      case ErrorKind::kScale: subject = "rule"; break;
      case ErrorKind::kConfig: subject = "entropy"; break;
      default: return line_at(text, from);
    }
  }
  const std::string quoted = Json(subject).dump();
  for (std::size_t start : {from, std::size_t{0}}) {
    for (std::size_t pos = text.find(quoted, start); pos != std::string_view::npos;
         pos = text.find(quoted, pos + 1)) {
      if (line_text(text, pos).find("\"label\"") != std::string_view::npos) {
        return line_at(text, pos);
      }
    }
    const std::size_t pos = text.find(quoted, start);
    if (pos != std::string_view::npos) return line_at(text, pos);
  }
  return line_at(text, from);
}

const Json& member(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw parse_error(std::string("missing \"") + key + "\"", key);
  }
  return obj.at(key);
}

double number(const Json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    if (v == "inf") return std::numeric_limits<double>::infinity();
    if (v == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw parse_error(where + ": expected a number", where);
}

Json number_json(double v) {
  if (std::isinf(v)) return v > 0 ? Json("inf") : Json("-inf");
  return Json(v);
}

std::string string_of(const Json& v, const std::string& where) {
  if (!v.is_string()) throw parse_error(where + ": expected a string", where);
  return v.get<std::string>();
}

Interval interval_of(const Json& v, const std::string& where) {
  if (v.is_null()) return Interval::empty();
  if (!v.is_array() || v.size() != 2) {
    throw parse_error(where + ": expected an interval [lo, hi]", where);
  }
  const double lo = number(v[0], where), hi = number(v[1], where);
  try {
    return Interval(lo, hi);
  } catch (const Error& e) {
    throw Error(e.kind(), where + ": " + e.what(), where);
  }
}

std::optional<ScaleKind> scale_of(const Json& obj, const std::string& where) {
  if (!obj.contains("scale")) return std::nullopt;
  const std::string s = string_of(obj.at("scale"), "scale");
  if (s == "binary") return ScaleKind::kBinary;
  if (s == "real") return ScaleKind::kReal;
  if (s == "interval") return ScaleKind::kSpan;
  throw parse_error(where + ": unknown scale '" + s + "' (expected binary, real or interval)",
                    "scale");
}

// Values are read under the profile's declared scale; a value of the other
// shape (pair vs number) is kept as such so validation reports the mix.
ParameterValue value_of(const Json& v, ScaleKind scale, const std::string& label) {
  if (v.is_array()) return ParameterValue::span(interval_of(v, label));
  const double x = number(v, label);
  switch (scale) {
    case ScaleKind::kBinary:
      if (x != 0.0 && x != 1.0) {
        throw Error(ErrorKind::kRange, "profile '" + label + "': binary value must be 0 or 1",
                    label);
      }
      return ParameterValue::binary(static_cast<int>(x));
    case ScaleKind::kReal:
    case ScaleKind::kSpan:
      return ParameterValue::real(x);
  }
  return ParameterValue::real(x);
}

std::vector<StrategyProfile> profiles_of(const Json& doc, const char* key, Role role,
                                         ScaleKind default_scale) {
  const Json& list = member(doc, key);
  if (!list.is_array()) throw parse_error(std::string("\"") + key + "\" must be a list", key);
  std::vector<StrategyProfile> out;
  for (const Json& p : list) {
    StrategyProfile profile;
    profile.role = role;
    profile.label = string_of(member(p, "label"), "label");
    const ScaleKind scale = scale_of(p, profile.label).value_or(default_scale);
    if (p.contains("values")) {
      const Json& values = p.at("values");
      if (!values.is_array()) {
        throw parse_error("profile '" + profile.label + "': values must be a list",
                          profile.label);
      }
      for (const Json& v : values) profile.values.push_back(value_of(v, scale, profile.label));
    }
    out.push_back(std::move(profile));
  }
  return out;
}

ParameterScheme scheme_of(const Json& doc) {
  const Json& s = member(doc, "scheme");
  ParameterScheme scheme;
  const Json& names = member(s, "names");
  if (!names.is_array()) throw parse_error("scheme names must be a list", "names");
  for (const Json& n : names) scheme.names.push_back(string_of(n, "names"));
  if (s.contains("cost_index") && !s.at("cost_index").is_null()) {
    const Json& c = s.at("cost_index");
    if (!c.is_number_unsigned()) {
      throw parse_error("cost_index must be a non-negative integer", "cost_index");
    }
    scheme.cost_index = c.get<std::size_t>();
  }
  return scheme;
}

ThreatTimeline timeline_of(const Json& t) {
  ThreatTimeline out;
  const Json& periods = member(t, "periods");
  if (!periods.is_number_unsigned()) {
    throw parse_error("periods must be a non-negative integer", "periods");
  }
  out.periods = periods.get<std::size_t>();
  const Json& pp = member(t, "pp");
  if (!pp.is_object()) throw parse_error("pp must map threat labels to lists", "pp");
  for (const auto& [label, row] : pp.items()) {
    if (!row.is_array()) throw parse_error("pp for '" + label + "' must be a list", label);
    std::vector<double> values;
    for (const Json& v : row) values.push_back(number(v, label));
    out.pp[label] = std::move(values);
  }
  return out;
}

PayoffOverrides overrides_of(const Json& o) {
  if (!o.is_array() || o.empty() || !o[0].is_array()) {
    throw parse_error("overrides must be a matrix", "overrides");
  }
  bool intervals = false;
  for (const Json& row : o) {
    if (!row.is_array()) throw parse_error("overrides must be a matrix", "overrides");
    for (const Json& e : row) intervals = intervals || e.is_array();
  }
  try {
    if (intervals) {
      std::vector<std::vector<Interval>> rows;
      for (const Json& row : o) {
        auto& r = rows.emplace_back();
        for (const Json& e : row) {
          r.push_back(e.is_array() ? interval_of(e, "overrides")
                                   : Interval::point(number(e, "overrides")));
        }
      }
      return Matrix<Interval>::from_rows(rows);
    }
    std::vector<std::vector<double>> rows;
    for (const Json& row : o) {
      auto& r = rows.emplace_back();
      for (const Json& e : row) r.push_back(number(e, "overrides"));
    }
    return Matrix<double>::from_rows(rows);
  } catch (const Error& e) {
    throw Error(e.kind(), e.what(), "overrides");
  }
}

EntropyConfig entropy_of(const Json& e) {
  EntropyConfig out;
  if (!e.is_object()) throw parse_error("entropy must be an object", "entropy");
  if (e.contains("costs")) {
    for (const Json& c : e.at("costs")) out.costs.push_back(number(c, "costs"));
  }
  if (e.contains("probability_floor")) {
    out.probability_floor = number(e.at("probability_floor"), "probability_floor");
  }
  if (e.contains("use_scheme_cost")) {
    if (!e.at("use_scheme_cost").is_boolean()) {
      throw parse_error("use_scheme_cost must be true or false", "use_scheme_cost");
    }
    out.use_scheme_cost = e.at("use_scheme_cost").get<bool>();
  }
  if (!(out.probability_floor > 0.0 && out.probability_floor < 1.0)) {
    throw Error(ErrorKind::kConfig, "probability_floor must lie in (0, 1)",
                "probability_floor");
  }
  return out;
}

std::vector<std::string> labels_of(const Json& j, const char* key) {
  return member(j, key).get<std::vector<std::string>>();
}

template <typename T>
Json matrix_entries(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if constexpr (std::is_same_v<T, double>) {
        row.push_back(number_json(m(i, j)));
      } else {
        row.push_back(Json(m(i, j)));
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<double> real_entries(const Json& rows) {
  std::vector<std::vector<double>> out;
  for (const Json& row : rows) {
    auto& r = out.emplace_back();
    for (const Json& e : row) r.push_back(number(e, "entries"));
  }
  return Matrix<double>::from_rows(out);
}

Json cell_json(const std::optional<Cell>& c) {
  if (!c) return nullptr;
  return {{"row", c->row}, {"col", c->col}};
}

std::optional<Cell> cell_of(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return Cell{string_of(member(j, "row"), "row"), string_of(member(j, "col"), "col")};
}

SolutionKind kind_of(const Json& j) {
  const std::string s = string_of(j, "kind");
  if (s == "pure_saddle") return SolutionKind::kPureSaddle;
  if (s == "mixed") return SolutionKind::kMixed;
  throw parse_error("unknown solution kind '" + s + "'", "kind");
}

std::vector<double> doubles_of(const Json& j, const std::string& where) {
  std::vector<double> out;
  for (const Json& v : j) out.push_back(number(v, where));
  return out;
}

Json doubles_json(const std::vector<double>& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(number_json(x));
  return out;
}

}  // namespace

std::string DocumentError::anchored(std::string_view source) const {
  std::ostringstream out;
  out << source << ":" << line_ << ": " << describe();
  return out.str();
}

DocumentError anchor_error(std::string_view text, const Error& e) {
  return DocumentError(e, anchor_line(text, e, 0));
}

ScenarioDocument parse_scenario_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw DocumentError(Error(ErrorKind::kParse, e.what()), line_at(text, e.byte - 1));
  }

  ScenarioDocument out;
  // Offset of the section a validation failure most likely belongs to.
  std::size_t section = 0;
  try {
    if (!doc.is_object()) throw parse_error("document must be a JSON object", "");
    if (doc.contains("rule")) {
      try {
        out.rule = parse_rule(string_of(doc.at("rule"), "rule"));
      } catch (const Error& e) {
        throw Error(e.kind(), e.what(), "rule");
      }
    }
    const ScaleKind scale = scale_of(doc, "document").value_or(ScaleKind::kReal);
    out.scenario.scheme = scheme_of(doc);
    out.scenario.assets = profiles_of(doc, "assets", Role::kAsset, scale);
    out.scenario.threats = profiles_of(doc, "threats", Role::kThreat, scale);
    if (doc.contains("overrides") && !doc.at("overrides").is_null()) {
      out.scenario.overrides = overrides_of(doc.at("overrides"));
    }
    if (doc.contains("entropy")) out.entropy = entropy_of(doc.at("entropy"));

    // Validate without the timeline first so its failures anchor there.
    Scenario untimed = out.scenario;
    validate_scenario(untimed);
    if (doc.contains("timeline") && !doc.at("timeline").is_null()) {
      section = text.find("\"timeline\"");
      if (section == std::string_view::npos) section = 0;
      out.scenario.timeline = timeline_of(doc.at("timeline"));
      validate_scenario(out.scenario);
    }
  } catch (const Error& e) {
    throw DocumentError(e, anchor_line(text, e, section));
  } catch (const Json::exception& e) {
    throw DocumentError(Error(ErrorKind::kParse, e.what()), line_at(text, section));
  }
  return out;
}

void to_json(Json& j, const Interval& x) {
  if (x.is_empty()) {
    j = nullptr;
  } else {
    j = Json::array({number_json(x.lo()), number_json(x.hi())});
  }
}

void from_json(const Json& j, Interval& x) { x = interval_of(j, "interval"); }

void to_json(Json& j, const PayoffMatrix& m) {
  j = {{"rows", m.row_labels}, {"cols", m.col_labels}, {"entries", matrix_entries(m.entries)}};
}

void from_json(const Json& j, PayoffMatrix& m) {
  m.row_labels = labels_of(j, "rows");
  m.col_labels = labels_of(j, "cols");
  const Json& e = member(j, "entries");
  m.entries = e.empty() ? Matrix<double>(m.row_labels.size(), m.col_labels.size())
                        : real_entries(e);
  m.check_shape();
}

void to_json(Json& j, const IntervalPayoffMatrix& m) {
  j = {{"rows", m.row_labels}, {"cols", m.col_labels}, {"entries", matrix_entries(m.entries)}};
}

void from_json(const Json& j, IntervalPayoffMatrix& m) {
  m.row_labels = labels_of(j, "rows");
  m.col_labels = labels_of(j, "cols");
  std::vector<std::vector<Interval>> rows;
  for (const Json& row : member(j, "entries")) {
    auto& r = rows.emplace_back();
    for (const Json& e : row) r.push_back(interval_of(e, "entries"));
  }
  m.entries = rows.empty() ? Matrix<Interval>(m.row_labels.size(), m.col_labels.size())
                           : Matrix<Interval>::from_rows(rows);
  m.check_shape();
}

void to_json(Json& j, const Elimination& e) {
  j = {{"line", e.line == Line::kRow ? "row" : "column"},
       {"label", e.label},
       {"dominated_by", e.dominated_by},
       {"strength", dominance_name(e.strength)},
       {"text", e.describe()}};
}

void from_json(const Json& j, Elimination& e) {
  const std::string line = string_of(member(j, "line"), "line");
  if (line != "row" && line != "column") throw parse_error("unknown line '" + line + "'", "line");
  e.line = line == "row" ? Line::kRow : Line::kColumn;
  e.label = string_of(member(j, "label"), "label");
  e.dominated_by = string_of(member(j, "dominated_by"), "dominated_by");
  e.strength = parse_dominance(string_of(member(j, "strength"), "strength"));
}

void to_json(Json& j, const GameSolution& s) {
  j = {{"value", number_json(s.value)},
       {"kind", kind_name(s.kind)},
       {"saddle", cell_json(s.saddle)},
       {"rows", s.row_labels},
       {"cols", s.col_labels},
       {"row_strategy", doubles_json(s.row_strategy)},
       {"col_strategy", doubles_json(s.col_strategy)},
       {"trace", s.trace}};
}

void from_json(const Json& j, GameSolution& s) {
  s.value = number(member(j, "value"), "value");
  s.kind = kind_of(member(j, "kind"));
  s.saddle = cell_of(member(j, "saddle"));
  s.row_labels = labels_of(j, "rows");
  s.col_labels = labels_of(j, "cols");
  s.row_strategy = doubles_of(member(j, "row_strategy"), "row_strategy");
  s.col_strategy = doubles_of(member(j, "col_strategy"), "col_strategy");
  s.trace = member(j, "trace").get<ReductionTrace>();
}

void to_json(Json& j, const ValueSeries& v) {
  Json periods = Json::array();
  for (const auto& p : v.periods) {
    periods.push_back({{"period", p.period},
                       {"value", number_json(p.value)},
                       {"kind", kind_name(p.kind)},
                       {"saddle", cell_json(p.saddle)}});
  }
  j = {{"periods", periods}};
}

void from_json(const Json& j, ValueSeries& v) {
  v.periods.clear();
  for (const Json& p : member(j, "periods")) {
    v.periods.push_back({member(p, "period").get<std::size_t>(),
                         number(member(p, "value"), "value"), kind_of(member(p, "kind")),
                         cell_of(member(p, "saddle"))});
  }
}

void to_json(Json& j, const WhatIfResult& r) {
  j = {{"realization", r.realization},
       {"achieved", number_json(r.achieved)},
       {"baseline", number_json(r.baseline)},
       {"delta", number_json(r.delta)},
       {"deviations", matrix_entries(r.deviations)}};
}

void from_json(const Json& j, WhatIfResult& r) {
  r.realization = member(j, "realization").get<PayoffMatrix>();
  r.achieved = number(member(j, "achieved"), "achieved");
  r.baseline = number(member(j, "baseline"), "baseline");
  r.delta = number(member(j, "delta"), "delta");
  const Json& d = member(j, "deviations");
  r.deviations = d.empty() ? Matrix<double>() : real_entries(d);
}

void to_json(Json& j, const SensitivityResult& r) {
  j = {{"row", r.row},
       {"col", r.col},
       {"delta", number_json(r.delta)},
       {"baseline", number_json(r.baseline)},
       {"change", number_json(r.change)},
       {"solution", r.solution}};
}

void from_json(const Json& j, SensitivityResult& r) {
  r.row = string_of(member(j, "row"), "row");
  r.col = string_of(member(j, "col"), "col");
  r.delta = number(member(j, "delta"), "delta");
  r.baseline = number(member(j, "baseline"), "baseline");
  r.change = number(member(j, "change"), "change");
  r.solution = member(j, "solution").get<GameSolution>();
}

void to_json(Json& j, const MovementReport& r) {
  j = {{"value_before", number_json(r.value_before)},
       {"value_after", number_json(r.value_after)},
       {"value_delta", number_json(r.value_delta)},
       {"kind_before", kind_name(r.kind_before)},
       {"kind_after", kind_name(r.kind_after)},
       {"kind_changed", r.kind_changed},
       {"saddle_before", cell_json(r.saddle_before)},
       {"saddle_after", cell_json(r.saddle_after)},
       {"saddle_moved", r.saddle_moved},
       {"text", r.describe()}};
}

void from_json(const Json& j, MovementReport& r) {
  r.value_before = number(member(j, "value_before"), "value_before");
  r.value_after = number(member(j, "value_after"), "value_after");
  r.value_delta = number(member(j, "value_delta"), "value_delta");
  r.kind_before = kind_of(member(j, "kind_before"));
  r.kind_after = kind_of(member(j, "kind_after"));
  r.kind_changed = member(j, "kind_changed").get<bool>();
  r.saddle_before = cell_of(member(j, "saddle_before"));
  r.saddle_after = cell_of(member(j, "saddle_after"));
  r.saddle_moved = member(j, "saddle_moved").get<bool>();
}

namespace {

constexpr const char* kResultTags[] = {"payoff_matrix", "interval_payoff_matrix",
                                       "game_solution", "value_series",
                                       "whatif_result", "sensitivity_result",
                                       "movement_report"};

template <std::size_t I = 0>
ResultDocument result_from(const std::string& tag, const Json& body) {
  if constexpr (I < std::variant_size_v<ResultDocument>) {
    if (tag == kResultTags[I]) {
      return body.get<std::variant_alternative_t<I, ResultDocument>>();
    }
    return result_from<I + 1>(tag, body);
  } else {
    throw parse_error("unknown result type '" + tag + "'", "type");
  }
}

}  // namespace

std::string serialize_result(const ResultDocument& result) {
  Json body = std::visit([](const auto& r) { return Json(r); }, result);
  return Json{{"type", kResultTags[result.index()]}, {"result", body}}.dump();
}

ResultDocument parse_result(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    return result_from(string_of(member(doc, "type"), "type"), member(doc, "result"));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

}  // namespace strategem
