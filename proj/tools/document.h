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

// JSON scenario documents and result serialization.

#ifndef STRATEGEM_TOOLS_DOCUMENT_H_
#define STRATEGEM_TOOLS_DOCUMENT_H_

#include <string>
#include <string_view>
#include <variant>

#include <nlohmann/json.hpp>

#include "strategem/error.h"
#include "strategem/payoff.h"
#include "strategem/solver.h"
#include "strategem/strategy_model.h"
#include "strategem/whatif.h"

namespace strategem {

using Json = nlohmann::json;

// A parse or validation failure tied to a 1-based line of the source text.
class DocumentError : public Error {
 public:
  DocumentError(const Error& cause, int line)
      : Error(cause.kind(), cause.what(), cause.subject()), line_(line) {}

  int line() const noexcept { return line_; }

  // "<source>:<line>: <Name>: <message>"
  std::string anchored(std::string_view source) const;

 private:
  int line_;
};

struct ScenarioDocument {
  Scenario scenario;
  PayoffRule rule = PayoffRule::kDiff;
  EntropyConfig entropy;
};

// Parses and validates. Throws DocumentError.
ScenarioDocument parse_scenario_document(std::string_view text);

// Ties a failure raised while working on a parsed document back to a line
// of its text.
DocumentError anchor_error(std::string_view text, const Error& e);

// Results. Doubles are written with round-trip precision; intervals as
// [lo, hi] with "inf"/"-inf" for unbounded ends and null for empty.
void to_json(Json& j, const Interval& x);
void from_json(const Json& j, Interval& x);
void to_json(Json& j, const PayoffMatrix& m);
void from_json(const Json& j, PayoffMatrix& m);
void to_json(Json& j, const IntervalPayoffMatrix& m);
void from_json(const Json& j, IntervalPayoffMatrix& m);
void to_json(Json& j, const Elimination& e);
void from_json(const Json& j, Elimination& e);
void to_json(Json& j, const GameSolution& s);
void from_json(const Json& j, GameSolution& s);
void to_json(Json& j, const ValueSeries& v);
void from_json(const Json& j, ValueSeries& v);
void to_json(Json& j, const WhatIfResult& r);
void from_json(const Json& j, WhatIfResult& r);
void to_json(Json& j, const SensitivityResult& r);
void from_json(const Json& j, SensitivityResult& r);
void to_json(Json& j, const MovementReport& r);
void from_json(const Json& j, MovementReport& r);

using ResultDocument = std::variant<PayoffMatrix, IntervalPayoffMatrix, GameSolution,
                                    ValueSeries, WhatIfResult, SensitivityResult,
                                    MovementReport>;

// Tagged with "type"; parse_result throws Error(kParse) on unknown tags.
std::string serialize_result(const ResultDocument& result);
ResultDocument parse_result(std::string_view text);

}  // namespace strategem

#endif  // STRATEGEM_TOOLS_DOCUMENT_H_
