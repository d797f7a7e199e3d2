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

// The build / solve / timeline / whatif workflows shared by the CLI and the
// HTTP service.

#ifndef STRATEGEM_TOOLS_COMMANDS_H_
#define STRATEGEM_TOOLS_COMMANDS_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "document.h"

namespace strategem {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitNegativeValue = 3;

enum class OutputFormat { kText, kMachine };

struct CommandOptions {
  // Overrides the document's own rule.
  std::optional<PayoffRule> rule;
  Dominance dominance = Dominance::kWeak;
  // Weight the matrix by this timeline period before building / solving;
  // restricts the timeline command to that period.
  std::optional<std::size_t> period;
  // whatif: perturb one entry ...
  std::optional<std::pair<std::string, std::string>> entry;
  double delta = 0.0;
  // ... or search inside the interval payoffs.
  std::optional<double> budget;
  double step = kDefaultStep;
  OutputFormat format = OutputFormat::kText;
};

// Report builders. They throw Error for anything the document or options
// cannot support; callers map that to exit codes or HTTP statuses.
Json build_report(const ScenarioDocument& doc, const CommandOptions& opts);
Json solve_report(const ScenarioDocument& doc, const CommandOptions& opts);
Json timeline_report(const ScenarioDocument& doc, const CommandOptions& opts);
Json whatif_report(const ScenarioDocument& doc, const CommandOptions& opts);

// Machine output: the report as indented JSON plus a newline.
std::string machine_text(const Json& report);

struct CommandResult {
  int exit_code = kExitOk;
  std::string output;
  // Diagnostics for stderr; empty on success.
  std::string error;
};

// `source` names the document in line-anchored messages.
CommandResult cmd_build(std::string_view document, std::string_view source,
                        const CommandOptions& opts);
CommandResult cmd_solve(std::string_view document, std::string_view source,
                        const CommandOptions& opts);
CommandResult cmd_timeline(std::string_view document, std::string_view source,
                           const CommandOptions& opts);
CommandResult cmd_whatif(std::string_view document, std::string_view source,
                         const CommandOptions& opts);

}  // namespace strategem

#endif  // STRATEGEM_TOOLS_COMMANDS_H_
