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

// strategem: build, solve and explore matrix games from scenario files.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "commands.h"
#include "service.h"

namespace {

using strategem::CommandOptions;
using strategem::CommandResult;

struct Flags {
  std::string file;
  std::string rule;
  std::string dominance = "weak";
  std::optional<std::size_t> period;
  std::string entry;
  std::optional<double> delta;
  std::optional<double> budget;
  double step = strategem::kDefaultStep;
  std::string format = "text";
  std::string out;
};

using Command = CommandResult (*)(std::string_view, std::string_view, const CommandOptions&);

int emit(const CommandResult& r, const std::string& out_path) {
  if (!r.error.empty()) std::cerr << r.error << "\n";
  if (!r.output.empty()) {
    if (out_path.empty()) {
      std::cout << r.output;
    } else {
      std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
      out << r.output;
      if (!out.flush()) {
        std::cerr << out_path << ": cannot write output\n";
        return strategem::kExitInvalid;
      }
    }
  }
  return r.exit_code;
}

int run_command(Command command, const Flags& f) {
  std::ifstream in(f.file, std::ios::binary);
  if (!in) {
    std::cerr << f.file << ":1: ParseError: cannot read file\n";
    return strategem::kExitInvalid;
  }
  std::ostringstream text;
  text << in.rdbuf();

  CommandOptions opts;
  try {
    if (!f.rule.empty()) opts.rule = strategem::parse_rule(f.rule);
    opts.dominance = strategem::parse_dominance(f.dominance);
  } catch (const strategem::Error& e) {
    std::cerr << e.describe() << "\n";
    return strategem::kExitInvalid;
  }
  opts.period = f.period;
  if (!f.entry.empty()) {
    const auto comma = f.entry.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == f.entry.size()) {
      std::cerr << "--entry expects ROW,COL\n";
      return strategem::kExitInvalid;
    }
    opts.entry = {f.entry.substr(0, comma), f.entry.substr(comma + 1)};
  }
  opts.delta = f.delta.value_or(0.0);
  opts.budget = f.budget;
  opts.step = f.step;
  opts.format = f.format == "machine" ? strategem::OutputFormat::kMachine
                                      : strategem::OutputFormat::kText;
  return emit(command(text.str(), f.file, opts), f.out);
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("file", f.file, "Scenario document (JSON)")->required();
  sub->add_option("--rule", f.rule, "Payoff rule; defaults to the document's")
      ->check(CLI::IsMember({"diff", "entropy", "interval"}));
  sub->add_option("--period", f.period, "Timeline period (0-based)");
  sub->add_option("--format", f.format, "Output format")
      ->check(CLI::IsMember({"text", "machine"}));
  sub->add_option("--out", f.out, "Write the output here instead of stdout");
}

void add_dominance(CLI::App* sub, Flags& f) {
  sub->add_option("--dominance", f.dominance, "Dominance used for reduction")
      ->check(CLI::IsMember({"weak", "strict"}));
}

int serve(int port, const std::string& host) {
  const strategem::ScenarioStore store(strategem::default_store_dir());
  httplib::Server server;
  strategem::install_routes(server, store);
  std::cerr << "serving " << store.dir().string() << " on " << host << ":" << port << "\n";
  if (!server.listen(host, port)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-game decision analysis over asset and threat strategies"};
  app.require_subcommand(1);
  Flags f;

  auto* build = app.add_subcommand("build", "Print the payoff matrix");
  add_common(build, f);

  auto* solve = app.add_subcommand("solve", "Solve the game (exit 3 on a negative value)");
  add_common(solve, f);
  add_dominance(solve, f);

  auto* timeline = app.add_subcommand("timeline", "Game value per timeline period");
  add_common(timeline, f);
  add_dominance(timeline, f);

  auto* whatif = app.add_subcommand("whatif", "Entry sensitivity or interval search");
  add_common(whatif, f);
  add_dominance(whatif, f);
  auto* entry = whatif->add_option("--entry", f.entry, "Entry to perturb, as ROW,COL");
  whatif->add_option("--delta", f.delta, "Amount added to the entry")->needs(entry);
  auto* budget = whatif->add_option("--budget", f.budget, "Total deviation allowed");
  whatif->add_option("--step", f.step, "Grid step of the search");
  entry->excludes(budget);

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--port", port, "Port to listen on");
  serve_cmd->add_option("--host", host, "Address to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : strategem::kExitInvalid;
  }

  if (*build) return run_command(strategem::cmd_build, f);
  if (*solve) return run_command(strategem::cmd_solve, f);
  if (*timeline) return run_command(strategem::cmd_timeline, f);
  if (*whatif) return run_command(strategem::cmd_whatif, f);
  return serve(port, host);
}
