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

#include "service.h"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <httplib.h>

#include "commands.h"

namespace strategem {
namespace {

constexpr const char* kJson = "application/json";

void send_error(httplib::Response& res, int status, const Error& e,
                std::optional<int> line = std::nullopt) {
  Json body = {{"error", error_name(e.kind())}, {"message", e.what()}};
  if (line) body["line"] = *line;
  res.status = status;
  res.set_content(machine_text(body), kJson);
}

// A rule that the document's scales cannot support, or a document lacking
// what the operation needs, is well-formed but unprocessable.
int status_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::kScale:
    case ErrorKind::kConfig:
      return 422;
    default:
      return 400;
  }
}

double parse_number(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::kParse, std::string("invalid ") + what + " '" + text + "'", what);
}

void apply_query(const httplib::Request& req, CommandOptions& opts) {
  if (req.has_param("rule")) opts.rule = parse_rule(req.get_param_value("rule"));
  if (req.has_param("dominance")) {
    opts.dominance = parse_dominance(req.get_param_value("dominance"));
  }
  if (req.has_param("period")) {
    const double p = parse_number(req.get_param_value("period"), "period");
    if (p < 0 || p != static_cast<double>(static_cast<std::size_t>(p))) {
      throw Error(ErrorKind::kParse, "period must be a non-negative integer", "period");
    }
    opts.period = static_cast<std::size_t>(p);
  }
}

std::pair<std::string, std::string> parse_entry(const Json& v) {
  if (v.is_array() && v.size() == 2 && v[0].is_string() && v[1].is_string()) {
    return {v[0].get<std::string>(), v[1].get<std::string>()};
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    const auto comma = s.find(',');
    if (comma != std::string::npos && comma > 0 && comma + 1 < s.size()) {
      return {s.substr(0, comma), s.substr(comma + 1)};
    }
  }
  throw Error(ErrorKind::kParse, "entry must be \"ROW,COL\" or [\"ROW\", \"COL\"]", "entry");
}

double body_number(const Json& body, const char* key) {
  const Json& v = body.at(key);
  if (!v.is_number()) throw Error(ErrorKind::kParse, std::string(key) + " must be a number", key);
  return v.get<double>();
}

void apply_whatif_body(const std::string& text, CommandOptions& opts) {
  Json body;
  try {
    body = text.empty() ? Json::object() : Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("invalid request body: ") + e.what());
  }
  if (!body.is_object()) throw Error(ErrorKind::kParse, "request body must be a JSON object");
  if (body.contains("rule")) opts.rule = parse_rule(body["rule"].get<std::string>());
  if (body.contains("dominance")) {
    opts.dominance = parse_dominance(body["dominance"].get<std::string>());
  }
  if (body.contains("entry")) {
    opts.entry = parse_entry(body["entry"]);
    opts.delta = body.contains("delta") ? body_number(body, "delta") : 0.0;
  }
  if (body.contains("budget") && !body["budget"].is_null()) {
    opts.budget = body_number(body, "budget");
  }
  if (body.contains("step")) opts.step = body_number(body, "step");
}

// Loads the stored document and runs one report builder on it.
template <typename Prepare>
void compute(const ScenarioStore& store, const httplib::Request& req, httplib::Response& res,
             Json (*build)(const ScenarioDocument&, const CommandOptions&), Prepare prepare) {
  const std::string id = req.matches[1];
  if (!ScenarioStore::valid_id(id)) {
    send_error(res, 404, Error(ErrorKind::kLabel, "unknown scenario '" + id + "'", id));
    return;
  }
  const auto text = store.get(id);
  if (!text) {
    send_error(res, 404, Error(ErrorKind::kLabel, "unknown scenario '" + id + "'", id));
    return;
  }
  CommandOptions opts;
  opts.format = OutputFormat::kMachine;
  try {
    apply_query(req, opts);
    prepare(opts);
  } catch (const Error& e) {
    send_error(res, 400, e);
    return;
  } catch (const Json::exception& e) {
    send_error(res, 400, Error(ErrorKind::kParse, e.what()));
    return;
  }
  try {
    const ScenarioDocument doc = parse_scenario_document(*text);
    res.set_content(machine_text(build(doc, opts)), kJson);
  } catch (const DocumentError& e) {
    send_error(res, 400, e, e.line());
  } catch (const Error& e) {
    send_error(res, status_for(e), e);
  }
}

std::atomic<unsigned long> temp_counter{0};

}  // namespace

std::filesystem::path default_store_dir() {
  if (const char* env = std::getenv("STRATEGEM_STORE"); env && *env) return env;
  return "strategem-store";
}

ScenarioStore::ScenarioStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

bool ScenarioStore::valid_id(const std::string& id) {
  if (id.empty() || id.size() > 64) return false;
  for (char c : id) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '_' || c == '-';
    if (!ok) return false;
  }
  return true;
}

std::filesystem::path ScenarioStore::path_for(const std::string& id) const {
  return dir_ / (id + ".json");
}

void ScenarioStore::put(const std::string& id, const std::string& document) const {
  std::ostringstream name;
  name << "." << id << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id())
       << "." << temp_counter++;
  const std::filesystem::path temp = dir_ / name.str();
  {
    std::ofstream out(temp, std::ios::binary | std::ios::trunc);
    out << document;
    if (!out.flush()) {
      throw Error(ErrorKind::kConfig, "cannot write " + temp.string());
    }
  }
  std::filesystem::rename(temp, path_for(id));
}

std::optional<std::string> ScenarioStore::get(const std::string& id) const {
  std::ifstream in(path_for(id), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void install_routes(httplib::Server& server, const ScenarioStore& store) {
  server.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                              {"Access-Control-Allow-Methods", "GET, PUT, POST, OPTIONS"},
                              {"Access-Control-Allow-Headers", "Content-Type"}});
  server.Options(R"(/scenarios/.*)",
                 [](const httplib::Request&, httplib::Response& res) { res.status = 204; });

  server.Put(R"(/scenarios/([^/]+))", [&store](const httplib::Request& req,
                                               httplib::Response& res) {
    const std::string id = req.matches[1];
    if (!ScenarioStore::valid_id(id)) {
      send_error(res, 400, Error(ErrorKind::kLabel, "invalid scenario id '" + id + "'", id));
      return;
    }
    try {
      parse_scenario_document(req.body);
    } catch (const DocumentError& e) {
      send_error(res, 400, e, e.line());
      return;
    }
    const bool existed = store.get(id).has_value();
    try {
      store.put(id, req.body);
    } catch (const std::exception& e) {
      send_error(res, 500, Error(ErrorKind::kConfig, e.what()));
      return;
    }
    res.status = existed ? 200 : 201;
    res.set_content(machine_text({{"id", id}}), kJson);
  });

  server.Get(R"(/scenarios/([^/]+))", [&store](const httplib::Request& req,
                                               httplib::Response& res) {
    const std::string id = req.matches[1];
    const auto text = ScenarioStore::valid_id(id) ? store.get(id) : std::nullopt;
    if (!text) {
      send_error(res, 404, Error(ErrorKind::kLabel, "unknown scenario '" + id + "'", id));
      return;
    }
    res.set_content(*text, kJson);
  });

  server.Post(R"(/scenarios/([^/]+)/solve)",
              [&store](const httplib::Request& req, httplib::Response& res) {
                compute(store, req, res, solve_report, [](CommandOptions&) {});
              });

  server.Post(R"(/scenarios/([^/]+)/whatif)",
              [&store](const httplib::Request& req, httplib::Response& res) {
                compute(store, req, res, whatif_report,
                        [&req](CommandOptions& opts) { apply_whatif_body(req.body, opts); });
              });

  server.Get(R"(/scenarios/([^/]+)/timeline)",
             [&store](const httplib::Request& req, httplib::Response& res) {
               compute(store, req, res, timeline_report, [](CommandOptions&) {});
             });
}

}  // namespace strategem
