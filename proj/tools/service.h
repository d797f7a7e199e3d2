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

// HTTP front end over a flat directory of scenario documents.

#ifndef STRATEGEM_TOOLS_SERVICE_H_
#define STRATEGEM_TOOLS_SERVICE_H_

#include <filesystem>
#include <optional>
#include <string>

namespace httplib {
class Server;
}

namespace strategem {

// $STRATEGEM_STORE if set, else ./strategem-store.
std::filesystem::path default_store_dir();

// One file per scenario id. Writes go to a temporary file that is renamed
// into place, so readers never see a partial document.
class ScenarioStore {
 public:
  explicit ScenarioStore(std::filesystem::path dir);

  // Ids are 1-64 characters from [A-Za-z0-9_-].
  static bool valid_id(const std::string& id);

  void put(const std::string& id, const std::string& document) const;
  std::optional<std::string> get(const std::string& id) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& id) const;

  std::filesystem::path dir_;
};

// Registers the /scenarios routes. The store must outlive the server.
void install_routes(httplib::Server& server, const ScenarioStore& store);

}  // namespace strategem

#endif  // STRATEGEM_TOOLS_SERVICE_H_
