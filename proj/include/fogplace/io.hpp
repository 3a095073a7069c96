// Copyright 2026 The fogplace Authors
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

// JSON documents for topologies, scenarios, placements and solve results,
// plus the CSV placement table.

#ifndef FOGPLACE_IO_HPP_
#define FOGPLACE_IO_HPP_

#include <filesystem>
#include <string>

#include "fogplace/power.hpp"
#include "fogplace/solve_result.hpp"
#include "json.hpp"

namespace fogplace {

using Json = nlohmann::json;

// Malformed documents. The message names the offending field, e.g.
// "scenario.requests[2].vms[0].cpu_demand: expected a number".
class FormatError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

Json topology_to_json(const Topology& topology);
Topology topology_from_json(const Json& doc);

// The topology is embedded under "topology". On load, "topology_file" (a path
// relative to base_dir) may stand in for it.
Json scenario_to_json(const Scenario& scenario);
Scenario scenario_from_json(const Json& doc,
                            const std::filesystem::path& base_dir = {});

// {"assignments": [{"request": id, "vm": index, "node": id}, ...]};
// unassigned VMs are omitted.
Json placement_to_json(const Scenario& scenario, const Placement& placement);
Placement placement_from_json(const Scenario& scenario, const Json& doc);

// request,vm,node rows in request/VM order.
std::string placement_csv(const Scenario& scenario, const Placement& placement);

Json breakdown_to_json(const PowerBreakdown& breakdown);
// Non-finite objective or bound values are written as null.
Json result_to_json(const Scenario& scenario, const SolveResult& result);

// Whole-file helpers; throw std::runtime_error with the path on failure.
std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, std::string_view text);
Json read_json(const std::filesystem::path& path);

Topology load_topology(const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace fogplace

#endif  // FOGPLACE_IO_HPP_
