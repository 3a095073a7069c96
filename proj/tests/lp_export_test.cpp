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

#include <regex>
#include <sstream>

#include "doctest.h"
#include "fogplace/lp_export.hpp"
#include "fogplace/placement.hpp"
#include "support.hpp"

namespace fogplace {
namespace {

// Lines of the form " name:" inside Subject To.
std::size_t labelled_rows(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool inside = false;
  std::size_t n = 0;
  static const std::regex label(R"(^ [A-Za-z][A-Za-z0-9_]*:)");
  while (std::getline(in, line)) {
    if (line == "Subject To") {
      inside = true;
      continue;
    }
    if (line == "Bounds") break;
    if (inside && std::regex_search(line, label)) ++n;
  }
  return n;
}

TEST_CASE("row and variable counts follow the construction") {
  const Topology t = testing::reference(1, 2);
  const std::size_t T = t.size(), P = t.processing_nodes().size();
  REQUIRE(T == 10);
  REQUIRE(P == 5);
  const std::size_t net = 5;  // ONU, OLT, metro switch, metro router, core
  const std::size_t pairs = P * (P - 1);
  // Two requests, 4 VMs in all; three links, one of them silent.
  VirtualRequest a = testing::chain("a", {2.0, 3.0}, 0.1);
  a.links[1].data_rate = 0.0;
  const VirtualRequest b = testing::chain("b", {4.0}, 0.5);
  const Scenario s(t, {a, b}, 1);
  const std::size_t V = 5, R = 2, positive_links = 2;
  const LpModel m = export_lp(s);

  CHECK(m.stats.assignment_rows == V);
  CHECK(m.stats.pin_rows == R);
  CHECK(m.stats.vm_limit_rows == 1);  // iot-1-2 only
  CHECK(m.stats.conservation_rows == pairs * T);
  const std::size_t rows = V + R + 1 + positive_links * pairs + pairs +
                           pairs * T + T + 2 * net + 4 * P;
  CHECK(m.stats.rows == rows);
  CHECK(labelled_rows(m.text) == rows);
  CHECK(m.stats.binaries == V * P + net + P);
  CHECK(m.stats.integers == P);

  const Scenario capped(t, {a, b}, 1, std::nullopt, true);
  CHECK(export_lp(capped).stats.vm_limit_rows == 2);
}

TEST_CASE("text structure") {
  const Topology t = testing::reference(1, 1);
  const Scenario s(t, {testing::chain("req", {1.5}, 0.2)}, 2);
  const std::string text = export_lp(s).text;
  for (const char* section :
       {"Minimize\n", "Subject To\n", "Bounds\n", "General\n", "Binary\n",
        "End\n"}) {
    CHECK(text.find(section) != std::string::npos);
  }
  CHECK(text.rfind("End\n") == text.size() - 4);
  CHECK(text.find("\\ node 0 = iot-1-1") != std::string::npos);
  CHECK(text.find("\\ request 0 = req") != std::string::npos);
  CHECK(text.find("\\ k = 2") != std::string::npos);
  // Input VM pinned on node 0, the source.
  CHECK(text.find(" pin_0: x_0_0_0 = 1") != std::string::npos);
  CHECK(text.find("nan") == std::string::npos);
  CHECK(text.find("inf") == std::string::npos);
  // Deterministic.
  CHECK(export_lp(s).text == text);
}

TEST_CASE("empty request set") {
  const Scenario s(testing::reference(1, 1), {}, 1);
  const LpModel m = export_lp(s);
  CHECK(m.stats.assignment_rows == 0);
  CHECK(m.stats.pin_rows == 0);
  CHECK(m.stats.conservation_rows > 0);
  // No source is pinned active, so every beta may sit at 0.
  CHECK(m.text.find(" = 1\n") == std::string::npos);
}

}  // namespace
}  // namespace fogplace
