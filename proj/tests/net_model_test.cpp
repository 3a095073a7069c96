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

#include <random>
#include <set>

#include "doctest.h"
#include "fogplace/device_tables.hpp"
#include "fogplace/net_model.hpp"
#include "support.hpp"

namespace fogplace {
namespace {

std::vector<std::string> ids(const Topology& t, const std::vector<NodeIndex>& path) {
  std::vector<std::string> out;
  for (NodeIndex n : path) out.push_back(t.node(n).id);
  return out;
}

TEST_CASE("reference topology has one node per construction rule") {
  const Topology t = build_reference_topology();
  CHECK(t.size() == 31);
  int iot = 0, onu = 0, sources = 0;
  for (const Node& n : t.nodes()) {
    iot += n.tier == NodeTier::kIoTDevice;
    onu += n.tier == NodeTier::kOnuAp;
    sources += n.is_source;
  }
  CHECK(iot == 20);
  CHECK(onu == 4);
  CHECK(sources == 1);
  CHECK(t.node(t.index_of("iot-1-1")).is_source);
  CHECK(t.is_tree());
  // 20 IoT devices, AFN, MFN and cloud.
  CHECK(t.processing_nodes().size() == 23);
}

TEST_CASE("thirty IoT devices are expressible") {
  ReferenceConfig cfg;
  cfg.zones = 5;
  cfg.iot_per_zone = 6;
  const Topology t = build_reference_topology(cfg);
  CHECK(t.size() == 30 + 5 + 7);
}

TEST_CASE("single zone with one device is a nine node tree") {
  // IoT, ONU, and the seven shared nodes.
  const Topology t = testing::reference(1, 1);
  CHECK(t.size() == 9);
  CHECK(t.is_tree());
  CHECK(t.links().size() == 8);
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (a != b) CHECK_FALSE(t.route(NodeIndex(a), NodeIndex(b)).empty());
    }
  }
}

TEST_CASE("routes follow the access, metro and core hierarchy") {
  const Topology t = build_reference_topology();
  CHECK(ids(t, t.route("iot-1-1", "cloud")) ==
        std::vector<std::string>{"iot-1-1", "onu-1", "olt", "metro-switch",
                                 "metro-router", "core-1", "cloud"});
  CHECK(ids(t, t.route("iot-1-1", "iot-1-2")) ==
        std::vector<std::string>{"iot-1-1", "onu-1", "iot-1-2"});
  CHECK(ids(t, t.route("iot-1-1", "afn")) ==
        std::vector<std::string>{"iot-1-1", "onu-1", "olt", "afn"});
  CHECK(ids(t, t.route("iot-1-1", "iot-3-2")) ==
        std::vector<std::string>{"iot-1-1", "onu-1", "olt", "onu-3", "iot-3-2"});
  CHECK(ids(t, t.route("afn", "mfn")) ==
        std::vector<std::string>{"afn", "olt", "metro-switch", "mfn"});
  CHECK_THROWS(t.route("olt", "olt"));
  CHECK_THROWS_AS(t.route("olt", "nowhere"), ConfigError);
}

TEST_CASE("core hop count lengthens the cloud route") {
  ReferenceConfig cfg;
  cfg.core_hops = 3;
  const Topology t = build_reference_topology(cfg);
  CHECK(t.route("iot-1-1", "cloud").size() == 9);
}

TEST_CASE("reverse routes mirror forward routes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Scenario s = testing::random_small_scenario(rng);
    const Topology& t = s.topology();
    for (std::size_t a = 0; a < t.size(); ++a) {
      for (std::size_t b = 0; b < t.size(); ++b) {
        if (a == b) continue;
        auto fwd = t.route(NodeIndex(a), NodeIndex(b));
        auto back = t.route(NodeIndex(b), NodeIndex(a));
        std::reverse(back.begin(), back.end());
        CHECK(fwd == back);
        // Consecutive route nodes are adjacent.
        for (std::size_t i = 0; i + 1 < fwd.size(); ++i) {
          auto nb = t.neighbors(fwd[i]);
          CHECK(std::find(nb.begin(), nb.end(), fwd[i + 1]) != nb.end());
        }
      }
    }
  }
}

TEST_CASE("node traffic counts every node on the route once") {
  const Topology t = build_reference_topology();
  const NodeIndex iot = t.index_of("iot-1-1");
  const NodeIndex afn = t.index_of("afn");
  SUBCASE("single flow") {
    TrafficMatrix m{{{iot, afn}, 1.0}};
    const auto lambda = aggregate_node_traffic(t, m);
    std::set<std::string> on{"iot-1-1", "onu-1", "olt", "afn"};
    for (std::size_t n = 0; n < t.size(); ++n) {
      CHECK(lambda[n] == (on.count(t.nodes()[n].id) ? 1.0 : 0.0));
    }
  }
  SUBCASE("empty matrix") {
    const auto lambda = aggregate_node_traffic(t, {});
    CHECK(std::all_of(lambda.begin(), lambda.end(), [](double v) { return v == 0.0; }));
  }
  SUBCASE("flows sharing the OLT add up") {
    const NodeIndex mfn = t.index_of("mfn");
    TrafficMatrix m{{{iot, afn}, 0.25}, {{iot, mfn}, 0.5}};
    const auto lambda = aggregate_node_traffic(t, m);
    CHECK(lambda[t.index_of("olt").get()] == 0.75);
    CHECK(lambda[t.index_of("metro-switch").get()] == 0.5);
  }
  SUBCASE("non-processing endpoint is rejected") {
    TrafficMatrix m{{{iot, t.index_of("olt")}, 1.0}};
    CHECK_THROWS(aggregate_node_traffic(t, m));
  }
}

TEST_CASE("aggregation is additive over demand matrices") {
  const Topology t = build_reference_topology();
  std::mt19937_64 rng(3);
  const auto& procs = t.processing_nodes();
  for (int trial = 0; trial < 50; ++trial) {
    TrafficMatrix a, b, ab;
    for (int i = 0; i < 6; ++i) {
      NodeIndex x = testing::pick(rng, procs), y = testing::pick(rng, procs);
      if (x == y) continue;
      const double v = testing::uniform(rng, 0.0, 2.0);
      (i % 2 ? a : b)[{x, y}] += v;
      ab[{x, y}] += v;
    }
    const auto la = aggregate_node_traffic(t, a);
    const auto lb = aggregate_node_traffic(t, b);
    const auto lab = aggregate_node_traffic(t, ab);
    for (std::size_t n = 0; n < t.size(); ++n) {
      CHECK(lab[n] == doctest::Approx(la[n] + lb[n]).epsilon(1e-12));
    }
  }
}

TEST_CASE("route decomposition conserves every flow") {
  const Topology t = build_reference_topology();
  const auto& procs = t.processing_nodes();
  TrafficMatrix m;
  for (std::size_t i = 0; i + 1 < procs.size(); i += 3) {
    m[{procs[i], procs[i + 1]}] = 0.1 * (i + 1);
    if (procs[i + 1] != procs.back()) m[{procs[i + 1], procs.back()}] += 0.05;
  }
  const auto flows = decompose_flows(t, m);
  CHECK(conservation_residual(t, m, flows) <= 1e-12);
  // A corrupted decomposition is caught.
  auto broken = flows;
  broken.front().amount += 0.5;
  CHECK(conservation_residual(t, m, broken) >= 0.5 - 1e-12);
  // Link loads equal the arc amounts summed per link.
  const auto loads = link_loads(t, m);
  double arc_total = 0.0, link_total = 0.0;
  for (const ArcFlow& f : flows) arc_total += f.amount;
  for (double l : loads) link_total += l;
  CHECK(arc_total == doctest::Approx(link_total));
}

TEST_CASE("topology validation") {
  const Topology base = build_reference_topology();
  auto nodes = base.nodes();
  std::vector<std::pair<std::string, std::string>> links;
  for (const auto& [a, b] : base.links()) {
    links.emplace_back(base.node(a).id, base.node(b).id);
  }
  SUBCASE("disconnected") {
    auto l = links;
    l.pop_back();
    CHECK_THROWS_AS(Topology(nodes, l, false), ConfigError);
  }
  SUBCASE("cycle with tree flag") {
    auto l = links;
    l.emplace_back("afn", "mfn");
    CHECK_THROWS_AS(Topology(nodes, l, true), ConfigError);
    CHECK_FALSE(Topology(nodes, l, false).is_tree());
  }
  SUBCASE("processor on a network tier") {
    auto n = nodes;
    n[base.index_of("olt").get()].processor = ProcessorProfile{};
    CHECK_THROWS_AS(Topology(n, links, true), ConfigError);
  }
  SUBCASE("source must be an IoT device") {
    auto n = nodes;
    n[base.index_of("afn").get()].is_source = true;
    CHECK_THROWS_AS(Topology(n, links, true), ConfigError);
  }
  SUBCASE("delta range") {
    auto n = nodes;
    n[base.index_of("olt").get()].delta = 0.0;
    CHECK_THROWS_AS(Topology(n, links, true), ConfigError);
  }
  SUBCASE("capacities") {
    auto n = nodes;
    n[base.index_of("olt").get()].network->bitrate_capacity = 0.0;
    CHECK_THROWS_AS(Topology(n, links, true), ConfigError);
    n = nodes;
    n[base.index_of("cloud").get()].processor->cpu_capacity_gflops = -1.0;
    CHECK_THROWS_AS(Topology(n, links, true), ConfigError);
  }
  SUBCASE("duplicate ids") {
    auto n = nodes;
    n[1].id = n[0].id;
    CHECK_THROWS_AS(Topology(n, links, true), ConfigError);
  }
  SUBCASE("reference config errors") {
    ReferenceConfig cfg;
    cfg.zones = 0;
    CHECK_THROWS_AS(build_reference_topology(cfg), ConfigError);
    cfg = {};
    cfg.source_id = "olt";
    CHECK_THROWS_AS(build_reference_topology(cfg), ConfigError);
    cfg = {};
    cfg.onu.bitrate_capacity = 0.0;
    CHECK_THROWS_AS(build_reference_topology(cfg), ConfigError);
  }
}

TEST_CASE("sharing factor defaults by tier") {
  const Topology t = build_reference_topology();
  for (const Node& n : t.nodes()) {
    const bool shared = is_shared_tier(n.tier);
    CHECK(n.delta == (shared ? 0.03 : 1.0));
  }
  const Topology t10 = t.with_shared_delta(0.1);
  CHECK(t10.node(t10.index_of("core-1")).delta == 0.1);
  CHECK(t10.node(t10.index_of("onu-1")).delta == 1.0);
  CHECK(t10.node(t10.index_of("cloud")).delta == 0.1);
  CHECK(t10.node(t10.index_of("afn")).delta == 1.0);
}

TEST_CASE("CPU count covers the workload") {
  CHECK(servers_needed(0.0, 13.5) == 0);
  CHECK(servers_needed(10.0, 13.5) == 1);
  CHECK(servers_needed(13.5, 13.5) == 1);
  CHECK(servers_needed(20.0, 13.5) == 2);
  CHECK(servers_needed(27.0, 13.5) == 2);
  // Sums of decimals that land a hair above a CPU boundary still fit.
  CHECK(servers_needed(0.1 + 0.2 + 13.2, 13.5) == 1);
}

TEST_CASE("idle power derivation from peak") {
  CHECK(derive_idle_power(NodeTier::kOnuAp, 15.0) == doctest::Approx(9.0));
  CHECK(derive_idle_power(NodeTier::kCoreNode, 878.0) == doctest::Approx(790.2));
}

TEST_CASE("default profiles match the device tables") {
  const Topology t = build_reference_topology();
  const auto& iot = *t.node(t.index_of("iot-2-3")).processor;
  CHECK(iot.energy_per_gflops == tables::kCpuRows[0].efficiency);
  CHECK(iot.cpu_idle_power == tables::kCpuRows[0].idle_power);
  CHECK(iot.cpu_capacity_gflops == tables::kCpuRows[0].capacity);
  const auto& cloud = *t.node(t.index_of("cloud")).processor;
  CHECK(cloud.energy_per_gflops == tables::kCpuRows[3].efficiency);
  const auto& core = *t.node(t.index_of("core-1")).network;
  CHECK(core.energy_per_gbps == tables::kNetworkRows[4].efficiency);
  CHECK(core.idle_power == tables::kNetworkRows[4].idle_power);
  CHECK_FALSE(t.node(t.index_of("iot-1-1")).network.has_value());
}

TEST_CASE("tier names round trip") {
  for (NodeTier tier : kAllTiers) CHECK(tier_from_name(tier_name(tier)) == tier);
  CHECK_THROWS_AS(tier_from_name("router"), ConfigError);
}

}  // namespace
}  // namespace fogplace
