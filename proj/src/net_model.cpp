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

#include "fogplace/net_model.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <sstream>

namespace fogplace {

namespace {

constexpr std::pair<NodeTier, std::string_view> kTierNames[] = {
    {NodeTier::kIoTDevice, "iot_device"},
    {NodeTier::kOnuAp, "onu_ap"},
    {NodeTier::kOlt, "olt"},
    {NodeTier::kAccessFog, "access_fog"},
    {NodeTier::kMetroSwitch, "metro_switch"},
    {NodeTier::kMetroRouter, "metro_router"},
    {NodeTier::kMetroFog, "metro_fog"},
    {NodeTier::kCoreNode, "core_node"},
    {NodeTier::kCloudDc, "cloud_dc"},
};

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

void check_non_negative(double v, const std::string& node,
                        const char* field) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    fail("node '" + node + "': " + field + " must be a finite value >= 0");
  }
}

}  // namespace

bool is_processing_tier(NodeTier tier) {
  return std::find(std::begin(kProcessingTiers), std::end(kProcessingTiers),
                   tier) != std::end(kProcessingTiers);
}

bool is_shared_tier(NodeTier tier) {
  switch (tier) {
    case NodeTier::kOlt:
    case NodeTier::kMetroSwitch:
    case NodeTier::kMetroRouter:
    case NodeTier::kCoreNode:
    case NodeTier::kMetroFog:
    case NodeTier::kCloudDc:
      return true;
    default:
      return false;
  }
}

std::string_view tier_name(NodeTier tier) {
  for (const auto& [t, name] : kTierNames) {
    if (t == tier) return name;
  }
  return "unknown";
}

NodeTier tier_from_name(std::string_view name) {
  for (const auto& [t, n] : kTierNames) {
    if (n == name) return t;
  }
  fail("unknown node tier '" + std::string(name) + "'");
}

double derive_idle_power(NodeTier tier, double peak_power) {
  return (tier == NodeTier::kOnuAp ? 0.6 : 0.9) * peak_power;
}

int servers_needed(double omega, double cpu_capacity_gflops) {
  if (omega <= 0.0) return 0;
  return static_cast<int>(std::ceil(omega / cpu_capacity_gflops - 1e-9));
}

Topology::Topology(std::vector<Node> nodes,
                   std::vector<std::pair<std::string, std::string>> links,
                   bool require_tree)
    : nodes_(std::move(nodes)), require_tree_(require_tree) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id.empty()) fail("node " + std::to_string(i) + ": empty id");
    if (!by_id_.emplace(nodes_[i].id, NodeIndex(i)).second) {
      fail("duplicate node id '" + nodes_[i].id + "'");
    }
  }
  adjacency_.resize(nodes_.size());
  std::set<std::pair<NodeIndex, NodeIndex>> seen;
  for (const auto& [a, b] : links) {
    NodeIndex ia = index_of(a);
    NodeIndex ib = index_of(b);
    if (ia == ib) fail("self-loop link at '" + a + "'");
    auto key = std::minmax(ia, ib);
    if (!seen.insert(key).second) {
      fail("duplicate link '" + a + "' -- '" + b + "'");
    }
    links_.emplace_back(ia, ib);
    adjacency_[ia.get()].push_back(ib);
    adjacency_[ib.get()].push_back(ia);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].processor) processing_.push_back(NodeIndex(i));
  }
  validate();
  compute_paths();
}

void Topology::validate() const {
  if (nodes_.empty()) fail("topology has no nodes");
  for (const Node& n : nodes_) {
    bool proc_tier = is_processing_tier(n.tier);
    if (proc_tier != n.processor.has_value()) {
      fail("node '" + n.id + "': processor profile " +
           (proc_tier ? "missing on" : "not allowed on") + " tier " +
           std::string(tier_name(n.tier)));
    }
    if (n.is_source && n.tier != NodeTier::kIoTDevice) {
      fail("node '" + n.id + "': only IoT devices can be sources");
    }
    if (!(n.delta > 0.0 && n.delta <= 1.0)) {
      fail("node '" + n.id + "': delta must lie in (0, 1]");
    }
    if (n.network) {
      check_non_negative(n.network->energy_per_gbps, n.id, "energy_per_gbps");
      check_non_negative(n.network->idle_power, n.id, "idle_power");
      if (!(n.network->bitrate_capacity > 0.0)) {
        fail("node '" + n.id + "': bitrate_capacity must be > 0");
      }
    }
    if (n.processor) {
      const ProcessorProfile& p = *n.processor;
      check_non_negative(p.energy_per_gflops, n.id, "energy_per_gflops");
      check_non_negative(p.cpu_idle_power, n.id, "cpu_idle_power");
      check_non_negative(p.lan_energy_per_gbps, n.id, "lan_energy_per_gbps");
      check_non_negative(p.lan_idle_power, n.id, "lan_idle_power");
      if (!(p.cpu_capacity_gflops > 0.0)) {
        fail("node '" + n.id + "': cpu_capacity_gflops must be > 0");
      }
      if (p.max_cpus < 0) fail("node '" + n.id + "': max_cpus must be >= 0");
    }
  }
  // Connectivity.
  std::vector<char> seen(nodes_.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (NodeIndex v : adjacency_[u]) {
      if (!seen[v.get()]) {
        seen[v.get()] = 1;
        ++reached;
        queue.push_back(v.get());
      }
    }
  }
  if (reached != nodes_.size()) fail("topology is not connected");
  if (require_tree_ && links_.size() + 1 != nodes_.size()) {
    fail("topology is required to be a tree but has " +
         std::to_string(links_.size()) + " links for " +
         std::to_string(nodes_.size()) + " nodes");
  }
}

void Topology::compute_paths() {
  const std::size_t n = nodes_.size();
  is_tree_ = links_.size() + 1 == n;
  paths_.assign(n * n, {});
  std::vector<std::size_t> parent(n);
  for (std::size_t src = 0; src < n; ++src) {
    std::fill(parent.begin(), parent.end(), n);
    parent[src] = src;
    std::deque<std::size_t> queue{src};
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (NodeIndex v : adjacency_[u]) {
        if (parent[v.get()] == n) {
          parent[v.get()] = u;
          queue.push_back(v.get());
        }
      }
    }
    for (std::size_t dst = src + 1; dst < n; ++dst) {
      auto& p = paths_[src * n + dst];
      for (std::size_t v = dst; v != src; v = parent[v]) p.push_back(NodeIndex(v));
      p.push_back(NodeIndex(src));
      std::reverse(p.begin(), p.end());
    }
  }
  // route(e, b) is route(b, e) reversed, also on graphs with cycles.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      const auto& fwd = paths_[b * n + a];
      paths_[a * n + b].assign(fwd.rbegin(), fwd.rend());
    }
  }
}

std::optional<NodeIndex> Topology::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

NodeIndex Topology::index_of(std::string_view id) const {
  auto found = find(id);
  if (!found) fail("unknown node id '" + std::string(id) + "'");
  return *found;
}

std::vector<NodeIndex> Topology::route(NodeIndex b, NodeIndex e) const {
  if (!b.valid() || !e.valid() || b.get() >= size() || e.get() >= size()) {
    throw std::out_of_range("route: unknown node");
  }
  if (b == e) throw std::invalid_argument("route: endpoints must differ");
  auto p = path(b, e);
  return {p.begin(), p.end()};
}

std::vector<NodeIndex> Topology::route(std::string_view b,
                                       std::string_view e) const {
  return route(index_of(b), index_of(e));
}

Topology Topology::with_shared_delta(double delta) const {
  if (!(delta > 0.0 && delta <= 1.0)) fail("delta must lie in (0, 1]");
  Topology copy = *this;
  for (Node& n : copy.nodes_) {
    if (is_shared_tier(n.tier)) n.delta = delta;
  }
  return copy;
}

Topology build_reference_topology(const ReferenceConfig& cfg) {
  if (cfg.zones < 1) fail("reference topology needs at least one zone");
  if (cfg.iot_per_zone < 1) fail("reference topology needs iot_per_zone >= 1");
  if (cfg.core_hops < 1) fail("reference topology needs core_hops >= 1");

  std::vector<Node> nodes;
  std::vector<std::pair<std::string, std::string>> links;
  auto add = [&](std::string id, NodeTier tier, double delta) -> Node& {
    Node n;
    n.id = std::move(id);
    n.tier = tier;
    n.delta = delta;
    nodes.push_back(std::move(n));
    return nodes.back();
  };

  bool source_found = false;
  for (int z = 1; z <= cfg.zones; ++z) {
    for (int i = 1; i <= cfg.iot_per_zone; ++i) {
      Node& n = add("iot-" + std::to_string(z) + "-" + std::to_string(i),
                    NodeTier::kIoTDevice, cfg.iot_delta);
      n.zone = z;
      n.processor = cfg.iot_cpu;
      if (n.id == cfg.source_id) {
        n.is_source = true;
        source_found = true;
      }
      links.emplace_back(n.id, "onu-" + std::to_string(z));
    }
  }
  if (!source_found) {
    fail("source '" + cfg.source_id + "' is not an IoT device of the topology");
  }
  for (int z = 1; z <= cfg.zones; ++z) {
    Node& n = add("onu-" + std::to_string(z), NodeTier::kOnuAp, cfg.onu_delta);
    n.zone = z;
    n.network = cfg.onu;
    links.emplace_back(n.id, "olt");
  }
  add("olt", NodeTier::kOlt, cfg.delta).network = cfg.olt;
  add("afn", NodeTier::kAccessFog, cfg.afn_delta).processor = cfg.afn_cpu;
  links.emplace_back("afn", "olt");
  add("metro-switch", NodeTier::kMetroSwitch, cfg.delta).network =
      cfg.metro_switch;
  links.emplace_back("olt", "metro-switch");
  add("mfn", NodeTier::kMetroFog, cfg.delta).processor = cfg.mfn_cpu;
  links.emplace_back("mfn", "metro-switch");
  add("metro-router", NodeTier::kMetroRouter, cfg.delta).network =
      cfg.metro_router;
  links.emplace_back("metro-switch", "metro-router");
  std::string prev = "metro-router";
  for (int h = 1; h <= cfg.core_hops; ++h) {
    std::string id = "core-" + std::to_string(h);
    add(id, NodeTier::kCoreNode, cfg.delta).network = cfg.core;
    links.emplace_back(prev, id);
    prev = id;
  }
  add("cloud", NodeTier::kCloudDc, cfg.delta).processor = cfg.cloud_cpu;
  links.emplace_back(prev, "cloud");
  return Topology(std::move(nodes), std::move(links), /*require_tree=*/true);
}

namespace {

void check_demand(const Topology& t, NodeIndex b, NodeIndex e, double rate) {
  if (!b.valid() || !e.valid() || b.get() >= t.size() || e.get() >= t.size()) {
    throw std::invalid_argument("traffic demand references an unknown node");
  }
  if (!t.is_processing(b) || !t.is_processing(e)) {
    throw std::invalid_argument("traffic demand between '" + t.node(b).id +
                                "' and '" + t.node(e).id +
                                "' references a non-processing node");
  }
  if (b == e) {
    throw std::invalid_argument("traffic demand from '" + t.node(b).id +
                                "' to itself");
  }
  if (!(rate >= 0.0)) throw std::invalid_argument("negative traffic demand");
}

}  // namespace

std::vector<double> aggregate_node_traffic(const Topology& topology,
                                           const TrafficMatrix& demands) {
  std::vector<double> lambda(topology.size(), 0.0);
  for (const auto& [pair, rate] : demands) {
    check_demand(topology, pair.first, pair.second, rate);
    for (NodeIndex n : topology.path(pair.first, pair.second)) {
      lambda[n.get()] += rate;
    }
  }
  return lambda;
}

std::vector<double> link_loads(const Topology& topology,
                               const TrafficMatrix& demands) {
  std::map<std::pair<NodeIndex, NodeIndex>, double> load;
  for (const ArcFlow& f : decompose_flows(topology, demands)) {
    load[std::minmax(f.from, f.to)] += f.amount;
  }
  std::vector<double> out;
  out.reserve(topology.links().size());
  for (const auto& [a, b] : topology.links()) {
    auto it = load.find(std::minmax(a, b));
    out.push_back(it == load.end() ? 0.0 : it->second);
  }
  return out;
}

std::vector<ArcFlow> decompose_flows(const Topology& topology,
                                     const TrafficMatrix& demands) {
  std::vector<ArcFlow> flows;
  for (const auto& [pair, rate] : demands) {
    check_demand(topology, pair.first, pair.second, rate);
    auto p = topology.path(pair.first, pair.second);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      flows.push_back({pair.first, pair.second, p[i], p[i + 1], rate});
    }
  }
  return flows;
}

double conservation_residual(const Topology& topology,
                             const TrafficMatrix& demands,
                             std::span<const ArcFlow> flows) {
  // net[(b, e)][m] = out - in
  std::map<std::pair<NodeIndex, NodeIndex>, std::vector<double>> net;
  for (const auto& [pair, rate] : demands) {
    net[pair].assign(topology.size(), 0.0);
  }
  for (const ArcFlow& f : flows) {
    auto& v = net[{f.b, f.e}];
    if (v.empty()) v.assign(topology.size(), 0.0);
    v[f.from.get()] += f.amount;
    v[f.to.get()] -= f.amount;
  }
  double worst = 0.0;
  for (const auto& [pair, v] : net) {
    auto it = demands.find(pair);
    double rate = it == demands.end() ? 0.0 : it->second;
    for (std::size_t m = 0; m < v.size(); ++m) {
      double expected = 0.0;
      if (NodeIndex(m) == pair.first) expected = rate;
      if (NodeIndex(m) == pair.second) expected = -rate;
      worst = std::max(worst, std::abs(v[m] - expected));
    }
  }
  return worst;
}

}  // namespace fogplace
