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

// Physical IoT -> PON access -> metro -> core -> cloud topology, with the
// per-device power profiles used by the energy objective.

#ifndef FOGPLACE_NET_MODEL_HPP_
#define FOGPLACE_NET_MODEL_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace fogplace {

// Raised for malformed topologies, scenarios and configuration values.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class NodeTier {
  kIoTDevice,
  kOnuAp,
  kOlt,
  kAccessFog,
  kMetroSwitch,
  kMetroRouter,
  kMetroFog,
  kCoreNode,
  kCloudDc,
};

inline constexpr NodeTier kAllTiers[] = {
    NodeTier::kIoTDevice,   NodeTier::kOnuAp,       NodeTier::kOlt,
    NodeTier::kAccessFog,   NodeTier::kMetroSwitch, NodeTier::kMetroRouter,
    NodeTier::kMetroFog,    NodeTier::kCoreNode,    NodeTier::kCloudDc,
};

// Tiers that may host VMs.
inline constexpr NodeTier kProcessingTiers[] = {
    NodeTier::kIoTDevice, NodeTier::kAccessFog, NodeTier::kMetroFog,
    NodeTier::kCloudDc};

bool is_processing_tier(NodeTier tier);
std::string_view tier_name(NodeTier tier);
NodeTier tier_from_name(std::string_view name);

// Dense index of a node inside one Topology.
struct NodeIndex {
  std::uint32_t value = kNone;

  static constexpr std::uint32_t kNone =
      std::numeric_limits<std::uint32_t>::max();

  constexpr NodeIndex() = default;
  constexpr explicit NodeIndex(std::size_t v)
      : value(static_cast<std::uint32_t>(v)) {}

  constexpr bool valid() const { return value != kNone; }
  constexpr std::size_t get() const { return value; }
  static constexpr NodeIndex none() { return NodeIndex(); }

  friend constexpr auto operator<=>(NodeIndex, NodeIndex) = default;
};

struct NetworkProfile {
  double energy_per_gbps = 0.0;  // W per Gb/s
  double idle_power = 0.0;       // W
  double bitrate_capacity = 0.0; // Gb/s

  friend bool operator==(const NetworkProfile&,
                         const NetworkProfile&) = default;
};

struct ProcessorProfile {
  double energy_per_gflops = 0.0;    // W per GFLOPS
  double cpu_idle_power = 0.0;       // W per active CPU
  double cpu_capacity_gflops = 0.0;  // GFLOPS per CPU
  int max_cpus = 1;
  double lan_energy_per_gbps = 0.0;  // W per Gb/s through the node LAN
  double lan_idle_power = 0.0;       // W while the node hosts anything

  double total_capacity() const { return max_cpus * cpu_capacity_gflops; }

  friend bool operator==(const ProcessorProfile&,
                         const ProcessorProfile&) = default;
};

struct Node {
  std::string id;
  NodeTier tier = NodeTier::kIoTDevice;
  std::optional<int> zone;
  std::optional<NetworkProfile> network;
  std::optional<ProcessorProfile> processor;
  bool is_source = false;
  // Share of this node's idle power attributed to the application. Scales the
  // network idle term and the LAN idle term of the node.
  double delta = 1.0;

  friend bool operator==(const Node&, const Node&) = default;
};

// Idle power derived from the peak when a datasheet gives only the maximum:
// 60% for lightly shared ONU access points, 90% for everything else.
double derive_idle_power(NodeTier tier, double peak_power);

// Number of CPUs that must be active to serve `omega` GFLOPS. Loads within
// 1e-9 of a CPU boundary are treated as fitting.
int servers_needed(double omega, double cpu_capacity_gflops);

// Immutable physical graph. Routes between every node pair are computed once
// at construction: BFS shortest paths from the lower-indexed endpoint, so
// route(e, b) is always route(b, e) reversed. On a tree they are the unique
// simple paths.
class Topology {
 public:
  Topology() = default;
  Topology(std::vector<Node> nodes,
           std::vector<std::pair<std::string, std::string>> links,
           bool require_tree);

  std::size_t size() const { return nodes_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(NodeIndex n) const { return nodes_.at(n.get()); }
  const std::vector<std::pair<NodeIndex, NodeIndex>>& links() const {
    return links_;
  }
  std::span<const NodeIndex> neighbors(NodeIndex n) const {
    return adjacency_.at(n.get());
  }

  std::optional<NodeIndex> find(std::string_view id) const;
  NodeIndex index_of(std::string_view id) const;  // throws ConfigError

  bool is_tree() const { return is_tree_; }
  bool require_tree() const { return require_tree_; }

  const std::vector<NodeIndex>& processing_nodes() const {
    return processing_;
  }
  bool is_processing(NodeIndex n) const {
    return nodes_.at(n.get()).processor.has_value();
  }

  // Ordered node sequence from b to e, both included. Throws on b == e.
  std::vector<NodeIndex> route(NodeIndex b, NodeIndex e) const;
  std::vector<NodeIndex> route(std::string_view b, std::string_view e) const;

  // Same path without allocation; valid for b != e.
  std::span<const NodeIndex> path(NodeIndex b, NodeIndex e) const {
    return paths_[b.get() * nodes_.size() + e.get()];
  }

  // Copy with `delta` applied to every highly shared tier (OLT, metro
  // switch/router, core, MFN and cloud).
  Topology with_shared_delta(double delta) const;

  friend bool operator==(const Topology& a, const Topology& b) {
    return a.nodes_ == b.nodes_ && a.links_ == b.links_ &&
           a.require_tree_ == b.require_tree_;
  }

 private:
  void validate() const;
  void compute_paths();

  std::vector<Node> nodes_;
  std::vector<std::pair<NodeIndex, NodeIndex>> links_;
  std::vector<std::vector<NodeIndex>> adjacency_;
  std::unordered_map<std::string, NodeIndex> by_id_;
  std::vector<NodeIndex> processing_;
  std::vector<std::vector<NodeIndex>> paths_;
  bool require_tree_ = false;
  bool is_tree_ = false;
};

bool is_shared_tier(NodeTier tier);

// Device parameters of the reference cloud-fog network. Defaults are the
// datasheet values for each device class.
struct ReferenceConfig {
  int zones = 4;
  int iot_per_zone = 5;
  int core_hops = 1;
  std::string source_id = "iot-1-1";
  double delta = 0.03;  // applied to the shared tiers
  double iot_delta = 1.0;
  double onu_delta = 1.0;
  double afn_delta = 1.0;

  ProcessorProfile iot_cpu{0.35, 2.56, 13.5, 4, 0.0, 0.0};
  ProcessorProfile afn_cpu{0.67, 13.8, 34.5, 16, 0.0, 0.0};
  ProcessorProfile mfn_cpu{0.67, 13.8, 34.5, 20, 0.0, 0.0};
  ProcessorProfile cloud_cpu{0.55, 58.7, 428.0, 64, 0.0, 0.0};

  NetworkProfile onu{0.6, 9.0, 10.0};
  NetworkProfile olt{0.22, 60.0, 8600.0};
  NetworkProfile metro_router{0.08, 27.0, 40.0};
  NetworkProfile metro_switch{0.08, 423.0, 600.0};
  NetworkProfile core{0.14, 790.0, 40.0};
};

// Builds the tree: IoT devices -> zone ONU -> OLT (+AFN) -> metro switch
// (+MFN) -> metro router -> core_hops IP/WDM nodes -> cloud DC.
// Node ids: iot-<zone>-<i>, onu-<zone>, olt, afn, metro-switch, mfn,
// metro-router, core-<h>, cloud. IoT devices come first in index order.
Topology build_reference_topology(const ReferenceConfig& cfg = {});

// Demand between processing nodes (b, e), b != e, in Gb/s.
using TrafficMatrix = std::map<std::pair<NodeIndex, NodeIndex>, double>;

// lambda_n: every flow is added once to each node on its route, endpoints
// included.
std::vector<double> aggregate_node_traffic(const Topology& topology,
                                           const TrafficMatrix& demands);

// Traffic carried by each physical link (both directions summed), in the
// order of Topology::links().
std::vector<double> link_loads(const Topology& topology,
                               const TrafficMatrix& demands);

// Per-flow, per-arc decomposition of a traffic matrix over the routes.
struct ArcFlow {
  NodeIndex b, e;    // flow endpoints
  NodeIndex from, to;  // physical arc
  double amount = 0.0;
};
std::vector<ArcFlow> decompose_flows(const Topology& topology,
                                     const TrafficMatrix& demands);

// Checks out - in == +demand at b, -demand at e and 0 elsewhere for every
// flow. Returns the largest absolute imbalance found.
double conservation_residual(const Topology& topology,
                             const TrafficMatrix& demands,
                             std::span<const ArcFlow> flows);

}  // namespace fogplace

#endif  // FOGPLACE_NET_MODEL_HPP_
