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

// Incremental evaluation of partial placements for the tree search. Not part
// of the public API.

#ifndef FOGPLACE_SRC_SEARCH_MODEL_HPP_
#define FOGPLACE_SRC_SEARCH_MODEL_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "fogplace/placement.hpp"

namespace fogplace::detail {

struct FlatVm {
  std::size_t request = 0;
  std::size_t vm = 0;
  double demand = 0.0;
  bool input = false;
  NodeIndex source;
  // Connected to its input VM through links of positive rate.
  bool anchored = false;
  std::vector<std::pair<std::uint32_t, double>> adj;  // flat vm, rate > 0
};

struct SearchState {
  std::vector<NodeIndex> host;  // per flat vm
  std::vector<double> omega, lambda, theta, cost;
  std::vector<int> vm_count, flows, forced;
  double total = 0.0;
};

class SearchModel {
 public:
  // With `force_routes`, placing an anchored VM on p marks the route from its
  // source to p as active right away. On a tree that route is activated in
  // every completion, so partial totals become a tighter lower bound while
  // complete totals are unchanged. Ignored on non-tree topologies.
  SearchModel(const Scenario& scenario, bool force_routes);

  const Scenario& scenario() const { return *scenario_; }
  const Topology& topology() const { return scenario_->topology(); }
  const std::vector<FlatVm>& vms() const { return vms_; }
  std::size_t flat_index(std::size_t r, std::size_t s) const {
    return offsets_[r] + s;
  }
  bool force_routes() const { return force_routes_; }

  SearchState empty_state() const;

  // Places VM v on p. Returns false when p cannot take it (not processing,
  // CPU capacity, per-IoT VM limit, bitrate capacity); `s` is then left in a
  // partially updated state and must be discarded.
  bool assign(SearchState& s, std::size_t v, NodeIndex p) const;

  // Cheap pre-check of CPU capacity and the VM limit only.
  bool can_host(const SearchState& s, std::size_t v, NodeIndex p) const;

  bool net_active(const SearchState& s, std::size_t n) const {
    return s.flows[n] > 0 || s.forced[n] > 0 || source_active_[n];
  }

  Placement to_placement(const SearchState& s) const;
  std::vector<NodeIndex> flatten(const Placement& p) const;

  // Per-node constants.
  struct NodeData {
    bool has_net = false;
    double eps = 0.0;
    double net_idle = 0.0;  // idle * delta
    double bitrate_cap = 0.0;
    bool has_proc = false;
    double e = 0.0;
    double cpu_idle = 0.0;
    double cpu_cap = 1.0;
    int max_cpus = 0;
    double el = 0.0;
    double lan_idle = 0.0;  // LAN idle * delta
    bool vm_limited = false;
  };
  const NodeData& node(std::size_t n) const { return nodes_[n]; }
  int k() const { return k_; }

  // Interchangeable-node structure used for symmetry breaking.
  // leaf_class(n) >= 0 for non-source processing leaves that are
  // interchangeable with every other member of their class.
  int leaf_class(std::size_t n) const { return leaf_class_[n]; }
  const std::vector<std::vector<NodeIndex>>& leaf_classes() const {
    return classes_;
  }
  // True when p may be opened without losing an optimum up to symmetry.
  bool symmetry_allows(const SearchState& s, NodeIndex p) const;

  // Lexicographically smallest placement (flat order) among those
  // equivalent to `host` under the node symmetries.
  std::vector<NodeIndex> canonical(const std::vector<NodeIndex>& host) const;

 private:
  double node_cost(const SearchState& s, std::size_t n) const;
  bool hub_used(const SearchState& s, std::size_t hub) const;

  const Scenario* scenario_;
  std::vector<FlatVm> vms_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeData> nodes_;
  std::vector<char> source_active_;
  int k_ = 0;
  bool force_routes_ = false;

  std::vector<int> leaf_class_;
  std::vector<std::vector<NodeIndex>> classes_;
  std::vector<NodeIndex> hub_of_;                 // per node, for class leaves
  std::vector<std::vector<NodeIndex>> hub_leaves_;  // per node (hubs only)
  std::vector<int> hub_class_;                    // per node, -1 if none
  std::vector<std::vector<NodeIndex>> hub_classes_;
};

}  // namespace fogplace::detail

#endif  // FOGPLACE_SRC_SEARCH_MODEL_HPP_
