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

#include "search_model.hpp"

#include <algorithm>
#include <deque>

namespace fogplace::detail {

namespace {

struct LeafSignature {
  NodeTier tier;
  std::optional<ProcessorProfile> processor;
  std::optional<NetworkProfile> network;
  double delta;
  bool vm_limited;

  friend bool operator==(const LeafSignature&, const LeafSignature&) = default;
};

struct HubKey {
  NodeIndex uplink;
  NodeTier tier;
  std::optional<NetworkProfile> network;
  double delta;
  std::vector<LeafSignature> leaves;

  friend bool operator==(const HubKey&, const HubKey&) = default;
};

}  // namespace

SearchModel::SearchModel(const Scenario& scenario, bool force_routes)
    : scenario_(&scenario),
      k_(scenario.k()),
      force_routes_(force_routes && scenario.topology().is_tree()) {
  const Topology& topo = scenario.topology();
  const auto& reqs = scenario.requests();
  const std::size_t n = topo.size();

  for (std::size_t r = 0; r < reqs.size(); ++r) {
    offsets_.push_back(vms_.size());
    for (std::size_t s = 0; s < reqs[r].vms.size(); ++s) {
      FlatVm v;
      v.request = r;
      v.vm = s;
      v.demand = reqs[r].vms[s].cpu_demand;
      v.input = reqs[r].vms[s].is_input;
      v.source = scenario.source_of(r);
      vms_.push_back(std::move(v));
    }
    const std::size_t base = offsets_.back();
    for (const VirtualLink& l : reqs[r].links) {
      if (l.data_rate <= 0.0) continue;
      vms_[base + l.from_vm].adj.emplace_back(
          static_cast<std::uint32_t>(base + l.to_vm), l.data_rate);
      vms_[base + l.to_vm].adj.emplace_back(
          static_cast<std::uint32_t>(base + l.from_vm), l.data_rate);
    }
    std::deque<std::size_t> queue{base + reqs[r].input_vm()};
    vms_[queue.front()].anchored = true;
    while (!queue.empty()) {
      std::size_t u = queue.front();
      queue.pop_front();
      for (auto [w, rate] : vms_[u].adj) {
        if (!vms_[w].anchored) {
          vms_[w].anchored = true;
          queue.push_back(w);
        }
      }
    }
  }

  nodes_.resize(n);
  source_active_.assign(n, 0);
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    source_active_[scenario.source_of(r).get()] = 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Node& node = topo.nodes()[i];
    NodeData& d = nodes_[i];
    if (node.network) {
      d.has_net = true;
      d.eps = node.network->energy_per_gbps;
      d.net_idle = node.network->idle_power * node.delta;
      d.bitrate_cap = node.network->bitrate_capacity;
    }
    if (node.processor) {
      const ProcessorProfile& p = *node.processor;
      d.has_proc = true;
      d.e = p.energy_per_gflops;
      d.cpu_idle = p.cpu_idle_power;
      d.cpu_cap = p.cpu_capacity_gflops;
      d.max_cpus = p.max_cpus;
      d.el = p.lan_energy_per_gbps;
      d.lan_idle = p.lan_idle_power * node.delta;
    }
    d.vm_limited = is_vm_limited(scenario, NodeIndex(i));
  }

  // Interchangeable leaves: same hub, same parameters, not a source.
  leaf_class_.assign(n, -1);
  hub_of_.assign(n, NodeIndex::none());
  auto signature = [&](std::size_t i) {
    const Node& node = topo.nodes()[i];
    return LeafSignature{node.tier, node.processor, node.network, node.delta,
                         nodes_[i].vm_limited};
  };
  std::vector<LeafSignature> class_sig;
  for (std::size_t i = 0; i < n; ++i) {
    const Node& node = topo.nodes()[i];
    if (!node.processor || node.is_source || topo.neighbors(NodeIndex(i)).size() != 1) {
      continue;
    }
    NodeIndex hub = topo.neighbors(NodeIndex(i))[0];
    hub_of_[i] = hub;
    LeafSignature sig = signature(i);
    int found = -1;
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (hub_of_[classes_[c].front().get()] == hub && class_sig[c] == sig) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(classes_.size());
      classes_.emplace_back();
      class_sig.push_back(sig);
    }
    classes_[found].push_back(NodeIndex(i));
    leaf_class_[i] = found;
  }

  // Interchangeable hubs: every neighbor but one uplink is a class leaf, and
  // two hubs share uplink, parameters and the leaf signature sequence.
  hub_leaves_.assign(n, {});
  hub_class_.assign(n, -1);
  std::vector<HubKey> hub_keys;
  for (std::size_t h = 0; h < n; ++h) {
    const Node& node = topo.nodes()[h];
    if (node.processor) continue;
    auto nb = topo.neighbors(NodeIndex(h));
    if (nb.size() < 2) continue;
    std::vector<NodeIndex> leaves;
    std::vector<NodeIndex> others;
    for (NodeIndex m : nb) {
      if (leaf_class_[m.get()] >= 0 && hub_of_[m.get()] == NodeIndex(h)) {
        leaves.push_back(m);
      } else {
        others.push_back(m);
      }
    }
    if (others.size() != 1 || leaves.empty()) continue;
    // A non-class leaf (such as a source device) hanging off the hub would
    // have been counted in `others`.
    HubKey key{others[0], node.tier, node.network, node.delta, {}};
    for (NodeIndex m : leaves) key.leaves.push_back(signature(m.get()));
    hub_leaves_[h] = leaves;
    int found = -1;
    for (std::size_t c = 0; c < hub_keys.size(); ++c) {
      if (hub_keys[c] == key) {
        found = static_cast<int>(c);
        break;
      }
    }
    if (found < 0) {
      found = static_cast<int>(hub_keys.size());
      hub_keys.push_back(std::move(key));
      hub_classes_.emplace_back();
    }
    hub_classes_[found].push_back(NodeIndex(h));
  }
  // Drop singleton hub classes.
  std::vector<std::vector<NodeIndex>> kept;
  for (auto& cls : hub_classes_) {
    if (cls.size() < 2) continue;
    for (NodeIndex h : cls) hub_class_[h.get()] = static_cast<int>(kept.size());
    kept.push_back(std::move(cls));
  }
  hub_classes_ = std::move(kept);
}

SearchState SearchModel::empty_state() const {
  const std::size_t n = topology().size();
  SearchState s;
  s.host.assign(vms_.size(), NodeIndex::none());
  s.omega.assign(n, 0.0);
  s.lambda.assign(n, 0.0);
  s.theta.assign(n, 0.0);
  s.cost.assign(n, 0.0);
  s.vm_count.assign(n, 0);
  s.flows.assign(n, 0);
  s.forced.assign(n, 0);
  s.total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s.cost[i] = node_cost(s, i);
    s.total += s.cost[i];
  }
  return s;
}

double SearchModel::node_cost(const SearchState& s, std::size_t n) const {
  const NodeData& d = nodes_[n];
  double c = 0.0;
  if (d.has_net) {
    c += d.eps * s.lambda[n];
    if (net_active(s, n)) c += d.net_idle;
  }
  if (d.has_proc) {
    c += d.e * s.omega[n] + servers_needed(s.omega[n], d.cpu_cap) * d.cpu_idle +
         d.el * s.theta[n];
    if (s.vm_count[n] > 0) c += d.lan_idle;
  }
  return c;
}

bool SearchModel::can_host(const SearchState& s, std::size_t v,
                           NodeIndex p) const {
  const NodeData& d = nodes_[p.get()];
  if (!d.has_proc) return false;
  if (d.vm_limited && s.vm_count[p.get()] >= k_) return false;
  return servers_needed(s.omega[p.get()] + vms_[v].demand, d.cpu_cap) <=
         d.max_cpus;
}

bool SearchModel::assign(SearchState& s, std::size_t v, NodeIndex p) const {
  if (!can_host(s, v, p)) return false;
  const Topology& topo = topology();
  const FlatVm& vm = vms_[v];
  const std::size_t pi = p.get();
  bool ok = true;
  auto refresh = [&](std::size_t n) {
    double c = node_cost(s, n);
    s.total += c - s.cost[n];
    s.cost[n] = c;
    const NodeData& d = nodes_[n];
    if (d.has_net && s.lambda[n] > d.bitrate_cap * (1.0 + 1e-9)) ok = false;
  };

  s.host[v] = p;
  s.omega[pi] += vm.demand;
  s.vm_count[pi] += 1;
  refresh(pi);
  for (auto [w, rate] : vm.adj) {
    NodeIndex q = s.host[w];
    if (!q.valid() || q == p) continue;
    for (NodeIndex m : topo.path(p, q)) {
      s.lambda[m.get()] += rate;
      s.flows[m.get()] += 1;
    }
    s.theta[pi] += rate;
    s.theta[q.get()] += rate;
    for (NodeIndex m : topo.path(p, q)) refresh(m.get());
  }
  if (force_routes_ && vm.anchored && p != vm.source) {
    for (NodeIndex m : topo.path(vm.source, p)) {
      s.forced[m.get()] += 1;
      refresh(m.get());
    }
  }
  return ok;
}

Placement SearchModel::to_placement(const SearchState& s) const {
  Placement p = Placement::empty_for(*scenario_);
  for (std::size_t v = 0; v < vms_.size(); ++v) {
    p.host[vms_[v].request][vms_[v].vm] = s.host[v];
  }
  return p;
}

std::vector<NodeIndex> SearchModel::flatten(const Placement& p) const {
  std::vector<NodeIndex> flat(vms_.size());
  for (std::size_t v = 0; v < vms_.size(); ++v) {
    flat[v] = p.host.at(vms_[v].request).at(vms_[v].vm);
  }
  return flat;
}

bool SearchModel::hub_used(const SearchState& s, std::size_t hub) const {
  for (NodeIndex m : hub_leaves_[hub]) {
    if (s.vm_count[m.get()] > 0) return true;
  }
  return false;
}

bool SearchModel::symmetry_allows(const SearchState& s, NodeIndex p) const {
  const int c = leaf_class_[p.get()];
  if (c < 0 || s.vm_count[p.get()] > 0) return true;
  for (NodeIndex m : classes_[c]) {
    if (s.vm_count[m.get()] == 0) {
      if (m != p) return false;
      break;
    }
  }
  const std::size_t hub = hub_of_[p.get()].get();
  const int hc = hub_class_[hub];
  if (hc < 0 || hub_used(s, hub)) return true;
  for (NodeIndex g : hub_classes_[hc]) {
    if (!hub_used(s, g.get())) return g.get() == hub;
  }
  return true;
}

std::vector<NodeIndex> SearchModel::canonical(
    const std::vector<NodeIndex>& host) const {
  const std::size_t n = topology().size();
  std::vector<NodeIndex> leaf_map(n), hub_map(n);
  std::vector<char> taken(n, 0), hub_taken(n, 0);
  auto lowest_free = [&](int cls) {
    for (NodeIndex m : classes_[cls]) {
      if (!taken[m.get()]) return m;
    }
    return NodeIndex::none();
  };
  auto position = [&](std::size_t hub, NodeIndex leaf) {
    const auto& ls = hub_leaves_[hub];
    return static_cast<std::size_t>(std::find(ls.begin(), ls.end(), leaf) -
                                    ls.begin());
  };

  std::vector<NodeIndex> out = host;
  for (NodeIndex& h : out) {
    if (!h.valid() || leaf_class_[h.get()] < 0) continue;
    if (leaf_map[h.get()].valid()) {
      h = leaf_map[h.get()];
      continue;
    }
    const std::size_t a = hub_of_[h.get()].get();
    const int hc = hub_class_[a];
    NodeIndex target;
    if (hc < 0) {
      target = lowest_free(leaf_class_[h.get()]);
    } else {
      const std::size_t pos = position(a, h);
      if (!hub_map[a].valid()) {
        NodeIndex best_hub;
        for (NodeIndex g : hub_classes_[hc]) {
          if (hub_taken[g.get()]) continue;
          NodeIndex cand =
              lowest_free(leaf_class_[hub_leaves_[g.get()][pos].get()]);
          if (!target.valid() || cand < target) {
            target = cand;
            best_hub = g;
          }
        }
        hub_map[a] = best_hub;
        hub_taken[best_hub.get()] = 1;
      } else {
        const std::size_t b = hub_map[a].get();
        target = lowest_free(leaf_class_[hub_leaves_[b][pos].get()]);
      }
    }
    leaf_map[h.get()] = target;
    taken[target.get()] = 1;
    h = target;
  }
  return out;
}

}  // namespace fogplace::detail
