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

#include "fogplace/placement.hpp"

#include <sstream>

namespace fogplace {

Placement Placement::empty_for(const Scenario& scenario) {
  Placement p;
  for (const VirtualRequest& r : scenario.requests()) {
    p.host.emplace_back(r.vms.size(), NodeIndex::none());
  }
  return p;
}

Placement Placement::inputs_pinned(const Scenario& scenario) {
  Placement p = empty_for(scenario);
  for (std::size_t r = 0; r < scenario.requests().size(); ++r) {
    p.host[r][scenario.requests()[r].input_vm()] = scenario.source_of(r);
  }
  return p;
}

bool Placement::complete() const {
  for (const auto& row : host) {
    for (NodeIndex n : row) {
      if (!n.valid()) return false;
    }
  }
  return true;
}

namespace {

void check_shape(const Scenario& scenario, const Placement& placement) {
  const auto& reqs = scenario.requests();
  bool ok = placement.host.size() == reqs.size();
  for (std::size_t r = 0; ok && r < reqs.size(); ++r) {
    ok = placement.host[r].size() == reqs[r].vms.size();
  }
  if (!ok) {
    throw std::invalid_argument("placement shape does not match the scenario");
  }
  for (const auto& row : placement.host) {
    for (NodeIndex n : row) {
      if (n.valid() && n.get() >= scenario.topology().size()) {
        throw std::invalid_argument("placement references an unknown node");
      }
    }
  }
}

}  // namespace

TrafficMatrix traffic_from_placement(const Scenario& scenario,
                                     const Placement& placement) {
  check_shape(scenario, placement);
  TrafficMatrix traffic;
  const auto& reqs = scenario.requests();
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    for (const VirtualLink& l : reqs[r].links) {
      NodeIndex b = placement.host[r][l.from_vm];
      NodeIndex e = placement.host[r][l.to_vm];
      if (!b.valid() || !e.valid() || b == e || l.data_rate <= 0.0) continue;
      traffic[{b, e}] += l.data_rate;
    }
  }
  return traffic;
}

DerivedState derive_state(const Scenario& scenario,
                          const Placement& placement) {
  const Topology& topo = scenario.topology();
  const std::size_t n = topo.size();
  DerivedState st;
  st.traffic = traffic_from_placement(scenario, placement);
  st.lambda = aggregate_node_traffic(topo, st.traffic);
  st.beta.assign(n, 0);
  st.omega.assign(n, 0.0);
  st.theta.assign(n, 0.0);
  st.n_servers.assign(n, 0);
  st.phi.assign(n, 0);
  st.vm_count.assign(n, 0);

  const auto& reqs = scenario.requests();
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    for (std::size_t s = 0; s < reqs[r].vms.size(); ++s) {
      NodeIndex h = placement.host[r][s];
      if (!h.valid()) continue;
      st.omega[h.get()] += reqs[r].vms[s].cpu_demand;
      st.vm_count[h.get()] += 1;
    }
  }
  for (const auto& [pair, rate] : st.traffic) {
    st.theta[pair.first.get()] += rate;
    st.theta[pair.second.get()] += rate;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Node& node = topo.nodes()[i];
    if (node.processor) {
      st.phi[i] = st.vm_count[i] > 0 ? 1 : 0;
      st.n_servers[i] =
          servers_needed(st.omega[i], node.processor->cpu_capacity_gflops);
    }
    st.beta[i] = st.lambda[i] > 0.0 ? 1 : 0;
  }
  // A source device with a pinned request generates the input stream.
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    st.beta[scenario.source_of(r).get()] = 1;
  }
  return st;
}

std::string_view violation_name(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUnplaced: return "unplaced-vm";
    case ViolationKind::kInputNotPinned: return "input-not-at-source";
    case ViolationKind::kIotVmLimit: return "iot-vm-limit";
    case ViolationKind::kNotProcessing: return "not-a-processing-node";
    case ViolationKind::kCpuCapacity: return "cpu-capacity";
    case ViolationKind::kBitrateCapacity: return "bitrate-capacity";
  }
  return "unknown";
}

bool is_vm_limited(const Scenario& scenario, NodeIndex n) {
  const Node& node = scenario.topology().node(n);
  if (node.tier != NodeTier::kIoTDevice) return false;
  return !node.is_source || scenario.cap_source_iot();
}

std::vector<Violation> check_constraints(const Scenario& scenario,
                                         const Placement& placement,
                                         CheckMode mode) {
  std::vector<Violation> out;
  const auto& reqs = scenario.requests();
  const Topology& topo = scenario.topology();
  auto vm_name = [&](std::size_t r, std::size_t s) {
    return "request '" + reqs[r].id + "' vm " + std::to_string(s);
  };

  bool shape_ok = placement.host.size() == reqs.size();
  for (std::size_t r = 0; shape_ok && r < reqs.size(); ++r) {
    shape_ok = placement.host[r].size() == reqs[r].vms.size();
  }
  if (!shape_ok) {
    out.push_back({ViolationKind::kUnplaced,
                   "placement does not cover the scenario's VMs"});
    return out;
  }

  bool hosts_ok = true;
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    for (std::size_t s = 0; s < reqs[r].vms.size(); ++s) {
      NodeIndex h = placement.host[r][s];
      bool input = reqs[r].vms[s].is_input;
      if (!h.valid()) {
        if (mode == CheckMode::kComplete) {
          out.push_back({input ? ViolationKind::kInputNotPinned
                               : ViolationKind::kUnplaced,
                         vm_name(r, s) + " is not embedded"});
        }
        continue;
      }
      if (h.get() >= topo.size()) {
        out.push_back({ViolationKind::kNotProcessing,
                       vm_name(r, s) + " references an unknown node"});
        hosts_ok = false;
        continue;
      }
      if (input && h != scenario.source_of(r)) {
        out.push_back({ViolationKind::kInputNotPinned,
                       vm_name(r, s) + " is an input layer on '" +
                           topo.node(h).id + "' instead of source '" +
                           reqs[r].source_node + "'"});
      }
      if (!topo.is_processing(h)) {
        out.push_back({ViolationKind::kNotProcessing,
                       vm_name(r, s) + " is placed on '" + topo.node(h).id +
                           "' which cannot process"});
        hosts_ok = false;
      }
    }
  }
  if (!hosts_ok) return out;

  DerivedState st = derive_state(scenario, placement);
  for (std::size_t i = 0; i < topo.size(); ++i) {
    const Node& node = topo.nodes()[i];
    NodeIndex idx(i);
    if (is_vm_limited(scenario, idx) && st.vm_count[i] > scenario.k()) {
      out.push_back({ViolationKind::kIotVmLimit,
                     "IoT device '" + node.id + "' hosts " +
                         std::to_string(st.vm_count[i]) + " VMs, limit k = " +
                         std::to_string(scenario.k()) + ""});
    }
    if (node.processor && st.n_servers[i] > node.processor->max_cpus) {
      std::ostringstream os;
      os << "node '" << node.id << "' needs " << st.n_servers[i]
         << " CPUs for " << st.omega[i] << " GFLOPS but has "
         << node.processor->max_cpus;
      out.push_back({ViolationKind::kCpuCapacity, os.str()});
    }
    if (node.network &&
        st.lambda[i] > node.network->bitrate_capacity * (1.0 + 1e-9)) {
      std::ostringstream os;
      os << "node '" << node.id << "' carries " << st.lambda[i]
         << " Gb/s above its capacity " << node.network->bitrate_capacity;
      out.push_back({ViolationKind::kBitrateCapacity, os.str()});
    }
  }
  return out;
}

}  // namespace fogplace
