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

// Straight-line recomputation of the objective used as a test oracle. Walks
// every virtual link along its route instead of going through the traffic
// matrix, and recounts CPUs with integer search rather than ceil.

#ifndef FOGPLACE_TESTS_ORACLE_HPP_
#define FOGPLACE_TESTS_ORACLE_HPP_

#include <vector>

#include "fogplace/placement.hpp"

namespace fogplace::testing {

inline int cpus_for(double omega, double cap) {
  int n = 0;
  while (n * cap < omega * (1.0 - 1e-12)) ++n;
  return n;
}

inline double oracle_power(const Scenario& s, const Placement& p) {
  const Topology& t = s.topology();
  std::vector<double> lambda(t.size(), 0.0), omega(t.size(), 0.0),
      theta(t.size(), 0.0);
  std::vector<int> hosted(t.size(), 0);
  std::vector<bool> active(t.size(), false);
  for (std::size_t r = 0; r < s.requests().size(); ++r) {
    const VirtualRequest& req = s.requests()[r];
    active[s.source_of(r).get()] = true;
    for (std::size_t v = 0; v < req.vms.size(); ++v) {
      omega[p.at(r, v).get()] += req.vms[v].cpu_demand;
      hosted[p.at(r, v).get()] += 1;
    }
    for (const VirtualLink& l : req.links) {
      const NodeIndex a = p.at(r, l.from_vm), b = p.at(r, l.to_vm);
      if (a == b || l.data_rate == 0.0) continue;
      theta[a.get()] += l.data_rate;
      theta[b.get()] += l.data_rate;
      for (NodeIndex n : t.route(a, b)) {
        lambda[n.get()] += l.data_rate;
        active[n.get()] = true;
      }
    }
  }
  double total = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const Node& n = t.nodes()[i];
    if (n.network) {
      total += n.network->energy_per_gbps * lambda[i];
      if (active[i]) total += n.network->idle_power * n.delta;
    }
    if (n.processor) {
      const ProcessorProfile& c = *n.processor;
      total += c.energy_per_gflops * omega[i];
      total += cpus_for(omega[i], c.cpu_capacity_gflops) * c.cpu_idle_power;
      total += c.lan_energy_per_gbps * theta[i];
      if (hosted[i] > 0) total += c.lan_idle_power * n.delta;
    }
  }
  return total;
}

// Uniformly random complete placement with inputs pinned; may be infeasible.
template <typename Rng>
Placement random_placement(const Scenario& s, Rng& rng) {
  Placement p = Placement::inputs_pinned(s);
  const auto& procs = s.topology().processing_nodes();
  for (std::size_t r = 0; r < s.requests().size(); ++r) {
    for (std::size_t v = 0; v < p.host[r].size(); ++v) {
      if (!p.host[r][v].valid()) {
        p.host[r][v] = procs[std::uniform_int_distribution<std::size_t>(
            0, procs.size() - 1)(rng)];
      }
    }
  }
  return p;
}

}  // namespace fogplace::testing

#endif  // FOGPLACE_TESTS_ORACLE_HPP_
