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

#include "fogplace/power.hpp"

namespace fogplace {

namespace {

std::string describe(const std::vector<Violation>& violations) {
  std::string msg = "infeasible placement:";
  for (const Violation& v : violations) msg += "\n  " + v.message;
  return msg;
}

}  // namespace

InfeasiblePlacement::InfeasiblePlacement(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)),
      violations_(std::move(violations)) {}

NetworkPower network_power(const Topology& topology,
                           const DerivedState& state) {
  NetworkPower out;
  for (std::size_t i = 0; i < topology.size(); ++i) {
    const Node& node = topology.nodes()[i];
    if (!node.network) {
      if (state.lambda[i] > 0.0 && !node.processor) {
        throw std::invalid_argument("node '" + node.id +
                                    "' carries traffic without a network "
                                    "profile");
      }
      continue;
    }
    out.proportional += node.network->energy_per_gbps * state.lambda[i];
    if (state.beta[i]) out.idle += node.network->idle_power * node.delta;
  }
  return out;
}

ProcessingPower processing_power(const Topology& topology,
                                 const DerivedState& state) {
  ProcessingPower out;
  for (std::size_t i = 0; i < topology.size(); ++i) {
    const Node& node = topology.nodes()[i];
    if (!node.processor) {
      if (state.vm_count[i] > 0) {
        throw std::invalid_argument("node '" + node.id +
                                    "' hosts VMs without a processor profile");
      }
      continue;
    }
    const ProcessorProfile& p = *node.processor;
    out.proc_proportional += p.energy_per_gflops * state.omega[i];
    out.proc_idle += state.n_servers[i] * p.cpu_idle_power;
    out.lan_proportional += p.lan_energy_per_gbps * state.theta[i];
    if (state.phi[i]) out.lan_idle += p.lan_idle_power * node.delta;
  }
  return out;
}

PowerBreakdown evaluate_partial(const Scenario& scenario,
                                const Placement& placement) {
  const Topology& topo = scenario.topology();
  DerivedState st = derive_state(scenario, placement);
  NetworkPower net = network_power(topo, st);
  ProcessingPower proc = processing_power(topo, st);

  PowerBreakdown b;
  b.net_proportional = net.proportional;
  b.net_idle = net.idle;
  b.proc_proportional = proc.proc_proportional;
  b.proc_idle = proc.proc_idle;
  b.lan_proportional = proc.lan_proportional;
  b.lan_idle = proc.lan_idle;
  b.total = (net.proportional + net.idle) +
            (proc.proc_proportional + proc.proc_idle + proc.lan_proportional +
             proc.lan_idle);

  double placed = 0.0;
  for (NodeTier t : kProcessingTiers) b.tier_workload_share[t] = 0.0;
  for (std::size_t i = 0; i < topo.size(); ++i) {
    if (!topo.nodes()[i].processor) continue;
    b.tier_workload_share[topo.nodes()[i].tier] += st.omega[i];
    placed += st.omega[i];
  }
  for (auto& [tier, share] : b.tier_workload_share) {
    share = placed > 0.0 ? share / placed : 0.0;
  }
  return b;
}

PowerBreakdown evaluate(const Scenario& scenario, const Placement& placement) {
  std::vector<Violation> violations = check_constraints(scenario, placement);
  if (!violations.empty()) throw InfeasiblePlacement(std::move(violations));
  return evaluate_partial(scenario, placement);
}

}  // namespace fogplace
