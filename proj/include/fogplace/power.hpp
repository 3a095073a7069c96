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

// The energy objective: network power plus processing power (servers and
// their LAN), in watts.

#ifndef FOGPLACE_POWER_HPP_
#define FOGPLACE_POWER_HPP_

#include <map>
#include <stdexcept>
#include <vector>

#include "fogplace/placement.hpp"

namespace fogplace {

struct NetworkPower {
  double proportional = 0.0;  // sum eps_n * lambda_n
  double idle = 0.0;          // sum beta_n * idle_n * delta_n
};

struct ProcessingPower {
  double proc_proportional = 0.0;  // sum E_p * Omega_p
  double proc_idle = 0.0;          // sum N_p * cpu idle
  double lan_proportional = 0.0;   // sum EL_p * theta_p
  double lan_idle = 0.0;           // sum Phi_p * LAN idle * delta_p
};

struct PowerBreakdown {
  double net_proportional = 0.0;
  double net_idle = 0.0;
  double proc_proportional = 0.0;
  double proc_idle = 0.0;
  double lan_proportional = 0.0;
  double lan_idle = 0.0;
  double total = 0.0;
  // Fraction of the placed GFLOPS per processing tier; all zero when nothing
  // is demanded.
  std::map<NodeTier, double> tier_workload_share;
};

// Thrown by evaluate() for placements that violate a constraint.
class InfeasiblePlacement : public std::runtime_error {
 public:
  explicit InfeasiblePlacement(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Throws std::invalid_argument when a node carries traffic but has neither a
// network profile nor processing capability.
NetworkPower network_power(const Topology& topology, const DerivedState& state);
ProcessingPower processing_power(const Topology& topology,
                                 const DerivedState& state);

// Full breakdown of a feasible placement. Throws InfeasiblePlacement.
PowerBreakdown evaluate(const Scenario& scenario, const Placement& placement);

// Same arithmetic without the feasibility gate; unassigned VMs and their
// links are ignored.
PowerBreakdown evaluate_partial(const Scenario& scenario,
                                const Placement& placement);

}  // namespace fogplace

#endif  // FOGPLACE_POWER_HPP_
