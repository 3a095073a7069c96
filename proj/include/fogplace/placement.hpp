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

#ifndef FOGPLACE_PLACEMENT_HPP_
#define FOGPLACE_PLACEMENT_HPP_

#include <compare>
#include <string>
#include <vector>

#include "fogplace/net_model.hpp"
#include "fogplace/workload.hpp"

namespace fogplace {

// host[r][s] is the processing node running VM s of request r, or
// NodeIndex::none() while unassigned.
struct Placement {
  std::vector<std::vector<NodeIndex>> host;

  // Every VM unassigned.
  static Placement empty_for(const Scenario& scenario);
  // Only the input VMs assigned, each to its request's source.
  static Placement inputs_pinned(const Scenario& scenario);

  NodeIndex at(std::size_t r, std::size_t s) const { return host[r][s]; }
  bool complete() const;

  // Lexicographic on (request, vm) -> node index; used for tie-breaking.
  friend auto operator<=>(const Placement&, const Placement&) = default;
  friend bool operator==(const Placement&, const Placement&) = default;
};

// All auxiliary model variables implied by a (possibly partial) placement.
// Per-node vectors are indexed by NodeIndex; entries for nodes lacking the
// relevant role stay zero.
struct DerivedState {
  TrafficMatrix traffic;          // lambda^{b,e}
  std::vector<double> lambda;     // lambda_n
  std::vector<int> beta;          // network activation
  std::vector<double> omega;      // Omega_p, GFLOPS
  std::vector<double> theta;      // theta_p, ingress + egress Gb/s
  std::vector<int> n_servers;     // N_p, not clamped to max_cpus
  std::vector<int> phi;           // Phi_p
  std::vector<int> vm_count;      // VMs hosted per node
};

// Sums virtual-link rates between the hosts of their endpoints. Links whose
// endpoints share a host, or whose endpoints are unassigned, carry nothing
// over the network.
TrafficMatrix traffic_from_placement(const Scenario& scenario,
                                     const Placement& placement);

DerivedState derive_state(const Scenario& scenario,
                          const Placement& placement);

enum class ViolationKind {
  kUnplaced,         // every VM must be embedded
  kInputNotPinned,   // input layers run on their source device
  kIotVmLimit,       // at most k VMs per (non-source) IoT device
  kNotProcessing,    // host lacks processing capability
  kCpuCapacity,      // N_p <= max CPUs
  kBitrateCapacity,  // lambda_n <= bitrate capacity
};

std::string_view violation_name(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::string message;
};

enum class CheckMode {
  kComplete,  // unassigned VMs are violations
  kPartial,   // unassigned VMs are ignored
};

std::vector<Violation> check_constraints(const Scenario& scenario,
                                         const Placement& placement,
                                         CheckMode mode = CheckMode::kComplete);

// True when node n falls under the per-IoT VM limit k.
bool is_vm_limited(const Scenario& scenario, NodeIndex n);

}  // namespace fogplace

#endif  // FOGPLACE_PLACEMENT_HPP_
