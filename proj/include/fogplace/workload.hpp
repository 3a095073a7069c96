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

// Virtual requests: chains of VMs standing in for DNN layers, pinned to the
// IoT device that produces the input data.

#ifndef FOGPLACE_WORKLOAD_HPP_
#define FOGPLACE_WORKLOAD_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fogplace/net_model.hpp"

namespace fogplace {

struct VirtualMachine {
  double cpu_demand = 0.0;  // GFLOPS
  bool is_input = false;

  friend bool operator==(const VirtualMachine&,
                         const VirtualMachine&) = default;
};

struct VirtualLink {
  std::uint32_t from_vm = 0;
  std::uint32_t to_vm = 0;
  double data_rate = 0.0;  // Gb/s

  friend bool operator==(const VirtualLink&, const VirtualLink&) = default;
};

struct VirtualRequest {
  std::string id;
  std::vector<VirtualMachine> vms;
  std::vector<VirtualLink> links;
  std::string source_node;

  // Index of the single input-layer VM.
  std::size_t input_vm() const;

  friend bool operator==(const VirtualRequest&,
                         const VirtualRequest&) = default;
};

// Throws ConfigError unless: exactly one input VM, demands and rates are
// finite and >= 0, link endpoints are distinct VMs of the request, and the
// link graph connects all VMs.
void validate_request(const VirtualRequest& request);

class Scenario {
 public:
  Scenario() = default;
  // Validates the requests against the topology. A delta override is applied
  // to the shared tiers of the stored topology.
  Scenario(Topology topology, std::vector<VirtualRequest> requests, int k,
           std::optional<double> delta_override = std::nullopt,
           bool cap_source_iot = false);

  const Topology& topology() const { return topology_; }
  const std::vector<VirtualRequest>& requests() const { return requests_; }
  int k() const { return k_; }
  std::optional<double> delta_override() const { return delta_override_; }
  // When set, constraint on VMs per IoT device also covers source devices.
  bool cap_source_iot() const { return cap_source_iot_; }

  NodeIndex source_of(std::size_t request) const {
    return sources_.at(request);
  }

  Scenario with_k(int k) const;
  Scenario with_delta(double delta) const;

  friend bool operator==(const Scenario& a, const Scenario& b) {
    return a.topology_ == b.topology_ && a.requests_ == b.requests_ &&
           a.k_ == b.k_ && a.delta_override_ == b.delta_override_ &&
           a.cap_source_iot_ == b.cap_source_iot_;
  }

 private:
  Topology topology_;
  std::vector<VirtualRequest> requests_;
  std::vector<NodeIndex> sources_;
  int k_ = 1;
  std::optional<double> delta_override_;
  bool cap_source_iot_ = false;
};

struct GeneratorConfig {
  int count = 15;
  std::pair<int, int> vm_count_range{4, 5};
  std::pair<double, double> demand_range_gflops{0.6, 10.0};
  double default_data_rate = 0.1;  // Gb/s
  double input_demand = 0.0;       // the input layer's negligible workload
  std::string source = "iot-1-1";
};

// Chains input -> vm1 -> ... -> last. Deterministic for a given seed on every
// platform (mt19937_64 with explicit range mapping).
std::vector<VirtualRequest> generate_requests(std::uint64_t seed,
                                              const GeneratorConfig& cfg,
                                              const Topology& topology);

// Sum of all non-input demands.
double total_demand(const std::vector<VirtualRequest>& requests);

}  // namespace fogplace

#endif  // FOGPLACE_WORKLOAD_HPP_
