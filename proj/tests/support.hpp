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

// Shared fixtures for the test binaries: small reference networks, request
// builders and the random instance generator used for solver cross-checks.

#ifndef FOGPLACE_TESTS_SUPPORT_HPP_
#define FOGPLACE_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "fogplace/net_model.hpp"
#include "fogplace/workload.hpp"

namespace fogplace::testing {

inline Topology reference(int zones, int per_zone,
                          const std::string& source = "iot-1-1") {
  ReferenceConfig cfg;
  cfg.zones = zones;
  cfg.iot_per_zone = per_zone;
  cfg.source_id = source;
  return build_reference_topology(cfg);
}

// input -> vm1 -> vm2 ... with one rate on every link.
inline VirtualRequest chain(const std::string& id,
                            const std::vector<double>& demands, double rate,
                            const std::string& source = "iot-1-1") {
  VirtualRequest r;
  r.id = id;
  r.source_node = source;
  r.vms.push_back({0.0, true});
  for (double d : demands) r.vms.push_back({d, false});
  for (std::uint32_t i = 1; i < r.vms.size(); ++i) {
    r.links.push_back({i - 1, i, rate});
  }
  return r;
}

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

template <typename T>
T pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[std::uniform_int_distribution<std::size_t>(0, items.size() - 1)(rng)];
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// At most 2 requests of at most 3 VMs and at most 8 processing nodes, with
// tight CPU, bitrate and VM-count limits so that every constraint binds in
// some draws. Some draws add a link that closes a cycle.
inline Scenario random_small_scenario(std::mt19937_64& rng) {
  ReferenceConfig cfg;
  cfg.zones = uniform_int(rng, 1, 2);
  cfg.iot_per_zone = uniform_int(rng, 1, cfg.zones == 1 ? 5 : 2);
  cfg.delta = pick<double>(rng, {0.03, 0.1, 0.5, 1.0});
  cfg.iot_cpu.max_cpus = uniform_int(rng, 0, 2);
  cfg.afn_cpu.max_cpus = uniform_int(rng, 0, 2);
  cfg.mfn_cpu.max_cpus = uniform_int(rng, 1, 2);
  cfg.cloud_cpu.max_cpus = uniform_int(rng, 1, 2);
  if (uniform_int(rng, 0, 1) == 1) {
    for (ProcessorProfile* p :
         {&cfg.iot_cpu, &cfg.afn_cpu, &cfg.mfn_cpu, &cfg.cloud_cpu}) {
      p->lan_energy_per_gbps = uniform(rng, 0.0, 0.5);
      p->lan_idle_power = uniform(rng, 0.0, 5.0);
    }
  }
  const int zone = uniform_int(rng, 1, cfg.zones);
  const int dev = uniform_int(rng, 1, cfg.iot_per_zone);
  cfg.source_id = "iot-" + std::to_string(zone) + "-" + std::to_string(dev);
  // The source device always gets one CPU so inputs can be pinned.
  Topology topo = build_reference_topology(cfg);
  {
    std::vector<Node> nodes = topo.nodes();
    for (Node& n : nodes) {
      if (n.is_source && n.processor->max_cpus == 0) n.processor->max_cpus = 1;
    }
    std::vector<std::pair<std::string, std::string>> links;
    for (const auto& [a, b] : topo.links()) {
      links.emplace_back(topo.node(a).id, topo.node(b).id);
    }
    const bool cycle = uniform_int(rng, 0, 3) == 0;
    if (cycle) links.emplace_back("afn", "metro-router");
    topo = Topology(std::move(nodes), std::move(links), !cycle);
  }

  std::vector<VirtualRequest> reqs;
  const int nreq = uniform_int(rng, 1, 2);
  for (int r = 0; r < nreq; ++r) {
    const int nvm = uniform_int(rng, 1, 3);
    VirtualRequest req;
    req.id = "r" + std::to_string(r);
    req.source_node = cfg.source_id;
    req.vms.push_back({0.0, true});
    for (int s = 1; s < nvm; ++s) {
      const double d = uniform_int(rng, 0, 5) == 0 ? 0.0 : uniform(rng, 0.5, 30.0);
      req.vms.push_back({d, false});
    }
    const bool star = nvm == 3 && uniform_int(rng, 0, 2) == 0;
    for (std::uint32_t s = 1; s < req.vms.size(); ++s) {
      const double rate = pick<double>(rng, {0.0, 0.1, 0.5, 2.0, 6.0});
      req.links.push_back({star ? 0u : s - 1, s, rate});
    }
    reqs.push_back(std::move(req));
  }
  const int k = uniform_int(rng, 0, 3);
  const bool cap_source = uniform_int(rng, 0, 4) == 0;
  return Scenario(std::move(topo), std::move(reqs), k, std::nullopt, cap_source);
}

}  // namespace fogplace::testing

#endif  // FOGPLACE_TESTS_SUPPORT_HPP_
