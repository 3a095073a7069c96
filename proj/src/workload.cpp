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

#include "fogplace/workload.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace fogplace {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ConfigError(what); }

bool finite_non_negative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

std::size_t VirtualRequest::input_vm() const {
  for (std::size_t i = 0; i < vms.size(); ++i) {
    if (vms[i].is_input) return i;
  }
  fail("request '" + id + "' has no input VM");
}

void validate_request(const VirtualRequest& r) {
  const std::string where = "request '" + r.id + "'";
  if (r.vms.empty()) fail(where + ": no VMs");
  int inputs = 0;
  for (std::size_t i = 0; i < r.vms.size(); ++i) {
    if (r.vms[i].is_input) ++inputs;
    if (!finite_non_negative(r.vms[i].cpu_demand)) {
      fail(where + ": vms[" + std::to_string(i) +
           "].cpu_demand must be a finite value >= 0");
    }
  }
  if (inputs != 1) {
    fail(where + ": expected exactly one input VM, found " +
         std::to_string(inputs));
  }
  // Union-find over the link graph.
  std::vector<std::size_t> parent(r.vms.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < r.links.size(); ++i) {
    const VirtualLink& l = r.links[i];
    const std::string lw = where + ": links[" + std::to_string(i) + "]";
    if (l.from_vm >= r.vms.size() || l.to_vm >= r.vms.size()) {
      fail(lw + " references a VM outside the request");
    }
    if (l.from_vm == l.to_vm) fail(lw + " endpoints must be distinct");
    if (!finite_non_negative(l.data_rate)) {
      fail(lw + ".data_rate must be a finite value >= 0");
    }
    parent[root(l.from_vm)] = root(l.to_vm);
  }
  for (std::size_t i = 1; i < r.vms.size(); ++i) {
    if (root(i) != root(0)) fail(where + ": link graph is not connected");
  }
}

Scenario::Scenario(Topology topology, std::vector<VirtualRequest> requests,
                   int k, std::optional<double> delta_override,
                   bool cap_source_iot)
    : topology_(std::move(topology)),
      requests_(std::move(requests)),
      k_(k),
      delta_override_(delta_override),
      cap_source_iot_(cap_source_iot) {
  if (k_ < 0) fail("k must be >= 0");
  if (delta_override_) topology_ = topology_.with_shared_delta(*delta_override_);
  sources_.reserve(requests_.size());
  for (const VirtualRequest& r : requests_) {
    validate_request(r);
    auto src = topology_.find(r.source_node);
    if (!src) {
      fail("request '" + r.id + "': unknown source node '" + r.source_node +
           "'");
    }
    if (!topology_.node(*src).is_source) {
      fail("request '" + r.id + "': source node '" + r.source_node +
           "' is not flagged as a source");
    }
    sources_.push_back(*src);
  }
}

Scenario Scenario::with_k(int k) const {
  Scenario s = *this;
  if (k < 0) fail("k must be >= 0");
  s.k_ = k;
  return s;
}

Scenario Scenario::with_delta(double delta) const {
  Scenario s = *this;
  s.topology_ = topology_.with_shared_delta(delta);
  s.delta_override_ = delta;
  return s;
}

namespace {

// Unbiased enough for small ranges and, unlike the <random> distributions,
// identical across standard library implementations.
int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

double uniform_real(std::mt19937_64& rng, double lo, double hi) {
  double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * unit;
}

}  // namespace

std::vector<VirtualRequest> generate_requests(std::uint64_t seed,
                                              const GeneratorConfig& cfg,
                                              const Topology& topology) {
  if (cfg.count < 1) fail("request count must be >= 1");
  auto [vlo, vhi] = cfg.vm_count_range;
  auto [dlo, dhi] = cfg.demand_range_gflops;
  if (!(vlo > 0 && vlo <= vhi)) fail("vm count range must satisfy 0 < lo <= hi");
  if (!(dlo > 0.0 && dlo <= dhi)) fail("demand range must satisfy 0 < lo <= hi");
  if (!finite_non_negative(cfg.default_data_rate)) {
    fail("data rate must be a finite value >= 0");
  }
  if (!finite_non_negative(cfg.input_demand)) {
    fail("input demand must be a finite value >= 0");
  }
  auto src = topology.find(cfg.source);
  if (!src) fail("unknown source node '" + cfg.source + "'");
  if (topology.node(*src).tier != NodeTier::kIoTDevice) {
    fail("source node '" + cfg.source + "' is not an IoT device");
  }

  std::mt19937_64 rng(seed);
  std::vector<VirtualRequest> out;
  out.reserve(cfg.count);
  for (int r = 0; r < cfg.count; ++r) {
    VirtualRequest req;
    req.id = "r" + std::to_string(r);
    req.source_node = cfg.source;
    int n = uniform_int(rng, vlo, vhi);
    req.vms.push_back({cfg.input_demand, true});
    for (int i = 1; i < n; ++i) {
      req.vms.push_back({uniform_real(rng, dlo, dhi), false});
    }
    for (int i = 0; i + 1 < n; ++i) {
      req.links.push_back({static_cast<std::uint32_t>(i),
                           static_cast<std::uint32_t>(i + 1),
                           cfg.default_data_rate});
    }
    out.push_back(std::move(req));
  }
  return out;
}

double total_demand(const std::vector<VirtualRequest>& requests) {
  double sum = 0.0;
  for (const VirtualRequest& r : requests) {
    for (const VirtualMachine& vm : r.vms) {
      if (!vm.is_input) sum += vm.cpu_demand;
    }
  }
  return sum;
}

}  // namespace fogplace
