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

#include <random>

#include "doctest.h"
#include "fogplace/placement.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace fogplace {
namespace {

bool has_kind(const std::vector<Violation>& v, ViolationKind k) {
  for (const Violation& x : v) {
    if (x.kind == k) return true;
  }
  return false;
}

struct Small {
  Topology topo = testing::reference(2, 2);
  NodeIndex src = topo.index_of("iot-1-1");
  NodeIndex peer = topo.index_of("iot-1-2");
  NodeIndex other = topo.index_of("iot-2-1");
  NodeIndex afn = topo.index_of("afn");
  NodeIndex mfn = topo.index_of("mfn");
  NodeIndex cloud = topo.index_of("cloud");
  NodeIndex olt = topo.index_of("olt");
};

TEST_CASE("placement helpers") {
  Small f;
  const Scenario s(f.topo, {testing::chain("a", {1.0, 2.0}, 0.1)}, 1);
  const Placement e = Placement::empty_for(s);
  CHECK_FALSE(e.complete());
  CHECK_FALSE(e.at(0, 0).valid());
  const Placement pin = Placement::inputs_pinned(s);
  CHECK(pin.at(0, 0) == f.src);
  CHECK_FALSE(pin.at(0, 1).valid());
  Placement full = pin;
  full.host[0][1] = f.afn;
  full.host[0][2] = f.afn;
  CHECK(full.complete());
  Placement other = full;
  other.host[0][2] = f.mfn;
  CHECK((full < other) == (f.afn < f.mfn));
}

TEST_CASE("traffic from a chain placement") {
  Small f;
  const Scenario s(f.topo, {testing::chain("a", {1.0, 2.0, 3.0}, 0.5)}, 1);
  Placement p = Placement::inputs_pinned(s);
  p.host[0][1] = f.afn;
  p.host[0][2] = f.afn;   // colocated, no traffic
  p.host[0][3] = f.cloud;
  const TrafficMatrix tm = traffic_from_placement(s, p);
  REQUIRE(tm.size() == 2);
  CHECK(tm.at({f.src, f.afn}) == 0.5);
  CHECK(tm.at({f.afn, f.cloud}) == 0.5);

  const DerivedState st = derive_state(s, p);
  CHECK(st.omega[f.afn.get()] == 3.0);
  CHECK(st.omega[f.cloud.get()] == 3.0);
  CHECK(st.omega[f.src.get()] == 0.0);
  CHECK(st.vm_count[f.afn.get()] == 2);
  CHECK(st.vm_count[f.src.get()] == 1);
  CHECK(st.theta[f.afn.get()] == 1.0);
  CHECK(st.theta[f.cloud.get()] == 0.5);
  CHECK(st.theta[f.src.get()] == 0.5);
  CHECK(st.n_servers[f.afn.get()] == 1);
  CHECK(st.n_servers[f.src.get()] == 0);
  CHECK(st.phi[f.src.get()] == 1);
  CHECK(st.phi[f.mfn.get()] == 0);
  CHECK(st.beta[f.src.get()] == 1);
  CHECK(st.beta[f.olt.get()] == 1);
  CHECK(st.beta[f.topo.index_of("onu-2").get()] == 0);
  // The OLT sits on both routes.
  CHECK(st.lambda[f.olt.get()] == doctest::Approx(1.0));
}

TEST_CASE("source is active even without traffic") {
  Small f;
  const Scenario s(f.topo, {testing::chain("a", {4.0}, 0.0)}, 1);
  Placement p = Placement::inputs_pinned(s);
  p.host[0][1] = f.cloud;
  const DerivedState st = derive_state(s, p);
  CHECK(st.beta[f.src.get()] == 1);
  CHECK(st.beta[f.olt.get()] == 0);
  CHECK(st.lambda[f.olt.get()] == 0.0);
}

TEST_CASE("violations") {
  Small f;
  const Scenario s(f.topo,
                   {testing::chain("a", {5.0, 5.0, 5.0}, 0.1)}, 1);
  Placement ok = Placement::inputs_pinned(s);
  for (std::size_t v = 1; v < 4; ++v) ok.host[0][v] = f.afn;
  CHECK(check_constraints(s, ok).empty());

  SUBCASE("unplaced") {
    Placement p = ok;
    p.host[0][2] = NodeIndex::none();
    CHECK(has_kind(check_constraints(s, p), ViolationKind::kUnplaced));
    CHECK(check_constraints(s, p, CheckMode::kPartial).empty());
  }
  SUBCASE("input moved") {
    Placement p = ok;
    p.host[0][0] = f.afn;
    CHECK(has_kind(check_constraints(s, p), ViolationKind::kInputNotPinned));
  }
  SUBCASE("input unplaced") {
    Placement p = ok;
    p.host[0][0] = NodeIndex::none();
    CHECK(has_kind(check_constraints(s, p), ViolationKind::kInputNotPinned));
  }
  SUBCASE("iot limit") {
    Placement p = ok;
    p.host[0][1] = f.peer;
    CHECK(check_constraints(s, p).empty());
    p.host[0][2] = f.peer;
    CHECK(has_kind(check_constraints(s, p), ViolationKind::kIotVmLimit));
    CHECK(check_constraints(s.with_k(2), p).empty());
  }
  SUBCASE("iot limit on the source only when asked") {
    Placement p = ok;
    p.host[0][1] = f.src;
    p.host[0][2] = f.src;
    CHECK(check_constraints(s, p).empty());
    const Scenario capped(f.topo, s.requests(), 2, std::nullopt, true);
    CHECK(has_kind(check_constraints(capped, p), ViolationKind::kIotVmLimit));
  }
  SUBCASE("not processing") {
    Placement p = ok;
    p.host[0][3] = f.olt;
    CHECK(has_kind(check_constraints(s, p), ViolationKind::kNotProcessing));
  }
  SUBCASE("cpu capacity") {
    const Scenario big(f.topo, {testing::chain("a", {60.0}, 0.1)}, 1);
    Placement p = Placement::inputs_pinned(big);
    p.host[0][1] = f.peer;  // 4 x 13.5 = 54 GFLOPS
    CHECK(has_kind(check_constraints(big, p), ViolationKind::kCpuCapacity));
    p.host[0][1] = f.afn;
    CHECK(check_constraints(big, p).empty());
  }
  SUBCASE("bitrate capacity") {
    // ONU capacity is 10 Gb/s.
    const Scenario fat(f.topo, {testing::chain("a", {1.0}, 12.0)}, 1);
    Placement p = Placement::inputs_pinned(fat);
    p.host[0][1] = f.afn;
    CHECK(has_kind(check_constraints(fat, p),
                   ViolationKind::kBitrateCapacity));
    p.host[0][1] = f.src;
    CHECK(check_constraints(fat, p).empty());
  }
  CHECK(violation_name(ViolationKind::kCpuCapacity) == "cpu-capacity");
}

TEST_CASE("vm limited nodes") {
  Small f;
  const Scenario s(f.topo, {testing::chain("a", {1.0}, 0.1)}, 1);
  CHECK(is_vm_limited(s, f.peer));
  CHECK(is_vm_limited(s, f.other));
  CHECK_FALSE(is_vm_limited(s, f.src));
  CHECK_FALSE(is_vm_limited(s, f.afn));
  const Scenario capped(f.topo, s.requests(), 1, std::nullopt, true);
  CHECK(is_vm_limited(capped, f.src));
}

TEST_CASE("property: work is conserved and counts are consistent") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 300; ++it) {
    const Scenario s = testing::random_small_scenario(rng);
    const Placement p = testing::random_placement(s, rng);
    const DerivedState st = derive_state(s, p);
    double demand = 0.0, placed = 0.0;
    int vms = 0, hosted = 0;
    for (const auto& r : s.requests()) {
      demand += total_demand({r});
      vms += static_cast<int>(r.vms.size());
    }
    for (std::size_t i = 0; i < s.topology().size(); ++i) {
      placed += st.omega[i];
      hosted += st.vm_count[i];
      if (s.topology().nodes()[i].processor) {
        const double cap = s.topology().nodes()[i].processor->cpu_capacity_gflops;
        CHECK(st.n_servers[i] == testing::cpus_for(st.omega[i], cap));
        CHECK(st.phi[i] == (st.vm_count[i] > 0 ? 1 : 0));
      }
      CHECK(st.beta[i] == ((st.lambda[i] > 0 ||
                            (s.topology().nodes()[i].is_source)) ? 1 : 0));
    }
    CHECK(placed == doctest::Approx(demand));
    CHECK(hosted == vms);
  }
}

TEST_CASE("property: raising k never adds violations") {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 300; ++it) {
    const Scenario s = testing::random_small_scenario(rng);
    const Placement p = testing::random_placement(s, rng);
    if (check_constraints(s, p).empty()) {
      CHECK(check_constraints(s.with_k(s.k() + 1), p).empty());
    }
  }
}

}  // namespace
}  // namespace fogplace
