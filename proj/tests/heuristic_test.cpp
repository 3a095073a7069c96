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
#include "fogplace/exact.hpp"
#include "fogplace/heuristic.hpp"
#include "fogplace/power.hpp"
#include "oracle.hpp"
#include "support.hpp"

namespace fogplace {
namespace {

TEST_CASE("greedy solves a single decision exactly") {
  for (double demand : {0.6, 5.0, 40.0, 200.0}) {
    const Scenario s(testing::reference(2, 2),
                     {testing::chain("a", {demand}, 0.1)}, 1, 0.1);
    const SolveResult g = greedy(s);
    const SolveResult b = brute_force(s);
    REQUIRE(g.status == SolveStatus::kFeasibleWithGap);
    CHECK(g.objective == doctest::Approx(b.objective).epsilon(1e-12));
    CHECK(g.placement == b.placement);
  }
}

TEST_CASE("greedy reports infeasibility") {
  ReferenceConfig cfg;
  cfg.zones = 1;
  cfg.iot_per_zone = 1;
  const Topology t = build_reference_topology(cfg);
  // Nothing offers 30 TFLOPS.
  const Scenario s(t, {testing::chain("a", {30000.0}, 0.1)}, 1);
  const SolveResult g = greedy(s);
  CHECK(g.status == SolveStatus::kInfeasible);
  CHECK_FALSE(g.has_placement());
}

TEST_CASE("local search rejects an infeasible start") {
  const Scenario s(testing::reference(1, 2),
                   {testing::chain("a", {1.0}, 0.1)}, 1);
  CHECK_THROWS_AS(local_search(s, Placement::inputs_pinned(s)),
                  InfeasiblePlacement);
}

TEST_CASE("greedy can miss shared idle amortization") {
  // Found by brute-force comparison: some random instance where placing the
  // largest VM first locks the rest out of a shared node.
  std::mt19937_64 rng(41);
  int worse = 0, total = 0;
  for (int it = 0; it < 300; ++it) {
    const Scenario s = testing::random_small_scenario(rng);
    const SolveResult b = brute_force(s);
    const SolveResult g = greedy(s);
    if (b.status != SolveStatus::kOptimal) continue;
    ++total;
    if (g.status == SolveStatus::kInfeasible) {
      ++worse;
      continue;
    }
    CHECK(g.objective >= b.objective * (1 - 1e-9));
    CHECK(g.lower_bound <= b.objective * (1 + 1e-9));
    CHECK(testing::close_rel(evaluate(s, g.placement).total, g.objective,
                             1e-9));
    if (strictly_better(b.objective, g.objective)) ++worse;
  }
  CHECK(total > 150);
  CHECK(worse > 0);
  MESSAGE("greedy suboptimal on " << worse << " of " << total);
}

TEST_CASE("greedy is deterministic") {
  const Topology t = build_reference_topology();
  const Scenario s(t, generate_requests(7, {}, t), 1, 0.1);
  const SolveResult a = greedy(s);
  const SolveResult b = greedy(s);
  CHECK(a.placement == b.placement);
  CHECK(a.objective == b.objective);
}

TEST_CASE("local search: fixed point at the optimum, improves greedy") {
  std::mt19937_64 rng(42);
  for (int it = 0; it < 200; ++it) {
    const Scenario s = testing::random_small_scenario(rng);
    const SolveResult b = brute_force(s);
    if (b.status != SolveStatus::kOptimal) continue;
    const SolveResult fixed = local_search(s, b.placement);
    CHECK(fixed.placement == b.placement);
    CHECK(fixed.objective == b.objective);

    const SolveResult g = greedy(s);
    if (!g.has_placement()) continue;
    const SolveResult l = local_search(s, g.placement);
    CHECK(l.objective <= g.objective);
    CHECK(l.objective >= b.objective * (1 - 1e-9));
    CHECK(check_constraints(s, l.placement).empty());
  }
}

TEST_CASE("local search respects the iteration cap") {
  const Topology t = build_reference_topology();
  GeneratorConfig cfg;
  cfg.count = 3;
  const Scenario s(t, generate_requests(5, cfg, t), 1);
  Placement start = Placement::inputs_pinned(s);
  for (auto& row : start.host) {
    for (std::size_t v = 1; v < row.size(); ++v) row[v] = t.index_of("mfn");
  }
  // A lone cloud VM: moving it next to the others saves a whole cloud CPU.
  start.host[0][1] = t.index_of("cloud");
  const double start_obj = evaluate(s, start).total;
  const SolveResult zero = local_search(s, start, 0);
  CHECK(zero.placement == start);
  const SolveResult one = local_search(s, start, 1);
  const SolveResult many = local_search(s, start, 1000);
  CHECK(one.objective < start_obj);
  CHECK(many.objective <= one.objective);
}

TEST_CASE("local search from random starts (report)") {
  std::mt19937_64 rng(43);
  int trials = 0, hits = 0;
  while (trials < 100) {
    const Scenario s = testing::random_small_scenario(rng);
    const SolveResult b = brute_force(s);
    if (b.status != SolveStatus::kOptimal) continue;
    Placement start;
    bool found = false;
    for (int tries = 0; tries < 200 && !found; ++tries) {
      start = testing::random_placement(s, rng);
      found = check_constraints(s, start).empty();
    }
    if (!found) continue;
    ++trials;
    const SolveResult l = local_search(s, start);
    CHECK(l.objective <= evaluate(s, start).total);
    if (objectives_equal(l.objective, b.objective)) ++hits;
  }
  MESSAGE("local search reached the optimum in " << hits << " of " << trials
                                                 << " random starts");
  CHECK(hits > 0);
}

}  // namespace
}  // namespace fogplace
