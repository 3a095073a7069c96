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

#include "fogplace/heuristic.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "fogplace/exact.hpp"
#include "fogplace/power.hpp"

namespace fogplace {

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct VmRef {
  std::size_t r;
  std::size_t s;
};

std::vector<VmRef> free_vms(const Scenario& scenario) {
  std::vector<VmRef> out;
  const auto& reqs = scenario.requests();
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    for (std::size_t s = 0; s < reqs[r].vms.size(); ++s) {
      if (!reqs[r].vms[s].is_input) out.push_back({r, s});
    }
  }
  return out;
}

// Objective of a complete placement, or +inf when it violates a constraint.
double feasible_objective(const Scenario& scenario, const Placement& p) {
  if (!check_constraints(scenario, p).empty()) return kInf;
  return evaluate_partial(scenario, p).total;
}

}  // namespace

SolveResult greedy(const Scenario& scenario) {
  const auto start = Clock::now();
  SolveResult result;
  result.solver = "greedy";
  std::vector<VmRef> order = free_vms(scenario);
  const auto& reqs = scenario.requests();
  std::stable_sort(order.begin(), order.end(), [&](VmRef a, VmRef b) {
    return reqs[a.r].vms[a.s].cpu_demand > reqs[b.r].vms[b.s].cpu_demand;
  });

  Placement p = Placement::inputs_pinned(scenario);
  bool feasible =
      check_constraints(scenario, p, CheckMode::kPartial).empty();
  for (VmRef v : order) {
    if (!feasible) break;
    NodeIndex best_node;
    double best_total = kInf;
    for (NodeIndex n : scenario.topology().processing_nodes()) {
      p.host[v.r][v.s] = n;
      ++result.nodes_explored;
      if (!check_constraints(scenario, p, CheckMode::kPartial).empty()) {
        continue;
      }
      const double total = evaluate_partial(scenario, p).total;
      if (strictly_better(total, best_total)) {
        best_total = total;
        best_node = n;
      }
    }
    if (!best_node.valid()) {
      p.host[v.r][v.s] = NodeIndex::none();
      feasible = false;
      break;
    }
    p.host[v.r][v.s] = best_node;
  }

  if (!feasible) {
    result.status = SolveStatus::kInfeasible;
    result.placement = Placement::inputs_pinned(scenario);
    result.objective = kInf;
    result.lower_bound = kInf;
  } else {
    result.placement = std::move(p);
    result.objective = evaluate(scenario, result.placement).total;
    result.status = SolveStatus::kFeasibleWithGap;
    result.lower_bound = std::min(root_lower_bound(scenario), result.objective);
  }
  result.wall_time = seconds_since(start);
  return result;
}

SolveResult local_search(const Scenario& scenario, const Placement& start,
                         int max_iters) {
  const auto t0 = Clock::now();
  SolveResult result;
  result.solver = "local_search";
  Placement cur = start;
  double cur_obj = evaluate(scenario, cur).total;  // throws when infeasible
  const std::vector<VmRef> vms = free_vms(scenario);
  const auto& procs = scenario.topology().processing_nodes();

  for (int iter = 0; iter < max_iters; ++iter) {
    double best_obj = cur_obj;
    Placement best;
    bool improved = false;
    auto consider = [&](const Placement& cand) {
      ++result.nodes_explored;
      const double obj = feasible_objective(scenario, cand);
      if (strictly_better(obj, best_obj)) {
        best_obj = obj;
        best = cand;
        improved = true;
      }
    };
    Placement cand = cur;
    for (VmRef v : vms) {
      const NodeIndex orig = cur.host[v.r][v.s];
      for (NodeIndex n : procs) {
        if (n == orig) continue;
        cand.host[v.r][v.s] = n;
        consider(cand);
      }
      cand.host[v.r][v.s] = orig;
    }
    for (std::size_t i = 0; i < vms.size(); ++i) {
      for (std::size_t j = i + 1; j < vms.size(); ++j) {
        const NodeIndex a = cur.host[vms[i].r][vms[i].s];
        const NodeIndex b = cur.host[vms[j].r][vms[j].s];
        if (a == b) continue;
        cand.host[vms[i].r][vms[i].s] = b;
        cand.host[vms[j].r][vms[j].s] = a;
        consider(cand);
        cand.host[vms[i].r][vms[i].s] = a;
        cand.host[vms[j].r][vms[j].s] = b;
      }
    }
    if (!improved) break;
    cur = std::move(best);
    cur_obj = best_obj;
  }

  result.placement = std::move(cur);
  result.objective = evaluate(scenario, result.placement).total;
  result.status = SolveStatus::kFeasibleWithGap;
  result.lower_bound = std::min(root_lower_bound(scenario), result.objective);
  result.wall_time = seconds_since(t0);
  return result;
}

}  // namespace fogplace
