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

// Exact minimum-power placement: exhaustive enumeration (the test oracle)
// and depth-first branch-and-bound.

#ifndef FOGPLACE_EXACT_HPP_
#define FOGPLACE_EXACT_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fogplace/solve_result.hpp"

namespace fogplace {

class SearchSpaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BruteForceOptions {
  double max_space = 1e7;  // candidate nodes ^ free VMs
};

// Enumerates every assignment of the non-input VMs to processing nodes in
// lexicographic order, keeping the first among equal-objective optima.
// Throws SearchSpaceTooLarge above the cap.
SolveResult brute_force(const Scenario& scenario,
                        const BruteForceOptions& options = {});

struct BnbOptions {
  double time_limit_s = std::numeric_limits<double>::infinity();
  std::uint64_t max_nodes = 0;  // 0 = unlimited
  int threads = 1;
  // Start from greedy + local search.
  bool heuristic_seed = true;
  // Per-neighbourhood node limit of the polish stage, which re-solves pairs
  // and then triples of requests around the best starting placement; 0 skips
  // it. Polish nodes are not counted in max_nodes or nodes_explored.
  std::uint64_t polish_nodes = 2000;
  // Extra starting placements; infeasible ones are ignored.
  std::vector<Placement> initial;
  // Samples of (incumbent, global bound); single-threaded runs only.
  bool record_trace = false;
};

// Depth-first B&B over VMs in descending demand order. Lower bound at a node:
// committed power of the partial placement (with the source routes of placed
// VMs forced active on trees) plus a fractional fill of the remaining demand
// into the cheapest capacity, plus the unavoidable new network activation of
// the largest remaining VM. Interchangeable IoT devices (and whole zones) are
// branched on only once. Equal-objective optima resolve to the
// lexicographically smallest placement, independent of thread count, when the
// search completes.
SolveResult branch_and_bound(const Scenario& scenario,
                             const BnbOptions& options = {});

// Root bound of branch_and_bound; 0 for an empty scenario, +inf when the
// relaxation is already infeasible.
double root_lower_bound(const Scenario& scenario);

}  // namespace fogplace

#endif  // FOGPLACE_EXACT_HPP_
