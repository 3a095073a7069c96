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

// Greedy construction and move/swap local search. Neither proves optimality.

#ifndef FOGPLACE_HEURISTIC_HPP_
#define FOGPLACE_HEURISTIC_HPP_

#include "fogplace/solve_result.hpp"

namespace fogplace {

// VMs in descending demand order (ties by request, then VM), each put on the
// processing node whose placement raises the partial objective least; ties go
// to the lowest node index. The first VM on a node pays that node's
// activation. Status is kFeasibleWithGap with the branch-and-bound root bound,
// or kInfeasible when some VM fits nowhere.
SolveResult greedy(const Scenario& scenario);

// Best-improvement descent over single-VM moves and two-VM swaps, starting
// from a feasible placement. Each iteration applies the single best strictly
// improving neighbor. Throws InfeasiblePlacement for an infeasible start.
SolveResult local_search(const Scenario& scenario, const Placement& start,
                         int max_iters = 1000);

}  // namespace fogplace

#endif  // FOGPLACE_HEURISTIC_HPP_
