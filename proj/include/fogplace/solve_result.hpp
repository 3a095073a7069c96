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

#ifndef FOGPLACE_SOLVE_RESULT_HPP_
#define FOGPLACE_SOLVE_RESULT_HPP_

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fogplace/placement.hpp"

namespace fogplace {

enum class SolveStatus {
  kOptimal,
  kFeasibleWithGap,
  kInfeasible,
  kBudgetExhausted,
};

std::string_view status_name(SolveStatus status);
SolveStatus status_from_name(std::string_view name);

struct ProgressSample {
  std::uint64_t nodes = 0;
  double incumbent = 0.0;  // +inf until the first feasible leaf
  double bound = 0.0;
};

struct SolveResult {
  std::string solver;
  Placement placement;
  double objective = 0.0;    // W; re-evaluated on `placement`
  double lower_bound = 0.0;  // W
  SolveStatus status = SolveStatus::kInfeasible;
  std::uint64_t nodes_explored = 0;
  double wall_time = 0.0;  // seconds
  std::vector<ProgressSample> trace;

  bool has_placement() const {
    return status == SolveStatus::kOptimal ||
           status == SolveStatus::kFeasibleWithGap;
  }
  double gap() const;  // relative, 0 when proven optimal
};

// Relative tolerance used for every objective comparison in the solvers.
inline constexpr double kObjectiveRelTol = 1e-9;

inline bool objectives_equal(double a, double b) {
  if (a == b) return true;
  if (a - a != 0.0 || b - b != 0.0) return false;  // inf or nan
  double scale = std::max({1.0, a < 0 ? -a : a, b < 0 ? -b : b});
  double diff = a - b;
  return (diff < 0 ? -diff : diff) <= kObjectiveRelTol * scale;
}

inline bool strictly_better(double a, double b) {
  return a < b && !objectives_equal(a, b);
}

}  // namespace fogplace

#endif  // FOGPLACE_SOLVE_RESULT_HPP_
