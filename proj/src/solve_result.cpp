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

#include "fogplace/solve_result.hpp"

#include <cmath>
#include <stdexcept>

namespace fogplace {

std::string_view status_name(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kFeasibleWithGap:
      return "feasible_with_gap";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

SolveStatus status_from_name(std::string_view name) {
  for (SolveStatus s :
       {SolveStatus::kOptimal, SolveStatus::kFeasibleWithGap,
        SolveStatus::kInfeasible, SolveStatus::kBudgetExhausted}) {
    if (status_name(s) == name) return s;
  }
  throw std::invalid_argument("unknown solve status '" + std::string(name) +
                              "'");
}

double SolveResult::gap() const {
  if (status == SolveStatus::kOptimal) return 0.0;
  if (!std::isfinite(objective) || !std::isfinite(lower_bound)) {
    return std::numeric_limits<double>::infinity();
  }
  return (objective - lower_bound) / std::max(1e-12, std::abs(objective));
}

}  // namespace fogplace
