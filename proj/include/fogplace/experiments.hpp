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

// Parameter sweeps over the sharing factor and the per-device VM limit, the
// k-savings table and CSV reports.

#ifndef FOGPLACE_EXPERIMENTS_HPP_
#define FOGPLACE_EXPERIMENTS_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "fogplace/exact.hpp"
#include "fogplace/power.hpp"

namespace fogplace {

// Solver names: "brute", "bnb", "greedy", "local" (greedy then local search).
bool is_known_solver(std::string_view name);
bool is_exact_solver(std::string_view name);

struct SolverOptions {
  BnbOptions bnb;
  BruteForceOptions brute;
  int local_iters = 1000;
};

SolveResult run_solver(std::string_view solver, const Scenario& scenario,
                       const SolverOptions& options = {});

struct SweepSpec {
  Scenario scenario;
  std::vector<double> delta_values{0.03, 0.06, 0.10};
  std::vector<int> k_values{1, 2};
  std::vector<std::string> solvers{"bnb"};
  std::uint64_t seed = 0;  // recorded only; the scenario is already generated
  SolverOptions options;
  // Re-score every cell with the best placement found in any cell where it is
  // feasible (exact solvers draw on every solver, heuristics on themselves).
  bool share_incumbents = true;

  void validate() const;  // throws ConfigError
};

struct SweepRecord {
  double delta = 0.0;
  int k = 0;
  std::string solver;
  SolveStatus status = SolveStatus::kInfeasible;
  double objective = 0.0;
  double lower_bound = 0.0;
  PowerBreakdown breakdown;  // zero when no placement
  Placement placement;
  double wall_time = 0.0;
};

// One record per (delta, k, solver), in ascending delta, ascending k, then the
// order of `solvers`. Infeasible cells are recorded, not thrown.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec);

struct SavingsRow {
  std::string solver;
  double delta = 0.0;
  int baseline_k = 0;
  int improved_k = 0;
  double baseline_total = 0.0;
  double improved_total = 0.0;
  double percent = 0.0;
};

// 100 * (P_base - P_improved) / P_base per (solver, delta), in record order.
// Throws std::invalid_argument when a cell is missing or has no placement.
std::vector<SavingsRow> compute_savings(const std::vector<SweepRecord>& records,
                                        int baseline_k, int improved_k);

struct Report {
  std::string power_csv;
  std::string workload_csv;
  std::string savings_csv;
};

Report render_report(const std::vector<SweepRecord>& records,
                     const std::vector<SavingsRow>& savings);

// Writes power.csv, workload.csv and savings.csv into `dir`, creating it.
void emit_report(const std::vector<SweepRecord>& records,
                 const std::vector<SavingsRow>& savings,
                 const std::filesystem::path& dir);

// True when every record reaches at least `required` (Optimal beats
// FeasibleWithGap; the other statuses never qualify).
bool all_cells_meet(const std::vector<SweepRecord>& records,
                    SolveStatus required);

// Variance across workloads: the sweep repeated for several generator seeds.
struct AggregateRow {
  double delta = 0.0;
  int k = 0;
  std::string solver;
  int runs = 0;  // seeds with a feasible placement
  double mean_total = 0.0;
  double stddev_total = 0.0;
  double min_total = 0.0;
  double max_total = 0.0;
};

std::vector<AggregateRow> aggregate(
    const std::vector<std::vector<SweepRecord>>& per_seed);
std::string render_aggregate(const std::vector<AggregateRow>& rows);

// Shortest round-trip decimal.
std::string format_number(double v);

}  // namespace fogplace

#endif  // FOGPLACE_EXPERIMENTS_HPP_
