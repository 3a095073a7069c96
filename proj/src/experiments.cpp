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

#include "fogplace/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "fogplace/heuristic.hpp"
#include "fogplace/io.hpp"

namespace fogplace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string fmt(double v) { return std::isfinite(v) ? format_number(v) : ""; }

int status_rank(SolveStatus s) {
  switch (s) {
    case SolveStatus::kOptimal:
      return 2;
    case SolveStatus::kFeasibleWithGap:
      return 1;
    default:
      return 0;
  }
}

void fill_from(SweepRecord& rec, const Scenario& scenario,
               const SolveResult& res) {
  rec.status = res.status;
  rec.objective = res.objective;
  rec.lower_bound = res.lower_bound;
  rec.placement = res.placement;
  rec.wall_time = res.wall_time;
  if (res.has_placement()) rec.breakdown = evaluate(scenario, res.placement);
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

bool is_known_solver(std::string_view name) {
  return name == "brute" || name == "bnb" || name == "greedy" ||
         name == "local";
}

bool is_exact_solver(std::string_view name) {
  return name == "brute" || name == "bnb";
}

SolveResult run_solver(std::string_view solver, const Scenario& scenario,
                       const SolverOptions& options) {
  if (solver == "brute") return brute_force(scenario, options.brute);
  if (solver == "bnb") return branch_and_bound(scenario, options.bnb);
  if (solver == "greedy") return greedy(scenario);
  if (solver == "local") {
    SolveResult g = greedy(scenario);
    if (!g.has_placement()) {
      g.solver = "local";
      return g;
    }
    SolveResult ls = local_search(scenario, g.placement, options.local_iters);
    ls.solver = "local";
    ls.nodes_explored += g.nodes_explored;
    ls.wall_time += g.wall_time;
    return ls;
  }
  throw std::invalid_argument("unknown solver '" + std::string(solver) +
                              "' (expected brute, bnb, greedy or local)");
}

void SweepSpec::validate() const {
  if (delta_values.empty()) throw ConfigError("sweep needs at least one delta");
  if (k_values.empty()) throw ConfigError("sweep needs at least one k");
  if (solvers.empty()) throw ConfigError("sweep needs at least one solver");
  for (double d : delta_values) {
    if (!(d > 0.0 && d <= 1.0)) {
      throw ConfigError("delta " + format_number(d) + " is outside (0, 1]");
    }
  }
  for (int k : k_values) {
    if (k < 0) throw ConfigError("k must be non-negative");
  }
  for (const std::string& s : solvers) {
    if (!is_known_solver(s)) throw ConfigError("unknown solver '" + s + "'");
  }
}

std::vector<SweepRecord> run_sweep(const SweepSpec& spec) {
  spec.validate();
  std::vector<double> deltas = spec.delta_values;
  std::vector<int> ks = spec.k_values;
  std::sort(deltas.begin(), deltas.end());
  deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  std::vector<SweepRecord> records;
  std::vector<Scenario> cell_scenarios;
  for (double d : deltas) {
    for (int k : ks) {
      const Scenario cell = spec.scenario.with_k(k).with_delta(d);
      for (const std::string& solver : spec.solvers) {
        SweepRecord rec;
        rec.delta = d;
        rec.k = k;
        rec.solver = solver;
        fill_from(rec, cell, run_solver(solver, cell, spec.options));
        records.push_back(std::move(rec));
        cell_scenarios.push_back(cell);
      }
    }
  }
  if (!spec.share_incumbents) return records;

  // Feasibility does not depend on delta and only widens with k, so the
  // best placement seen anywhere is a valid incumbent for every cell it fits.
  const std::vector<SweepRecord> snapshot = records;
  for (std::size_t i = 0; i < records.size(); ++i) {
    SweepRecord& rec = records[i];
    if (rec.status == SolveStatus::kInfeasible) continue;
    const Scenario& cell = cell_scenarios[i];
    for (const SweepRecord& other : snapshot) {
      if (status_rank(other.status) == 0) continue;
      if (!is_exact_solver(rec.solver) && other.solver != rec.solver) continue;
      if (!check_constraints(cell, other.placement).empty()) continue;
      PowerBreakdown b = evaluate(cell, other.placement);
      const bool have = status_rank(rec.status) > 0;
      if (have && !strictly_better(b.total, rec.objective)) continue;
      rec.placement = other.placement;
      rec.objective = b.total;
      rec.breakdown = std::move(b);
      if (!have) rec.status = SolveStatus::kFeasibleWithGap;
      rec.lower_bound = std::min(rec.lower_bound, rec.objective);
    }
  }
  return records;
}

std::vector<SavingsRow> compute_savings(const std::vector<SweepRecord>& records,
                                        int baseline_k, int improved_k) {
  std::vector<SavingsRow> rows;
  std::map<std::pair<std::string, double>, bool> seen;
  for (const SweepRecord& rec : records) {
    const auto key = std::make_pair(rec.solver, rec.delta);
    if (seen.count(key)) continue;
    seen[key] = true;
    const SweepRecord* base = nullptr;
    const SweepRecord* imp = nullptr;
    for (const SweepRecord& r : records) {
      if (r.solver != rec.solver || r.delta != rec.delta) continue;
      if (r.k == baseline_k) base = &r;
      if (r.k == improved_k) imp = &r;
    }
    const std::string cell =
        rec.solver + " at delta " + format_number(rec.delta);
    if (!base || !imp) {
      throw std::invalid_argument("missing k = " +
                                  std::to_string(base ? improved_k : baseline_k) +
                                  " record for " + cell);
    }
    if (status_rank(base->status) == 0 || status_rank(imp->status) == 0) {
      throw std::invalid_argument("no feasible placement for " + cell);
    }
    SavingsRow row;
    row.solver = rec.solver;
    row.delta = rec.delta;
    row.baseline_k = baseline_k;
    row.improved_k = improved_k;
    row.baseline_total = base->objective;
    row.improved_total = imp->objective;
    row.percent = base->objective == 0.0
                      ? 0.0
                      : 100.0 * (base->objective - imp->objective) /
                            base->objective;
    rows.push_back(row);
  }
  return rows;
}

Report render_report(const std::vector<SweepRecord>& records,
                     const std::vector<SavingsRow>& savings) {
  Report rep;
  rep.power_csv =
      "delta,k,solver,status,total,lower_bound,net_proportional,net_idle,"
      "proc_proportional,proc_idle,lan_proportional,lan_idle\n";
  std::string tiers;
  for (NodeTier t : kProcessingTiers) tiers += "," + std::string(tier_name(t));
  rep.workload_csv = "delta,k,solver,status" + tiers + "\n";
  for (const SweepRecord& r : records) {
    const bool ok = status_rank(r.status) > 0;
    const std::string head = format_number(r.delta) + "," +
                             std::to_string(r.k) + "," + r.solver + "," +
                             std::string(status_name(r.status));
    const PowerBreakdown& b = r.breakdown;
    rep.power_csv += head + "," + (ok ? fmt(r.objective) : "") + "," +
                     fmt(r.lower_bound);
    for (double v : {b.net_proportional, b.net_idle, b.proc_proportional,
                     b.proc_idle, b.lan_proportional, b.lan_idle}) {
      rep.power_csv += "," + (ok ? fmt(v) : std::string());
    }
    rep.power_csv += "\n";
    rep.workload_csv += head;
    for (NodeTier t : kProcessingTiers) {
      auto it = b.tier_workload_share.find(t);
      rep.workload_csv +=
          "," + (ok ? fmt(it == b.tier_workload_share.end() ? 0.0 : it->second)
                    : std::string());
    }
    rep.workload_csv += "\n";
  }
  rep.savings_csv =
      "solver,delta,baseline_k,improved_k,baseline_total,improved_total,"
      "savings_percent\n";
  for (const SavingsRow& s : savings) {
    rep.savings_csv += s.solver + "," + format_number(s.delta) + "," +
                       std::to_string(s.baseline_k) + "," +
                       std::to_string(s.improved_k) + "," +
                       fmt(s.baseline_total) + "," + fmt(s.improved_total) +
                       "," + fmt(s.percent) + "\n";
  }
  return rep;
}

void emit_report(const std::vector<SweepRecord>& records,
                 const std::vector<SavingsRow>& savings,
                 const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const Report rep = render_report(records, savings);
  write_text(dir / "power.csv", rep.power_csv);
  write_text(dir / "workload.csv", rep.workload_csv);
  write_text(dir / "savings.csv", rep.savings_csv);
}

bool all_cells_meet(const std::vector<SweepRecord>& records,
                    SolveStatus required) {
  const int need = std::max(1, status_rank(required));
  return std::all_of(records.begin(), records.end(), [&](const SweepRecord& r) {
    return status_rank(r.status) >= need;
  });
}

std::vector<AggregateRow> aggregate(
    const std::vector<std::vector<SweepRecord>>& per_seed) {
  std::vector<AggregateRow> rows;
  if (per_seed.empty()) return rows;
  const std::vector<SweepRecord>& first = per_seed.front();
  for (std::size_t i = 0; i < first.size(); ++i) {
    AggregateRow row;
    row.delta = first[i].delta;
    row.k = first[i].k;
    row.solver = first[i].solver;
    std::vector<double> totals;
    for (const auto& run : per_seed) {
      if (i < run.size() && status_rank(run[i].status) > 0) {
        totals.push_back(run[i].objective);
      }
    }
    row.runs = static_cast<int>(totals.size());
    if (!totals.empty()) {
      double sum = 0.0;
      for (double t : totals) sum += t;
      row.mean_total = sum / totals.size();
      double sq = 0.0;
      for (double t : totals) sq += (t - row.mean_total) * (t - row.mean_total);
      row.stddev_total = totals.size() > 1 ? std::sqrt(sq / (totals.size() - 1)) : 0.0;
      row.min_total = *std::min_element(totals.begin(), totals.end());
      row.max_total = *std::max_element(totals.begin(), totals.end());
    }
    rows.push_back(row);
  }
  return rows;
}

std::string render_aggregate(const std::vector<AggregateRow>& rows) {
  std::string out =
      "delta,k,solver,runs,mean_total,stddev_total,min_total,max_total\n";
  for (const AggregateRow& r : rows) {
    out += format_number(r.delta) + "," + std::to_string(r.k) + "," + r.solver +
           "," + std::to_string(r.runs) + "," + fmt(r.mean_total) + "," +
           fmt(r.stddev_total) + "," + fmt(r.min_total) + "," +
           fmt(r.max_total) + "\n";
  }
  return out;
}

}  // namespace fogplace
