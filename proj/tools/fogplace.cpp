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

// fogplace: generate scenarios, solve placements, run sweeps, export the MILP.
// Results and tables go to stdout or files; progress and errors to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "fogplace/experiments.hpp"
#include "fogplace/io.hpp"
#include "fogplace/lp_export.hpp"

namespace {

using namespace fogplace;

constexpr int kExitInfeasible = 2;
constexpr int kExitRefused = 3;
constexpr int kExitUnmet = 4;

struct GenFlags {
  int zones = 4;
  int iot_per_zone = 5;
  int requests = 15;
  std::uint64_t seed = 7;
  int k = 1;
  std::optional<double> delta;
  std::string source = "iot-1-1";
  int vms_min = 4;
  int vms_max = 5;
  double demand_min = 0.6;
  double demand_max = 10.0;
  double rate = 0.1;
  int iot_cpus = 4;
  bool cap_source = false;

  void attach(CLI::App* app) {
    app->add_option("--zones", zones, "access zones")->check(CLI::PositiveNumber);
    app->add_option("--iot-per-zone", iot_per_zone, "IoT devices per zone")
        ->check(CLI::PositiveNumber);
    app->add_option("--requests", requests, "virtual requests")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--seed", seed, "workload seed");
    app->add_option("--k", k, "max VMs per non-source IoT device")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--delta", delta, "idle share of shared network/fog gear")
        ->check(CLI::Range(1e-12, 1.0));
    app->add_option("--source", source, "id of the data source device");
    app->add_option("--vms-min", vms_min, "fewest VMs per request, input included")
        ->check(CLI::PositiveNumber);
    app->add_option("--vms-max", vms_max, "most VMs per request, input included")
        ->check(CLI::PositiveNumber);
    app->add_option("--demand-min", demand_min, "GFLOPS")->check(CLI::NonNegativeNumber);
    app->add_option("--demand-max", demand_max, "GFLOPS")->check(CLI::NonNegativeNumber);
    app->add_option("--rate", rate, "virtual link rate, Gb/s")
        ->check(CLI::NonNegativeNumber);
    app->add_option("--iot-cpus", iot_cpus, "CPUs per IoT device")
        ->check(CLI::NonNegativeNumber);
    app->add_flag("--cap-source-iot", cap_source,
                  "apply the k limit to the source device as well");
  }

  Scenario build() const {
    ReferenceConfig rc;
    rc.zones = zones;
    rc.iot_per_zone = iot_per_zone;
    rc.source_id = source;
    rc.iot_cpu.max_cpus = iot_cpus;
    if (delta) rc.delta = *delta;
    Topology topo = build_reference_topology(rc);
    GeneratorConfig gc;
    gc.count = requests;
    gc.vm_count_range = {vms_min, vms_max};
    gc.demand_range_gflops = {demand_min, demand_max};
    gc.default_data_rate = rate;
    gc.source = source;
    auto reqs = generate_requests(seed, gc, topo);
    return Scenario(std::move(topo), std::move(reqs), k, delta, cap_source);
  }
};

// "600", "600s", "10m", "1h" -> seconds.
double parse_budget(const std::string& text) {
  if (text.empty()) throw CLI::ValidationError("--budget", "empty value");
  double scale = 1.0;
  std::string num = text;
  switch (text.back()) {
    case 's':
      num.pop_back();
      break;
    case 'm':
      scale = 60.0;
      num.pop_back();
      break;
    case 'h':
      scale = 3600.0;
      num.pop_back();
      break;
    default:
      break;
  }
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(num, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != num.size() || !(v > 0.0)) {
    throw CLI::ValidationError("--budget", "expected a duration such as 600s");
  }
  return v * scale;
}

int default_threads() {
  if (const char* env = std::getenv("FOGPLACE_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring FOGPLACE_THREADS='" << env << "'\n";
    }
  }
  return 1;
}

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_text(path, text);
    std::cerr << "wrote " << path << "\n";
  }
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* flag) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    T v{};
    if (!(is >> v) || !is.eof()) {
      throw CLI::ValidationError(flag, "bad list item '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_result(const Scenario& scenario, const SolveResult& r) {
  std::cout << "solver:      " << r.solver << "\n"
            << "status:      " << status_name(r.status) << "\n";
  if (!r.has_placement()) {
    if (std::isfinite(r.lower_bound)) {
      std::cout << "lower bound: " << format_number(r.lower_bound) << " W\n";
    }
    return;
  }
  const PowerBreakdown b = evaluate(scenario, r.placement);
  std::cout << "objective:   " << format_number(r.objective) << " W\n"
            << "lower bound: " << format_number(r.lower_bound) << " W\n"
            << "gap:         " << format_number(100.0 * r.gap()) << " %\n"
            << "nodes:       " << r.nodes_explored << "\n"
            << "time:        " << format_number(r.wall_time) << " s\n"
            << "network:     proportional " << format_number(b.net_proportional)
            << " W, idle " << format_number(b.net_idle) << " W\n"
            << "processing:  proportional " << format_number(b.proc_proportional)
            << " W, idle " << format_number(b.proc_idle) << " W\n"
            << "lan:         proportional " << format_number(b.lan_proportional)
            << " W, idle " << format_number(b.lan_idle) << " W\n"
            << "tier shares:";
  for (const auto& [tier, share] : b.tier_workload_share) {
    std::cout << " " << tier_name(tier) << "=" << format_number(share);
  }
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-minimal VM placement over cloud-fog networks"};
  app.require_subcommand(1);

  // generate
  GenFlags gen;
  std::string gen_out;
  auto* cmd_gen = app.add_subcommand("generate", "write a reference scenario");
  gen.attach(cmd_gen);
  cmd_gen->add_option("-o,--out", gen_out, "output file (default stdout)");

  // solve
  std::string solve_scenario, solver = "bnb", budget, placement_out, result_out;
  std::uint64_t max_nodes = 0;
  int threads = default_threads();
  std::optional<int> solve_k;
  std::optional<double> solve_delta;
  auto* cmd_solve = app.add_subcommand("solve", "solve one scenario");
  cmd_solve->add_option("-s,--scenario", solve_scenario, "scenario file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd_solve->add_option("--solver", solver, "brute, bnb, greedy or local")
      ->check(CLI::IsMember({"brute", "bnb", "greedy", "local"}));
  cmd_solve->add_option("--budget", budget, "branch-and-bound time limit, e.g. 600s");
  cmd_solve->add_option("--max-nodes", max_nodes, "branch-and-bound node limit");
  cmd_solve->add_option("--threads", threads, "search threads (env FOGPLACE_THREADS)")
      ->check(CLI::PositiveNumber);
  cmd_solve->add_option("--k", solve_k, "override k")->check(CLI::NonNegativeNumber);
  cmd_solve->add_option("--delta", solve_delta, "override delta")
      ->check(CLI::Range(1e-12, 1.0));
  cmd_solve->add_option("--placement-out", placement_out,
                        "placement file (.csv for a table, JSON otherwise)");
  cmd_solve->add_option("--result-out", result_out, "result document (JSON)");

  // sweep
  GenFlags sweep_gen;
  std::string sweep_scenario, deltas = "0.03,0.06,0.10", ks = "1,2",
                              solvers = "bnb", out_dir = "results", sweep_budget,
                              require = "feasible";
  std::uint64_t sweep_nodes = 2000000;
  int seeds = 1;
  int sweep_threads = default_threads();
  bool no_share = false;
  auto* cmd_sweep = app.add_subcommand("sweep", "solve every (delta, k) cell");
  sweep_gen.attach(cmd_sweep);
  cmd_sweep->add_option("-s,--scenario", sweep_scenario,
                        "scenario file (default: generate from flags)")
      ->check(CLI::ExistingFile);
  cmd_sweep->add_option("--deltas", deltas, "comma-separated delta values");
  cmd_sweep->add_option("--ks", ks, "comma-separated k values");
  cmd_sweep->add_option("--solvers", solvers, "comma-separated solvers");
  cmd_sweep->add_option("--out-dir", out_dir, "directory for the CSV tables");
  cmd_sweep->add_option("--budget", sweep_budget,
                        "per-cell time limit (breaks run-to-run determinism)");
  cmd_sweep->add_option("--max-nodes", sweep_nodes, "per-cell node limit, 0 = none");
  cmd_sweep->add_option("--threads", sweep_threads, "search threads")
      ->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--seeds", seeds,
                        "repeat for consecutive workload seeds and write aggregate.csv")
      ->check(CLI::PositiveNumber);
  cmd_sweep->add_option("--require", require, "feasible or optimal")
      ->check(CLI::IsMember({"feasible", "optimal"}));
  cmd_sweep->add_flag("--no-share", no_share,
                      "do not reuse placements across cells");

  // export-lp
  GenFlags lp_gen;
  std::string lp_scenario, lp_out;
  auto* cmd_lp = app.add_subcommand("export-lp", "write the MILP in LP format");
  lp_gen.attach(cmd_lp);
  cmd_lp->add_option("-s,--scenario", lp_scenario,
                     "scenario file (default: generate from flags)")
      ->check(CLI::ExistingFile);
  cmd_lp->add_option("-o,--out", lp_out, "output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_gen) {
      const Scenario s = gen.build();
      write_or_print(gen_out, scenario_to_json(s).dump(2) + "\n");
      return 0;
    }

    if (*cmd_solve) {
      Scenario s = load_scenario(solve_scenario);
      if (solve_k) s = s.with_k(*solve_k);
      if (solve_delta) s = s.with_delta(*solve_delta);
      SolverOptions opt;
      opt.bnb.threads = threads;
      opt.bnb.max_nodes = max_nodes;
      if (!budget.empty()) opt.bnb.time_limit_s = parse_budget(budget);
      SolveResult r;
      try {
        r = run_solver(solver, s, opt);
      } catch (const SearchSpaceTooLarge& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
      }
      print_result(s, r);
      if (!result_out.empty()) write_text(result_out, result_to_json(s, r).dump(2) + "\n");
      if (!r.has_placement()) {
        std::cerr << "no feasible placement found";
        if (r.status == SolveStatus::kInfeasible) {
          std::cerr << "; constraints violated by the pinned inputs alone:\n";
          const auto v = check_constraints(s, r.placement, CheckMode::kPartial);
          for (const Violation& x : v) std::cerr << "  " << x.message << "\n";
          if (v.empty()) std::cerr << "  (none; the remaining VMs do not fit)\n";
        } else {
          std::cerr << " within the budget\n";
        }
        return kExitInfeasible;
      }
      if (!placement_out.empty()) {
        const bool csv = std::filesystem::path(placement_out).extension() == ".csv";
        write_text(placement_out, csv ? placement_csv(s, r.placement)
                                      : placement_to_json(s, r.placement).dump(2) + "\n");
      }
      return 0;
    }

    if (*cmd_sweep) {
      SweepSpec spec;
      spec.delta_values = parse_list<double>(deltas, "--deltas");
      spec.k_values = parse_list<int>(ks, "--ks");
      spec.solvers = split(solvers);
      spec.options.bnb.max_nodes = sweep_nodes;
      spec.options.bnb.threads = sweep_threads;
      if (!sweep_budget.empty()) {
        spec.options.bnb.time_limit_s = parse_budget(sweep_budget);
      }
      spec.share_incumbents = !no_share;
      const SolveStatus need = require == "optimal" ? SolveStatus::kOptimal
                                                    : SolveStatus::kFeasibleWithGap;
      const int base_k = *std::min_element(spec.k_values.begin(), spec.k_values.end());
      const int imp_k = *std::max_element(spec.k_values.begin(), spec.k_values.end());

      std::vector<std::vector<SweepRecord>> runs;
      bool all_ok = true;
      for (int i = 0; i < seeds; ++i) {
        GenFlags g = sweep_gen;
        g.seed = sweep_gen.seed + static_cast<std::uint64_t>(i);
        spec.seed = g.seed;
        spec.scenario = sweep_scenario.empty() ? g.build() : load_scenario(sweep_scenario);
        std::cerr << "sweep: seed " << g.seed << ", "
                  << spec.delta_values.size() * spec.k_values.size() * spec.solvers.size()
                  << " cells\n";
        auto records = run_sweep(spec);
        all_ok = all_ok && all_cells_meet(records, need);
        std::vector<SavingsRow> savings;
        if (base_k != imp_k) {
          try {
            savings = compute_savings(records, base_k, imp_k);
          } catch (const std::invalid_argument& e) {
            std::cerr << "savings skipped: " << e.what() << "\n";
          }
        }
        const std::filesystem::path dir =
            seeds == 1 ? std::filesystem::path(out_dir)
                       : std::filesystem::path(out_dir) / ("seed-" + std::to_string(g.seed));
        emit_report(records, savings, dir);
        std::cerr << "wrote " << (dir / "power.csv").string() << ", workload.csv, savings.csv\n";
        if (i == 0) std::cout << render_report(records, savings).savings_csv;
        runs.push_back(std::move(records));
        if (!sweep_scenario.empty()) break;
      }
      if (runs.size() > 1) {
        write_text(std::filesystem::path(out_dir) / "aggregate.csv",
                   render_aggregate(aggregate(runs)));
        std::cerr << "wrote " << (std::filesystem::path(out_dir) / "aggregate.csv").string()
                  << "\n";
      }
      if (!all_ok) {
        std::cerr << "some cells did not reach status '" << require << "'\n";
        return kExitUnmet;
      }
      return 0;
    }

    if (*cmd_lp) {
      const Scenario s = lp_scenario.empty() ? lp_gen.build() : load_scenario(lp_scenario);
      const LpModel m = export_lp(s);
      write_or_print(lp_out, m.text);
      std::cerr << "rows " << m.stats.rows << ", binaries " << m.stats.binaries
                << ", integers " << m.stats.integers << ", continuous "
                << m.stats.continuous << "\n";
      return 0;
    }
  } catch (const InfeasiblePlacement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
