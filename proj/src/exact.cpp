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

#include "fogplace/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "fogplace/heuristic.hpp"
#include "fogplace/power.hpp"
#include "search_model.hpp"

namespace fogplace {

namespace {

using detail::FlatVm;
using detail::SearchModel;
using detail::SearchState;
using Clock = std::chrono::steady_clock;

constexpr double kInf = std::numeric_limits<double>::infinity();

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double cutoff_of(double incumbent) {
  if (!std::isfinite(incumbent)) return kInf;
  return incumbent + kObjectiveRelTol * std::max(1.0, std::abs(incumbent));
}

// Free (non-input) VMs in branching order and the admissible completion bound.
class Bounder {
 public:
  // `branch` selects the VMs left to the search (all free VMs when null);
  // every other VM must already be placed in the states passed to remaining().
  explicit Bounder(const SearchModel& model,
                   const std::vector<char>* branch = nullptr)
      : m_(model) {
    const auto& vms = m_.vms();
    for (std::size_t v = 0; v < vms.size(); ++v) {
      if (!vms[v].input && (!branch || (*branch)[v])) order_.push_back(v);
    }
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return vms[a].demand > vms[b].demand;
                     });
    const std::size_t f = order_.size();
    prefix_.assign(f + 1, 0.0);
    for (std::size_t i = 0; i < f; ++i) {
      prefix_[i + 1] = prefix_[i] + vms[order_[i]].demand;
    }
    next_anchored_.assign(f + 1, f);
    for (std::size_t i = f; i-- > 0;) {
      next_anchored_[i] = vms[order_[i]].anchored ? i : next_anchored_[i + 1];
    }
    proc_ = m_.topology().processing_nodes();

    // Suffixes whose VMs are all anchored to one source get the activation
    // surcharge; behind_[n] lists the processing slots whose route from that
    // source crosses network node n.
    uniform_.assign(f + 1, 1);
    if (m_.force_routes() && f > 0) {
      source_ = vms[order_[f - 1]].source;
      for (std::size_t i = f; i-- > 0;) {
        const FlatVm& v = vms[order_[i]];
        uniform_[i] = uniform_[i + 1] && v.anchored && v.source == source_;
      }
      behind_.assign(m_.topology().size(), {});
      for (std::size_t i = 0; i < proc_.size(); ++i) {
        if (proc_[i] == source_) continue;
        for (NodeIndex n : m_.topology().path(source_, proc_[i])) {
          if (m_.node(n.get()).has_net) behind_[n.get()].push_back(i);
        }
      }
      for (std::size_t n = 0; n < behind_.size(); ++n) {
        if (!behind_[n].empty() && m_.node(n).net_idle > 0.0) {
          surcharge_nodes_.push_back(n);
        }
      }
    } else {
      std::fill(uniform_.begin(), uniform_.end(), 0);
    }
  }

  const std::vector<std::size_t>& order() const { return order_; }
  const std::vector<NodeIndex>& processing() const { return proc_; }

  // Lower bound on the power still to be added when order()[depth..] are
  // unassigned. +inf when no completion can be feasible.
  //
  // Processing: the remaining demand is poured fractionally into the cheapest
  // capacity (slack of running CPUs at E_p, new CPUs at E_p + idle/cap),
  // respecting the per-device VM limit. Network, taking the larger of two
  // valid terms: the activation the largest anchored VM cannot avoid, or a
  // per-GFLOPS surcharge idle_n / min(capacity behind n, demand left) for
  // every inactive node n that demand must cross to reach its host.
  double remaining(const SearchState& s, std::size_t depth) const {
    const std::size_t free_count = order_.size();
    if (depth >= free_count) return 0.0;
    const auto& vms = m_.vms();
    const double demand_left = prefix_[free_count] - prefix_[depth];
    const int k = m_.k();

    thread_local std::vector<Offer> offers;
    thread_local std::vector<double> room, avail;
    offers.clear();
    room.assign(proc_.size(), kInf);
    avail.assign(proc_.size(), 0.0);

    long free_slots = 0;
    for (std::size_t i = 0; i < proc_.size(); ++i) {
      const std::size_t p = proc_[i].get();
      const auto& d = m_.node(p);
      const bool limited = d.vm_limited;
      if (limited) {
        if (s.vm_count[p] >= k) continue;
        const int slots = k - s.vm_count[p];
        free_slots += slots;
        room[i] = prefix_[std::min(free_count, depth + slots)] - prefix_[depth];
      }
      const int used = servers_needed(s.omega[p], d.cpu_cap);
      const double slack = std::max(0.0, used * d.cpu_cap - s.omega[p]);
      const double extra = std::max(0.0, (d.max_cpus - used) * d.cpu_cap);
      avail[i] = std::min(room[i], slack + extra);
      // Convex underestimate of the CPU idle step function on [0, avail]:
      // free slack, then whole CPUs, then a last CPU cut short by the room.
      if (avail[i] <= slack) {
        if (avail[i] > 0.0) offers.push_back({d.e, avail[i], i, limited});
        continue;
      }
      if (slack > 0.0) offers.push_back({d.e, slack, i, limited});
      const double more = avail[i] - slack;
      const double whole = std::floor(more / d.cpu_cap + 1e-9);
      const double part = more - whole * d.cpu_cap;
      if (whole > 0.0) {
        offers.push_back(
            {d.e + d.cpu_idle / d.cpu_cap, whole * d.cpu_cap, i, limited});
      }
      if (part > 1e-9) {
        offers.push_back({d.e + d.cpu_idle / part, part, i, limited});
      }
    }
    const std::size_t top = std::min<std::size_t>(
        static_cast<std::size_t>(free_slots), free_count - depth);
    const double group = prefix_[depth + top] - prefix_[depth];

    // The largest remaining VM must fit somewhere.
    {
      const std::size_t v = order_[depth];
      bool any = false;
      for (NodeIndex p : proc_) {
        if (m_.can_host(s, v, p)) {
          any = true;
          break;
        }
      }
      if (!any) return kInf;
    }

    double plain = fill(offers, room, group, demand_left, nullptr);
    if (!std::isfinite(plain)) return kInf;

    const std::size_t j = next_anchored_[depth];
    if (m_.force_routes() && j < free_count) {
      const std::size_t v = order_[j];
      const NodeIndex src = vms[v].source;
      double best = kInf;
      for (NodeIndex p : proc_) {
        if (!m_.can_host(s, v, p)) continue;
        double add = 0.0;
        if (p != src) {
          for (NodeIndex n : m_.topology().path(src, p)) {
            const auto& d = m_.node(n.get());
            if (d.has_net && !m_.net_active(s, n.get())) add += d.net_idle;
          }
        }
        best = std::min(best, add);
        if (best == 0.0) break;
      }
      if (!std::isfinite(best)) return kInf;
      plain += best;
    }

    if (!uniform_[depth]) return plain;
    thread_local std::vector<double> surcharge;
    surcharge.assign(proc_.size(), 0.0);
    bool any = false;
    for (std::size_t n : surcharge_nodes_) {
      if (m_.net_active(s, n)) continue;
      double cap = 0.0;
      for (std::size_t i : behind_[n]) cap += avail[i];
      const double denom = std::min(cap, demand_left);
      if (denom <= 0.0) continue;
      const double rate = m_.node(n).net_idle / denom;
      for (std::size_t i : behind_[n]) surcharge[i] += rate;
      any = true;
    }
    if (!any) return plain;
    return std::max(plain,
                    fill(offers, room, group, demand_left, &surcharge));
  }

 private:
  struct Offer {
    double unit;
    double amount;
    std::size_t slot;
    bool limited;
  };

  // Cheapest fractional assignment of `demand` to the offers. Per-slot room
  // and the shared room of the VM-limited devices are nested caps, so taking
  // offers in cost order is optimal.
  static double fill(std::vector<Offer>& offers, std::vector<double> room,
                     double group, double demand,
                     const std::vector<double>* surcharge) {
    thread_local std::vector<std::pair<double, std::size_t>> ranked;
    ranked.clear();
    for (std::size_t o = 0; o < offers.size(); ++o) {
      const double u =
          offers[o].unit + (surcharge ? (*surcharge)[offers[o].slot] : 0.0);
      ranked.emplace_back(u, o);
    }
    std::sort(ranked.begin(), ranked.end());
    double left = demand;
    double cost = 0.0;
    for (const auto& [unit, o] : ranked) {
      if (left <= 0.0) break;
      const Offer& of = offers[o];
      double take = std::min({of.amount, room[of.slot], left});
      if (of.limited) take = std::min(take, group);
      if (take <= 0.0) continue;
      cost += take * unit;
      left -= take;
      room[of.slot] -= take;
      if (of.limited) group -= take;
    }
    if (left > 1e-9 * std::max(1.0, demand)) return kInf;
    return cost;
  }

  const SearchModel& m_;
  std::vector<std::size_t> order_;
  std::vector<double> prefix_;
  std::vector<std::size_t> next_anchored_;
  std::vector<NodeIndex> proc_;
  NodeIndex source_;
  std::vector<char> uniform_;
  std::vector<std::vector<std::size_t>> behind_;
  std::vector<std::size_t> surcharge_nodes_;
};

// Inputs pinned to their sources; nullopt when that alone is infeasible.
std::optional<SearchState> root_state(const SearchModel& model) {
  SearchState s = model.empty_state();
  const auto& vms = model.vms();
  for (std::size_t v = 0; v < vms.size(); ++v) {
    if (vms[v].input && !model.assign(s, v, vms[v].source)) return std::nullopt;
  }
  return s;
}

struct Best {
  bool found = false;
  double objective = kInf;
  std::vector<NodeIndex> host;  // canonical, flat

  // Lower objective wins; equal objectives resolve to the smaller placement.
  bool offer(double obj, const std::vector<NodeIndex>& canon) {
    if (found && !strictly_better(obj, objective) &&
        !(objectives_equal(obj, objective) && canon < host)) {
      return false;
    }
    found = true;
    objective = obj;
    host = canon;
    return true;
  }
};

// Large-neighbourhood descent on a complete placement. Every group of
// `group` requests in turn has its free VMs released and re-placed by a
// node-limited DFS while all other VMs stay where they are; only strict
// improvements are kept. Groups of two are swept until a pass changes
// nothing, then groups of three.
class Polisher {
 public:
  Polisher(const SearchModel& model, std::uint64_t budget,
           std::function<bool()> stop)
      : m_(model), budget_(budget), stop_(std::move(stop)) {}

  // `host` is flat and feasible with total `objective`; both are updated.
  bool run(std::vector<NodeIndex>& host, double& objective) {
    bool any = false;
    for (std::size_t group : {2, 3}) {
      for (int pass = 0; pass < kMaxPasses; ++pass) {
        const bool improved = sweep(host, objective, group);
        any = any || improved;
        if (!improved || stopped_) break;
      }
    }
    return any;
  }

 private:
  static constexpr int kMaxPasses = 8;

  bool sweep(std::vector<NodeIndex>& host, double& objective,
             std::size_t group) {
    const auto& vms = m_.vms();
    const std::size_t requests = m_.scenario().requests().size();
    if (group > requests) return false;
    std::vector<std::size_t> pick(group);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    std::vector<char> chosen(requests), branch(vms.size());
    bool improved = false;
    for (;;) {
      if (stop_()) {
        stopped_ = true;
        return improved;
      }
      std::fill(chosen.begin(), chosen.end(), 0);
      for (std::size_t r : pick) chosen[r] = 1;
      for (std::size_t v = 0; v < vms.size(); ++v) {
        branch[v] = !vms[v].input && chosen[vms[v].request];
      }
      improved = neighborhood(host, objective, branch) || improved;
      // Next combination in lexicographic order.
      std::size_t i = group;
      while (i > 0 && pick[i - 1] == requests - group + (i - 1)) --i;
      if (i == 0) return improved;
      ++pick[i - 1];
      for (std::size_t j = i; j < group; ++j) pick[j] = pick[j - 1] + 1;
    }
  }

 private:
  struct Child {
    NodeIndex node;
    double lb;
    double inc;
  };

  bool neighborhood(std::vector<NodeIndex>& host, double& objective,
                    const std::vector<char>& branch) {
    Bounder bounder(m_, &branch);
    if (bounder.order().empty()) return false;
    SearchState root = m_.empty_state();
    for (std::size_t v = 0; v < host.size(); ++v) {
      if (!branch[v] && !m_.assign(root, v, host[v])) return false;
    }
    bounder_ = &bounder;
    best_ = objective;
    found_ = false;
    nodes_ = 0;
    dfs(root, 0, root.total + bounder.remaining(root, 0));
    bounder_ = nullptr;
    if (!found_) return false;
    host = best_host_;
    objective = best_;
    return true;
  }

  void dfs(const SearchState& s, std::size_t depth, double lb) {
    const auto& order = bounder_->order();
    if (depth == order.size()) {
      if (strictly_better(s.total, best_)) {
        best_ = s.total;
        best_host_ = s.host;
        found_ = true;
      }
      return;
    }
    const std::size_t v = order[depth];
    std::vector<Child> children;
    SearchState tmp;
    for (NodeIndex p : bounder_->processing()) {
      if (!m_.can_host(s, v, p) || !m_.symmetry_allows(s, p)) continue;
      tmp = s;
      if (!m_.assign(tmp, v, p)) continue;
      const double clb =
          std::max(lb, tmp.total + bounder_->remaining(tmp, depth + 1));
      if (strictly_better(clb, best_)) {
        children.push_back({p, clb, tmp.total - s.total});
      }
    }
    std::sort(children.begin(), children.end(),
              [](const Child& a, const Child& b) {
                return a.inc != b.inc ? a.inc < b.inc : a.node < b.node;
              });
    for (const Child& c : children) {
      if (!strictly_better(c.lb, best_)) continue;
      if (++nodes_ > budget_) return;
      tmp = s;
      m_.assign(tmp, v, c.node);
      dfs(tmp, depth + 1, c.lb);
    }
  }

  const SearchModel& m_;
  std::uint64_t budget_;
  std::function<bool()> stop_;
  const Bounder* bounder_ = nullptr;
  double best_ = kInf;
  bool found_ = false;
  std::vector<NodeIndex> best_host_;
  std::uint64_t nodes_ = 0;
  bool stopped_ = false;
};

class BranchAndBound {
 public:
  BranchAndBound(const Scenario& scenario, const BnbOptions& options)
      : scenario_(scenario),
        options_(options),
        model_(scenario, /*force_routes=*/true),
        bounder_(model_) {}

  SolveResult run();

 private:
  struct Child {
    NodeIndex node;
    double lb;
    double inc;
  };
  struct Frame {
    std::vector<Child> children;
    std::size_t next = 0;
  };
  struct WorkerResult {
    Best best;
    double pending = kInf;
    bool stopped = false;
  };

  double cutoff() const { return cutoff_of(incumbent_.load()); }
  void lower_incumbent(double obj) {
    double cur = incumbent_.load();
    while (obj < cur && !incumbent_.compare_exchange_weak(cur, obj)) {
    }
  }
  bool should_stop() {
    if (stop_.load(std::memory_order_relaxed)) return true;
    const std::uint64_t n = nodes_.load(std::memory_order_relaxed);
    if (options_.max_nodes > 0 && n >= options_.max_nodes) {
      stop_ = true;
      return true;
    }
    if (std::isfinite(options_.time_limit_s) && (n & 255) == 0 &&
        seconds_since(start_) > options_.time_limit_s) {
      stop_ = true;
      return true;
    }
    return false;
  }

  void expand(const SearchState& parent, std::size_t depth, double parent_lb,
              std::vector<Child>& out, SearchState& tmp) const {
    out.clear();
    const std::size_t v = bounder_.order()[depth];
    for (NodeIndex p : bounder_.processing()) {
      if (!model_.can_host(parent, v, p) || !model_.symmetry_allows(parent, p)) {
        continue;
      }
      tmp = parent;
      if (!model_.assign(tmp, v, p)) continue;
      const double lb =
          std::max(parent_lb, tmp.total + bounder_.remaining(tmp, depth + 1));
      if (lb > cutoff()) continue;
      out.push_back({p, lb, tmp.total - parent.total});
    }
    std::sort(out.begin(), out.end(), [](const Child& a, const Child& b) {
      return a.inc != b.inc ? a.inc < b.inc : a.node < b.node;
    });
  }

  // DFS below `root` starting from the given first-level children.
  WorkerResult search(const SearchState& root, std::vector<Child> first,
                      std::vector<ProgressSample>* trace);

  const Scenario& scenario_;
  const BnbOptions& options_;
  SearchModel model_;
  Bounder bounder_;
  Clock::time_point start_;
  std::atomic<double> incumbent_{kInf};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
};

BranchAndBound::WorkerResult BranchAndBound::search(
    const SearchState& root, std::vector<Child> first,
    std::vector<ProgressSample>* trace) {
  WorkerResult out;
  const std::size_t free_count = bounder_.order().size();
  std::vector<SearchState> states(free_count + 1);
  states[0] = root;
  SearchState tmp = root;
  std::vector<Frame> frames(free_count + 1);
  std::size_t top = 0;  // frames[0..top) live; frames[d] expands depth d
  frames[0].children = std::move(first);
  frames[0].next = 0;
  top = 1;

  auto frontier = [&]() {
    double lo = kInf;
    for (std::size_t d = 0; d < top; ++d) {
      const Frame& f = frames[d];
      for (std::size_t i = f.next; i < f.children.size(); ++i) {
        lo = std::min(lo, f.children[i].lb);
      }
    }
    return lo;
  };
  auto sample = [&]() {
    if (!trace) return;
    const double inc = incumbent_.load();
    trace->push_back({nodes_.load(), inc, std::min(inc, frontier())});
  };
  sample();

  while (top > 0) {
    Frame& f = frames[top - 1];
    const std::size_t depth = top - 1;
    if (f.next == f.children.size()) {
      --top;
      continue;
    }
    const Child c = f.children[f.next++];
    if (c.lb > cutoff()) continue;
    if (should_stop()) {
      out.pending = std::min(out.pending, c.lb);
      out.stopped = true;
      break;
    }
    const std::uint64_t count = nodes_.fetch_add(1) + 1;
    SearchState& st = states[depth + 1];
    st = states[depth];
    model_.assign(st, bounder_.order()[depth], c.node);
    if (depth + 1 == free_count) {
      if (st.total <= cutoff()) {
        const bool improved = strictly_better(st.total, incumbent_.load());
        out.best.offer(st.total, model_.canonical(st.host));
        lower_incumbent(st.total);
        if (improved) sample();
      }
      continue;
    }
    Frame& next = frames[top];
    next.next = 0;
    expand(st, depth + 1, c.lb, next.children, tmp);
    ++top;
    if (trace && (count & 4095) == 0) sample();
  }
  if (out.stopped) {
    const double cut = cutoff();
    for (std::size_t d = 0; d < top; ++d) {
      const Frame& f = frames[d];
      for (std::size_t i = f.next; i < f.children.size(); ++i) {
        if (f.children[i].lb <= cut) {
          out.pending = std::min(out.pending, f.children[i].lb);
        }
      }
    }
  }
  sample();
  return out;
}

SolveResult BranchAndBound::run() {
  start_ = Clock::now();
  SolveResult result;
  result.solver = "bnb";

  Best best;
  for (const Placement& p : options_.initial) {
    if (!check_constraints(scenario_, p).empty()) continue;
    const double obj = evaluate(scenario_, p).total;
    best.offer(obj, model_.canonical(model_.flatten(p)));
  }
  if (options_.heuristic_seed) {
    SolveResult g = greedy(scenario_);
    if (g.has_placement()) {
      SolveResult ls = local_search(scenario_, g.placement);
      best.offer(ls.objective, model_.canonical(model_.flatten(ls.placement)));
    }
  }
  if (best.found && options_.polish_nodes > 0) {
    std::vector<NodeIndex> host = best.host;
    double obj = best.objective;
    Polisher polish(model_, options_.polish_nodes, [&] {
      return std::isfinite(options_.time_limit_s) &&
             seconds_since(start_) > options_.time_limit_s;
    });
    if (polish.run(host, obj)) best.offer(obj, model_.canonical(host));
  }
  if (best.found) incumbent_ = best.objective;

  std::optional<SearchState> root = root_state(model_);
  double pending = kInf;
  bool stopped = false;
  if (root) {
    const double root_lb = root->total + bounder_.remaining(*root, 0);
    if (bounder_.order().empty()) {
      best.offer(root->total, model_.canonical(root->host));
    } else if (root_lb <= cutoff()) {
      std::vector<Child> children;
      SearchState tmp = *root;
      expand(*root, 0, root_lb, children, tmp);
      nodes_ = 1;
      const int threads = std::max(1, options_.threads);
      if (threads == 1 || children.size() < 2) {
        std::vector<ProgressSample>* trace =
            options_.record_trace ? &result.trace : nullptr;
        WorkerResult w = search(*root, std::move(children), trace);
        if (w.best.found) best.offer(w.best.objective, w.best.host);
        pending = w.pending;
        stopped = w.stopped;
      } else {
        std::atomic<std::size_t> next_task{0};
        std::mutex mu;
        std::vector<WorkerResult> results;
        auto work = [&]() {
          for (;;) {
            const std::size_t t = next_task.fetch_add(1);
            if (t >= children.size()) return;
            WorkerResult w = search(*root, {children[t]}, nullptr);
            std::lock_guard<std::mutex> lock(mu);
            results.push_back(std::move(w));
            if (stop_) return;
          }
        };
        {
          std::vector<std::jthread> pool;
          for (int i = 0; i < threads; ++i) pool.emplace_back(work);
        }
        for (std::size_t t = next_task.load(); t < children.size(); ++t) {
          if (children[t].lb <= cutoff()) {
            pending = std::min(pending, children[t].lb);
            stopped = true;
          }
        }
        for (WorkerResult& w : results) {
          if (w.best.found) best.offer(w.best.objective, w.best.host);
          pending = std::min(pending, w.pending);
          stopped = stopped || w.stopped;
        }
      }
    }
  }

  result.nodes_explored = nodes_.load();
  if (best.found) {
    SearchState dummy;
    dummy.host = best.host;
    result.placement = model_.to_placement(dummy);
    result.objective = evaluate(scenario_, result.placement).total;
    if (stopped) {
      result.status = SolveStatus::kFeasibleWithGap;
      result.lower_bound = std::min(pending, result.objective);
    } else {
      result.status = SolveStatus::kOptimal;
      result.lower_bound = result.objective;
    }
  } else {
    result.objective = kInf;
    result.status = stopped ? SolveStatus::kBudgetExhausted
                            : SolveStatus::kInfeasible;
    result.lower_bound = stopped ? pending : kInf;
    result.placement = Placement::inputs_pinned(scenario_);
  }
  result.wall_time = seconds_since(start_);
  return result;
}

}  // namespace

SolveResult branch_and_bound(const Scenario& scenario,
                             const BnbOptions& options) {
  BranchAndBound bnb(scenario, options);
  return bnb.run();
}

double root_lower_bound(const Scenario& scenario) {
  SearchModel model(scenario, /*force_routes=*/true);
  Bounder bounder(model);
  std::optional<SearchState> root = root_state(model);
  if (!root) return kInf;
  return root->total + bounder.remaining(*root, 0);
}

SolveResult brute_force(const Scenario& scenario,
                        const BruteForceOptions& options) {
  const auto start = Clock::now();
  const auto& reqs = scenario.requests();
  const auto& proc = scenario.topology().processing_nodes();

  std::vector<std::pair<std::size_t, std::size_t>> free_vms;
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    for (std::size_t s = 0; s < reqs[r].vms.size(); ++s) {
      if (!reqs[r].vms[s].is_input) free_vms.emplace_back(r, s);
    }
  }
  const double space =
      std::pow(static_cast<double>(proc.size()), static_cast<double>(free_vms.size()));
  if (space > options.max_space) {
    std::ostringstream msg;
    msg << "brute force would enumerate " << space << " assignments (cap "
        << options.max_space << "); use branch-and-bound instead";
    throw SearchSpaceTooLarge(msg.str());
  }

  SolveResult result;
  result.solver = "brute";
  Placement cur = Placement::inputs_pinned(scenario);
  std::vector<std::size_t> digit(free_vms.size(), 0);
  bool found = false;
  Placement best;
  double best_obj = kInf;
  if (!proc.empty() || free_vms.empty()) {
    for (;;) {
      for (std::size_t i = 0; i < free_vms.size(); ++i) {
        cur.host[free_vms[i].first][free_vms[i].second] = proc[digit[i]];
      }
      ++result.nodes_explored;
      if (check_constraints(scenario, cur).empty()) {
        const double obj = evaluate(scenario, cur).total;
        if (!found || strictly_better(obj, best_obj)) {
          found = true;
          best_obj = obj;
          best = cur;
        }
      }
      // Odometer: the last VM varies fastest, so assignments come in
      // lexicographic order.
      std::size_t i = free_vms.size();
      while (i > 0 && ++digit[i - 1] == proc.size()) digit[--i] = 0;
      if (i == 0) break;
    }
  }
  if (found) {
    result.placement = best;
    result.objective = best_obj;
    result.lower_bound = best_obj;
    result.status = SolveStatus::kOptimal;
  } else {
    result.placement = Placement::inputs_pinned(scenario);
    result.objective = kInf;
    result.lower_bound = kInf;
    result.status = SolveStatus::kInfeasible;
  }
  result.wall_time = seconds_since(start);
  return result;
}

}  // namespace fogplace
