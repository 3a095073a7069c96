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

#include "fogplace/lp_export.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "fogplace/placement.hpp"

namespace fogplace {

namespace {

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string name(std::string_view prefix, std::initializer_list<std::size_t> idx) {
  std::string s(prefix);
  for (std::size_t i : idx) {
    s += '_';
    s += std::to_string(i);
  }
  return s;
}

// Linear expression printed with at most a few terms per line.
class Expr {
 public:
  Expr& add(double coef, std::string var) {
    if (coef != 0.0) terms_.emplace_back(coef, std::move(var));
    return *this;
  }
  bool empty() const { return terms_.empty(); }

  void write(std::ostream& os) const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i > 0 && i % 6 == 0) os << "\n   ";
      const auto& [c, v] = terms_[i];
      os << (c < 0 ? " - " : (i == 0 ? " " : " + "));
      const double a = c < 0 ? -c : c;
      if (a != 1.0) os << num(a) << ' ';
      os << v;
    }
  }

 private:
  std::vector<std::pair<double, std::string>> terms_;
};

class Writer {
 public:
  void row(const std::string& label, const Expr& e, std::string_view sense,
           double rhs) {
    rows_ << ' ' << label << ':';
    if (e.empty()) {
      rows_ << " 0 zero";
      uses_zero_ = true;
    } else {
      e.write(rows_);
    }
    rows_ << ' ' << sense << ' ' << num(rhs) << '\n';
    ++count_;
  }
  std::string rows() const { return rows_.str(); }
  std::size_t count() const { return count_; }
  bool uses_zero() const { return uses_zero_; }
  void use_zero() { uses_zero_ = true; }

 private:
  std::ostringstream rows_;
  std::size_t count_ = 0;
  bool uses_zero_ = false;
};

}  // namespace

LpModel export_lp(const Scenario& scenario) {
  const Topology& topo = scenario.topology();
  const auto& reqs = scenario.requests();
  const std::vector<NodeIndex>& procs = topo.processing_nodes();
  LpModel model;
  LpStats& st = model.stats;
  Writer w;

  std::vector<std::string> binaries, generals;
  std::ostringstream bounds;

  std::size_t vm_total = 0;
  double offered = 0.0;
  for (const VirtualRequest& r : reqs) {
    vm_total += r.vms.size();
    for (const VirtualLink& l : r.links) offered += l.data_rate;
  }

  auto x = [](std::size_t r, std::size_t s, NodeIndex p) {
    return name("x", {r, s, p.get()});
  };
  auto lam = [](NodeIndex b, NodeIndex e) {
    return name("lam", {b.get(), e.get()});
  };

  // Assignment and pinning.
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    for (std::size_t s = 0; s < reqs[r].vms.size(); ++s) {
      Expr e;
      for (NodeIndex p : procs) {
        e.add(1.0, x(r, s, p));
        binaries.push_back(x(r, s, p));
      }
      w.row(name("assign", {r, s}), e, "=", 1.0);
      ++st.assignment_rows;
    }
    Expr pin;
    const NodeIndex src = scenario.source_of(r);
    pin.add(1.0, x(r, reqs[r].input_vm(), src));
    w.row(name("pin", {r}), pin, "=", 1.0);
    ++st.pin_rows;
  }

  // VM limit on IoT devices.
  for (NodeIndex p : procs) {
    if (!is_vm_limited(scenario, p)) continue;
    Expr e;
    for (std::size_t r = 0; r < reqs.size(); ++r) {
      for (std::size_t s = 0; s < reqs[r].vms.size(); ++s) e.add(1.0, x(r, s, p));
    }
    w.row(name("vmlimit", {p.get()}), e, "<=", scenario.k());
    ++st.vm_limit_rows;
  }

  // Link realization and inter-node traffic.
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  for (NodeIndex b : procs) {
    for (NodeIndex e : procs) {
      if (b != e) pairs.emplace_back(b, e);
    }
  }
  std::vector<Expr> lam_def(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    lam_def[i].add(1.0, lam(pairs[i].first, pairs[i].second));
  }
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    for (std::size_t li = 0; li < reqs[r].links.size(); ++li) {
      const VirtualLink& l = reqs[r].links[li];
      if (l.data_rate <= 0.0) continue;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [b, e] = pairs[i];
        const std::string y = name("y", {r, li, b.get(), e.get()});
        Expr real;
        real.add(1.0, y).add(-1.0, x(r, l.from_vm, b)).add(-1.0, x(r, l.to_vm, e));
        w.row(name("real", {r, li, b.get(), e.get()}), real, ">=", -1.0);
        lam_def[i].add(-l.data_rate, y);
        ++st.continuous;
      }
    }
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    w.row(name("traffic", {pairs[i].first.get(), pairs[i].second.get()}),
          lam_def[i], "=", 0.0);
    ++st.continuous;
  }

  // Flow conservation and per-node load.
  std::vector<Expr> load(topo.size());
  for (std::size_t n = 0; n < topo.size(); ++n) {
    load[n].add(1.0, name("L", {n}));
  }
  for (const auto& [b, e] : pairs) {
    for (std::size_t m = 0; m < topo.size(); ++m) {
      Expr c;
      for (NodeIndex nb : topo.neighbors(NodeIndex(m))) {
        const std::string out = name("f", {b.get(), e.get(), m, nb.get()});
        c.add(1.0, out);
        c.add(-1.0, name("f", {b.get(), e.get(), nb.get(), m}));
        load[m].add(-1.0, out);
        ++st.continuous;
      }
      if (m == b.get()) c.add(-1.0, lam(b, e));
      if (m == e.get()) {
        c.add(1.0, lam(b, e));
        load[m].add(-1.0, lam(b, e));
      }
      w.row(name("flow", {b.get(), e.get(), m}), c, "=", 0.0);
      ++st.conservation_rows;
    }
  }

  Expr obj;
  for (std::size_t n = 0; n < topo.size(); ++n) {
    const Node& node = topo.nodes()[n];
    w.row(name("load", {n}), load[n], "=", 0.0);
    ++st.continuous;
    if (!node.network) continue;
    const std::string L = name("L", {n});
    const std::string beta = name("beta", {n});
    Expr cap;
    cap.add(1.0, L);
    w.row(name("bitrate", {n}), cap, "<=", node.network->bitrate_capacity);
    Expr act;
    act.add(1.0, L).add(-offered, beta);
    w.row(name("active", {n}), act, "<=", 0.0);
    binaries.push_back(beta);
    obj.add(node.network->energy_per_gbps, L);
    obj.add(node.network->idle_power * node.delta, beta);
    for (std::size_t r = 0; r < reqs.size(); ++r) {
      if (scenario.source_of(r).get() == n) {
        bounds << ' ' << beta << " = 1\n";
        break;
      }
    }
  }

  // Processing.
  for (NodeIndex p : procs) {
    const ProcessorProfile& pp = *topo.node(p).processor;
    const std::size_t i = p.get();
    const std::string om = name("Om", {i}), ns = name("N", {i}),
                      th = name("th", {i}), phi = name("phi", {i});
    Expr work;
    work.add(1.0, om);
    Expr used;
    used.add(-static_cast<double>(vm_total), phi);
    for (std::size_t r = 0; r < reqs.size(); ++r) {
      for (std::size_t s = 0; s < reqs[r].vms.size(); ++s) {
        work.add(-reqs[r].vms[s].cpu_demand, x(r, s, p));
        used.add(1.0, x(r, s, p));
      }
    }
    w.row(name("work", {i}), work, "=", 0.0);
    Expr cpus;
    cpus.add(pp.cpu_capacity_gflops, ns).add(-1.0, om);
    w.row(name("cpus", {i}), cpus, ">=", 0.0);
    w.row(name("lanon", {i}), used, "<=", 0.0);
    Expr agg;
    agg.add(1.0, th);
    for (NodeIndex q : procs) {
      if (q == p) continue;
      agg.add(-1.0, lam(p, q)).add(-1.0, lam(q, p));
    }
    w.row(name("agg", {i}), agg, "=", 0.0);
    bounds << ' ' << ns << " <= " << pp.max_cpus << '\n';
    generals.push_back(ns);
    binaries.push_back(phi);
    st.continuous += 2;
    obj.add(pp.energy_per_gflops, om)
        .add(pp.cpu_idle_power, ns)
        .add(pp.lan_energy_per_gbps, th)
        .add(pp.lan_idle_power * topo.node(p).delta, phi);
  }

  st.rows = w.count();
  st.binaries = binaries.size();
  st.integers = generals.size();

  std::ostringstream os;
  os << "\\ fogplace placement model\n";
  os << "\\ k = " << scenario.k() << ", requests = " << reqs.size() << '\n';
  for (std::size_t n = 0; n < topo.size(); ++n) {
    os << "\\ node " << n << " = " << topo.nodes()[n].id << '\n';
  }
  for (std::size_t r = 0; r < reqs.size(); ++r) {
    os << "\\ request " << r << " = " << reqs[r].id << '\n';
  }
  os << "Minimize\n obj:";
  if (obj.empty()) {
    os << " 0 zero";
    w.use_zero();
  } else {
    obj.write(os);
  }
  os << "\nSubject To\n" << w.rows();
  os << "Bounds\n" << bounds.str();
  if (w.uses_zero()) os << " zero = 0\n";
  if (!generals.empty()) {
    os << "General\n";
    for (const auto& g : generals) os << ' ' << g << '\n';
  }
  if (!binaries.empty()) {
    os << "Binary\n";
    for (const auto& b : binaries) os << ' ' << b << '\n';
  }
  os << "End\n";
  model.text = os.str();
  return model;
}

}  // namespace fogplace
