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

#include "fogplace/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace fogplace {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw FormatError(path + ": " + what);
}

const Json& field(const Json& obj, const std::string& key,
                  const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(path + "." + key, "missing field");
  return *it;
}

double number(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_number()) fail(path + "." + key, "expected a number");
  return v.get<double>();
}

double number_or(const Json& obj, const std::string& key, double fallback,
                 const std::string& path) {
  if (!obj.contains(key)) return fallback;
  return number(obj, key, path);
}

int integer(const Json& obj, const std::string& key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_number_integer()) fail(path + "." + key, "expected an integer");
  return v.get<int>();
}

std::string text(const Json& obj, const std::string& key,
                 const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

bool boolean_or(const Json& obj, const std::string& key, bool fallback,
                const std::string& path) {
  if (!obj.contains(key)) return fallback;
  const Json& v = obj.at(key);
  if (!v.is_boolean()) fail(path + "." + key, "expected true or false");
  return v.get<bool>();
}

const Json& array(const Json& obj, const std::string& key,
                  const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_array()) fail(path + "." + key, "expected an array");
  return v;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json topology_to_json(const Topology& topology) {
  Json nodes = Json::array();
  for (const Node& n : topology.nodes()) {
    Json j;
    j["id"] = n.id;
    j["tier"] = std::string(tier_name(n.tier));
    if (n.zone) j["zone"] = *n.zone;
    if (n.is_source) j["is_source"] = true;
    j["delta"] = n.delta;
    if (n.network) {
      j["network"] = {{"energy_per_gbps", n.network->energy_per_gbps},
                      {"idle_power", n.network->idle_power},
                      {"bitrate_capacity", n.network->bitrate_capacity}};
    }
    if (n.processor) {
      const ProcessorProfile& p = *n.processor;
      j["processor"] = {{"energy_per_gflops", p.energy_per_gflops},
                        {"cpu_idle_power", p.cpu_idle_power},
                        {"cpu_capacity_gflops", p.cpu_capacity_gflops},
                        {"max_cpus", p.max_cpus},
                        {"lan_energy_per_gbps", p.lan_energy_per_gbps},
                        {"lan_idle_power", p.lan_idle_power}};
    }
    nodes.push_back(std::move(j));
  }
  Json links = Json::array();
  for (const auto& [a, b] : topology.links()) {
    links.push_back(Json::array({topology.nodes()[a.get()].id,
                                 topology.nodes()[b.get()].id}));
  }
  return {{"nodes", std::move(nodes)},
          {"links", std::move(links)},
          {"require_tree", topology.require_tree()}};
}

Topology topology_from_json(const Json& doc) {
  const std::string root = "topology";
  std::vector<Node> nodes;
  const Json& jn = array(doc, "nodes", root);
  for (std::size_t i = 0; i < jn.size(); ++i) {
    const std::string path = at(root + ".nodes", i);
    const Json& j = jn[i];
    Node n;
    n.id = text(j, "id", path);
    try {
      n.tier = tier_from_name(text(j, "tier", path));
    } catch (const ConfigError& e) {
      fail(path + ".tier", e.what());
    }
    if (j.contains("zone")) n.zone = integer(j, "zone", path);
    n.is_source = boolean_or(j, "is_source", false, path);
    n.delta = number_or(j, "delta", 1.0, path);
    if (j.contains("network")) {
      const Json& p = j.at("network");
      const std::string pp = path + ".network";
      n.network = NetworkProfile{number(p, "energy_per_gbps", pp),
                                 number(p, "idle_power", pp),
                                 number(p, "bitrate_capacity", pp)};
    }
    if (j.contains("processor")) {
      const Json& p = j.at("processor");
      const std::string pp = path + ".processor";
      n.processor = ProcessorProfile{number(p, "energy_per_gflops", pp),
                                     number(p, "cpu_idle_power", pp),
                                     number(p, "cpu_capacity_gflops", pp),
                                     integer(p, "max_cpus", pp),
                                     number_or(p, "lan_energy_per_gbps", 0.0, pp),
                                     number_or(p, "lan_idle_power", 0.0, pp)};
    }
    nodes.push_back(std::move(n));
  }
  std::vector<std::pair<std::string, std::string>> links;
  const Json& jl = array(doc, "links", root);
  for (std::size_t i = 0; i < jl.size(); ++i) {
    const Json& l = jl[i];
    if (!l.is_array() || l.size() != 2 || !l[0].is_string() ||
        !l[1].is_string()) {
      fail(at(root + ".links", i), "expected a pair of node ids");
    }
    links.emplace_back(l[0].get<std::string>(), l[1].get<std::string>());
  }
  return Topology(std::move(nodes), std::move(links),
                  boolean_or(doc, "require_tree", true, root));
}

Json scenario_to_json(const Scenario& scenario) {
  Json reqs = Json::array();
  for (const VirtualRequest& r : scenario.requests()) {
    Json vms = Json::array();
    for (const VirtualMachine& v : r.vms) {
      vms.push_back({{"cpu_demand", v.cpu_demand}, {"is_input", v.is_input}});
    }
    Json links = Json::array();
    for (const VirtualLink& l : r.links) {
      links.push_back(
          {{"from", l.from_vm}, {"to", l.to_vm}, {"data_rate", l.data_rate}});
    }
    reqs.push_back({{"id", r.id},
                    {"source", r.source_node},
                    {"vms", std::move(vms)},
                    {"links", std::move(links)}});
  }
  Json doc = {{"k", scenario.k()},
              {"cap_source_iot", scenario.cap_source_iot()},
              {"topology", topology_to_json(scenario.topology())},
              {"requests", std::move(reqs)}};
  if (scenario.delta_override()) doc["delta"] = *scenario.delta_override();
  return doc;
}

Scenario scenario_from_json(const Json& doc,
                            const std::filesystem::path& base_dir) {
  const std::string root = "scenario";
  if (!doc.is_object()) fail(root, "expected an object");
  Topology topo;
  if (doc.contains("topology")) {
    topo = topology_from_json(doc.at("topology"));
  } else if (doc.contains("topology_file")) {
    topo = load_topology(base_dir / text(doc, "topology_file", root));
  } else {
    fail(root + ".topology", "missing field (or topology_file)");
  }
  const int k = integer(doc, "k", root);
  std::optional<double> delta;
  if (doc.contains("delta") && !doc.at("delta").is_null()) {
    delta = number(doc, "delta", root);
  }
  std::vector<VirtualRequest> reqs;
  const Json& jr = array(doc, "requests", root);
  for (std::size_t i = 0; i < jr.size(); ++i) {
    const std::string path = at(root + ".requests", i);
    const Json& j = jr[i];
    VirtualRequest r;
    r.id = text(j, "id", path);
    r.source_node = text(j, "source", path);
    const Json& jv = array(j, "vms", path);
    for (std::size_t s = 0; s < jv.size(); ++s) {
      const std::string vp = at(path + ".vms", s);
      r.vms.push_back({number(jv[s], "cpu_demand", vp),
                       boolean_or(jv[s], "is_input", false, vp)});
    }
    const Json& jl = array(j, "links", path);
    for (std::size_t l = 0; l < jl.size(); ++l) {
      const std::string lp = at(path + ".links", l);
      const int from = integer(jl[l], "from", lp);
      const int to = integer(jl[l], "to", lp);
      if (from < 0 || to < 0) fail(lp, "VM indices must be non-negative");
      r.links.push_back({static_cast<std::uint32_t>(from),
                         static_cast<std::uint32_t>(to),
                         number(jl[l], "data_rate", lp)});
    }
    reqs.push_back(std::move(r));
  }
  return Scenario(std::move(topo), std::move(reqs), k, delta,
                  boolean_or(doc, "cap_source_iot", false, root));
}

Json placement_to_json(const Scenario& scenario, const Placement& placement) {
  Json rows = Json::array();
  const auto& reqs = scenario.requests();
  for (std::size_t r = 0; r < placement.host.size(); ++r) {
    for (std::size_t s = 0; s < placement.host[r].size(); ++s) {
      const NodeIndex n = placement.host[r][s];
      if (!n.valid()) continue;
      rows.push_back({{"request", reqs.at(r).id},
                      {"vm", s},
                      {"node", scenario.topology().node(n).id}});
    }
  }
  return {{"assignments", std::move(rows)}};
}

Placement placement_from_json(const Scenario& scenario, const Json& doc) {
  const std::string root = "placement";
  Placement p = Placement::empty_for(scenario);
  const auto& reqs = scenario.requests();
  const Json& rows = array(doc, "assignments", root);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string path = at(root + ".assignments", i);
    const std::string rid = text(rows[i], "request", path);
    std::size_t r = 0;
    while (r < reqs.size() && reqs[r].id != rid) ++r;
    if (r == reqs.size()) fail(path + ".request", "unknown request '" + rid + "'");
    const int s = integer(rows[i], "vm", path);
    if (s < 0 || static_cast<std::size_t>(s) >= reqs[r].vms.size()) {
      fail(path + ".vm", "no such VM in request '" + rid + "'");
    }
    const std::string nid = text(rows[i], "node", path);
    auto n = scenario.topology().find(nid);
    if (!n) fail(path + ".node", "unknown node '" + nid + "'");
    p.host[r][s] = *n;
  }
  return p;
}

std::string placement_csv(const Scenario& scenario, const Placement& placement) {
  std::string out = "request,vm,node\n";
  const auto& reqs = scenario.requests();
  for (std::size_t r = 0; r < placement.host.size(); ++r) {
    for (std::size_t s = 0; s < placement.host[r].size(); ++s) {
      const NodeIndex n = placement.host[r][s];
      out += csv_field(reqs.at(r).id) + "," + std::to_string(s) + "," +
             (n.valid() ? csv_field(scenario.topology().node(n).id) : "") + "\n";
    }
  }
  return out;
}

Json breakdown_to_json(const PowerBreakdown& b) {
  Json shares = Json::object();
  for (const auto& [tier, share] : b.tier_workload_share) {
    shares[std::string(tier_name(tier))] = share;
  }
  return {{"total", b.total},
          {"net_proportional", b.net_proportional},
          {"net_idle", b.net_idle},
          {"proc_proportional", b.proc_proportional},
          {"proc_idle", b.proc_idle},
          {"lan_proportional", b.lan_proportional},
          {"lan_idle", b.lan_idle},
          {"tier_workload_share", std::move(shares)}};
}

Json result_to_json(const Scenario& scenario, const SolveResult& result) {
  Json doc = {{"solver", result.solver},
              {"status", std::string(status_name(result.status))},
              {"objective", finite_or_null(result.objective)},
              {"lower_bound", finite_or_null(result.lower_bound)},
              {"gap", finite_or_null(result.gap())},
              {"nodes_explored", result.nodes_explored},
              {"wall_time", result.wall_time}};
  if (result.has_placement()) {
    doc["placement"] = placement_to_json(scenario, result.placement);
    doc["breakdown"] = breakdown_to_json(evaluate(scenario, result.placement));
  }
  return doc;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

Json read_json(const std::filesystem::path& path) {
  try {
    return Json::parse(read_text(path));
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

Topology load_topology(const std::filesystem::path& path) {
  return topology_from_json(read_json(path));
}

Scenario load_scenario(const std::filesystem::path& path) {
  return scenario_from_json(read_json(path), path.parent_path());
}

}  // namespace fogplace
