#include "bnba/manifest.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bnba {

namespace {

using nlohmann::json;

SimConfig config_from_json(const json& j) {
  SimConfig cfg;
  if (j.contains("search_order"))
    cfg.search_order = search_order_from_string(j.at("search_order").get<std::string>());
  if (j.contains("workload_mode"))
    cfg.workload_mode = workload_mode_from_string(j.at("workload_mode").get<std::string>());
  if (j.contains("node_cost_mean")) cfg.node_cost_mean = j.at("node_cost_mean").get<double>();
  if (j.contains("node_cost_jitter"))
    cfg.node_cost_jitter = j.at("node_cost_jitter").get<double>();
  if (j.contains("comm_latency")) cfg.comm_latency = j.at("comm_latency").get<double>();
  if (j.contains("bound_broadcast_period"))
    cfg.bound_broadcast_period = j.at("bound_broadcast_period").get<double>();
  if (j.contains("tie_break_seed"))
    cfg.tie_break_seed = j.at("tie_break_seed").get<std::uint64_t>();
  if (j.contains("num_tasks")) cfg.num_tasks = j.at("num_tasks").get<int>();
  return cfg;
}

}  // namespace

ExperimentManifest parse_manifest(const std::string& text, const std::string& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("manifest: ") + e.what());
  }
  ExperimentManifest m;
  for (const json& inst : j.at("instances")) {
    if (inst.contains("file")) {
      std::filesystem::path p = inst.at("file").get<std::string>();
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      m.instances.emplace_back(p.string());
    } else if (inst.contains("generate")) {
      const json& g = inst.at("generate");
      m.instances.emplace_back(
          GeneratorSpec{family_from_string(g.at("family").get<std::string>()),
                        g.at("n_items").get<int>(), g.at("seed").get<std::uint64_t>()});
    } else {
      throw std::runtime_error("manifest: instance entry needs file or generate");
    }
  }
  for (const json& s : j.at("solver_configs")) {
    SolverEntry entry;
    entry.id = s.at("id").get<std::string>();
    if (entry.id.find("__") != std::string::npos)
      throw std::runtime_error("manifest: solver id may not contain __");
    if (s.contains("trace_dir")) {
      std::filesystem::path p = s.at("trace_dir").get<std::string>();
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      entry.trace_dir = p.string();
    } else {
      entry.config = config_from_json(s);
      entry.config.solver_id = entry.id;
    }
    m.solvers.push_back(std::move(entry));
  }
  m.core_counts = j.at("core_counts").get<std::vector<int>>();
  m.seeds = j.at("seeds").get<std::vector<std::int64_t>>();
  m.time_limit = j.at("time_limit").get<double>();
  if (j.contains("output_dir")) {
    std::filesystem::path p = j.at("output_dir").get<std::string>();
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    m.output_dir = p.string();
  }

  if (m.instances.empty()) throw std::runtime_error("manifest: no instances");
  if (m.solvers.empty()) throw std::runtime_error("manifest: no solver configs");
  if (m.core_counts.empty()) throw std::runtime_error("manifest: no core counts");
  if (!std::is_sorted(m.core_counts.begin(), m.core_counts.end()) ||
      std::adjacent_find(m.core_counts.begin(), m.core_counts.end()) != m.core_counts.end())
    throw std::runtime_error("manifest: core_counts must be strictly ascending");
  for (int c : m.core_counts)
    if (c < 1) throw std::runtime_error("manifest: core counts must be >= 1");
  if (m.seeds.empty()) throw std::runtime_error("manifest: no seeds");
  if (!(m.time_limit > 0)) throw std::runtime_error("manifest: time_limit must be > 0");
  return m;
}

ExperimentManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open manifest: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_manifest(buf.str(), std::filesystem::path(path).parent_path().string());
}

std::vector<KnapsackInstance> resolve_instances(const ExperimentManifest& manifest) {
  std::vector<KnapsackInstance> out;
  for (const InstanceSource& src : manifest.instances) {
    if (std::holds_alternative<std::string>(src)) {
      out.push_back(read_instance_file(std::get<std::string>(src)));
    } else {
      const GeneratorSpec& g = std::get<GeneratorSpec>(src);
      out.push_back(generate_instance(g.family, g.n_items, g.seed));
    }
    if (out.back().id.find("__") != std::string::npos)
      throw std::runtime_error("instance id may not contain __: " + out.back().id);
  }
  return out;
}

}  // namespace bnba
