#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bnba/knapsack.hpp"
#include "bnba/sim.hpp"

namespace bnba {

// An instance is either a JSON file on disk (path relative to the manifest)
// or a generator specification.
struct GeneratorSpec {
  InstanceFamily family = InstanceFamily::uncorrelated;
  int n_items = 10;
  std::uint64_t seed = 0;
};
using InstanceSource = std::variant<std::string, GeneratorSpec>;

// A solver column: either a simulator configuration to run, or a directory
// of externally produced trace files to analyze as-is.
struct SolverEntry {
  std::string id;
  SimConfig config;
  std::optional<std::string> trace_dir;
};

struct ExperimentManifest {
  std::vector<InstanceSource> instances;
  std::vector<SolverEntry> solvers;
  std::vector<int> core_counts;      // ascending
  std::vector<std::int64_t> seeds;   // jitter seeds, one run per seed
  double time_limit = 3600.0;        // seconds, shared by all runs
  std::string output_dir = "out";
};

ExperimentManifest parse_manifest(const std::string& text, const std::string& base_dir);
ExperimentManifest load_manifest(const std::string& path);

// Materializes generator specs and reads file-backed instances.
std::vector<KnapsackInstance> resolve_instances(const ExperimentManifest& manifest);

}  // namespace bnba
