#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bnba/knapsack.hpp"
#include "bnba/trace.hpp"

namespace bnba {

enum class SearchOrder { best_first, depth_first };
enum class WorkloadMode { tree_search, independent_tasks };

const char* to_string(SearchOrder o);
const char* to_string(WorkloadMode m);
SearchOrder search_order_from_string(const std::string& s);
WorkloadMode workload_mode_from_string(const std::string& s);

// Knobs of the simulated solver. seed drives only the per-node cost jitter;
// tie_break_seed drives only the ordering hash among equal-priority nodes,
// so the two variability sources can be exercised independently.
struct SimConfig {
  std::string solver_id = "bnb";
  int cores = 1;
  std::int64_t seed = 0;
  std::uint64_t tie_break_seed = 0;
  SearchOrder search_order = SearchOrder::best_first;
  double node_cost_mean = 0.001;        // seconds per processed node
  double node_cost_jitter = 0.0;        // relative spread in [0, 1)
  double comm_latency = 0.0;            // seconds to pull one node from the pool
  double bound_broadcast_period = 0.0;  // incumbent publication period; 0 = immediate
  WorkloadMode workload_mode = WorkloadMode::tree_search;
  int num_tasks = 1000;                 // pool size in independent_tasks mode
  double time_limit = 86400.0;          // seconds of simulated time
};

struct SimResult {
  Trace trace;
  double optimal_value = 0.0;
  std::vector<int> solution;  // chosen original item indices, ascending
};

// Plain loop over the node pool on one core with a simulated clock; the
// reference implementation the parallel engine degenerates to at one core
// with zero latency.
SimResult solve_sequential(const KnapsackInstance& instance, const SimConfig& config);

// Discrete-event simulation: idle cores pull the pool's best node (paying
// comm_latency), process it at a jittered cost, and report results on
// completion. Worker-side incumbent views refresh every
// bound_broadcast_period of simulated time, so stale views process nodes an
// up-to-date view would have discarded. All times live on an integer
// microsecond clock; runs are deterministic in (instance, config).
SimResult simulate_parallel(const KnapsackInstance& instance, const SimConfig& config);

// One independent simulation per seed; everything else in config is shared.
std::vector<SimResult> seed_sweep(const KnapsackInstance& instance, const SimConfig& config,
                                  const std::vector<std::int64_t>& seeds);

}  // namespace bnba
