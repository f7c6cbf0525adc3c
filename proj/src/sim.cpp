#include "bnba/sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <tuple>

#include "bnba/format.hpp"

namespace bnba {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const char* kSearchOrderNames[] = {"best_first", "depth_first"};
const char* kWorkloadNames[] = {"tree_search", "independent_tasks"};

// Instance with items permuted to descending value/weight ratio, which is
// the order both the greedy bound and the branching walk items in.
struct SortedInstance {
  std::vector<double> values;
  std::vector<double> weights;
  std::vector<int> original_index;
  double capacity = 0.0;
  int n = 0;
};

SortedInstance sort_by_ratio(const KnapsackInstance& inst) {
  SortedInstance s;
  s.n = static_cast<int>(inst.values.size());
  s.capacity = inst.capacity;
  s.original_index.resize(s.n);
  for (int i = 0; i < s.n; ++i) s.original_index[i] = i;
  std::sort(s.original_index.begin(), s.original_index.end(), [&](int a, int b) {
    const double ra = inst.values[a] / inst.weights[a];
    const double rb = inst.values[b] / inst.weights[b];
    if (ra != rb) return ra > rb;
    return a < b;
  });
  for (int i : s.original_index) {
    s.values.push_back(inst.values[i]);
    s.weights.push_back(inst.weights[i]);
  }
  return s;
}

// Greedy fractional bound from depth onward. integral means the greedy fill
// finished without a fractional item, so the bound is attained by a feasible
// completion (taken_mask) and the subtree is solved outright.
struct BoundEval {
  double bound = 0.0;
  bool integral = true;
  std::uint32_t taken_mask = 0;
  int scanned = 0;
};

BoundEval evaluate_bound(const SortedInstance& inst, int depth, double weight, double value) {
  BoundEval ev;
  ev.bound = value;
  double rem = inst.capacity - weight;
  for (int i = depth; i < inst.n; ++i) {
    ++ev.scanned;
    if (inst.weights[i] <= rem) {
      rem -= inst.weights[i];
      ev.bound += inst.values[i];
      ev.taken_mask |= 1u << i;
    } else {
      if (rem > 0.0) {
        ev.bound += inst.values[i] * rem / inst.weights[i];
        ev.integral = false;
      }
      break;
    }
  }
  return ev;
}

struct Node {
  int depth = 0;
  double weight = 0.0;
  double value = 0.0;
  double est = kInf;  // bound inherited from the parent; +inf at the root
  std::uint64_t id = 1;
  std::uint32_t mask = 0;  // items taken among decided depths (sorted space)
};

// Deterministic pool order: priority descending, then the seeded id hash,
// then the id itself as a total-order guard.
struct PoolEntry {
  double key;
  std::uint64_t hash;
  std::uint64_t id;
  std::uint32_t arena_idx;
  bool operator<(const PoolEntry& o) const {
    if (key != o.key) return key > o.key;
    if (hash != o.hash) return hash < o.hash;
    return id < o.id;
  }
};

struct IntervalRec {
  std::int64_t start;
  std::int64_t end;
  ActivityKind kind;
};

// Everything the engine accumulates for the trace. flush coalesces repeated
// state changes at one tick into a single event, keeping times strictly
// increasing.
struct Recorder {
  std::vector<std::vector<IntervalRec>> per_core;
  std::vector<BoundEvent> bounds;
  double last_primal = 0.0;
  double last_dual = kInf;

  explicit Recorder(int cores) : per_core(cores) {}

  void flush(std::int64_t t, double primal, double dual) {
    if (primal == last_primal && dual == last_dual) return;
    const double ts = seconds_from_micros(t);
    if (!bounds.empty() && bounds.back().t == ts) {
      bounds.back().primal = primal;
      bounds.back().dual = dual;
    } else {
      bounds.push_back({ts, primal, dual});
    }
    last_primal = primal;
    last_dual = dual;
  }
};

std::vector<CoreInterval> build_core_activity(const std::vector<std::vector<IntervalRec>>& raw,
                                              std::int64_t wall) {
  std::vector<CoreInterval> out;
  for (int core = 0; core < static_cast<int>(raw.size()); ++core) {
    std::vector<IntervalRec> ivs = raw[core];
    for (IntervalRec& iv : ivs) {  // a timeout can truncate in-flight work
      iv.start = std::min(iv.start, wall);
      iv.end = std::min(iv.end, wall);
    }
    std::vector<IntervalRec> tiled;
    std::int64_t cursor = 0;
    for (const IntervalRec& iv : ivs) {
      if (iv.start > cursor) tiled.push_back({cursor, iv.start, ActivityKind::idle});
      if (iv.end > iv.start) tiled.push_back(iv);
      cursor = std::max(cursor, iv.end);
    }
    if (wall > cursor) tiled.push_back({cursor, wall, ActivityKind::idle});
    // merge adjacent spans of the same kind
    std::vector<IntervalRec> merged;
    for (const IntervalRec& iv : tiled) {
      if (!merged.empty() && merged.back().kind == iv.kind && merged.back().end == iv.start)
        merged.back().end = iv.end;
      else
        merged.push_back(iv);
    }
    for (const IntervalRec& iv : merged)
      out.push_back({core, seconds_from_micros(iv.start), seconds_from_micros(iv.end), iv.kind});
  }
  return out;
}

std::int64_t jittered_cost_micros(double mean_micros, double jitter, std::int64_t seed,
                                  std::uint64_t id) {
  double factor = 1.0;
  if (jitter > 0.0) {
    const double u =
        unit_from_hash(splitmix64(splitmix64(static_cast<std::uint64_t>(seed)) ^ id));
    factor = 1.0 + jitter * (2.0 * u - 1.0);
  }
  return std::max<std::int64_t>(1, std::llround(mean_micros * factor));
}

struct EngineSetup {
  SortedInstance inst;
  double mean_micros = 0.0;
  std::int64_t latency = 0;
  std::int64_t period = 0;
  std::int64_t limit = 0;
  std::uint64_t tie_salt = 0;

  EngineSetup(const KnapsackInstance& instance, const SimConfig& cfg) {
    if (cfg.cores < 1) throw std::invalid_argument("sim: cores must be >= 1");
    if (cfg.node_cost_mean <= 0) throw std::invalid_argument("sim: node_cost_mean must be > 0");
    if (cfg.node_cost_jitter < 0 || cfg.node_cost_jitter >= 1)
      throw std::invalid_argument("sim: node_cost_jitter must be in [0, 1)");
    if (cfg.comm_latency < 0 || cfg.bound_broadcast_period < 0 || cfg.time_limit <= 0)
      throw std::invalid_argument("sim: negative timing parameter");
    if (cfg.workload_mode == WorkloadMode::independent_tasks && cfg.num_tasks < 1)
      throw std::invalid_argument("sim: num_tasks must be >= 1");
    if (cfg.workload_mode == WorkloadMode::tree_search && instance.values.size() > 25)
      throw std::invalid_argument("sim: tree_search limited to 25 items");
    inst = sort_by_ratio(instance);
    mean_micros = cfg.node_cost_mean * 1e6;
    latency = micros_from_seconds(cfg.comm_latency);
    period = micros_from_seconds(cfg.bound_broadcast_period);
    limit = micros_from_seconds(cfg.time_limit);
    tie_salt = splitmix64(cfg.tie_break_seed);
  }
};

double pool_key(const SimConfig& cfg, const Node& node) {
  if (cfg.workload_mode == WorkloadMode::independent_tasks)
    return -static_cast<double>(node.id);  // FIFO by task id
  return cfg.search_order == SearchOrder::best_first ? node.est
                                                     : static_cast<double>(node.depth);
}

std::vector<int> mask_to_items(std::uint32_t mask, const SortedInstance& inst) {
  std::vector<int> items;
  for (int i = 0; i < inst.n; ++i)
    if (mask & (1u << i)) items.push_back(inst.original_index[i]);
  std::sort(items.begin(), items.end());
  return items;
}

RunRecord make_run_record(const KnapsackInstance& instance, const SimConfig& cfg,
                          std::int64_t wall, RunStatus status) {
  RunRecord run;
  run.instance_id = instance.id;
  run.solver_id = cfg.solver_id;
  run.cores = cfg.cores;
  run.seed = cfg.seed;
  run.time_limit = seconds_from_micros(micros_from_seconds(cfg.time_limit));
  run.status = status;
  run.wall_time = seconds_from_micros(wall);
  run.sense = cfg.workload_mode == WorkloadMode::tree_search ? Sense::maximize
                                                             : Sense::minimize;
  return run;
}

}  // namespace

const char* to_string(SearchOrder o) { return kSearchOrderNames[static_cast<int>(o)]; }
const char* to_string(WorkloadMode m) { return kWorkloadNames[static_cast<int>(m)]; }

SearchOrder search_order_from_string(const std::string& s) {
  if (s == "best_first") return SearchOrder::best_first;
  if (s == "depth_first") return SearchOrder::depth_first;
  throw std::invalid_argument("unknown search order: " + s);
}

WorkloadMode workload_mode_from_string(const std::string& s) {
  if (s == "tree_search") return WorkloadMode::tree_search;
  if (s == "independent_tasks") return WorkloadMode::independent_tasks;
  throw std::invalid_argument("unknown workload mode: " + s);
}

SimResult solve_sequential(const KnapsackInstance& instance, const SimConfig& config) {
  SimConfig cfg = config;
  cfg.cores = 1;
  cfg.comm_latency = 0.0;
  cfg.bound_broadcast_period = 0.0;
  if (cfg.workload_mode != WorkloadMode::tree_search)
    throw std::invalid_argument("solve_sequential: tree_search workloads only");
  const EngineSetup setup(instance, cfg);
  const SortedInstance& inst = setup.inst;

  double incumbent = 0.0;  // the empty set is always feasible
  std::uint32_t incumbent_mask = 0;
  WorkCounters work;
  Recorder rec(1);
  std::int64_t t = 0;
  rec.bounds.push_back({0.0, 0.0, kInf});

  std::deque<Node> arena;
  std::set<PoolEntry> pool;
  std::multiset<double> open;  // bound estimates of pool nodes + the one in hand
  auto push_node = [&](const Node& node) {
    arena.push_back(node);
    pool.insert({pool_key(cfg, node), splitmix64(setup.tie_salt ^ node.id), node.id,
                 static_cast<std::uint32_t>(arena.size() - 1)});
    open.insert(node.est);
  };
  push_node(Node{});

  bool timed_out = false;
  while (!pool.empty()) {
    const Node node = arena[pool.begin()->arena_idx];
    pool.erase(pool.begin());
    if (node.est <= incumbent) {  // discarded without cost
      open.erase(open.find(node.est));
      continue;
    }
    if (t >= setup.limit) {
      timed_out = true;
      break;
    }
    const std::int64_t cost =
        jittered_cost_micros(setup.mean_micros, cfg.node_cost_jitter, cfg.seed, node.id);
    t += cost;
    if (t > setup.limit) {
      t -= cost;  // the node did not finish; leave it unprocessed
      timed_out = true;
      break;
    }
    const BoundEval ev = evaluate_bound(inst, node.depth, node.weight, node.value);
    ++work.nodes_processed;
    ++work.bounding_problems;
    work.iterations += std::max(ev.scanned, 1);
    open.erase(open.find(node.est));
    if (ev.integral) {
      if (ev.bound > incumbent) {
        incumbent = ev.bound;
        incumbent_mask = node.mask | ev.taken_mask;
      }
    } else if (ev.bound > incumbent) {
      const double w = node.weight + inst.weights[node.depth];
      if (w <= inst.capacity)
        push_node({node.depth + 1, w, node.value + inst.values[node.depth], ev.bound,
                   node.id * 2, node.mask | (1u << node.depth)});
      push_node({node.depth + 1, node.weight, node.value, ev.bound, node.id * 2 + 1,
                 node.mask});
    }
    const double dual = open.empty() ? incumbent : std::max(*open.rbegin(), incumbent);
    rec.flush(t, incumbent, dual);
  }
  // Trailing free discards can empty the open set after the last completion.
  rec.flush(t, incumbent, open.empty() ? incumbent : std::max(*open.rbegin(), incumbent));

  const std::int64_t wall = timed_out ? setup.limit : t;
  if (t > 0) rec.per_core[0].push_back({0, t, ActivityKind::busy});

  SimResult result;
  result.trace.run = make_run_record(instance, cfg, wall,
                                     timed_out ? RunStatus::time_limit : RunStatus::optimal);
  result.trace.bounds = std::move(rec.bounds);
  result.trace.work = work;
  result.trace.core_activity = build_core_activity(rec.per_core, wall);
  result.optimal_value = incumbent;
  result.solution = mask_to_items(incumbent_mask, inst);
  return result;
}

SimResult simulate_parallel(const KnapsackInstance& instance, const SimConfig& cfg) {
  const EngineSetup setup(instance, cfg);
  const SortedInstance& inst = setup.inst;
  const bool tree = cfg.workload_mode == WorkloadMode::tree_search;

  // Master state: the authoritative incumbent, updated the moment a worker
  // reports a completion. Workers read it through possibly delayed views.
  double master = 0.0;
  std::uint32_t master_mask = 0;
  std::vector<std::pair<std::int64_t, double>> master_history{{0, 0.0}};
  std::vector<double> local_best(cfg.cores, 0.0);
  auto view_at = [&](int core, std::int64_t t) {
    double published = master;
    if (setup.period > 0) {
      const std::int64_t tick = (t / setup.period) * setup.period;
      auto it = std::upper_bound(
          master_history.begin(), master_history.end(), tick,
          [](std::int64_t v, const std::pair<std::int64_t, double>& e) { return v < e.first; });
      published = std::prev(it)->second;
    }
    return std::max(published, local_best[core]);
  };

  std::deque<Node> arena;
  std::set<PoolEntry> pool;
  std::multiset<double> open;  // pool + in-flight bound estimates
  auto push_node = [&](const Node& node) {
    arena.push_back(node);
    pool.insert({pool_key(cfg, node), splitmix64(setup.tie_salt ^ node.id), node.id,
                 static_cast<std::uint32_t>(arena.size() - 1)});
    open.insert(node.est);
  };

  if (tree) {
    push_node(Node{});
  } else {
    for (int i = 0; i < cfg.num_tasks; ++i)
      push_node({0, 0.0, 0.0, kInf, static_cast<std::uint64_t>(i) + 1, 0});
  }

  // Events keyed (time, kind, core): completions apply before arrivals so
  // freshly reported incumbents are visible to same-tick pull decisions.
  // A core holds one node at a time (in_hand), so the key is unique.
  enum { kCompletion = 0, kArrival = 1 };
  using Event = std::tuple<std::int64_t, int, int>;
  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> events;
  std::vector<Node> in_hand(cfg.cores);

  std::set<int> free_cores;
  for (int c = 0; c < cfg.cores; ++c) free_cores.insert(c);

  WorkCounters work;
  Recorder rec(cfg.cores);
  if (tree) rec.bounds.push_back({0.0, 0.0, kInf});

  auto current_dual = [&]() {
    return open.empty() ? master : std::max(*open.rbegin(), master);
  };

  std::int64_t t = 0;
  bool timed_out = false;
  for (;;) {
    while (!free_cores.empty() && !pool.empty() && t < setup.limit) {
      const int core = *free_cores.begin();
      free_cores.erase(free_cores.begin());
      const PoolEntry entry = *pool.begin();
      pool.erase(pool.begin());
      in_hand[core] = arena[entry.arena_idx];
      if (setup.latency > 0)
        rec.per_core[core].push_back({t, t + setup.latency, ActivityKind::comm});
      events.push({t + setup.latency, kArrival, core});
    }
    if (events.empty()) {
      if (!pool.empty()) timed_out = true;  // work remains but the clock ran out
      break;
    }
    const std::int64_t tn = std::get<0>(events.top());
    if (tn > setup.limit) {
      timed_out = true;
      break;
    }
    if (tn != t) {
      if (tree) rec.flush(t, master, current_dual());
      t = tn;
    }
    while (!events.empty() && std::get<0>(events.top()) == tn) {
      const int kind = std::get<1>(events.top());
      const int core = std::get<2>(events.top());
      events.pop();
      const Node& node = in_hand[core];
      if (kind == kArrival) {
        if (tree && node.est <= view_at(core, t)) {
          open.erase(open.find(node.est));  // dead on arrival; transfer wasted
          free_cores.insert(core);
          continue;
        }
        const std::int64_t cost =
            jittered_cost_micros(setup.mean_micros, cfg.node_cost_jitter, cfg.seed, node.id);
        rec.per_core[core].push_back({t, t + cost, ActivityKind::busy});
        events.push({t + cost, kCompletion, core});
        continue;
      }
      // completion: apply the node's outcome
      open.erase(open.find(node.est));
      ++work.nodes_processed;
      if (tree) {
        const BoundEval ev = evaluate_bound(inst, node.depth, node.weight, node.value);
        ++work.bounding_problems;
        work.iterations += std::max(ev.scanned, 1);
        if (ev.integral) {
          if (ev.bound > local_best[core]) local_best[core] = ev.bound;
          if (ev.bound > master) {
            master = ev.bound;
            master_mask = node.mask | ev.taken_mask;
            master_history.emplace_back(t, master);
          }
        } else if (ev.bound > view_at(core, t)) {
          const double w = node.weight + inst.weights[node.depth];
          if (w <= inst.capacity)
            push_node({node.depth + 1, w, node.value + inst.values[node.depth], ev.bound,
                       node.id * 2, node.mask | (1u << node.depth)});
          push_node({node.depth + 1, node.weight, node.value, ev.bound, node.id * 2 + 1,
                     node.mask});
        }
      }
      free_cores.insert(core);
    }
  }

  const std::int64_t wall = timed_out ? setup.limit : t;
  if (tree)
    rec.flush(std::min(t, wall), master, current_dual());
  else if (!timed_out)
    rec.bounds.push_back({seconds_from_micros(wall), 0.0, 0.0});

  SimResult result;
  result.trace.run = make_run_record(instance, cfg, wall,
                                     timed_out ? RunStatus::time_limit : RunStatus::optimal);
  result.trace.bounds = std::move(rec.bounds);
  result.trace.work = work;
  result.trace.core_activity = build_core_activity(rec.per_core, wall);
  result.optimal_value = tree ? master : 0.0;
  result.solution = tree ? mask_to_items(master_mask, inst) : std::vector<int>{};
  return result;
}

std::vector<SimResult> seed_sweep(const KnapsackInstance& instance, const SimConfig& config,
                                  const std::vector<std::int64_t>& seeds) {
  std::vector<SimResult> out;
  out.reserve(seeds.size());
  for (std::int64_t s : seeds) {
    SimConfig cfg = config;
    cfg.seed = s;
    out.push_back(simulate_parallel(instance, cfg));
  }
  return out;
}

}  // namespace bnba
