#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bnba {

enum class Sense { minimize, maximize };

enum class RunStatus { optimal, gap_limit, time_limit, first_solution, aborted };

enum class ActivityKind { busy, idle, comm };

// One observation of the incumbent/bound pair at time t. Values are extended
// reals: +-infinity stands for "no bound known yet".
struct BoundEvent {
  double t = 0.0;
  double primal = 0.0;
  double dual = 0.0;
  bool operator==(const BoundEvent&) const = default;
};

// Half-open activity span [start, end) of one core.
struct CoreInterval {
  int core_id = 0;
  double start = 0.0;
  double end = 0.0;
  ActivityKind kind = ActivityKind::busy;
  bool operator==(const CoreInterval&) const = default;
};

struct WorkCounters {
  std::uint64_t nodes_processed = 0;
  std::uint64_t bounding_problems = 0;
  std::uint64_t iterations = 0;
  bool operator==(const WorkCounters&) const = default;
};

struct RunRecord {
  std::string instance_id;
  std::string solver_id;
  int cores = 1;
  std::int64_t seed = 0;
  double time_limit = 0.0;  // seconds
  RunStatus status = RunStatus::optimal;
  double wall_time = 0.0;  // seconds
  Sense sense = Sense::minimize;
  bool operator==(const RunRecord&) const = default;
};

struct Trace {
  RunRecord run;
  std::vector<BoundEvent> bounds;           // sorted by strictly increasing t
  std::optional<WorkCounters> work;         // absent when the solver logged none
  std::vector<CoreInterval> core_activity;  // may be empty for plain sequential logs
  bool operator==(const Trace&) const = default;
};

const char* to_string(Sense s);
const char* to_string(RunStatus s);
const char* to_string(ActivityKind k);
Sense sense_from_string(const std::string& s);
RunStatus status_from_string(const std::string& s);
ActivityKind activity_from_string(const std::string& s);

// Structural and semantic checks; an empty result means the trace is valid.
// Checks: event times within [0, wall_time], strictly increasing; bound
// monotonicity in the run's sense; wall_time <= time_limit for non-aborted
// runs; per-core intervals tile [0, wall_time] without overlap; counter
// sanity; final gap of an optimal-status run within tolerance.
std::vector<std::string> validate_trace(const Trace& trace);

// Rewrites a maximization trace as the equivalent minimization trace by
// negating all bound values. Idempotent; minimization traces pass through.
Trace normalize_sense(const Trace& trace);

// Resource consumption: wall time multiplied by the core count.
double core_hours(const RunRecord& run);

// Bounds as right-continuous step functions of time: the pair in force at t
// is the one set by the latest event at or before t. Before the first event
// the primal is +inf and the dual -inf for minimization (mirrored for
// maximization). Requires 0 <= t <= wall_time.
struct BoundPair {
  double primal;
  double dual;
};
BoundPair bounds_at(const Trace& trace, double t);

}  // namespace bnba
