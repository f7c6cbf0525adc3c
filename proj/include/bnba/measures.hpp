#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnba/trace.hpp"

namespace bnba {

enum class Unit { seconds, ratio, count, nodes_per_second, core_seconds };

const char* to_string(Unit u);
Unit unit_from_string(const std::string& s);

// A named scalar extracted from one run. censored means the defining
// criterion was not reached within the time limit; censored time values
// carry the time limit itself, not infinity, so limit-aware aggregation
// stays finite.
struct MeasureValue {
  std::string name;
  double value = 0.0;
  Unit unit = Unit::seconds;
  bool censored = false;
  bool operator==(const MeasureValue&) const = default;
};

enum class GapDenominator { max_abs, min_abs, constant };

// Relative primal-dual gap in [0, 1] (for the default max_abs denominator):
// 0 when both bounds are zero, 1 when the bounds disagree in sign or either
// is infinite, |p - d| / max(|p|, |d|) otherwise. Symmetric in its arguments
// and invariant under positive scaling.
double relative_gap(double primal, double dual,
                    GapDenominator denom = GapDenominator::max_abs,
                    double denominator_constant = 1.0);

// Gap of the bounds in force at each event time, prefixed with the implicit
// (0, 1) sample when the first event falls after t = 0.
struct GapFunctionSample {
  double t;
  double gap;
  bool operator==(const GapFunctionSample&) const = default;
};
std::vector<GapFunctionSample> gap_function(const Trace& trace);

// Earliest time at which the relative gap drops to rel_tol or the absolute
// gap to abs_tol; censored at the time limit when that never happens.
MeasureValue time_to_optimality(const Trace& trace, double rel_tol = 1e-6,
                                double abs_tol = 1e-9);

// Earliest time at which the relative gap drops to target (in [0, 1]).
MeasureValue time_to_gap(const Trace& trace, double target);

// Earliest event time with a finite primal bound.
MeasureValue time_to_first_solution(const Trace& trace);

// Integral of the gap step function over [0, min(horizon, wall_time)], with
// gap 1 before the first event. The clamp means censored runs are never
// integrated past their data; solved runs lose nothing because their tail
// gap is zero. Requires 0 < horizon <= time_limit.
double primal_dual_integral(const Trace& trace, double horizon);

std::optional<WorkCounters> work_counts(const Trace& trace);

// Nodes processed per second of wall time. Requires recorded counters and a
// positive wall time.
double node_throughput(const Trace& trace);

// Ratio of baseline time to time at N cores. Both inputs must be positive
// and uncensored.
double speedup(double baseline_seconds, double at_n_seconds);
double speedup(const MeasureValue& baseline, const MeasureValue& at_n);

// speedup_n / n.
double parallel_efficiency(double speedup_n, int cores);

// Two readings of ramp overhead. per_core_sum: total core-seconds spent
// before each core first turns busy / after it last turns busy.
// all_cores_active: time until every core has been busy at least once /
// time after the earliest final-busy end. Requires every core to have at
// least one busy interval.
enum class RampDefinition { per_core_sum, all_cores_active };
struct RampTimes {
  double ramp_up;
  double ramp_down;
};
RampTimes ramp_times(const Trace& trace, RampDefinition def);

// Core-seconds by activity kind. Requires each core's intervals to tile
// [0, wall_time]; the three parts then sum to core_hours exactly at the
// microsecond resolution.
struct OverheadBreakdown {
  double busy;
  double idle;
  double comm;
};
OverheadBreakdown overhead_breakdown(const Trace& trace);

}  // namespace bnba
