#include "bnba/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace bnba {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double absolute_gap(double primal, double dual) {
  if (std::isinf(primal) || std::isinf(dual)) return kInf;
  return std::abs(primal - dual);
}

}  // namespace

const char* to_string(Unit u) {
  switch (u) {
    case Unit::seconds: return "seconds";
    case Unit::ratio: return "ratio";
    case Unit::count: return "count";
    case Unit::nodes_per_second: return "nodes/second";
    case Unit::core_seconds: return "core-seconds";
  }
  return "count";
}

Unit unit_from_string(const std::string& s) {
  if (s == "seconds") return Unit::seconds;
  if (s == "ratio") return Unit::ratio;
  if (s == "count") return Unit::count;
  if (s == "nodes/second") return Unit::nodes_per_second;
  if (s == "core-seconds") return Unit::core_seconds;
  throw std::invalid_argument("unknown unit: " + s);
}

double relative_gap(double primal, double dual, GapDenominator denom,
                    double denominator_constant) {
  if (std::isinf(primal) || std::isinf(dual)) return 1.0;
  const double ap = std::abs(primal);
  const double ad = std::abs(dual);
  if (ap == 0.0 && ad == 0.0) return 0.0;
  // Sign test written without a product, which could underflow to -0.
  if ((primal > 0.0 && dual < 0.0) || (primal < 0.0 && dual > 0.0)) return 1.0;
  double d = 0.0;
  switch (denom) {
    case GapDenominator::max_abs: d = std::max(ap, ad); break;
    case GapDenominator::min_abs: d = std::min(ap, ad); break;
    case GapDenominator::constant: d = denominator_constant; break;
  }
  if (d == 0.0) return 1.0;  // min_abs/constant degenerate cases
  return std::abs(primal - dual) / d;
}

std::vector<GapFunctionSample> gap_function(const Trace& trace) {
  std::vector<GapFunctionSample> out;
  if (trace.bounds.empty() || trace.bounds.front().t > 0.0) out.push_back({0.0, 1.0});
  for (const BoundEvent& ev : trace.bounds)
    out.push_back({ev.t, relative_gap(ev.primal, ev.dual)});
  return out;
}

MeasureValue time_to_optimality(const Trace& trace, double rel_tol, double abs_tol) {
  for (const BoundEvent& ev : trace.bounds) {
    if (relative_gap(ev.primal, ev.dual) <= rel_tol ||
        absolute_gap(ev.primal, ev.dual) <= abs_tol)
      return {"time_to_opt", ev.t, Unit::seconds, false};
  }
  return {"time_to_opt", trace.run.time_limit, Unit::seconds, true};
}

MeasureValue time_to_gap(const Trace& trace, double target) {
  if (target < 0.0 || target > 1.0)
    throw std::invalid_argument("time_to_gap: target outside [0, 1]");
  // Before the first event the gap is 1, so a target of 1 is met at t = 0.
  if (target >= 1.0) return {"time_to_gap", 0.0, Unit::seconds, false};
  for (const BoundEvent& ev : trace.bounds) {
    if (relative_gap(ev.primal, ev.dual) <= target)
      return {"time_to_gap", ev.t, Unit::seconds, false};
  }
  return {"time_to_gap", trace.run.time_limit, Unit::seconds, true};
}

MeasureValue time_to_first_solution(const Trace& trace) {
  for (const BoundEvent& ev : trace.bounds) {
    if (std::isfinite(ev.primal))
      return {"time_to_first", ev.t, Unit::seconds, false};
  }
  return {"time_to_first", trace.run.time_limit, Unit::seconds, true};
}

double primal_dual_integral(const Trace& trace, double horizon) {
  if (!(horizon > 0.0)) throw std::invalid_argument("primal_dual_integral: horizon must be > 0");
  if (horizon > trace.run.time_limit + 0.5e-6)
    throw std::invalid_argument("primal_dual_integral: horizon exceeds time_limit");
  const double end = std::min(horizon, trace.run.wall_time);
  double total = 0.0;
  double t_prev = 0.0;
  double gap = 1.0;  // in force before the first event
  for (const BoundEvent& ev : trace.bounds) {
    if (ev.t >= end) break;
    if (ev.t > t_prev) total += gap * (ev.t - t_prev);
    if (ev.t >= t_prev) t_prev = ev.t;
    gap = relative_gap(ev.primal, ev.dual);
  }
  if (end > t_prev) total += gap * (end - t_prev);
  return total;
}

std::optional<WorkCounters> work_counts(const Trace& trace) { return trace.work; }

double node_throughput(const Trace& trace) {
  if (!trace.work) throw std::invalid_argument("node_throughput: no work counters recorded");
  if (!(trace.run.wall_time > 0.0))
    throw std::invalid_argument("node_throughput: wall_time must be > 0");
  return static_cast<double>(trace.work->nodes_processed) / trace.run.wall_time;
}

double speedup(double baseline_seconds, double at_n_seconds) {
  if (!(baseline_seconds > 0.0) || !(at_n_seconds > 0.0))
    throw std::invalid_argument("speedup: times must be positive");
  return baseline_seconds / at_n_seconds;
}

double speedup(const MeasureValue& baseline, const MeasureValue& at_n) {
  if (baseline.censored || at_n.censored)
    throw std::invalid_argument("speedup: censored input");
  return speedup(baseline.value, at_n.value);
}

double parallel_efficiency(double speedup_n, int cores) {
  if (cores < 1) throw std::invalid_argument("parallel_efficiency: cores must be >= 1");
  return speedup_n / cores;
}

RampTimes ramp_times(const Trace& trace, RampDefinition def) {
  if (trace.core_activity.empty())
    throw std::invalid_argument("ramp_times: no core activity recorded");
  struct BusySpan {
    double first = kInf;
    double last = -kInf;
  };
  std::map<int, BusySpan> spans;
  for (const CoreInterval& iv : trace.core_activity) {
    auto& s = spans[iv.core_id];  // every listed core must show up busy
    if (iv.kind == ActivityKind::busy) {
      s.first = std::min(s.first, iv.start);
      s.last = std::max(s.last, iv.end);
    }
  }
  const double T = trace.run.wall_time;
  RampTimes out{0.0, 0.0};
  double min_last = kInf;
  for (const auto& [core, s] : spans) {
    if (!std::isfinite(s.first))
      throw std::invalid_argument("ramp_times: core " + std::to_string(core) +
                                  " has no busy interval");
    if (def == RampDefinition::per_core_sum) {
      out.ramp_up += s.first;
      out.ramp_down += T - s.last;
    } else {
      out.ramp_up = std::max(out.ramp_up, s.first);
      min_last = std::min(min_last, s.last);
    }
  }
  if (def == RampDefinition::all_cores_active) out.ramp_down = T - min_last;
  return out;
}

OverheadBreakdown overhead_breakdown(const Trace& trace) {
  if (trace.core_activity.empty())
    throw std::invalid_argument("overhead_breakdown: no core activity recorded");
  std::map<int, std::vector<const CoreInterval*>> by_core;
  for (const CoreInterval& iv : trace.core_activity) by_core[iv.core_id].push_back(&iv);

  // Sum in integer microseconds so the three parts add up to cores * wall_time
  // without rounding drift.
  std::int64_t busy = 0, idle = 0, comm = 0;
  for (auto& [core, ivs] : by_core) {
    std::sort(ivs.begin(), ivs.end(),
              [](const CoreInterval* a, const CoreInterval* b) { return a->start < b->start; });
    double cursor = 0.0;
    for (const CoreInterval* iv : ivs) {
      if (std::abs(iv->start - cursor) > 0.5e-6)
        throw std::invalid_argument("overhead_breakdown: core " + std::to_string(core) +
                                    " does not tile [0, wall_time]");
      const std::int64_t len = std::llround((iv->end - iv->start) * 1e6);
      switch (iv->kind) {
        case ActivityKind::busy: busy += len; break;
        case ActivityKind::idle: idle += len; break;
        case ActivityKind::comm: comm += len; break;
      }
      cursor = iv->end;
    }
    if (std::abs(cursor - trace.run.wall_time) > 0.5e-6)
      throw std::invalid_argument("overhead_breakdown: core " + std::to_string(core) +
                                  " does not reach wall_time");
  }
  return {static_cast<double>(busy) / 1e6, static_cast<double>(idle) / 1e6,
          static_cast<double>(comm) / 1e6};
}

}  // namespace bnba
