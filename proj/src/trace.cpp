#include "bnba/trace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

#include "bnba/format.hpp"
#include "bnba/measures.hpp"

namespace bnba {

namespace {

// Half a tick of the microsecond clock; interval endpoints are allowed to
// disagree by less than this and still count as meeting.
constexpr double kTimeSlack = 0.5e-6;

constexpr double kOptRelTol = 1e-6;
constexpr double kOptAbsTol = 1e-9;

}  // namespace

const char* to_string(Sense s) { return s == Sense::minimize ? "min" : "max"; }

const char* to_string(RunStatus s) {
  switch (s) {
    case RunStatus::optimal: return "optimal";
    case RunStatus::gap_limit: return "gap_limit";
    case RunStatus::time_limit: return "time_limit";
    case RunStatus::first_solution: return "first_solution";
    case RunStatus::aborted: return "aborted";
  }
  return "aborted";
}

const char* to_string(ActivityKind k) {
  switch (k) {
    case ActivityKind::busy: return "busy";
    case ActivityKind::idle: return "idle";
    case ActivityKind::comm: return "comm";
  }
  return "idle";
}

Sense sense_from_string(const std::string& s) {
  if (s == "min") return Sense::minimize;
  if (s == "max") return Sense::maximize;
  throw std::invalid_argument("unknown sense: " + s);
}

RunStatus status_from_string(const std::string& s) {
  if (s == "optimal") return RunStatus::optimal;
  if (s == "gap_limit") return RunStatus::gap_limit;
  if (s == "time_limit") return RunStatus::time_limit;
  if (s == "first_solution") return RunStatus::first_solution;
  if (s == "aborted") return RunStatus::aborted;
  throw std::invalid_argument("unknown status: " + s);
}

ActivityKind activity_from_string(const std::string& s) {
  if (s == "busy") return ActivityKind::busy;
  if (s == "idle") return ActivityKind::idle;
  if (s == "comm") return ActivityKind::comm;
  throw std::invalid_argument("unknown activity state: " + s);
}

std::vector<std::string> validate_trace(const Trace& trace) {
  std::vector<std::string> out;
  const RunRecord& run = trace.run;

  if (run.cores < 1) out.push_back("run: cores must be >= 1");
  if (run.wall_time < 0) out.push_back("run: wall_time must be >= 0");
  if (run.status != RunStatus::aborted && run.wall_time > run.time_limit + kTimeSlack)
    out.push_back("run: wall_time exceeds time_limit on a non-aborted run");

  const bool min_sense = run.sense == Sense::minimize;
  const BoundEvent* prev = nullptr;
  for (const BoundEvent& ev : trace.bounds) {
    if (ev.t < 0 || ev.t > run.wall_time + kTimeSlack) {
      out.push_back("bound: event time " + format_time(ev.t) + " outside [0, wall_time]");
    }
    if (prev) {
      if (ev.t <= prev->t)
        out.push_back("bound: event times must be strictly increasing at t=" + format_time(ev.t));
      const bool primal_ok = min_sense ? ev.primal <= prev->primal : ev.primal >= prev->primal;
      const bool dual_ok = min_sense ? ev.dual >= prev->dual : ev.dual <= prev->dual;
      if (!primal_ok)
        out.push_back("bound: primal moved away from the optimum at t=" + format_time(ev.t));
      if (!dual_ok)
        out.push_back("bound: dual moved away from the optimum at t=" + format_time(ev.t));
    }
    prev = &ev;
  }

  if (trace.work && trace.work->iterations < trace.work->bounding_problems)
    out.push_back("work: iterations below bounding_problems");

  std::map<int, std::vector<CoreInterval>> by_core;
  for (const CoreInterval& iv : trace.core_activity) {
    if (iv.start > iv.end)
      out.push_back("core " + std::to_string(iv.core_id) + ": interval with start > end");
    by_core[iv.core_id].push_back(iv);
  }
  for (auto& [core, ivs] : by_core) {
    std::sort(ivs.begin(), ivs.end(),
              [](const CoreInterval& a, const CoreInterval& b) { return a.start < b.start; });
    const std::string tag = "core " + std::to_string(core);
    if (std::abs(ivs.front().start) > kTimeSlack)
      out.push_back(tag + ": coverage does not start at 0");
    for (std::size_t i = 1; i < ivs.size(); ++i) {
      const double step = ivs[i].start - ivs[i - 1].end;
      if (step > kTimeSlack)
        out.push_back(tag + ": gap before t=" + format_time(ivs[i].start));
      else if (step < -kTimeSlack)
        out.push_back(tag + ": overlap at t=" + format_time(ivs[i].start));
    }
    if (std::abs(ivs.back().end - run.wall_time) > kTimeSlack)
      out.push_back(tag + ": coverage does not end at wall_time");
  }

  if (run.status == RunStatus::optimal) {
    if (trace.bounds.empty()) {
      out.push_back("run: optimal status but no bound events");
    } else {
      const BoundEvent& last = trace.bounds.back();
      const double rel = relative_gap(last.primal, last.dual);
      const double abs_gap = std::abs(last.primal - last.dual);
      if (rel > kOptRelTol && !(abs_gap <= kOptAbsTol))
        out.push_back("run: optimal status but final gap " + format_value(rel) +
                      " above tolerance");
    }
  }

  return out;
}

Trace normalize_sense(const Trace& trace) {
  if (trace.run.sense == Sense::minimize) return trace;
  Trace out = trace;
  out.run.sense = Sense::minimize;
  for (BoundEvent& ev : out.bounds) {
    ev.primal = -ev.primal;
    ev.dual = -ev.dual;
  }
  return out;
}

double core_hours(const RunRecord& run) { return run.wall_time * run.cores; }

BoundPair bounds_at(const Trace& trace, double t) {
  if (t < 0 || t > trace.run.wall_time)
    throw std::out_of_range("bounds_at: t outside [0, wall_time]");
  const double inf = std::numeric_limits<double>::infinity();
  BoundPair state = trace.run.sense == Sense::minimize ? BoundPair{inf, -inf}
                                                       : BoundPair{-inf, inf};
  auto it = std::upper_bound(trace.bounds.begin(), trace.bounds.end(), t,
                             [](double v, const BoundEvent& ev) { return v < ev.t; });
  if (it != trace.bounds.begin()) {
    const BoundEvent& ev = *std::prev(it);
    state = {ev.primal, ev.dual};
  }
  return state;
}

}  // namespace bnba
