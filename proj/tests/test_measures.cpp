#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "bnba/measures.hpp"
#include "bnba/trace.hpp"

using namespace bnba;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Trace gap_steps_trace() {
  // gap 1 on [0,2), 0.5 on [2,6), 0 from 6; wall 6, limit 10
  Trace t;
  t.run = {"i", "s", 1, 0, 10.0, RunStatus::optimal, 6.0, Sense::minimize};
  t.bounds = {{2.0, 2.0, 1.0}, {6.0, 1.0, 1.0}};
  t.core_activity = {{0, 0.0, 6.0, ActivityKind::busy}};
  return t;
}

// Random minimization trace with monotone bounds; status time_limit so no
// terminal-gap constraint applies.
Trace random_trace(std::mt19937_64& rng) {
  Trace t;
  int events = 1 + static_cast<int>(rng() % 8);
  double time = 0.0;
  double primal = 1000.0 + static_cast<double>(rng() % 1000);
  double dual = -static_cast<double>(rng() % 1000);
  for (int i = 0; i < events; ++i) {
    time += 0.25 + static_cast<double>(rng() % 1000) / 250.0;
    primal -= static_cast<double>(rng() % 400) / 8.0;
    dual += static_cast<double>(rng() % 300) / 8.0;
    dual = std::min(dual, primal);  // keep the pair consistent
    t.bounds.push_back({time, primal, dual});
  }
  double wall = time + static_cast<double>(rng() % 100) / 50.0;
  t.run = {"r", "s", 1, 0, wall + 50.0, RunStatus::time_limit, wall, Sense::minimize};
  return t;
}

// Midpoint-rule integral of the gap step function, an implementation of the
// integral independent of the summation under test.
double pdi_by_quadrature(const Trace& t, double horizon) {
  double end = std::min(horizon, t.run.wall_time);
  const int steps = 200000;
  double sum = 0.0;
  for (int i = 0; i < steps; ++i) {
    double mid = end * (static_cast<double>(i) + 0.5) / steps;
    BoundPair b = bounds_at(t, mid);
    sum += relative_gap(b.primal, b.dual);
  }
  return sum * end / steps;
}

}  // namespace

TEST_CASE("relative gap handles the distinguished cases") {
  CHECK(relative_gap(0.0, 0.0) == 0.0);
  CHECK(relative_gap(90.0, 100.0) == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(relative_gap(-5.0, 5.0) == 1.0);
  CHECK(relative_gap(5.0, -5.0) == 1.0);
  CHECK(relative_gap(kInf, 3.0) == 1.0);
  CHECK(relative_gap(3.0, -kInf) == 1.0);
  CHECK(relative_gap(kInf, -kInf) == 1.0);
  CHECK(relative_gap(1e-300, -1e-300) == 1.0);  // sign test must not underflow
  CHECK(relative_gap(7.0, 7.0) == 0.0);
}

TEST_CASE("relative gap properties on random extended pairs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> mag(-1e4, 1e4);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    double p = mag(rng), d = mag(rng);
    if (i % 13 == 0) p = kInf;
    if (i % 17 == 0) d = -kInf;
    double g = relative_gap(p, d);
    CHECK(g >= 0.0);
    CHECK(g <= 1.0);
    CHECK(relative_gap(d, p) == g);
    if (std::isfinite(p) && std::isfinite(d)) {
      double k = 1.0 + static_cast<double>(rng() % 1000) / 10.0;
      CHECK(relative_gap(k * p, k * d) == doctest::Approx(g).epsilon(1e-12));
      if ((p > 0) != (d > 0) && p != 0.0 && d != 0.0) CHECK(g == 1.0);
      ++checked;
    }
  }
  CHECK(checked > 8000);
}

TEST_CASE("gap denominator variants") {
  CHECK(relative_gap(50.0, 100.0, GapDenominator::max_abs) == doctest::Approx(0.5));
  CHECK(relative_gap(50.0, 100.0, GapDenominator::min_abs) == doctest::Approx(1.0));
  CHECK(relative_gap(50.0, 100.0, GapDenominator::constant, 200.0) == doctest::Approx(0.25));
  // degenerate denominators saturate
  CHECK(relative_gap(0.0, 3.0, GapDenominator::min_abs) == 1.0);
  CHECK(relative_gap(1.0, 3.0, GapDenominator::constant, 0.0) == 1.0);
}

TEST_CASE("gap function prefixes the unknown state") {
  Trace t = gap_steps_trace();
  auto samples = gap_function(t);
  REQUIRE(samples.size() == 3);
  CHECK(samples[0] == GapFunctionSample{0.0, 1.0});
  CHECK(samples[1] == GapFunctionSample{2.0, 0.5});
  CHECK(samples[2] == GapFunctionSample{6.0, 0.0});
}

TEST_CASE("time to optimality finds the earliest qualifying event") {
  Trace t = gap_steps_trace();
  MeasureValue v = time_to_optimality(t);
  CHECK(v.value == 6.0);
  CHECK_FALSE(v.censored);
  CHECK(v.unit == Unit::seconds);

  SUBCASE("a loose relative tolerance is met earlier") {
    MeasureValue loose = time_to_optimality(t, 0.5, 0.0);
    CHECK(loose.value == 2.0);
    CHECK_FALSE(loose.censored);
  }
  SUBCASE("absolute tolerance works on its own") {
    Trace u = gap_steps_trace();
    u.run.status = RunStatus::time_limit;
    u.bounds = {{1.0, 1.0 + 1e-10, 1.0}};
    u.run.wall_time = 2.0;
    u.core_activity = {{0, 0.0, 2.0, ActivityKind::busy}};
    MeasureValue w = time_to_optimality(u, 0.0, 1e-9);
    CHECK(w.value == 1.0);
    CHECK_FALSE(w.censored);
  }
  SUBCASE("never reaching the tolerance censors at the limit") {
    Trace u = gap_steps_trace();
    u.run.status = RunStatus::time_limit;
    u.bounds = {{2.0, 2.0, 1.0}};
    MeasureValue w = time_to_optimality(u);
    CHECK(w.value == 10.0);
    CHECK(w.censored);
  }
}

TEST_CASE("time to gap target") {
  Trace t = gap_steps_trace();
  CHECK(time_to_gap(t, 0.5).value == 2.0);
  CHECK(time_to_gap(t, 0.4).value == 6.0);
  CHECK(time_to_gap(t, 1.0).value == 0.0);
  Trace u = t;
  u.run.status = RunStatus::time_limit;
  u.bounds = {{2.0, 2.0, 1.0}};
  CHECK(time_to_gap(u, 0.1).censored);
  CHECK_THROWS(time_to_gap(t, -0.1));
  CHECK_THROWS(time_to_gap(t, 1.5));
}

TEST_CASE("time to first solution") {
  Trace t = gap_steps_trace();
  CHECK(time_to_first_solution(t).value == 2.0);
  Trace u = t;
  u.bounds.insert(u.bounds.begin(), {0.0, kInf, 0.5});
  CHECK(time_to_first_solution(u).value == 2.0);
  u.bounds[0] = {0.0, 9.0, 0.5};
  CHECK(time_to_first_solution(u).value == 0.0);
  Trace v = t;
  v.run.status = RunStatus::time_limit;
  v.bounds = {{1.0, kInf, 0.5}};
  MeasureValue m = time_to_first_solution(v);
  CHECK(m.censored);
  CHECK(m.value == v.run.time_limit);
}

TEST_CASE("gap integral matches the hand value exactly") {
  Trace t = gap_steps_trace();
  CHECK(primal_dual_integral(t, 6.0) == 4.0);  // 2*1 + 4*0.5 + 0
  CHECK(primal_dual_integral(t, 2.0) == 2.0);
  CHECK(primal_dual_integral(t, 10.0) == 4.0);  // clamped at wall, tail gap 0
}

TEST_CASE("gap integral properties on random traces") {
  std::mt19937_64 rng(4242);
  for (int i = 0; i < 120; ++i) {
    Trace t = random_trace(rng);
    double limit = t.run.time_limit;
    double h1 = limit * 0.3, h2 = limit * 0.9;
    double p1 = primal_dual_integral(t, h1);
    double p2 = primal_dual_integral(t, h2);
    CHECK(p1 >= 0.0);
    CHECK(p1 <= h1 + 1e-12);  // gap never exceeds 1
    CHECK(p1 <= p2 + 1e-12);  // monotone in the horizon

    // quadrature cross-check on a handful (it is slow)
    if (i < 8) CHECK(p2 == doctest::Approx(pdi_by_quadrature(t, h2)).epsilon(1e-3));

    // refinement: re-stating the bounds in force between two events changes nothing
    if (t.bounds.size() >= 2) {
      Trace r = t;
      double tm = (t.bounds[0].t + t.bounds[1].t) / 2.0;
      r.bounds.insert(r.bounds.begin() + 1, {tm, t.bounds[0].primal, t.bounds[0].dual});
      CHECK(primal_dual_integral(r, h2) == doctest::Approx(p2).epsilon(1e-12));
    }
  }
}

TEST_CASE("gap integral rejects bad horizons") {
  Trace t = gap_steps_trace();
  CHECK_THROWS(primal_dual_integral(t, 0.0));
  CHECK_THROWS(primal_dual_integral(t, -1.0));
  CHECK_THROWS(primal_dual_integral(t, 10.5));
}

TEST_CASE("work counts and throughput") {
  Trace t = gap_steps_trace();
  CHECK_FALSE(work_counts(t).has_value());
  CHECK_THROWS(node_throughput(t));
  t.work = WorkCounters{12, 12, 30};
  CHECK(work_counts(t)->nodes_processed == 12);
  CHECK(node_throughput(t) == doctest::Approx(2.0));
}

TEST_CASE("speed-up and efficiency arithmetic") {
  CHECK(speedup(10.0, 5.0) == doctest::Approx(2.0));
  CHECK(parallel_efficiency(6.0, 8) == doctest::Approx(0.75));
  CHECK_THROWS(speedup(0.0, 5.0));
  CHECK_THROWS(speedup(10.0, 0.0));
  MeasureValue base{"time_to_opt", 10.0, Unit::seconds, false};
  MeasureValue at4{"time_to_opt", 2.0, Unit::seconds, false};
  CHECK(speedup(base, at4) == doctest::Approx(5.0));
  at4.censored = true;
  CHECK_THROWS(speedup(base, at4));
}

TEST_CASE("ramp times under both definitions") {
  Trace t;
  t.run = {"i", "s", 2, 0, 10.0, RunStatus::time_limit, 6.0, Sense::minimize};
  t.bounds = {{1.0, 5.0, 1.0}};
  t.core_activity = {{0, 0.0, 6.0, ActivityKind::busy},
                     {1, 0.0, 1.0, ActivityKind::idle},
                     {1, 1.0, 5.0, ActivityKind::busy},
                     {1, 5.0, 6.0, ActivityKind::comm}};
  RampTimes per_core = ramp_times(t, RampDefinition::per_core_sum);
  CHECK(per_core.ramp_up == doctest::Approx(1.0));    // 0 + 1
  CHECK(per_core.ramp_down == doctest::Approx(1.0));  // 0 + (6-5)
  RampTimes all = ramp_times(t, RampDefinition::all_cores_active);
  CHECK(all.ramp_up == doctest::Approx(1.0));    // last core to start
  CHECK(all.ramp_down == doctest::Approx(1.0));  // first core to stop
  t.core_activity.push_back({2, 0.0, 6.0, ActivityKind::idle});
  CHECK_THROWS(ramp_times(t, RampDefinition::per_core_sum));  // core 2 never busy
}

TEST_CASE("overhead breakdown conserves core time exactly") {
  Trace t;
  t.run = {"i", "s", 2, 0, 10.0, RunStatus::time_limit, 6.0, Sense::minimize};
  t.bounds = {{1.0, 5.0, 1.0}};
  t.core_activity = {{0, 0.0, 6.0, ActivityKind::busy},
                     {1, 0.0, 1.5, ActivityKind::idle},
                     {1, 1.5, 5.25, ActivityKind::busy},
                     {1, 5.25, 6.0, ActivityKind::comm}};
  OverheadBreakdown b = overhead_breakdown(t);
  CHECK(b.busy == doctest::Approx(9.75));
  CHECK(b.idle == doctest::Approx(1.5));
  CHECK(b.comm == doctest::Approx(0.75));
  CHECK(b.busy + b.idle + b.comm == 12.0);  // exact at this resolution

  SUBCASE("holes are rejected") {
    t.core_activity[2].end = 5.0;
    CHECK_THROWS(overhead_breakdown(t));
  }
}
