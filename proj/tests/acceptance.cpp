// Acceptance checks, one printed line per criterion. Each criterion verifies
// a contract of the toolkit against values computed independently inside
// this file (closed-form oracles, exhaustive search, analytic schedules).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <unistd.h>

#include "bnba/aggregate.hpp"
#include "bnba/format.hpp"
#include "bnba/knapsack.hpp"
#include "bnba/measures.hpp"
#include "bnba/pipeline.hpp"
#include "bnba/profiles.hpp"
#include "bnba/sim.hpp"
#include "bnba/svg.hpp"
#include "bnba/trace_io.hpp"

using namespace bnba;
namespace fs = std::filesystem;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int failures = 0;

void run_criterion(int index, const std::string& name,
                   const std::function<std::string()>& body) {
  std::string detail;
  bool ok = true;
  auto start = std::chrono::steady_clock::now();
  try {
    detail = body();  // empty string means success
    ok = detail.empty();
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(),
              secs, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string check_near(double got, double want, double tol, const std::string& what) {
  if (std::abs(got - want) <= tol) return "";
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: got %.10g, wanted %.10g +-%g", what.c_str(), got, want,
                tol);
  return buf;
}

// ---- criterion 1 ------------------------------------------------------

std::string criterion_speedup_table() {
  const std::vector<double> fast{132.835, 75.133, 43.736, 22.212, 13.339};
  const std::vector<double> fast_expected{1.768, 3.037, 5.98, 9.958};
  for (std::size_t i = 0; i + 1 < fast.size(); ++i) {
    std::string err = check_near(speedup(fast[0], fast[i + 1]), fast_expected[i], 0.001,
                                 "row one, entry " + std::to_string(i + 1));
    if (!err.empty()) return err;
  }
  const std::vector<double> slow{0.01, 0.01, 0.02, 0.03, 0.22};
  const std::vector<double> slow_expected{1.0, 0.5, 0.333, 0.045};
  for (std::size_t i = 0; i + 1 < slow.size(); ++i) {
    std::string err = check_near(speedup(slow[0], slow[i + 1]), slow_expected[i], 0.001,
                                 "row two, entry " + std::to_string(i + 1));
    if (!err.empty()) return err;
  }
  return "";
}

// ---- criterion 2 ------------------------------------------------------

std::string criterion_gap_properties() {
  struct Case {
    double p, d, expected;
    const char* label;
  };
  const Case cases[] = {
      {0.0, 0.0, 0.0, "both bounds zero"},
      {90.0, 100.0, 0.1, "same sign, normalized difference"},
      {-5.0, 5.0, 1.0, "opposite signs"},
  };
  for (const Case& c : cases) {
    double g = relative_gap(c.p, c.d);
    std::printf("  gap(%g, %g) = %.12g  (%s)\n", c.p, c.d, g, c.label);
    std::string err = check_near(g, c.expected, 1e-12, c.label);
    if (!err.empty()) return err;
  }
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> mag(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    double p = mag(rng), d = mag(rng);
    if (i % 23 == 0) p = (i % 2 == 0) ? kInf : -kInf;
    if (i % 31 == 0) d = kInf;
    double g = relative_gap(p, d);
    if (!(g >= 0.0 && g <= 1.0)) return "gap escaped [0,1]";
    if (relative_gap(d, p) != g) return "gap is not symmetric";
    if (std::isfinite(p) && std::isfinite(d)) {
      double k = 1.0 + static_cast<double>(rng() % 997) / 7.0;
      double scaled = relative_gap(k * p, k * d);
      if (std::abs(scaled - g) > 1e-12 * std::max(1.0, g))
        return "gap is not scale invariant";
      if (p != 0.0 && d != 0.0 && (p > 0) != (d > 0) && g != 1.0)
        return "opposite-sign pair did not saturate";
    }
  }
  return "";
}

// ---- criterion 3 ------------------------------------------------------

Trace random_min_trace(std::mt19937_64& rng) {
  Trace t;
  int events = 1 + static_cast<int>(rng() % 8);
  double time = 0.0;
  double primal = 1000.0 + static_cast<double>(rng() % 1000);
  double dual = -static_cast<double>(rng() % 1000);
  for (int i = 0; i < events; ++i) {
    time += 0.25 + static_cast<double>(rng() % 1000) / 250.0;
    primal -= static_cast<double>(rng() % 400) / 8.0;
    dual = std::min(primal, dual + static_cast<double>(rng() % 300) / 8.0);
    t.bounds.push_back({time, primal, dual});
  }
  double wall = time + static_cast<double>(rng() % 100) / 50.0;
  t.run = {"r", "s", 1, 0, wall + 50.0, RunStatus::time_limit, wall, Sense::minimize};
  return t;
}

std::string criterion_gap_integral() {
  Trace t;
  t.run = {"i", "s", 1, 0, 10.0, RunStatus::optimal, 6.0, Sense::minimize};
  t.bounds = {{2.0, 2.0, 1.0}, {6.0, 1.0, 1.0}};
  // gap 1 on [0,2), 0.5 on [2,6), 0 at 6: the integral is exactly 4
  if (primal_dual_integral(t, 6.0) != 4.0) return "hand example is not exactly 4";

  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    Trace r = random_min_trace(rng);
    double limit = r.run.time_limit;
    double h1 = 0.25 * limit, h2 = 0.8 * limit;
    double p1 = primal_dual_integral(r, h1);
    double p2 = primal_dual_integral(r, h2);
    if (p1 > h1 + 1e-12) return "integral exceeded its horizon";
    if (p1 > p2 + 1e-12) return "integral not monotone in the horizon";
    if (r.bounds.size() >= 2) {
      Trace refined = r;
      double mid = 0.5 * (r.bounds[0].t + r.bounds[1].t);
      refined.bounds.insert(refined.bounds.begin() + 1,
                            {mid, r.bounds[0].primal, r.bounds[0].dual});
      double pr = primal_dual_integral(refined, h2);
      if (std::abs(pr - p2) > 1e-12 * std::max(1.0, p2))
        return "integral changed under refinement";
    }
  }
  return "";
}

// ---- criterion 4 ------------------------------------------------------

std::string criterion_shifted_geometric() {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> val(0.01, 100.0);
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = 2 + rng() % 7;
    std::vector<double> v(n);
    double product = 1.0;
    for (double& x : v) {
      x = val(rng);
      product *= x;
    }
    double gm = std::pow(product, 1.0 / static_cast<double>(n));
    double sg = shifted_geometric_mean(v, 0.0);
    if (std::abs(sg - gm) > 1e-12 * gm) return "zero shift disagrees with the geometric mean";
  }
  std::uniform_real_distribution<double> wide(0.0, 1000.0);
  for (int i = 0; i < 10000; ++i) {
    std::size_t n = 2 + rng() % 7;
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
      x = wide(rng);
      sum += x;
    }
    if (shifted_geometric_mean(v, 10.0) > sum / static_cast<double>(n) + 1e-9)
      return "shifted geometric mean exceeded the arithmetic mean";
  }
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = 2 + rng() % 7;
    double c = val(rng);
    std::vector<double> v(n), moved(n);
    for (std::size_t k = 0; k < n; ++k) {
      v[k] = val(rng);
      moved[k] = v[k] + c;
    }
    double lhs = shifted_geometric_mean(moved, 5.0);
    double rhs = shifted_geometric_mean(v, 5.0 + c) + c;
    if (std::abs(lhs - rhs) > 1e-9 * std::max(1.0, std::abs(rhs)))
      return "translation identity failed";
  }
  return "";
}

// ---- criteria 5 and 6 -------------------------------------------------

int conservation_checked = 0;

std::string check_trace_integrity(const Trace& trace) {
  std::vector<std::string> issues = validate_trace(trace);
  if (!issues.empty()) return "trace failed validation: " + issues.front();
  OverheadBreakdown b = overhead_breakdown(trace);
  std::int64_t parts =
      micros_from_seconds(b.busy) + micros_from_seconds(b.idle) + micros_from_seconds(b.comm);
  std::int64_t total = trace.run.cores * micros_from_seconds(trace.run.wall_time);
  if (parts != total)
    return "core time not conserved: " + std::to_string(parts) + " vs " + std::to_string(total);
  ++conservation_checked;
  return "";
}

std::vector<KnapsackInstance> oracle_instances() {
  std::vector<KnapsackInstance> out;
  for (int i = 0; i < 100; ++i)
    out.push_back(generate_instance(InstanceFamily::uncorrelated, 8 + i % 13,
                                    1000 + static_cast<std::uint64_t>(i)));
  for (int i = 0; i < 100; ++i)
    out.push_back(generate_instance(InstanceFamily::strongly_correlated, 8 + i % 9,
                                    2000 + static_cast<std::uint64_t>(i)));
  return out;
}

std::string criterion_oracle_equivalence() {
  int runs = 0;
  for (const KnapsackInstance& inst : oracle_instances()) {
    const double best = brute_force_knapsack(inst).value;
    SimConfig cfg;
    cfg.node_cost_mean = 1e-4;
    cfg.node_cost_jitter = 0.25;
    cfg.comm_latency = 1e-5;
    SimResult seq = solve_sequential(inst, cfg);
    if (seq.optimal_value != best)
      return inst.id + ": sequential found " + format_value(seq.optimal_value) +
             ", exhaustive search found " + format_value(best);
    std::string err = check_trace_integrity(seq.trace);
    if (!err.empty()) return inst.id + ": " + err;
    ++runs;
    for (int cores : {1, 2, 4, 8})
      for (std::int64_t seed : {1, 2, 3}) {
        cfg.cores = cores;
        cfg.seed = seed;
        SimResult par = simulate_parallel(inst, cfg);
        if (par.optimal_value != best)
          return inst.id + " at " + std::to_string(cores) + " cores, seed " +
                 std::to_string(seed) + ": found " + format_value(par.optimal_value) +
                 ", exhaustive search found " + format_value(best);
        err = check_trace_integrity(par.trace);
        if (!err.empty()) return inst.id + ": " + err;
        ++runs;
      }
  }
  std::printf("  200 instances, %d runs, every optimum matches exhaustive search\n", runs);
  return "";
}

std::string criterion_conservation() {
  if (conservation_checked < 2600)
    return "expected 2600 conserving traces, saw " + std::to_string(conservation_checked);
  std::printf("  %d traces validated and conserved busy+idle+comm = cores x wall exactly\n",
              conservation_checked);
  return "";
}

// ---- criterion 7 ------------------------------------------------------

std::string criterion_scalability_sanity() {
  // Independent equal tasks, no latency or jitter: the makespan must equal
  // the analytic schedule ceil(T/N) * c and efficiency must stay >= 0.99.
  KnapsackInstance dummy = generate_instance(InstanceFamily::uncorrelated, 5, 1);
  SimConfig task_cfg;
  task_cfg.workload_mode = WorkloadMode::independent_tasks;
  task_cfg.num_tasks = 1000;
  task_cfg.node_cost_mean = 1e-3;
  task_cfg.cores = 1;
  double t1 = simulate_parallel(dummy, task_cfg).trace.run.wall_time;
  for (int cores : {2, 4, 8}) {
    task_cfg.cores = cores;
    SimResult r = simulate_parallel(dummy, task_cfg);
    std::int64_t expected =
        ((task_cfg.num_tasks + cores - 1) / cores) * micros_from_seconds(task_cfg.node_cost_mean);
    if (micros_from_seconds(r.trace.run.wall_time) != expected)
      return "task schedule missed the analytic makespan at " + std::to_string(cores) + " cores";
    double eff = parallel_efficiency(speedup(t1, r.trace.run.wall_time), cores);
    std::printf("  independent tasks, %d cores: efficiency %.4f\n", cores, eff);
    if (eff < 0.99)
      return "task efficiency " + format_value(eff) + " below 0.99 at " + std::to_string(cores) +
             " cores";
  }

  // Tree search with a positive pull latency on designated instances with at
  // least 1000 sequential nodes: efficiency must fall strictly below 1.
  for (const char* spec : {"17:5", "18:1", "20:2"}) {
    int n = std::atoi(spec);
    std::uint64_t g = static_cast<std::uint64_t>(std::atoi(std::strchr(spec, ':') + 1));
    KnapsackInstance inst = generate_instance(InstanceFamily::strongly_correlated, n, g);
    SimConfig cfg;
    cfg.node_cost_mean = 1e-4;
    cfg.comm_latency = 2e-5;
    cfg.cores = 1;
    SimResult base = simulate_parallel(inst, cfg);
    if (base.trace.work->nodes_processed < 1000)
      return inst.id + " has fewer than 1000 nodes; not a valid overhead witness";
    for (int cores : {2, 4, 8}) {
      cfg.cores = cores;
      SimResult r = simulate_parallel(inst, cfg);
      double eff =
          parallel_efficiency(speedup(base.trace.run.wall_time, r.trace.run.wall_time), cores);
      std::printf("  tree search %s, %d cores: efficiency %.4f\n", inst.id.c_str(), cores, eff);
      if (!(eff < 1.0))
        return inst.id + " reached efficiency " + format_value(eff) + " at " +
               std::to_string(cores) + " cores; overhead should forbid 1.0";
    }
  }
  return "";
}

// ---- criterion 8 ------------------------------------------------------

std::string criterion_variability() {
  KnapsackInstance inst = generate_instance(InstanceFamily::strongly_correlated, 14, 2);
  SimConfig cfg;
  cfg.cores = 4;
  cfg.node_cost_mean = 1e-4;
  cfg.node_cost_jitter = 0.3;
  cfg.comm_latency = 2e-5;
  std::vector<std::uint64_t> counts;
  for (const SimResult& r : seed_sweep(inst, cfg, {1, 2, 3, 4, 5}))
    counts.push_back(r.trace.work->nodes_processed);
  std::set<std::uint64_t> distinct(counts.begin(), counts.end());
  auto [mn, mx] = std::minmax_element(counts.begin(), counts.end());
  double mean = 0.0;
  for (std::uint64_t c : counts) mean += static_cast<double>(c);
  mean /= static_cast<double>(counts.size());
  double spread = static_cast<double>(*mx - *mn) / mean;
  std::printf("  %s at 4 cores, 5 seeds: node counts %llu..%llu, %zu distinct, "
              "relative spread %.4f\n",
              inst.id.c_str(), static_cast<unsigned long long>(*mn),
              static_cast<unsigned long long>(*mx), distinct.size(), spread);
  if (distinct.size() < 2) return "seed sweep produced identical node counts";
  return "";
}

// ---- criterion 9 ------------------------------------------------------

std::string criterion_profile_fixture() {
  std::vector<MeasureCell> cells{
      {"a", "A", 1.0, false}, {"a", "B", 2.0, false},  {"b", "A", 4.0, false},
      {"b", "B", 2.0, false}, {"c", "A", 3.0, false},  {"c", "B", 3.0, false},
      {"d", "A", 10.0, false}, {"d", "B", 100.0, true},
  };
  RatioTable strict = performance_ratios(cells);
  ProfileCurve a = performance_profile(strict, "A");
  ProfileCurve b = performance_profile(strict, "B");
  // hand CDF over the three fully solved instances: both solvers hold the
  // best ratio twice and ratio 2 once
  std::vector<CurvePoint> expected{{1.0, 2.0 / 3.0}, {2.0, 1.0}};
  if (a.points != expected || b.points != expected)
    return "strict-mode CDF differs from the hand computation";

  RatioOptions keep;
  keep.include_timeouts = true;
  RatioTable wide = performance_ratios(cells, keep);
  ProfileCurve bw = performance_profile(wide, "B");
  if (bw.points.back().fraction != 0.75)
    return "include-timeouts plateau is not the 3/4 solve rate";
  if (!bw.right_censored_at.has_value() || *bw.right_censored_at != 2.0)
    return "censoring marker missing from the timed-out curve";
  ProfileCurve aw = performance_profile(wide, "A");
  if (aw.points.back().fraction != 1.0) return "full-solve curve no longer reaches 1";

  RenderOptions render;
  render.log_x = true;
  render.title = "fixture";
  std::string svg1 = render_svg(std::vector<ProfileCurve>{a, b}, render);
  std::string svg2 = render_svg(std::vector<ProfileCurve>{a, b}, render);
  if (svg1 != svg2) return "svg bytes changed between two renders of one input";
  return "";
}

// ---- criterion 10 -----------------------------------------------------

const char* kManifestJson = R"({
  "instances": [
    {"generate": {"family": "uncorrelated", "n_items": 12, "seed": 11}},
    {"generate": {"family": "uncorrelated", "n_items": 14, "seed": 12}},
    {"generate": {"family": "uncorrelated", "n_items": 16, "seed": 13}},
    {"generate": {"family": "strongly_correlated", "n_items": 10, "seed": 14}},
    {"generate": {"family": "strongly_correlated", "n_items": 12, "seed": 15}},
    {"generate": {"family": "strongly_correlated", "n_items": 14, "seed": 16}}
  ],
  "solver_configs": [
    {"id": "bf", "search_order": "best_first", "node_cost_mean": 0.0001,
     "node_cost_jitter": 0.2, "comm_latency": 0.00002},
    {"id": "df", "search_order": "depth_first", "node_cost_mean": 0.0001,
     "node_cost_jitter": 0.2, "comm_latency": 0.00002}
  ],
  "core_counts": [1, 2, 4],
  "seeds": [3, 4],
  "time_limit": 120.0,
  "output_dir": "out"
})";

struct PipelineArtifacts {
  std::map<std::string, std::string> traces;  // filename -> bytes
  std::string measures_csv;
  std::map<std::string, std::string> outputs;  // profile csv/svg and report text
};

PipelineArtifacts run_pipeline(const fs::path& root) {
  fs::create_directories(root);
  fs::path manifest_path = root / "exp.json";
  std::ofstream(manifest_path) << kManifestJson;
  ExperimentManifest manifest = load_manifest(manifest_path.string());

  PipelineArtifacts art;
  cmd_simulate(manifest, manifest.output_dir, std::nullopt);
  fs::path trace_dir = fs::path(manifest.output_dir) / "traces";
  for (const auto& entry : fs::directory_iterator(trace_dir)) {
    std::ifstream in(entry.path(), std::ios::binary);
    art.traces[entry.path().filename().string()] = {std::istreambuf_iterator<char>(in), {}};
  }

  AnalyzeOutcome analysis = cmd_analyze(trace_dir.string(), AnalyzeOptions{});
  if (!analysis.warnings.empty())
    throw std::runtime_error("analysis warned: " + analysis.warnings.front());
  art.measures_csv = measure_csv(analysis.rows);

  ProfileOptions perf;
  perf.kind = ProfileKind::performance;
  ProfileOutcome perf_out = cmd_profile(analysis.rows, perf);
  art.outputs["performance.csv"] = perf_out.csv;
  art.outputs["performance.svg"] = perf_out.svg;

  ProfileOptions wall;
  wall.kind = ProfileKind::speedup;
  wall.basis = "wallclock";
  ProfileOutcome wall_out = cmd_profile(analysis.rows, wall);
  art.outputs["speedup_wallclock.csv"] = wall_out.csv;
  art.outputs["speedup_wallclock.svg"] = wall_out.svg;

  ProfileOptions integral;
  integral.kind = ProfileKind::speedup;
  integral.basis = "pdi";
  ProfileOutcome integral_out = cmd_profile(analysis.rows, integral);
  art.outputs["speedup_pdi.csv"] = integral_out.csv;
  art.outputs["speedup_pdi.svg"] = integral_out.svg;

  art.outputs["report.txt"] = cmd_report(analysis.rows, {false});
  return art;
}

std::string criterion_end_to_end() {
  fs::path base = fs::temp_directory_path() / ("bnba-accept-" + std::to_string(::getpid()));
  fs::remove_all(base);
  PipelineArtifacts first = run_pipeline(base / "r1");
  PipelineArtifacts second = run_pipeline(base / "r2");
  fs::remove_all(base);

  if (first.traces.size() != 6 * 2 * 3 * 2) return "unexpected trace count";
  if (first.traces != second.traces) return "trace bytes differ between runs";
  if (first.measures_csv != second.measures_csv) return "measure csv differs between runs";
  if (first.outputs != second.outputs) return "profile or report bytes differ between runs";
  if (first.outputs.at("report.txt").find("aggregate means") == std::string::npos)
    return "report lost its aggregate table";
  std::printf("  %zu traces, %zu summary artifacts, all byte-identical across two runs\n",
              first.traces.size(), first.outputs.size() + 1);
  return "";
}

}  // namespace

int main() {
  run_criterion(1, "speed-up arithmetic on the reference timing rows", criterion_speedup_table);
  run_criterion(2, "relative gap properties and printed cases", criterion_gap_properties);
  run_criterion(3, "gap integral hand value and properties", criterion_gap_integral);
  run_criterion(4, "shifted geometric mean identities", criterion_shifted_geometric);
  run_criterion(5, "sequential and parallel optima match exhaustive search",
                criterion_oracle_equivalence);
  run_criterion(6, "every emitted trace validates and conserves core time",
                criterion_conservation);
  run_criterion(7, "task pools scale ideally, contended trees do not", criterion_scalability_sanity);
  run_criterion(8, "cost jitter reproduces run-to-run variability", criterion_variability);
  run_criterion(9, "performance profiles match the hand CDF", criterion_profile_fixture);
  run_criterion(10, "one manifest reproduces the full report byte for byte",
                criterion_end_to_end);
  if (failures == 0)
    std::printf("all 10 criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", failures);
  return failures;
}
