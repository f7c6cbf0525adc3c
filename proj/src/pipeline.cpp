#include "bnba/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "bnba/format.hpp"
#include "bnba/knapsack.hpp"
#include "bnba/svg.hpp"
#include "bnba/trace_io.hpp"

namespace bnba {
namespace {

constexpr const char* kMeasureHeader = "instance,solver,cores,seed,measure,value,unit,censored";
constexpr const char* kCurveHeader = "label,x,fraction";

std::vector<std::string> split_fields(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t pos = text.find('\n', start);
    if (pos == std::string::npos) pos = text.size();
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_double_field(const std::string& s, int line_no) {
  const char* begin = s.c_str();
  char* end = nullptr;
  double v = std::strtod(begin, &end);
  if (end != begin + s.size() || s.empty())
    throw std::invalid_argument("measures csv line " + std::to_string(line_no) +
                                ": bad number '" + s + "'");
  return v;
}

}  // namespace

std::string measure_csv(const std::vector<MeasureRow>& rows) {
  std::string out = kMeasureHeader;
  out += '\n';
  for (const MeasureRow& r : rows) {
    out += r.instance;
    out += ',';
    out += r.solver;
    out += ',';
    out += std::to_string(r.cores);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += r.measure;
    out += ',';
    out += format_value(r.value);
    out += ',';
    out += to_string(r.unit);
    out += ',';
    out += r.censored ? "true" : "false";
    out += '\n';
  }
  return out;
}

std::vector<MeasureRow> parse_measure_csv(const std::string& text) {
  std::vector<std::string> lines = split_lines(text);
  if (lines.empty() || lines.front() != kMeasureHeader)
    throw std::invalid_argument("measures csv: missing header '" + std::string(kMeasureHeader) +
                                "'");
  std::vector<MeasureRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> f = split_fields(lines[i], ',');
    int line_no = static_cast<int>(i + 1);
    if (f.size() != 8)
      throw std::invalid_argument("measures csv line " + std::to_string(line_no) +
                                  ": expected 8 fields, got " + std::to_string(f.size()));
    MeasureRow r;
    r.instance = f[0];
    r.solver = f[1];
    r.cores = static_cast<int>(parse_double_field(f[2], line_no));
    r.seed = static_cast<std::int64_t>(std::strtoll(f[3].c_str(), nullptr, 10));
    r.measure = f[4];
    r.value = parse_double_field(f[5], line_no);
    r.unit = unit_from_string(f[6]);
    if (f[7] == "true")
      r.censored = true;
    else if (f[7] == "false")
      r.censored = false;
    else
      throw std::invalid_argument("measures csv line " + std::to_string(line_no) +
                                  ": bad censored flag '" + f[7] + "'");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string curve_csv(const std::vector<ProfileCurve>& curves) {
  std::string out = kCurveHeader;
  out += '\n';
  for (const ProfileCurve& c : curves)
    for (const CurvePoint& p : c.points) {
      out += c.label;
      out += ',';
      out += format_value(p.x);
      out += ',';
      out += format_value(p.fraction);
      out += '\n';
    }
  return out;
}

std::string curve_csv(const std::vector<SpeedupCurve>& curves) {
  std::string out = kCurveHeader;
  out += '\n';
  for (const SpeedupCurve& c : curves)
    for (const SpeedupPoint& p : c.points) {
      out += c.label;
      out += ',';
      out += std::to_string(p.cores);
      out += ',';
      out += format_value(p.value);
      out += '\n';
    }
  // The ideal reference is shared by every curve; emit the union once.
  std::set<int> ideal_cores;
  for (const SpeedupCurve& c : curves)
    for (const SpeedupPoint& p : c.ideal) ideal_cores.insert(p.cores);
  for (int n : ideal_cores) {
    out += "ideal,";
    out += std::to_string(n);
    out += ',';
    out += format_value(static_cast<double>(n));
    out += '\n';
  }
  return out;
}

SimulateOutcome cmd_simulate(const ExperimentManifest& manifest, const std::string& out_dir,
                             std::optional<std::int64_t> seed_override) {
  namespace fs = std::filesystem;
  SimulateOutcome out;
  std::vector<KnapsackInstance> instances = resolve_instances(manifest);
  fs::path trace_dir = fs::path(out_dir) / "traces";
  fs::create_directories(trace_dir);
  std::vector<std::int64_t> seeds = manifest.seeds;
  if (seed_override.has_value()) seeds = {*seed_override};
  for (const SolverEntry& solver : manifest.solvers) {
    if (solver.trace_dir.has_value()) {
      out.skipped.push_back(solver.id + ": external traces in " + *solver.trace_dir);
      continue;
    }
    for (const KnapsackInstance& inst : instances)
      for (int cores : manifest.core_counts)
        for (std::int64_t seed : seeds) {
          SimConfig cfg = solver.config;
          cfg.solver_id = solver.id;
          cfg.cores = cores;
          cfg.seed = seed;
          cfg.time_limit = manifest.time_limit;
          SimResult res = simulate_parallel(inst, cfg);
          std::vector<std::string> issues = validate_trace(res.trace);
          if (!issues.empty())
            throw std::runtime_error("simulate: produced an invalid trace for " + inst.id +
                                     ": " + issues.front());
          std::string name = inst.id + "__" + solver.id + "__c" + std::to_string(cores) +
                             "__s" + std::to_string(seed) + ".bbt";
          fs::path path = trace_dir / name;
          write_trace_file(path.string(), res.trace);
          out.trace_files.push_back(path.string());
        }
  }
  return out;
}

namespace {

const std::set<std::string>& known_measures() {
  static const std::set<std::string> names = {
      "time_to_opt", "time_to_gap",   "time_to_first", "pdi",          "final_gap",
      "nodes",       "lps",           "iters",         "throughput",   "wall_time",
      "core_seconds", "ramp_up_sum",  "ramp_down_sum", "ramp_up_all",  "ramp_down_all",
      "busy",        "idle",          "comm"};
  return names;
}

// Whether a resource-consumption reading (work done, time spent) from a run
// that hit its limit should be flagged: the run would have kept going.
bool resource_censored(const Trace& t) {
  return t.run.status == RunStatus::time_limit || t.run.status == RunStatus::aborted;
}

std::optional<MeasureRow> extract_measure(const Trace& t, const std::string& name,
                                          const AnalyzeOptions& opt, std::string* error) {
  MeasureRow row;
  row.instance = t.run.instance_id;
  row.solver = t.run.solver_id;
  row.cores = t.run.cores;
  row.seed = t.run.seed;
  row.measure = name;
  auto from_value = [&](const MeasureValue& v) {
    row.value = v.value;
    row.unit = v.unit;
    row.censored = v.censored;
    return row;
  };
  try {
    if (name == "time_to_opt") return from_value(time_to_optimality(t, opt.rel_tol, opt.abs_tol));
    if (name == "time_to_gap") return from_value(time_to_gap(t, opt.gap_target));
    if (name == "time_to_first") return from_value(time_to_first_solution(t));
    if (name == "pdi") {
      double horizon = opt.pdi_horizon.value_or(t.run.time_limit);
      row.value = primal_dual_integral(t, horizon);
      row.unit = Unit::seconds;
      row.censored = false;
      return row;
    }
    if (name == "final_gap") {
      BoundPair b = bounds_at(t, t.run.wall_time);
      row.value = relative_gap(b.primal, b.dual, opt.gap_denom, opt.gap_denom_const);
      row.unit = Unit::ratio;
      row.censored = false;
      return row;
    }
    if (name == "nodes" || name == "lps" || name == "iters") {
      std::optional<WorkCounters> w = work_counts(t);
      if (!w.has_value()) {
        *error = "no work counters recorded";
        return std::nullopt;
      }
      row.value = static_cast<double>(name == "nodes"  ? w->nodes_processed
                                      : name == "lps" ? w->bounding_problems
                                                      : w->iterations);
      row.unit = Unit::count;
      row.censored = resource_censored(t);
      return row;
    }
    if (name == "throughput") {
      row.value = node_throughput(t);
      row.unit = Unit::nodes_per_second;
      row.censored = resource_censored(t);
      return row;
    }
    if (name == "wall_time") {
      row.value = t.run.wall_time;
      row.unit = Unit::seconds;
      row.censored = resource_censored(t);
      return row;
    }
    if (name == "core_seconds") {
      row.value = core_hours(t.run);
      row.unit = Unit::core_seconds;
      row.censored = resource_censored(t);
      return row;
    }
    if (name == "ramp_up_sum" || name == "ramp_down_sum") {
      RampTimes r = ramp_times(t, RampDefinition::per_core_sum);
      row.value = name == "ramp_up_sum" ? r.ramp_up : r.ramp_down;
      row.unit = Unit::core_seconds;
      row.censored = resource_censored(t);
      return row;
    }
    if (name == "ramp_up_all" || name == "ramp_down_all") {
      RampTimes r = ramp_times(t, RampDefinition::all_cores_active);
      row.value = name == "ramp_up_all" ? r.ramp_up : r.ramp_down;
      row.unit = Unit::seconds;
      row.censored = resource_censored(t);
      return row;
    }
    if (name == "busy" || name == "idle" || name == "comm") {
      OverheadBreakdown b = overhead_breakdown(t);
      row.value = name == "busy" ? b.busy : name == "idle" ? b.idle : b.comm;
      row.unit = Unit::core_seconds;
      row.censored = resource_censored(t);
      return row;
    }
  } catch (const std::exception& e) {
    *error = e.what();
    return std::nullopt;
  }
  *error = "unknown measure";
  return std::nullopt;
}

}  // namespace

bool is_known_measure(const std::string& name) { return known_measures().count(name) != 0; }

AnalyzeOutcome cmd_analyze(const std::string& trace_dir, const AnalyzeOptions& options) {
  namespace fs = std::filesystem;
  for (const std::string& m : options.measures)
    if (known_measures().count(m) == 0)
      throw std::invalid_argument("analyze: unknown measure '" + m + "'");
  if (!fs::is_directory(trace_dir))
    throw std::runtime_error("analyze: no such directory: " + trace_dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(trace_dir))
    if (entry.is_regular_file() && entry.path().extension() == ".bbt")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  AnalyzeOutcome out;
  for (const std::string& file : files) {
    Trace trace;
    try {
      trace = read_trace_file(file);
    } catch (const std::exception& e) {
      out.warnings.push_back(file + ": " + e.what());
      continue;
    }
    std::vector<std::string> issues = validate_trace(trace);
    if (!issues.empty()) {
      out.warnings.push_back(file + ": " + issues.front());
      continue;
    }
    Trace norm = normalize_sense(trace);
    for (const std::string& m : options.measures) {
      std::string error;
      std::optional<MeasureRow> row = extract_measure(norm, m, options, &error);
      if (row.has_value())
        out.rows.push_back(*row);
      else
        out.warnings.push_back(file + ": " + m + ": " + error);
    }
  }
  return out;
}

ProfileKind profile_kind_from_string(const std::string& s) {
  if (s == "performance") return ProfileKind::performance;
  if (s == "cumulative") return ProfileKind::cumulative;
  if (s == "combined") return ProfileKind::combined;
  if (s == "speedup") return ProfileKind::speedup;
  throw std::invalid_argument("unknown profile kind: " + s);
}

namespace {

struct Cell {
  double value = 0.0;
  bool censored = false;
  Unit unit = Unit::seconds;
};

// Reduces one measure's rows over seeds: arithmetic mean per (instance,
// solver, cores), censored as soon as any seed run is censored.
std::map<std::pair<std::string, std::pair<std::string, int>>, Cell> reduce_seeds(
    const std::vector<MeasureRow>& rows, const std::string& measure) {
  std::map<std::pair<std::string, std::pair<std::string, int>>, std::vector<const MeasureRow*>>
      groups;
  for (const MeasureRow& r : rows)
    if (r.measure == measure) groups[{r.instance, {r.solver, r.cores}}].push_back(&r);
  std::map<std::pair<std::string, std::pair<std::string, int>>, Cell> cells;
  for (const auto& [key, members] : groups) {
    Cell c;
    c.unit = members.front()->unit;
    double sum = 0.0;
    for (const MeasureRow* r : members) {
      sum += r->value;
      c.censored = c.censored || r->censored;
    }
    c.value = sum / static_cast<double>(members.size());
    cells[key] = c;
  }
  return cells;
}

std::set<int> distinct_cores(const std::vector<MeasureRow>& rows, const std::string& measure) {
  std::set<int> cores;
  for (const MeasureRow& r : rows)
    if (r.measure == measure) cores.insert(r.cores);
  return cores;
}

std::string column_label(const std::string& solver, int cores, bool multi_core) {
  return multi_core ? solver + "-c" + std::to_string(cores) : solver;
}

}  // namespace

ProfileOutcome cmd_profile(const std::vector<MeasureRow>& rows, const ProfileOptions& options) {
  ProfileOutcome out;
  RenderOptions render;
  render.width = options.svg_width;
  render.height = options.svg_height;

  if (options.kind == ProfileKind::performance || options.kind == ProfileKind::cumulative ||
      options.kind == ProfileKind::combined) {
    auto cells = reduce_seeds(rows, options.measure);
    if (cells.empty())
      throw std::runtime_error("profile: no rows for measure '" + options.measure + "'");
    bool multi_core = distinct_cores(rows, options.measure).size() > 1;

    if (options.kind == ProfileKind::performance) {
      std::vector<MeasureCell> table_cells;
      for (const auto& [key, cell] : cells)
        table_cells.push_back({key.first,
                               column_label(key.second.first, key.second.second, multi_core),
                               cell.value, cell.censored});
      RatioOptions ro;
      ro.include_timeouts = options.include_timeouts;
      ro.shift = options.ratio_shift;
      RatioTable table = performance_ratios(table_cells, ro);
      std::vector<ProfileCurve> curves;
      for (const std::string& solver : table.solvers)
        curves.push_back(performance_profile(table, solver));
      out.dropped_instances = table.dropped_instances;
      out.basename = "performance_" + options.measure;
      render.log_x = options.log_x.value_or(true);
      render.title = "performance profile: " + options.measure;
      render.x_label = "ratio to best";
      out.csv = curve_csv(curves);
      out.svg = render_svg(curves, render);
      return out;
    }

    if (options.kind == ProfileKind::cumulative) {
      std::map<std::string, std::vector<CumulativeValue>> by_label;
      Unit unit = cells.begin()->second.unit;
      for (const auto& [key, cell] : cells)
        by_label[column_label(key.second.first, key.second.second, multi_core)].push_back(
            {cell.value, cell.censored});
      std::vector<ProfileCurve> curves;
      for (const auto& [label, values] : by_label)
        curves.push_back(cumulative_profile(values, label));
      out.basename = "cumulative_" + options.measure;
      render.log_x = options.log_x.value_or(false);
      render.title = "cumulative distribution: " + options.measure;
      render.x_label = options.measure + " (" + to_string(unit) + ")";
      out.csv = curve_csv(curves);
      out.svg = render_svg(curves, render);
      return out;
    }

    // combined: join the time measure with final gaps per (instance, column).
    auto gap_cells = reduce_seeds(rows, "final_gap");
    std::map<std::string, std::vector<RunOutcome>> by_label;
    for (const auto& [key, cell] : cells) {
      RunOutcome o;
      o.solved = !cell.censored;
      o.time = cell.value;
      auto g = gap_cells.find(key);
      if (g == gap_cells.end()) {
        if (!o.solved)
          throw std::runtime_error("profile: combined needs final_gap rows; none for " +
                                   key.first + " / " + key.second.first);
        o.final_gap = 0.0;
      } else {
        o.final_gap = g->second.value;
      }
      by_label[column_label(key.second.first, key.second.second, multi_core)].push_back(o);
    }
    std::vector<ProfileCurve> curves;
    for (const auto& [label, outcomes] : by_label) {
      auto [time_curve, gap_curve] = combined_time_gap_profile(outcomes, label);
      curves.push_back(std::move(time_curve));
      curves.push_back(std::move(gap_curve));
    }
    out.basename = "combined_" + options.measure;
    render.log_x = options.log_x.value_or(false);
    render.title = "time and gap distribution: " + options.measure;
    render.x_label = options.measure + " (solved) / final gap (unsolved)";
    out.csv = curve_csv(curves);
    out.svg = render_svg(curves, render);
    return out;
  }

  // speedup
  std::string measure = options.basis == "pdi" ? "pdi" : "time_to_opt";
  if (options.basis != "pdi" && options.basis != "wallclock")
    throw std::invalid_argument("profile: unknown speed-up basis '" + options.basis + "'");
  auto cells = reduce_seeds(rows, measure);
  if (cells.empty()) throw std::runtime_error("profile: no rows for measure '" + measure + "'");
  std::map<std::string, std::set<int>> solver_cores;
  for (const auto& [key, cell] : cells) solver_cores[key.second.first].insert(key.second.second);
  std::vector<SpeedupCurve> curves;
  for (const auto& [solver, core_set] : solver_cores) {
    if (core_set.size() < 2) continue;
    // Instances usable for this solver: a cell at every core count, none
    // censored on the wall-clock basis (a timeout has no finished time).
    std::map<std::string, std::map<int, double>> per_instance;
    std::set<std::string> bad;
    for (const auto& [key, cell] : cells) {
      if (key.second.first != solver) continue;
      if (options.basis == "wallclock" && cell.censored) bad.insert(key.first);
      per_instance[key.first][key.second.second] = cell.value;
    }
    std::map<int, std::vector<double>> by_cores;
    for (const auto& [inst, values] : per_instance) {
      if (bad.count(inst) != 0 || values.size() != core_set.size()) continue;
      for (const auto& [cores, v] : values) by_cores[cores].push_back(v);
    }
    if (by_cores.empty())
      throw std::runtime_error("profile: no instance has usable runs at every core count for " +
                               solver);
    std::vector<std::pair<int, double>> value_by_cores;
    for (const auto& [cores, values] : by_cores)
      value_by_cores.emplace_back(cores, shifted_geometric_mean(values, 10.0));
    curves.push_back(speedup_curve(value_by_cores, value_by_cores.front().first, solver));
  }
  if (curves.empty())
    throw std::runtime_error("profile: speed-up needs runs at two or more core counts");
  out.basename = "speedup_" + options.basis;
  render.log_x = options.log_x.value_or(true);
  render.title = "speed-up: " + options.basis;
  render.x_label = "cores";
  render.y_label = "speed-up";
  out.csv = curve_csv(curves);
  out.svg = render_svg(curves, render);
  return out;
}

namespace {

std::string fmt_g(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string pad(const std::string& s, std::size_t width, bool right) {
  if (s.size() >= width) return s;
  std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

void append_table(std::string& out, const std::vector<std::vector<std::string>>& table,
                  const std::vector<bool>& right_align) {
  std::vector<std::size_t> widths(right_align.size(), 0);
  for (const auto& row : table)
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  for (const auto& row : table) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += "  ";
      out += pad(row[i], widths[i], right_align[i]);
    }
    out += '\n';
  }
}

// Shift choice per unit: damp near-zero times strongly, node counts by a
// hundred; plain ratios average arithmetically instead.
AggregationPolicy policy_for(Unit unit) {
  AggregationPolicy p;
  if (unit == Unit::ratio) {
    p.kind = MeanKind::arithmetic;
    p.shift = 0.0;
  } else if (unit == Unit::count || unit == Unit::nodes_per_second) {
    p.kind = MeanKind::shifted_geometric;
    p.shift = 100.0;
  } else {
    p.kind = MeanKind::shifted_geometric;
    p.shift = 10.0;
  }
  p.censoring = CensoringPolicy::exclude_and_count;
  return p;
}

std::string heading(const std::string& text, char underline, bool color) {
  std::string out;
  if (color) out += "\033[1m";
  out += text;
  if (color) out += "\033[0m";
  out += '\n';
  out += std::string(text.size(), underline);
  out += '\n';
  return out;
}

}  // namespace

std::string cmd_report(const std::vector<MeasureRow>& rows, const ReportOptions& options) {
  std::string out;
  std::set<std::string> instances, solvers, measures;
  std::set<int> cores;
  std::set<std::int64_t> seeds;
  int censored_rows = 0;
  for (const MeasureRow& r : rows) {
    instances.insert(r.instance);
    solvers.insert(r.solver);
    measures.insert(r.measure);
    cores.insert(r.cores);
    seeds.insert(r.seed);
    if (r.censored) ++censored_rows;
  }
  out += heading("experiment summary", '=', options.color);
  out += "instances: " + std::to_string(instances.size());
  out += "  solvers: " + std::to_string(solvers.size());
  out += "  core counts: " + std::to_string(cores.size());
  out += "  seeds: " + std::to_string(seeds.size());
  out += "  rows: " + std::to_string(rows.size());
  out += " (" + std::to_string(censored_rows) + " censored)\n\n";

  out += heading("aggregate means", '-', options.color);
  out += "shifted geometric mean, shift 10 for times and 100 for counts;\n";
  out += "ratio measures use the arithmetic mean; censored runs are excluded and counted.\n\n";
  std::vector<std::vector<std::string>> table;
  table.push_back({"measure", "unit", "solver", "cores", "n", "censored", "mean"});
  for (const std::string& measure : measures) {
    std::map<std::pair<std::string, int>, std::vector<MeasureValue>> groups;
    Unit unit = Unit::seconds;
    for (const MeasureRow& r : rows) {
      if (r.measure != measure) continue;
      unit = r.unit;
      groups[{r.solver, r.cores}].push_back({r.measure, r.value, r.unit, r.censored});
    }
    for (const auto& [key, values] : groups) {
      AggregationPolicy policy = policy_for(unit);
      std::string mean = "-";
      int used = 0, cens = 0;
      try {
        AggregateResult agg = aggregate(values, policy);
        mean = fmt_g(agg.summary);
        used = agg.n_used;
        cens = agg.n_censored;
      } catch (const std::exception&) {
        for (const MeasureValue& v : values)
          if (v.censored) ++cens;
      }
      table.push_back({measure, to_string(unit), key.first, std::to_string(key.second),
                       std::to_string(used), std::to_string(cens), mean});
    }
  }
  append_table(out, table, {false, false, false, true, true, true, true});
  out += '\n';

  if (measures.count("time_to_opt") != 0 && cores.size() > 1) {
    out += heading("per-instance scalability (wall-clock time to optimality)", '-',
                   options.color);
    auto cells = reduce_seeds(rows, "time_to_opt");
    for (const std::string& solver : solvers) {
      std::vector<ScalabilityRun> runs;
      std::set<int> solver_core_set;
      for (const auto& [key, cell] : cells) {
        if (key.second.first != solver) continue;
        solver_core_set.insert(key.second.second);
        runs.push_back(
            {key.first, key.second.second, {"time_to_opt", cell.value, cell.unit, cell.censored}});
      }
      if (solver_core_set.size() < 2) continue;
      ScalabilityReport report = per_instance_scalability(runs);
      out += solver + ":\n";
      std::vector<std::vector<std::string>> t;
      t.push_back({"instance", "cores", "speed-up", "efficiency"});
      for (const ScalabilityEntry& e : report.entries)
        t.push_back({e.instance, std::to_string(e.cores), fmt_g(e.speedup), fmt_g(e.efficiency)});
      append_table(out, t, {false, true, true, true});
      std::map<int, std::vector<double>> by_cores;
      for (const ScalabilityEntry& e : report.entries) by_cores[e.cores].push_back(e.speedup);
      for (const auto& [n, values] : by_cores)
        out += "geometric mean speed-up at " + std::to_string(n) + " cores: " +
               fmt_g(shifted_geometric_mean(values, 0.0)) + " over " +
               std::to_string(values.size()) + " instances\n";
      for (const std::string& issue : report.issues) out += "note: " + issue + '\n';
      out += '\n';
    }
  }
  return out;
}

}  // namespace bnba
