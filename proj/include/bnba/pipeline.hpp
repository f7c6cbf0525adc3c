#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bnba/aggregate.hpp"
#include "bnba/manifest.hpp"
#include "bnba/measures.hpp"
#include "bnba/profiles.hpp"

namespace bnba {

// One measure of one run; the row schema of the measures CSV.
struct MeasureRow {
  std::string instance;
  std::string solver;
  int cores = 1;
  std::int64_t seed = 0;
  std::string measure;
  double value = 0.0;
  Unit unit = Unit::seconds;
  bool censored = false;
  bool operator==(const MeasureRow&) const = default;
};

std::string measure_csv(const std::vector<MeasureRow>& rows);
std::vector<MeasureRow> parse_measure_csv(const std::string& text);

std::string curve_csv(const std::vector<ProfileCurve>& curves);
std::string curve_csv(const std::vector<SpeedupCurve>& curves);

// Runs every (instance, simulator config, core count, seed) combination of
// the manifest and writes one trace file per run into <out_dir>/traces,
// named <instance>__<solver>__c<N>__s<seed>.bbt. Externally provided
// trace_dir entries are skipped here (analyze reads them in place).
struct SimulateOutcome {
  std::vector<std::string> trace_files;
  std::vector<std::string> skipped;
};
SimulateOutcome cmd_simulate(const ExperimentManifest& manifest, const std::string& out_dir,
                             std::optional<std::int64_t> seed_override);

// Names accepted in AnalyzeOptions::measures.
bool is_known_measure(const std::string& name);

struct AnalyzeOptions {
  std::vector<std::string> measures = {"time_to_opt", "time_to_first", "pdi",
                                       "final_gap",   "nodes",         "throughput",
                                       "wall_time"};
  double rel_tol = 1e-6;
  double abs_tol = 1e-9;
  double gap_target = 0.1;                // for time_to_gap
  std::optional<double> pdi_horizon;      // default: each trace's time limit
  GapDenominator gap_denom = GapDenominator::max_abs;
  double gap_denom_const = 1.0;
};

// Reads every .bbt file in trace_dir (sorted by name), validates, normalizes
// the sense, and extracts the requested measures. Malformed traces are
// reported in warnings and skipped; the run continues.
struct AnalyzeOutcome {
  std::vector<MeasureRow> rows;
  std::vector<std::string> warnings;
};
AnalyzeOutcome cmd_analyze(const std::string& trace_dir, const AnalyzeOptions& options);

enum class ProfileKind { performance, cumulative, combined, speedup };
ProfileKind profile_kind_from_string(const std::string& s);

struct ProfileOptions {
  ProfileKind kind = ProfileKind::performance;
  std::string measure = "time_to_opt";  // performance / cumulative / combined time part
  std::string basis = "wallclock";      // speedup: wallclock | pdi
  bool include_timeouts = false;
  double ratio_shift = 0.0;
  std::optional<bool> log_x;  // default depends on kind
  int svg_width = 720;
  int svg_height = 480;
};

// Builds the selected cross-run comparison from measure rows. Runs of one
// (instance, solver, cores) cell are first reduced over seeds: value =
// arithmetic mean, censored as soon as any seed is censored (the cell then
// carries the largest value, i.e. the time limit for time measures).
struct ProfileOutcome {
  std::string basename;  // e.g. "performance_time_to_opt"
  std::string csv;
  std::string svg;
  int dropped_instances = 0;  // performance kind only
};
ProfileOutcome cmd_profile(const std::vector<MeasureRow>& rows, const ProfileOptions& options);

struct ReportOptions {
  bool color = false;
};

// Plain-text summary: per (measure, solver, cores) aggregate means with
// censored counts, and a per-instance scalability table on wall-clock times.
std::string cmd_report(const std::vector<MeasureRow>& rows, const ReportOptions& options);

}  // namespace bnba
