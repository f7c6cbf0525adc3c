#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnba/measures.hpp"

namespace bnba {

struct CurvePoint {
  double x;
  double fraction;
  bool operator==(const CurvePoint&) const = default;
};

// A non-decreasing step curve with fractions in [0, 1]. points lists the
// jumps; right_censored_at is set when the curve plateaus short of 1 and
// names the largest finite x it reaches.
struct ProfileCurve {
  std::string label;
  std::vector<CurvePoint> points;
  std::optional<double> right_censored_at;
};

// One per-instance value of one solver in a cross-solver comparison.
struct MeasureCell {
  std::string instance;
  std::string solver;
  double value = 0.0;
  bool censored = false;
};

struct RatioOptions {
  // false: keep only instances every solver finished (a clean comparison of
  // the finishers). true: keep any instance someone finished, mapping
  // censored cells to +inf so curves plateau at the solve rate.
  bool include_timeouts = false;
  // Optional shift applied to numerator and denominator of each ratio.
  double shift = 0.0;
};

// Ratios to the per-instance best. Instances excluded by the censoring rule
// are dropped and counted; solvers and instances come out sorted.
struct RatioTable {
  std::vector<std::string> solvers;
  std::vector<std::string> instances;
  std::vector<std::vector<double>> ratios;  // [instance][solver], +inf when censored
  int dropped_instances = 0;
};
RatioTable performance_ratios(const std::vector<MeasureCell>& cells,
                              const RatioOptions& options = {});

// Fraction of instances with ratio <= x, per distinct finite ratio x of one
// solver. The final fraction is that solver's share of retained instances
// it finished.
ProfileCurve performance_profile(const RatioTable& table, const std::string& solver);

// Empirical distribution of an absolute measure; censored values never
// count, so the curve tops out at the solve rate.
struct CumulativeValue {
  double value;
  bool censored;
};
ProfileCurve cumulative_profile(const std::vector<CumulativeValue>& values,
                                const std::string& label);

// Joint view of one solver's runs: solved instances enter a time
// distribution, unsolved ones a final-gap distribution, both over the full
// instance count so the two fractions are comparable.
struct RunOutcome {
  bool solved;
  double time;       // meaningful when solved
  double final_gap;  // meaningful when unsolved
};
std::pair<ProfileCurve, ProfileCurve> combined_time_gap_profile(
    const std::vector<RunOutcome>& outcomes, const std::string& label);

// Speed-up against the baseline core count, one point per larger core
// count, plus the ideal line (n, n) for reference.
struct SpeedupPoint {
  int cores;
  double value;
  bool operator==(const SpeedupPoint&) const = default;
};
struct SpeedupCurve {
  std::string label;
  std::vector<SpeedupPoint> points;
  std::vector<SpeedupPoint> ideal;
};
SpeedupCurve speedup_curve(const std::vector<std::pair<int, double>>& value_by_cores,
                           int baseline_cores, const std::string& label);

}  // namespace bnba
