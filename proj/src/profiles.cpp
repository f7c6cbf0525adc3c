#include "bnba/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace bnba {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Empirical CDF over a fixed denominator; jumps at each distinct value.
ProfileCurve cdf_curve(std::vector<double> finite_values, std::size_t denominator,
                       const std::string& label) {
  ProfileCurve curve;
  curve.label = label;
  if (denominator == 0) return curve;
  std::sort(finite_values.begin(), finite_values.end());
  std::size_t covered = 0;
  for (std::size_t i = 0; i < finite_values.size();) {
    std::size_t j = i;
    while (j < finite_values.size() && finite_values[j] == finite_values[i]) ++j;
    covered = j;
    curve.points.push_back(
        {finite_values[i], static_cast<double>(covered) / static_cast<double>(denominator)});
    i = j;
  }
  if (!curve.points.empty() && covered < denominator)
    curve.right_censored_at = curve.points.back().x;
  return curve;
}

}  // namespace

RatioTable performance_ratios(const std::vector<MeasureCell>& cells,
                              const RatioOptions& options) {
  if (options.shift < 0.0)
    throw std::invalid_argument("performance_ratios: shift must be >= 0");
  std::set<std::string> solver_set;
  for (const MeasureCell& c : cells) solver_set.insert(c.solver);
  if (solver_set.empty()) throw std::invalid_argument("performance_ratios: no solvers");

  RatioTable table;
  table.solvers.assign(solver_set.begin(), solver_set.end());
  std::map<std::string, std::size_t> solver_index;
  for (std::size_t i = 0; i < table.solvers.size(); ++i) solver_index[table.solvers[i]] = i;

  // A missing cell is treated like a censored one.
  struct Cell {
    double value = 0.0;
    bool usable = false;
  };
  std::map<std::string, std::vector<Cell>> rows;
  std::set<std::pair<std::string, std::string>> seen;
  for (const MeasureCell& c : cells) {
    if (!seen.emplace(c.instance, c.solver).second)
      throw std::invalid_argument("performance_ratios: duplicate cell for " + c.instance +
                                  " / " + c.solver);
    auto it = rows.try_emplace(c.instance, table.solvers.size()).first;
    it->second[solver_index[c.solver]] = {c.value, !c.censored};
  }

  for (const auto& [instance, row] : rows) {
    const std::size_t usable =
        static_cast<std::size_t>(std::count_if(row.begin(), row.end(),
                                               [](const Cell& c) { return c.usable; }));
    const bool keep = options.include_timeouts ? usable > 0 : usable == row.size();
    if (!keep) {
      ++table.dropped_instances;
      continue;
    }
    double best = kInf;
    for (const Cell& c : row)
      if (c.usable) best = std::min(best, c.value);
    std::vector<double> ratios(row.size(), kInf);
    for (std::size_t s = 0; s < row.size(); ++s)
      if (row[s].usable)
        ratios[s] = (row[s].value + options.shift) / (best + options.shift);
    table.instances.push_back(instance);
    table.ratios.push_back(std::move(ratios));
  }
  return table;
}

ProfileCurve performance_profile(const RatioTable& table, const std::string& solver) {
  auto it = std::find(table.solvers.begin(), table.solvers.end(), solver);
  if (it == table.solvers.end())
    throw std::invalid_argument("performance_profile: unknown solver " + solver);
  const std::size_t s = static_cast<std::size_t>(it - table.solvers.begin());
  std::vector<double> finite;
  for (const auto& row : table.ratios)
    if (std::isfinite(row[s])) finite.push_back(row[s]);
  return cdf_curve(std::move(finite), table.instances.size(), solver);
}

ProfileCurve cumulative_profile(const std::vector<CumulativeValue>& values,
                                const std::string& label) {
  std::vector<double> finite;
  for (const CumulativeValue& v : values)
    if (!v.censored) finite.push_back(v.value);
  return cdf_curve(std::move(finite), values.size(), label);
}

std::pair<ProfileCurve, ProfileCurve> combined_time_gap_profile(
    const std::vector<RunOutcome>& outcomes, const std::string& label) {
  std::vector<double> times;
  std::vector<double> gaps;
  for (const RunOutcome& o : outcomes) {
    if (o.solved)
      times.push_back(o.time);
    else
      gaps.push_back(o.final_gap);
  }
  return {cdf_curve(std::move(times), outcomes.size(), label + " (solved)"),
          cdf_curve(std::move(gaps), outcomes.size(), label + " (unsolved gap)")};
}

SpeedupCurve speedup_curve(const std::vector<std::pair<int, double>>& value_by_cores,
                           int baseline_cores, const std::string& label) {
  double baseline = 0.0;
  bool have_baseline = false;
  for (const auto& [cores, value] : value_by_cores) {
    if (cores == baseline_cores) {
      baseline = value;
      have_baseline = true;
    }
  }
  if (!have_baseline)
    throw std::invalid_argument("speedup_curve: no value at the baseline core count");

  std::vector<std::pair<int, double>> sorted = value_by_cores;
  std::sort(sorted.begin(), sorted.end());
  SpeedupCurve curve;
  curve.label = label;
  for (const auto& [cores, value] : sorted) {
    if (cores == baseline_cores) continue;
    curve.points.push_back({cores, speedup(baseline, value)});
    curve.ideal.push_back({cores, static_cast<double>(cores)});
  }
  return curve;
}

}  // namespace bnba
