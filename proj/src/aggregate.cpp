#include "bnba/aggregate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace bnba {

double shifted_geometric_mean(std::span<const double> values, double shift) {
  if (values.empty()) throw std::invalid_argument("shifted_geometric_mean: empty input");
  double log_sum = 0.0;
  for (double x : values) {
    const double shifted = x + shift;
    if (!(shifted > 0.0))
      throw std::invalid_argument("shifted_geometric_mean: requires x + shift > 0");
    log_sum += std::log(shifted);
  }
  // The mean of one value is that value; skipping exp(log(x)) keeps it exact.
  if (values.size() == 1) return values.front();
  return std::exp(log_sum / static_cast<double>(values.size())) - shift;
}

AggregateResult aggregate(const std::vector<MeasureValue>& values,
                          const AggregationPolicy& policy) {
  if (values.empty()) throw std::invalid_argument("aggregate: empty input");
  const std::string& name = values.front().name;
  const Unit unit = values.front().unit;
  std::vector<double> used;
  int censored = 0;
  for (const MeasureValue& v : values) {
    if (v.name != name || v.unit != unit)
      throw std::invalid_argument("aggregate: mixed measures (" + name + " vs " + v.name + ")");
    if (v.censored) {
      ++censored;
      if (policy.censoring == CensoringPolicy::exclude_and_count) continue;
    }
    used.push_back(v.value);
  }
  if (used.empty())
    throw std::invalid_argument("aggregate: no usable values after censoring policy");

  double summary = 0.0;
  switch (policy.kind) {
    case MeanKind::arithmetic: {
      double sum = 0.0;
      for (double x : used) sum += x;
      summary = sum / static_cast<double>(used.size());
      break;
    }
    case MeanKind::geometric:
      summary = shifted_geometric_mean(used, 0.0);
      break;
    case MeanKind::shifted_geometric:
      summary = shifted_geometric_mean(used, policy.shift);
      break;
  }
  return {summary, static_cast<int>(used.size()), censored};
}

ScalabilityReport per_instance_scalability(const std::vector<ScalabilityRun>& runs) {
  ScalabilityReport out;
  if (runs.empty()) return out;

  int baseline_cores = runs.front().cores;
  for (const ScalabilityRun& r : runs) baseline_cores = std::min(baseline_cores, r.cores);

  std::map<std::string, std::map<int, const ScalabilityRun*>> by_instance;
  for (const ScalabilityRun& r : runs) {
    auto [it, inserted] = by_instance[r.instance].try_emplace(r.cores, &r);
    if (!inserted)
      throw std::invalid_argument("per_instance_scalability: duplicate run for " + r.instance +
                                  " at " + std::to_string(r.cores) + " cores");
  }

  for (const auto& [instance, by_cores] : by_instance) {
    auto base_it = by_cores.find(baseline_cores);
    if (base_it == by_cores.end()) {
      out.issues.push_back(instance + ": no baseline run at " +
                           std::to_string(baseline_cores) + " cores");
      continue;
    }
    if (base_it->second->time.censored) {
      out.issues.push_back(instance + ": baseline censored, instance excluded");
      continue;
    }
    for (const auto& [cores, run] : by_cores) {
      if (cores == baseline_cores) continue;
      if (run->time.censored) {
        out.issues.push_back(instance + ": censored at " + std::to_string(cores) + " cores");
        continue;
      }
      const double s = speedup(base_it->second->time, run->time);
      out.entries.push_back({instance, cores, s, parallel_efficiency(s, cores)});
    }
  }
  return out;
}

}  // namespace bnba
