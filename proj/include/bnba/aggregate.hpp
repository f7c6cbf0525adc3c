#pragma once

#include <span>
#include <string>
#include <vector>

#include "bnba/measures.hpp"

namespace bnba {

enum class MeanKind { arithmetic, geometric, shifted_geometric };

// How censored observations enter a summary: exclude_and_count drops them
// (reporting how many), censor_at_limit keeps them at their recorded limit
// value, biasing the mean toward the solvers that finish.
enum class CensoringPolicy { exclude_and_count, censor_at_limit };

struct AggregationPolicy {
  MeanKind kind = MeanKind::shifted_geometric;
  double shift = 0.0;
  CensoringPolicy censoring = CensoringPolicy::exclude_and_count;
};

struct AggregateResult {
  double summary = 0.0;
  int n_used = 0;
  int n_censored = 0;
};

// (prod (x_k + s))^(1/n) - s, computed in log space. Requires a non-empty
// list with every x_k + s > 0; with s = 0 this is the plain geometric mean,
// and s > 0 damps the influence of values near zero.
double shifted_geometric_mean(std::span<const double> values, double shift);

// Summarizes values that share one measure name and unit (mixed inputs are
// rejected, as are summaries left empty by the censoring policy).
AggregateResult aggregate(const std::vector<MeasureValue>& values,
                          const AggregationPolicy& policy);

// One run's time at one core count, used to build per-instance speed-ups.
struct ScalabilityRun {
  std::string instance;
  int cores = 1;
  MeasureValue time;
};

struct ScalabilityEntry {
  std::string instance;
  int cores;
  double speedup;
  double efficiency;
};

// Speed-up and efficiency per instance and core count relative to each
// instance's run at the smallest core count present in the input. Instances
// with a missing or censored baseline, and censored non-baseline runs, are
// skipped and reported in issues.
struct ScalabilityReport {
  std::vector<ScalabilityEntry> entries;
  std::vector<std::string> issues;
};
ScalabilityReport per_instance_scalability(const std::vector<ScalabilityRun>& runs);

}  // namespace bnba
