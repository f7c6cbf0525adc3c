#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bnba {

// 0/1 knapsack: maximize total value subject to total weight <= capacity.
struct KnapsackInstance {
  std::string id;
  std::vector<double> values;   // positive
  std::vector<double> weights;  // positive
  double capacity = 0.0;        // positive
  bool operator==(const KnapsackInstance&) const = default;
};

std::string emit_instance(const KnapsackInstance& instance);
KnapsackInstance parse_instance(const std::string& text);
void write_instance_file(const std::string& path, const KnapsackInstance& instance);
KnapsackInstance read_instance_file(const std::string& path);

// uncorrelated: values and weights drawn independently.
// strongly_correlated: value = weight + constant, which clusters the
// value/weight ratios and makes bound ties frequent.
enum class InstanceFamily { uncorrelated, strongly_correlated };
const char* to_string(InstanceFamily f);
InstanceFamily family_from_string(const std::string& s);

// Deterministic in (family, n_items, seed); integer values and weights in
// [1, 100], capacity half the total weight.
KnapsackInstance generate_instance(InstanceFamily family, int n_items, std::uint64_t seed);

// Exhaustive reference solution; exponential, refuses n > 25. items holds
// the chosen original indices, ascending.
struct BruteForceResult {
  double value = 0.0;
  std::vector<int> items;
};
BruteForceResult brute_force_knapsack(const KnapsackInstance& instance);

}  // namespace bnba
