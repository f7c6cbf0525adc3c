#include "bnba/knapsack.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "bnba/format.hpp"

namespace bnba {

namespace {

using nlohmann::json;

void check_instance(const KnapsackInstance& inst) {
  if (inst.values.size() != inst.weights.size())
    throw std::invalid_argument("knapsack: values and weights differ in length");
  if (inst.values.empty()) throw std::invalid_argument("knapsack: no items");
  if (!(inst.capacity > 0.0)) throw std::invalid_argument("knapsack: capacity must be > 0");
  for (std::size_t i = 0; i < inst.values.size(); ++i)
    if (!(inst.values[i] > 0.0) || !(inst.weights[i] > 0.0))
      throw std::invalid_argument("knapsack: values and weights must be positive");
}

}  // namespace

std::string emit_instance(const KnapsackInstance& instance) {
  json j;
  j["id"] = instance.id;
  j["values"] = instance.values;
  j["weights"] = instance.weights;
  j["capacity"] = instance.capacity;
  return j.dump(2) + "\n";
}

KnapsackInstance parse_instance(const std::string& text) {
  json j = json::parse(text);
  KnapsackInstance inst;
  inst.id = j.at("id").get<std::string>();
  inst.values = j.at("values").get<std::vector<double>>();
  inst.weights = j.at("weights").get<std::vector<double>>();
  inst.capacity = j.at("capacity").get<double>();
  check_instance(inst);
  return inst;
}

void write_instance_file(const std::string& path, const KnapsackInstance& instance) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << emit_instance(instance);
}

KnapsackInstance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

const char* to_string(InstanceFamily f) {
  return f == InstanceFamily::uncorrelated ? "uncorrelated" : "strongly_correlated";
}

InstanceFamily family_from_string(const std::string& s) {
  if (s == "uncorrelated") return InstanceFamily::uncorrelated;
  if (s == "strongly_correlated") return InstanceFamily::strongly_correlated;
  throw std::invalid_argument("unknown instance family: " + s);
}

KnapsackInstance generate_instance(InstanceFamily family, int n_items, std::uint64_t seed) {
  if (n_items < 1) throw std::invalid_argument("generate_instance: n_items must be >= 1");
  // mt19937_64 has a standardized sequence; mapping by modulo keeps the
  // draw platform-independent (std distributions are not portable).
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(family) << 32) ^
                      (static_cast<std::uint64_t>(n_items) << 40));
  auto draw = [&rng](int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  KnapsackInstance inst;
  double weight_sum = 0.0;
  for (int i = 0; i < n_items; ++i) {
    const int w = draw(1, 100);
    const int v = family == InstanceFamily::uncorrelated ? draw(1, 100) : w + 10;
    inst.weights.push_back(w);
    inst.values.push_back(v);
    weight_sum += w;
  }
  inst.capacity = std::max(1.0, std::floor(0.5 * weight_sum));
  std::ostringstream id;
  id << (family == InstanceFamily::uncorrelated ? "uncorr" : "strong") << "-n" << n_items
     << "-g" << seed;
  inst.id = id.str();
  check_instance(inst);
  return inst;
}

BruteForceResult brute_force_knapsack(const KnapsackInstance& instance) {
  check_instance(instance);
  const int n = static_cast<int>(instance.values.size());
  if (n > 25) throw std::invalid_argument("brute_force_knapsack: refuses n > 25");

  BruteForceResult best;  // the empty set is feasible with value 0
  std::uint32_t best_mask = 0;

  // Depth-first over all subsets, taking each item before skipping it;
  // strictly-better updates make the reported subset deterministic.
  struct Frame {
    int depth;
    double weight;
    double value;
    std::uint32_t mask;
  };
  std::vector<Frame> stack;
  stack.push_back({0, 0.0, 0.0, 0});
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.depth == n) {
      if (f.value > best.value) {
        best.value = f.value;
        best_mask = f.mask;
      }
      continue;
    }
    stack.push_back({f.depth + 1, f.weight, f.value, f.mask});
    const double w = f.weight + instance.weights[f.depth];
    if (w <= instance.capacity)
      stack.push_back({f.depth + 1, w, f.value + instance.values[f.depth],
                       f.mask | (1u << f.depth)});
  }
  for (int i = 0; i < n; ++i)
    if (best_mask & (1u << i)) best.items.push_back(i);
  return best;
}

}  // namespace bnba
