#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "bnba/aggregate.hpp"

using namespace bnba;

TEST_CASE("shifted geometric mean hand values") {
  std::vector<double> v{2.0, 8.0};
  // sqrt((2+10)(8+10)) - 10, computed the long way
  double expected = std::sqrt(12.0 * 18.0) - 10.0;
  CHECK(shifted_geometric_mean(v, 10.0) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(shifted_geometric_mean(std::vector<double>{5.0}, 3.0) == doctest::Approx(5.0));
}

TEST_CASE("zero shift reduces to the geometric mean") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> val(0.01, 100.0);
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = 1 + rng() % 6;
    std::vector<double> v(n);
    double product = 1.0;
    for (double& x : v) {
      x = val(rng);
      product *= x;
    }
    double gm = std::pow(product, 1.0 / static_cast<double>(n));
    CHECK(shifted_geometric_mean(v, 0.0) == doctest::Approx(gm).epsilon(1e-12));
  }
}

TEST_CASE("shifted geometric mean never exceeds the arithmetic mean") {
  std::mt19937_64 rng(32);
  std::uniform_real_distribution<double> val(0.0, 1000.0);
  std::uniform_real_distribution<double> shift_dist(0.0, 100.0);
  for (int i = 0; i < 10000; ++i) {
    std::size_t n = 1 + rng() % 8;
    std::vector<double> v(n);
    double sum = 0.0;
    for (double& x : v) {
      x = val(rng);
      sum += x;
    }
    double s = shift_dist(rng);
    if (s == 0.0 && std::any_of(v.begin(), v.end(), [](double x) { return x == 0.0; })) continue;
    CHECK(shifted_geometric_mean(v, s) <= sum / static_cast<double>(n) + 1e-9);
  }
}

TEST_CASE("shifting commutes with translation") {
  // SG(x + c, s) == SG(x, s + c) + c: both sides exponentiate the same logs.
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> val(0.1, 50.0);
  for (int i = 0; i < 2000; ++i) {
    std::size_t n = 1 + rng() % 6;
    std::vector<double> v(n), shifted(n);
    double c = val(rng);
    for (std::size_t k = 0; k < n; ++k) {
      v[k] = val(rng);
      shifted[k] = v[k] + c;
    }
    double lhs = shifted_geometric_mean(shifted, 7.0);
    double rhs = shifted_geometric_mean(v, 7.0 + c) + c;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
  }
}

TEST_CASE("shifted geometric mean rejects impossible inputs") {
  CHECK_THROWS(shifted_geometric_mean(std::vector<double>{}, 10.0));
  CHECK_THROWS(shifted_geometric_mean(std::vector<double>{-11.0}, 10.0));
  CHECK_THROWS(shifted_geometric_mean(std::vector<double>{0.0}, 0.0));
}

namespace {
MeasureValue mv(double value, bool censored = false) {
  return {"time_to_opt", value, Unit::seconds, censored};
}
}  // namespace

TEST_CASE("aggregate applies the censoring policy") {
  std::vector<MeasureValue> values{mv(1.0), mv(2.0), mv(10.0, true)};
  AggregationPolicy exclude{MeanKind::arithmetic, 0.0, CensoringPolicy::exclude_and_count};
  AggregateResult r = aggregate(values, exclude);
  CHECK(r.summary == doctest::Approx(1.5));
  CHECK(r.n_used == 2);
  CHECK(r.n_censored == 1);

  AggregationPolicy keep{MeanKind::arithmetic, 0.0, CensoringPolicy::censor_at_limit};
  r = aggregate(values, keep);
  CHECK(r.summary == doctest::Approx(13.0 / 3.0));
  CHECK(r.n_used == 3);
  CHECK(r.n_censored == 1);
}

TEST_CASE("aggregate mean kinds") {
  std::vector<MeasureValue> values{mv(2.0), mv(8.0)};
  AggregationPolicy geo{MeanKind::geometric, 0.0, CensoringPolicy::exclude_and_count};
  CHECK(aggregate(values, geo).summary == doctest::Approx(4.0));
  AggregationPolicy sg{MeanKind::shifted_geometric, 10.0, CensoringPolicy::exclude_and_count};
  CHECK(aggregate(values, sg).summary == doctest::Approx(std::sqrt(216.0) - 10.0));
}

TEST_CASE("aggregate rejects mixed or empty input") {
  std::vector<MeasureValue> mixed{mv(1.0), {"nodes", 5.0, Unit::count, false}};
  AggregationPolicy p{MeanKind::arithmetic, 0.0, CensoringPolicy::exclude_and_count};
  CHECK_THROWS(aggregate(mixed, p));
  CHECK_THROWS(aggregate({}, p));
  std::vector<MeasureValue> all_censored{mv(10.0, true)};
  CHECK_THROWS(aggregate(all_censored, p));  // nothing left after exclusion
}

TEST_CASE("per-instance scalability table") {
  auto run = [](const char* inst, int cores, double t, bool cens = false) {
    return ScalabilityRun{inst, cores, {"time_to_opt", t, Unit::seconds, cens}};
  };
  std::vector<ScalabilityRun> runs{
      run("a", 1, 8.0),  run("a", 2, 4.0),       run("a", 4, 1.0),
      run("b", 1, 10.0), run("b", 2, 10.0),      run("b", 4, 10.0, true),
      run("c", 2, 3.0),  // no run at the smallest core count anywhere -> issue
  };
  ScalabilityReport rep = per_instance_scalability(runs);
  REQUIRE(rep.entries.size() == 3);
  CHECK(rep.entries[0].instance == "a");
  CHECK(rep.entries[0].cores == 2);
  CHECK(rep.entries[0].speedup == doctest::Approx(2.0));
  CHECK(rep.entries[0].efficiency == doctest::Approx(1.0));
  CHECK(rep.entries[1].speedup == doctest::Approx(8.0));
  CHECK(rep.entries[1].efficiency == doctest::Approx(2.0));
  CHECK(rep.entries[2].instance == "b");
  CHECK(rep.entries[2].speedup == doctest::Approx(1.0));
  // censored at 4 cores and the missing baseline both get reported
  CHECK(rep.issues.size() == 2);

  std::vector<ScalabilityRun> dup{run("a", 1, 8.0), run("a", 1, 9.0)};
  CHECK_THROWS(per_instance_scalability(dup));
}
