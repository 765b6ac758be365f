#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "netvalue/generators.hpp"
#include "netvalue/valuation.hpp"
#include "test_support.hpp"

using namespace netvalue;

TEST_CASE("metcalfe_value: reference sizes") {
  CHECK(metcalfe_value(100) == 10000.0);
  CHECK(metcalfe_value(40) == 1600.0);
  CHECK(metcalfe_value(0) == 0.0);
  CHECK_THROWS_AS(metcalfe_value(-1), std::invalid_argument);
}

TEST_CASE("zipf_value: base-10 log fixed by the reference tables") {
  CHECK(std::fabs(zipf_value(30) - 44.31) < 0.01);
  CHECK(zipf_value(100) == doctest::Approx(200.0));
  CHECK(zipf_value(1) == 0.0);
  CHECK_THROWS_AS(zipf_value(0.5), std::invalid_argument);
  CHECK_THROWS_AS(zipf_value(0), std::invalid_argument);
}

TEST_CASE("reed_value: exact powers of two and the log2 report") {
  CHECK(reed_value(10) == 1024.0);
  CHECK(reed_value(0) == 1.0);
  CHECK(reed_value(20) == 1048576.0);
  CHECK(std::isinf(reed_value(2000)));  // past double range; log2 reading still exact
  CHECK_THROWS_AS(reed_value(-2), std::invalid_argument);

  const Graph g(20, {});
  const ValueReport report = evaluate(g, {MetricKind::Reed, 1});
  REQUIRE(report.log2_value.has_value());
  CHECK(*report.log2_value == 20.0);
  CHECK(report.value == 1048576.0);
}

TEST_CASE("degree_sum_value: 2|E| identity") {
  CHECK(degree_sum_value(ba_generate({100, 1, 0}, {3, 0})) == 200.0);
  CHECK(degree_sum_value(ring_lattice(50, 6)) == 300.0);
  CHECK(degree_sum_value(Graph(10, {})) == 0.0);
}

TEST_CASE("hop_reach_value: lattice and complete graphs") {
  CHECK(hop_reach_value(ring_lattice(100, 4), 2) == 800.0);
  const Graph complete = test::complete_graph(9);
  CHECK(hop_reach_value(complete, 1) == 72.0);
  CHECK(hop_reach_value(complete, 5) == 72.0);
  CHECK_THROWS_AS(hop_reach_value(complete, 0), std::invalid_argument);
}

TEST_CASE("hop_reach_value: rewiring grows the 2-hop neighbourhood on average") {
  const int seeds = 50;
  double total = 0.0;
  for (int s = 0; s < seeds; ++s)
    total += hop_reach_value(ws_generate({100, 4, 0.32}, {321, static_cast<std::uint64_t>(s)}), 2);
  const double mean = total / seeds;
  CHECK(mean > 800.0);     // strictly above the lattice value
  CHECK(mean < 100 * 99);  // and below the all-pairs ceiling
}

TEST_CASE("value_ratio: reference arithmetic") {
  // 747 / (100 log10 100) and 1296 / (100 log10 100).
  CHECK(747.0 / zipf_value(100) == doctest::Approx(3.735).epsilon(1e-12));
  CHECK(1296.0 / zipf_value(100) == doctest::Approx(6.48).epsilon(1e-12));

  const Graph ring = ring_lattice(100, 4);
  CHECK(value_ratio(ring, {MetricKind::HopReach, 2}) == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(value_ratio(ring, {MetricKind::Zipf, 1}) == 1.0);

  CHECK_THROWS_AS(value_ratio(Graph(1, {}), {MetricKind::Metcalfe, 1}), std::invalid_argument);
  CHECK_THROWS_AS(value_ratio(Graph(0, {}), {MetricKind::Metcalfe, 1}), std::invalid_argument);
}

TEST_CASE("formula laws: zipf below metcalfe, both increasing") {
  double previous_zipf = -1.0;
  double previous_metcalfe = -1.0;
  for (double n : {2.0, 3.0, 10.0, 100.0, 1000.0, 1e6}) {
    CHECK(zipf_value(n) < metcalfe_value(n));
    CHECK(zipf_value(n) > previous_zipf);
    CHECK(metcalfe_value(n) > previous_metcalfe);
    previous_zipf = zipf_value(n);
    previous_metcalfe = metcalfe_value(n);
  }
}

TEST_CASE("degree_sum_value equals hop_reach_value at h=1") {
  Rng rng({9001, 0});
  for (int round = 0; round < 25; ++round) {
    const auto n = static_cast<NodeId>(2 + rng.uniform_below(50));
    const Graph g = test::random_graph(rng, n, rng.uniform01());
    CHECK(degree_sum_value(g) == hop_reach_value(g, 1));
  }
}

TEST_CASE("hop_reach_value: monotone in h, capped at n(n-1)") {
  Rng rng({9002, 0});
  for (int round = 0; round < 10; ++round) {
    const auto n = static_cast<NodeId>(2 + rng.uniform_below(40));
    const Graph g = test::random_graph(rng, n, 0.2);
    double previous = 0.0;
    for (int h = 1; h <= 6; ++h) {
      const double value = hop_reach_value(g, h);
      CHECK(value >= previous);
      CHECK(value <= static_cast<double>(n) * (n - 1));
      previous = value;
    }
  }
}

TEST_CASE("formula metrics ignore structure entirely") {
  const Graph a = ring_lattice(60, 4);
  const Graph b = test::complete_graph(60);
  for (MetricKind kind : {MetricKind::Metcalfe, MetricKind::Zipf, MetricKind::Reed}) {
    const ValuationMetric metric{kind, 1};
    CHECK(metric_value(a, metric) == metric_value(b, metric));
  }
  CHECK(metric_value(a, {MetricKind::DegreeSum, 1}) != metric_value(b, {MetricKind::DegreeSum, 1}));
}

TEST_CASE("BA with m=1 and the default ring-3 seed: degree sum is exactly 2n") {
  for (int n : {30, 57, 100}) {
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
      const Graph g = ba_generate({static_cast<NodeId>(n), 1, 0}, {77, rep});
      CHECK(degree_sum_value(g) == 2.0 * n);
    }
  }
}

TEST_CASE("metric token grammar") {
  CHECK(ValuationMetric::parse("metcalfe").kind == MetricKind::Metcalfe);
  CHECK(ValuationMetric::parse("zipf").kind == MetricKind::Zipf);
  CHECK(ValuationMetric::parse("reed").kind == MetricKind::Reed);
  CHECK(ValuationMetric::parse("degree-sum").kind == MetricKind::DegreeSum);
  const ValuationMetric hop = ValuationMetric::parse("hop:3");
  CHECK(hop.kind == MetricKind::HopReach);
  CHECK(hop.hops == 3);
  CHECK(hop.token() == "hop:3");
  CHECK(ValuationMetric::parse("degree-sum").token() == "degree-sum");

  CHECK_THROWS_AS(ValuationMetric::parse("hop:0"), std::invalid_argument);
  CHECK_THROWS_AS(ValuationMetric::parse("hop:"), std::invalid_argument);
  CHECK_THROWS_AS(ValuationMetric::parse("hop:2x"), std::invalid_argument);
  CHECK_THROWS_AS(ValuationMetric::parse("hop:-1"), std::invalid_argument);
  CHECK_THROWS_AS(ValuationMetric::parse("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(ValuationMetric::parse(""), std::invalid_argument);
}
