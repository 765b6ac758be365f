#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "netvalue/fitting.hpp"
#include "netvalue/generators.hpp"
#include "test_support.hpp"

using namespace netvalue;

namespace {

std::vector<XY> sample_quadratic(double a, double b, double c,
                                 const std::vector<double>& xs) {
  std::vector<XY> points;
  for (double x : xs) points.push_back({x, a * x * x + b * x + c});
  return points;
}

}  // namespace

TEST_CASE("fit_quadratic: exact recovery from noiseless samples") {
  const auto points = sample_quadratic(12.045, 6.59, 2.5533, {0.1, 0.2, 0.3, 0.4, 0.5});
  const QuadraticFit fit = fit_quadratic(points);
  CHECK(std::fabs(fit.a - 12.045) < 1e-9);
  CHECK(std::fabs(fit.b - 6.59) < 1e-9);
  CHECK(std::fabs(fit.c - 2.5533) < 1e-9);
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));

  for (const XY& p : points) {
    const double predicted = fit.a * p.x * p.x + fit.b * p.x + fit.c;
    CHECK(std::fabs(predicted - p.y) <= 1e-9);
  }

  const QuadraticFit parabola = fit_quadratic(sample_quadratic(1, 0, 0, {-2, -1, 0, 1, 2}));
  CHECK(std::fabs(parabola.a - 1.0) < 1e-12);
  CHECK(std::fabs(parabola.b) < 1e-12);
  CHECK(std::fabs(parabola.c) < 1e-12);
  CHECK(parabola.r_squared == doctest::Approx(1.0));
}

TEST_CASE("fit_quadratic: agrees with the hand-rolled normal-equations oracle") {
  Rng rng({6001, 0});
  for (int round = 0; round < 100; ++round) {
    const std::size_t count = 10 + rng.uniform_below(40);
    const double a = rng.uniform01() * 20 - 10;
    const double b = rng.uniform01() * 20 - 10;
    const double c = rng.uniform01() * 20 - 10;
    std::vector<XY> points;
    for (std::size_t i = 0; i < count; ++i) {
      const double x = rng.uniform01() * 2 - 1;
      const double noise = (rng.uniform01() - 0.5) * 0.2;
      points.push_back({x, a * x * x + b * x + c + noise});
    }
    const QuadraticFit fit = fit_quadratic(points);
    const auto oracle = test::quadratic_normal_equations_oracle(points);
    CHECK(std::fabs(fit.a - oracle[0]) <= 1e-9);
    CHECK(std::fabs(fit.b - oracle[1]) <= 1e-9);
    CHECK(std::fabs(fit.c - oracle[2]) <= 1e-9);
  }
}

TEST_CASE("fit_quadratic: degenerate inputs rejected") {
  CHECK_THROWS_AS(fit_quadratic({}), std::invalid_argument);
  CHECK_THROWS_AS(fit_quadratic({{1, 1}, {2, 2}}), std::invalid_argument);
  // Many points but only two distinct x values.
  CHECK_THROWS_AS(fit_quadratic({{1, 1}, {1, 2}, {2, 1}, {2, 5}}), std::invalid_argument);
}

TEST_CASE("fit_quadratic: R^2 conventions") {
  // Perfect fit.
  CHECK(fit_quadratic(sample_quadratic(2, -1, 3, {0, 1, 2, 3})).r_squared ==
        doctest::Approx(1.0));

  // Data whose least-squares quadratic is the mean itself: R^2 = 0.
  const std::vector<XY> symmetric = {{-1, 4}, {-1, -4}, {0, 4}, {0, -4}, {1, 4}, {1, -4}};
  const QuadraticFit fit = fit_quadratic(symmetric);
  CHECK(std::fabs(fit.a) < 1e-12);
  CHECK(std::fabs(fit.b) < 1e-12);
  CHECK(std::fabs(fit.c) < 1e-12);
  CHECK(fit.r_squared == 0.0);
}

TEST_CASE("fit_power_law: noiseless power law and flat histogram") {
  DegreeHistogram power;
  for (int d = 1; d <= 50; ++d)
    power.entries[d] = static_cast<std::int64_t>(std::llround(1e6 * std::pow(d, -2.5)));
  const PowerLawFit fit = fit_power_law(power);
  CHECK(std::fabs(fit.exponent - (-2.5)) < 0.05);
  CHECK(fit.r_squared > 0.999);

  DegreeHistogram flat;
  for (int d = 1; d <= 20; ++d) flat.entries[d] = 10;
  const PowerLawFit flat_fit = fit_power_law(flat);
  CHECK(std::fabs(flat_fit.exponent) < 1e-9);
  CHECK(flat_fit.log_coefficient == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("fit_power_law: zero-count and zero-degree entries are dropped") {
  DegreeHistogram hist;
  hist.entries[0] = 99;   // degree 0: no log
  hist.entries[1] = 100;
  hist.entries[2] = 25;
  hist.entries[5] = 0;    // zero count: no log
  const PowerLawFit fit = fit_power_law(hist);
  // Only (1,100) and (2,25) survive: slope = log10(25/100)/log10(2) = -2.
  CHECK(fit.exponent == doctest::Approx(-2.0).epsilon(1e-12));

  DegreeHistogram starved;
  starved.entries[0] = 10;
  starved.entries[3] = 7;
  CHECK_THROWS_AS(fit_power_law(starved), std::invalid_argument);
  CHECK_THROWS_AS(fit_power_law(DegreeHistogram{}), std::invalid_argument);
}

TEST_CASE("fit_power_law: count scaling moves the intercept, never the exponent") {
  DegreeHistogram base;
  Rng rng({6002, 0});
  for (int d = 1; d <= 40; ++d)
    base.entries[d] = static_cast<std::int64_t>(1 + rng.uniform_below(5000));

  DegreeHistogram scaled;
  for (const auto& [d, c] : base.entries) scaled.entries[d] = c * 1000;

  const PowerLawFit fit_base = fit_power_law(base);
  const PowerLawFit fit_scaled = fit_power_law(scaled);
  CHECK(std::fabs(fit_base.exponent - fit_scaled.exponent) <= 1e-12);
  CHECK(fit_scaled.log_coefficient ==
        doctest::Approx(fit_base.log_coefficient + 3.0).epsilon(1e-9));
}

TEST_CASE("fit_power_law: BA degree histograms land in the expected exponent band" *
          doctest::timeout(120)) {
  const int seeds = 20;
  double exponent_sum = 0.0;
  for (int s = 0; s < seeds; ++s) {
    const Graph g = ba_generate({10000, 2, 0}, {1234, static_cast<std::uint64_t>(s)});
    exponent_sum += fit_power_law(degree_histogram(g)).exponent;
  }
  const double mean_exponent = exponent_sum / seeds;
  CHECK(mean_exponent > -3.5);
  CHECK(mean_exponent < -1.8);
}

TEST_CASE("eval_fp: anchors of the ratio law") {
  CHECK(std::fabs(eval_fp(0.18) - 4.13) < 0.01);
  CHECK(std::fabs(eval_fp(0.32) - 5.90) < 0.01);
  CHECK(eval_fp(0.0) == 2.5533);
  CHECK_THROWS_AS(eval_fp(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(eval_fp(1.01), std::invalid_argument);
}

TEST_CASE("predicted_value: ratio law times zipf value") {
  CHECK(std::fabs(predicted_value(100, 0.18) - 825.9516) < 1e-6);
  CHECK(std::fabs(predicted_value(100, 0.32) - 1179.1016) < 1e-6);
  CHECK(predicted_value(1, 0.4) == 0.0);  // zipf_value(1) = 0
  CHECK_THROWS_AS(predicted_value(0, 0.4), std::invalid_argument);
  CHECK_THROWS_AS(predicted_value(100, 1.2), std::invalid_argument);
}
