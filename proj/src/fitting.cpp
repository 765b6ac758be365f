#include "netvalue/fitting.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

#include "netvalue/valuation.hpp"

namespace netvalue {

namespace {

constexpr double kRatioLawA = 12.045;
constexpr double kRatioLawB = 6.59;
constexpr double kRatioLawC = 2.5533;

std::size_t count_distinct_x(const std::vector<XY>& points) {
  std::vector<double> xs;
  xs.reserve(points.size());
  for (const XY& p : points) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  return static_cast<std::size_t>(std::unique(xs.begin(), xs.end()) - xs.begin());
}

// 1 - SS_res/SS_tot; a zero-variance target is reported as a perfect fit.
double r_squared_of(const std::vector<XY>& points, auto&& predict) {
  double mean_y = 0.0;
  for (const XY& p : points) mean_y += p.y;
  mean_y /= static_cast<double>(points.size());

  double ss_res = 0.0;
  double ss_tot = 0.0;
  for (const XY& p : points) {
    const double res = p.y - predict(p.x);
    const double dev = p.y - mean_y;
    ss_res += res * res;
    ss_tot += dev * dev;
  }
  if (ss_tot == 0.0) return 1.0;
  return 1.0 - ss_res / ss_tot;
}

}  // namespace

QuadraticFit fit_quadratic(const std::vector<XY>& points) {
  if (count_distinct_x(points) < 3)
    throw std::invalid_argument("fit_quadratic: need at least 3 distinct x values");

  Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
  Eigen::Vector3d atb = Eigen::Vector3d::Zero();
  for (const XY& p : points) {
    const Eigen::Vector3d row(p.x * p.x, p.x, 1.0);
    ata += row * row.transpose();
    atb += row * p.y;
  }
  const Eigen::Vector3d beta = ata.ldlt().solve(atb);

  QuadraticFit fit;
  fit.a = beta(0);
  fit.b = beta(1);
  fit.c = beta(2);
  fit.r_squared = r_squared_of(
      points, [&](double x) { return fit.a * x * x + fit.b * x + fit.c; });
  return fit;
}

PowerLawFit fit_power_law(const DegreeHistogram& hist) {
  std::vector<XY> pairs;
  pairs.reserve(hist.entries.size());
  for (const auto& [degree, count] : hist.entries)
    pairs.push_back({static_cast<double>(degree), static_cast<double>(count)});
  return fit_power_law(pairs);
}

PowerLawFit fit_power_law(const std::vector<XY>& degree_count_pairs) {
  std::vector<XY> logs;
  for (const XY& p : degree_count_pairs)
    if (p.x >= 1.0 && p.y >= 1.0)
      logs.push_back({std::log10(p.x), std::log10(p.y)});
  if (logs.size() < 2)
    throw std::invalid_argument(
        "fit_power_law: need at least 2 entries with degree >= 1 and count >= 1");

  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const XY& p : logs) {
    mean_x += p.x;
    mean_y += p.y;
  }
  mean_x /= static_cast<double>(logs.size());
  mean_y /= static_cast<double>(logs.size());

  double sxx = 0.0;
  double sxy = 0.0;
  for (const XY& p : logs) {
    sxx += (p.x - mean_x) * (p.x - mean_x);
    sxy += (p.x - mean_x) * (p.y - mean_y);
  }
  // sxx > 0: histogram keys are distinct, so at least 2 distinct x.
  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.log_coefficient = mean_y - fit.exponent * mean_x;
  fit.r_squared = r_squared_of(
      logs, [&](double x) { return fit.exponent * x + fit.log_coefficient; });
  return fit;
}

double eval_fp(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("eval_fp: p must lie in [0, 1]");
  return kRatioLawA * p * p + kRatioLawB * p + kRatioLawC;
}

double predicted_value(double n, double p) {
  return eval_fp(p) * zipf_value(n);
}

}  // namespace netvalue
