#pragma once

#include <vector>

#include "netvalue/graph.hpp"

namespace netvalue {

struct XY {
  double x = 0.0;
  double y = 0.0;
};

struct QuadraticFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double r_squared = 0.0;
};

struct PowerLawFit {
  double exponent = 0.0;         // slope of the log-log line
  double log_coefficient = 0.0;  // intercept of the log-log line
  double r_squared = 0.0;
};

// Ordinary least squares for y = a*x^2 + b*x + c via the 3x3 normal
// equations. Needs at least 3 distinct x values.
QuadraticFit fit_quadratic(const std::vector<XY>& points);

// Linear least squares on (log10 degree, log10 count) over histogram entries
// with degree >= 1 and count >= 1; zero-count degrees never reach the log.
// Needs at least 2 usable entries. Note this raw log-log estimator of the
// exponent is biased; it matches the plotted-line convention, not an MLE.
PowerLawFit fit_power_law(const DegreeHistogram& hist);

// Same fit for loose (degree, count) pairs, e.g. parsed from CSV; entries
// with degree < 1 or count < 1 are dropped before taking logs.
PowerLawFit fit_power_law(const std::vector<XY>& degree_count_pairs);

// Fitted small-world value-ratio law f(p) = 12.045 p^2 + 6.59 p + 2.5533,
// for rewiring probability p in [0, 1].
double eval_fp(double p);

// Composite small-world value law: f(p) * n * log10(n). Requires n >= 1.
double predicted_value(double n, double p);

}  // namespace netvalue
