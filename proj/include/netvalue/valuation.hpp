#pragma once

#include <optional>
#include <string>

#include "netvalue/graph.hpp"

namespace netvalue {

enum class MetricKind { Metcalfe, Zipf, Reed, DegreeSum, HopReach };

// Tagged choice of valuation metric. Formula metrics (Metcalfe, Zipf, Reed)
// depend only on the node count; structural metrics read the full graph.
struct ValuationMetric {
  MetricKind kind = MetricKind::Metcalfe;
  int hops = 1;  // HopReach only, >= 1

  // Token grammar: metcalfe | zipf | reed | degree-sum | hop:<h>
  static ValuationMetric parse(const std::string& token);
  std::string token() const;
};

// n^2
double metcalfe_value(double n);
// n * log10(n); log base fixed to 10 by the reference tables this
// project reproduces (30 -> 44.31).
double zipf_value(double n);
// 2^n as a real; grows past double range around n = 1024, so the log2
// reading (= n) is reported alongside in ValueReport.
double reed_value(double n);

// Sum of degrees = 2 * |edges|.
double degree_sum_value(const Graph& g);
// Sum over all nodes of the <=h-hop reachable set size.
double hop_reach_value(const Graph& g, int hops);

double metric_value(const Graph& g, ValuationMetric metric);

// Metric value divided by zipf_value(n). Requires n >= 2.
double value_ratio(const Graph& g, ValuationMetric metric);

struct ValueReport {
  ValuationMetric metric;
  NodeId n = 0;
  double value = 0.0;
  std::optional<double> log2_value;  // set for Reed
};

ValueReport evaluate(const Graph& g, ValuationMetric metric);

}  // namespace netvalue
