#include "netvalue/valuation.hpp"

#include <cmath>
#include <stdexcept>

namespace netvalue {

ValuationMetric ValuationMetric::parse(const std::string& token) {
  if (token == "metcalfe") return {MetricKind::Metcalfe, 1};
  if (token == "zipf") return {MetricKind::Zipf, 1};
  if (token == "reed") return {MetricKind::Reed, 1};
  if (token == "degree-sum") return {MetricKind::DegreeSum, 1};
  if (token.rfind("hop:", 0) == 0) {
    int hops = 0;
    std::size_t consumed = 0;
    try {
      hops = std::stoi(token.substr(4), &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("metric: bad hop budget in '" + token + "'");
    }
    if (consumed != token.size() - 4 || hops < 1)
      throw std::invalid_argument("metric: hop budget must be an integer >= 1");
    return {MetricKind::HopReach, hops};
  }
  throw std::invalid_argument(
      "metric: unknown token '" + token +
      "' (expected metcalfe | zipf | reed | degree-sum | hop:<h>)");
}

std::string ValuationMetric::token() const {
  switch (kind) {
    case MetricKind::Metcalfe: return "metcalfe";
    case MetricKind::Zipf: return "zipf";
    case MetricKind::Reed: return "reed";
    case MetricKind::DegreeSum: return "degree-sum";
    case MetricKind::HopReach: return "hop:" + std::to_string(hops);
  }
  throw std::logic_error("metric: unreachable");
}

double metcalfe_value(double n) {
  if (n < 0) throw std::invalid_argument("metcalfe_value: n must be >= 0");
  return n * n;
}

double zipf_value(double n) {
  if (n < 1) throw std::invalid_argument("zipf_value: n must be >= 1");
  return n * std::log10(n);
}

double reed_value(double n) {
  if (n < 0) throw std::invalid_argument("reed_value: n must be >= 0");
  return std::exp2(n);
}

double degree_sum_value(const Graph& g) {
  return 2.0 * static_cast<double>(g.edge_count());
}

double hop_reach_value(const Graph& g, int hops) {
  if (hops < 1) throw std::invalid_argument("hop_reach_value: hop budget must be >= 1");
  double total = 0.0;
  for (NodeId v = 0; v < g.node_count(); ++v)
    total += static_cast<double>(reach_within(g, v, hops));
  return total;
}

double metric_value(const Graph& g, ValuationMetric metric) {
  const double n = static_cast<double>(g.node_count());
  switch (metric.kind) {
    case MetricKind::Metcalfe: return metcalfe_value(n);
    case MetricKind::Zipf: return zipf_value(n);
    case MetricKind::Reed: return reed_value(n);
    case MetricKind::DegreeSum: return degree_sum_value(g);
    case MetricKind::HopReach: return hop_reach_value(g, metric.hops);
  }
  throw std::logic_error("metric: unreachable");
}

double value_ratio(const Graph& g, ValuationMetric metric) {
  if (g.node_count() < 2)
    throw std::invalid_argument("value_ratio: need n >= 2 (zipf value would be 0)");
  return metric_value(g, metric) / zipf_value(static_cast<double>(g.node_count()));
}

ValueReport evaluate(const Graph& g, ValuationMetric metric) {
  ValueReport report;
  report.metric = metric;
  report.n = g.node_count();
  report.value = metric_value(g, metric);
  if (metric.kind == MetricKind::Reed)
    report.log2_value = static_cast<double>(g.node_count());
  return report;
}

}  // namespace netvalue
