#include "netvalue/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "netvalue/io.hpp"

namespace netvalue {

Family parse_family(const std::string& token) {
  if (token == "ws") return Family::WattsStrogatz;
  if (token == "ba") return Family::BarabasiAlbert;
  if (token == "random") return Family::RandomBinomial;
  throw std::invalid_argument("plan: unknown family '" + token +
                              "' (expected ws | ba | random)");
}

std::string family_token(Family family) {
  switch (family) {
    case Family::WattsStrogatz: return "ws";
    case Family::BarabasiAlbert: return "ba";
    case Family::RandomBinomial: return "random";
  }
  throw std::logic_error("plan: unreachable");
}

void validate(const ExperimentPlan& plan) {
  if (plan.sizes.empty()) throw std::invalid_argument("plan: sizes must be non-empty");
  for (int n : plan.sizes)
    if (n < 2) throw std::invalid_argument("plan: every size must be >= 2");
  if (plan.repetitions < 1) throw std::invalid_argument("plan: repetitions must be >= 1");
  for (double p : plan.p_grid)
    if (!(p >= 0.0 && p <= 1.0))
      throw std::invalid_argument("plan: p_grid entries must lie in [0, 1]");
}

namespace {

Graph generate_one(const ExperimentPlan& plan, NodeId n, double p, RngSeed seed) {
  switch (plan.family) {
    case Family::WattsStrogatz:
      return ws_generate({n, plan.k, p}, seed);
    case Family::BarabasiAlbert:
      return ba_generate({n, plan.m, plan.seed_size}, seed);
    case Family::RandomBinomial:
      return random_binomial_generate(
          RandomBinomialConfig::single_group(n, plan.edge_prob), seed);
  }
  throw std::logic_error("plan: unreachable");
}

SweepRow run_cell(const ExperimentPlan& plan, double key, NodeId n, double p) {
  std::vector<double> values(static_cast<std::size_t>(plan.repetitions));
  for (int rep = 0; rep < plan.repetitions; ++rep) {
    const Graph g = generate_one(plan, n, p,
                                 {plan.master_seed, static_cast<std::uint64_t>(rep)});
    values[static_cast<std::size_t>(rep)] = metric_value(g, plan.metric);
  }

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());

  double std_dev = 0.0;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    std_dev = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }

  SweepRow row;
  row.key = key;
  row.mean_value = mean;
  row.std_dev = std_dev;
  row.zipf = zipf_value(static_cast<double>(n));
  row.metcalfe = metcalfe_value(static_cast<double>(n));
  row.ratio = mean / row.zipf;
  return row;
}

}  // namespace

SweepResult run_size_sweep(const ExperimentPlan& plan) {
  validate(plan);
  std::vector<int> sizes = plan.sizes;
  std::sort(sizes.begin(), sizes.end());

  SweepResult result;
  for (int n : sizes)
    result.rows.push_back(run_cell(plan, static_cast<double>(n),
                                   static_cast<NodeId>(n), plan.rewire_p));
  return result;
}

SweepResult run_p_sweep(const ExperimentPlan& plan) {
  validate(plan);
  if (plan.family != Family::WattsStrogatz)
    throw std::invalid_argument("plan: p-sweep requires the ws family");
  if (plan.p_grid.empty())
    throw std::invalid_argument("plan: p-sweep requires a non-empty p_grid");
  if (plan.sizes.size() != 1)
    throw std::invalid_argument("plan: p-sweep requires exactly one size");

  const auto n = static_cast<NodeId>(plan.sizes.front());
  std::vector<double> grid = plan.p_grid;
  std::sort(grid.begin(), grid.end());

  SweepResult result;
  for (double p : grid) result.rows.push_back(run_cell(plan, p, n, p));
  return result;
}

QuadraticFit fit_fp_from_sweep(const SweepResult& result) {
  std::vector<XY> points;
  points.reserve(result.rows.size());
  for (const SweepRow& row : result.rows) points.push_back({row.key, row.ratio});
  return fit_quadratic(points);
}

SweepResult run_sandwich_check(const ExperimentPlan& plan) {
  if (plan.family != Family::RandomBinomial)
    throw std::invalid_argument("plan: sandwich check requires the random family");
  SweepResult result = run_size_sweep(plan);
  for (SweepRow& row : result.rows)
    row.in_sandwich = row.zipf <= row.mean_value && row.mean_value <= row.metcalfe;
  return result;
}

std::string to_csv(const SweepResult& result) {
  const bool sandwich =
      std::any_of(result.rows.begin(), result.rows.end(),
                  [](const SweepRow& row) { return row.in_sandwich.has_value(); });
  std::string out = "key,mean_value,std_dev,zipf,metcalfe,ratio";
  if (sandwich) out += ",in_sandwich";
  out += '\n';
  for (const SweepRow& row : result.rows) {
    out += format_double(row.key);
    out += ',';
    out += format_double(row.mean_value);
    out += ',';
    out += format_double(row.std_dev);
    out += ',';
    out += format_double(row.zipf);
    out += ',';
    out += format_double(row.metcalfe);
    out += ',';
    out += format_double(row.ratio);
    if (sandwich) {
      out += ',';
      out += row.in_sandwich.value_or(false) ? "true" : "false";
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const SweepResult& result) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const SweepRow& row : result.rows) {
    nlohmann::ordered_json item;
    item["key"] = row.key;
    item["mean_value"] = row.mean_value;
    item["std_dev"] = row.std_dev;
    item["zipf"] = row.zipf;
    item["metcalfe"] = row.metcalfe;
    item["ratio"] = row.ratio;
    if (row.in_sandwich.has_value()) item["in_sandwich"] = *row.in_sandwich;
    rows.push_back(std::move(item));
  }
  nlohmann::ordered_json doc;
  doc["rows"] = std::move(rows);
  return doc.dump();
}

}  // namespace netvalue
