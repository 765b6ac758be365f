#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "netvalue/fitting.hpp"
#include "netvalue/generators.hpp"
#include "netvalue/valuation.hpp"

namespace netvalue {

enum class Family { WattsStrogatz, BarabasiAlbert, RandomBinomial };

Family parse_family(const std::string& token);  // "ws" | "ba" | "random"
std::string family_token(Family family);

// One Monte Carlo study: a generator family, the sizes (or p grid) to sweep,
// the metric to evaluate, and the seed that makes the run reproducible.
struct ExperimentPlan {
  Family family = Family::WattsStrogatz;
  std::vector<int> sizes;
  std::vector<double> p_grid;  // WS p-sweep only
  int k = 4;                   // WS
  double rewire_p = 0.18;      // WS, fixed p for size sweeps
  int m = 1;                   // BA
  NodeId seed_size = 0;        // BA, 0 = default max(m, 3)
  double edge_prob = 0.3;      // RandomBinomial, single group
  ValuationMetric metric{MetricKind::HopReach, 2};
  int repetitions = 30;
  std::uint64_t master_seed = 0;
};

void validate(const ExperimentPlan& plan);

struct SweepRow {
  double key = 0.0;  // n for size sweeps, p for p-sweeps
  double mean_value = 0.0;
  double std_dev = 0.0;
  double zipf = 0.0;
  double metcalfe = 0.0;
  double ratio = 0.0;                 // mean_value / zipf
  std::optional<bool> in_sandwich;    // set by run_sandwich_check
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

// Mean/std of the metric over `repetitions` independently seeded graphs per
// size, rows in ascending n. Repetition r always draws from stream
// (master_seed, r), so any cell can be replayed in isolation.
SweepResult run_size_sweep(const ExperimentPlan& plan);

// WS only: fixed n (exactly one entry in sizes), one row per p in ascending
// order.
SweepResult run_p_sweep(const ExperimentPlan& plan);

// Quadratic fit of ratio against the row key; meant for p-sweep results.
QuadraticFit fit_fp_from_sweep(const SweepResult& result);

// RandomBinomial only: size sweep plus a per-row flag telling whether the
// mean value lands between n*log10(n) and n^2.
SweepResult run_sandwich_check(const ExperimentPlan& plan);

// CSV with header key,mean_value,std_dev,zipf,metcalfe,ratio; sandwich runs
// append one extra in_sandwich column. Byte-stable for a given result.
std::string to_csv(const SweepResult& result);
std::string to_json(const SweepResult& result);

}  // namespace netvalue
