#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "netvalue/experiments.hpp"

namespace netvalue::cli {

// Malformed invocation: unknown flag, missing requirement, out-of-range or
// inconsistent parameters. Exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --help was requested; carries the text to print. Exit status 0.
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenerateCmd {
  std::string model;  // ws | ba | random
  int n = 0;
  int k = 4;
  double p = 0.0;
  int m = 1;
  int seed_size = 0;
  double edge_prob = 0.5;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::string out;
};

struct ValueCmd {
  std::string graph_path;
  std::string metric;
  bool as_json = false;
};

struct SweepCmd {
  std::string plan_path;  // empty when the plan was given inline
  ExperimentPlan plan;    // populated for inline plans
  bool inline_plan = false;
  bool sandwich = false;
  std::string out;
  bool json_mirror = false;
  bool svg = false;
};

struct FitCmd {
  std::string model;  // quadratic | power-law
  std::string input;
};

struct ReproduceCmd {
  int table = 0;   // 1, 2 or 3; 0 = not selected
  int figure = 0;  // 2, 8 or 13; 0 = not selected
  std::string out_dir = ".";
  int reps = 30;
  std::uint64_t seed = 0;
  bool svg = false;
};

using CliCommand = std::variant<GenerateCmd, ValueCmd, SweepCmd, FitCmd, ReproduceCmd>;

// Parses `args` (program name excluded) into a validated command. Throws
// UsageError on bad input and HelpRequested for --help.
CliCommand parse_args(const std::vector<std::string>& args);

// Runs a parsed command; writes results to `out` and notes to `err`.
// Returns 0 on success; failures throw.
int execute(const CliCommand& cmd, std::ostream& out, std::ostream& err);

// parse_args + execute with all errors turned into diagnostics on `err`:
// 0 success, 1 runtime failure, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Plan document loader shared by sweep and tests. Strict about keys.
ExperimentPlan plan_from_json(const std::string& text);

}  // namespace netvalue::cli
