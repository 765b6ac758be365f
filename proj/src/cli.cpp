#include "netvalue/cli.hpp"

#include <filesystem>
#include <ostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "netvalue/io.hpp"
#include "netvalue/svg_plot.hpp"

namespace netvalue::cli {

namespace fs = std::filesystem;

namespace {

ValuationMetric default_metric(Family family) {
  // Degree counting matches the scale-free tables exactly; rewired lattices
  // are valued by 2-hop reachability.
  if (family == Family::BarabasiAlbert) return {MetricKind::DegreeSum, 1};
  return {MetricKind::HopReach, 2};
}

std::vector<int> size_range(int from, int to, int step) {
  std::vector<int> sizes;
  for (int n = from; n <= to; n += step) sizes.push_back(n);
  return sizes;
}

std::vector<double> p_grid_default() {
  std::vector<double> grid;
  for (int i = 0; i <= 25; ++i) grid.push_back(static_cast<double>(i) * 0.02);
  return grid;
}

std::string fit_to_json(const QuadraticFit& fit) {
  nlohmann::ordered_json doc;
  doc["a"] = fit.a;
  doc["b"] = fit.b;
  doc["c"] = fit.c;
  doc["r_squared"] = fit.r_squared;
  return doc.dump();
}

std::string fit_to_json(const PowerLawFit& fit) {
  nlohmann::ordered_json doc;
  doc["exponent"] = fit.exponent;
  doc["log_coefficient"] = fit.log_coefficient;
  doc["r_squared"] = fit.r_squared;
  return doc.dump();
}

std::string report_to_json(const ValueReport& report) {
  nlohmann::ordered_json doc;
  doc["metric"] = report.metric.token();
  doc["n"] = report.n;
  doc["value"] = report.value;
  if (report.log2_value.has_value()) doc["log2_value"] = *report.log2_value;
  return doc.dump();
}

void print_qualitative_banner(std::ostream& err, const ValuationMetric& metric) {
  err << "note: calculated value uses metric '" << metric.token()
      << "'; the reference study left this valuation underspecified, so"
         " published numbers for this target are matched qualitatively, not"
         " exactly.\n";
}

}  // namespace

CliCommand parse_args(const std::vector<std::string>& args) {
  CLI::App app{"simulation lab for social-network value laws"};
  app.name("netvalue");
  app.require_subcommand(1);

  GenerateCmd gen;
  auto* generate = app.add_subcommand("generate", "build one graph and write it as JSON");
  generate->add_option("--model", gen.model, "generator family: ws | ba | random")
      ->required()
      ->check(CLI::IsMember({"ws", "ba", "random"}));
  generate->add_option("--n", gen.n, "node count")->required();
  generate->add_option("--k", gen.k, "ws: contacts per node, even (default 4)");
  generate->add_option("--p", gen.p, "ws: rewiring probability")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--m", gen.m, "ba: edges per new node (default 1)");
  generate->add_option("--seed-size", gen.seed_size, "ba: seed ring size (0 = max(m,3))");
  generate->add_option("--edge-prob", gen.edge_prob, "random: connection probability")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--seed", gen.seed, "master seed (default 0)");
  generate->add_option("--stream", gen.stream, "stream index (default 0)");
  generate->add_option("--out", gen.out, "output path for the graph JSON")->required();

  ValueCmd val;
  auto* value = app.add_subcommand("value", "evaluate one metric on a graph file");
  value->add_option("--graph", val.graph_path, "graph JSON path")
      ->required()
      ->check(CLI::ExistingFile);
  value->add_option("--metric", val.metric,
                    "metcalfe | zipf | reed | degree-sum | hop:<h>")
      ->required();
  value->add_flag("--json", val.as_json, "emit a JSON report instead of one number");

  SweepCmd swp;
  std::string sweep_family;
  std::vector<int> sweep_sizes;
  std::vector<double> sweep_p_grid;
  std::string sweep_metric;
  auto* sweep = app.add_subcommand("sweep", "run a Monte Carlo sweep and write CSV");
  sweep->add_option("--plan", swp.plan_path, "experiment plan JSON path")
      ->check(CLI::ExistingFile);
  sweep->add_option("--family", sweep_family, "ws | ba | random (inline plan)")
      ->check(CLI::IsMember({"ws", "ba", "random"}));
  sweep->add_option("--sizes", sweep_sizes, "node counts (inline plan)")->delimiter(',');
  sweep->add_option("--p-grid", sweep_p_grid, "ws rewiring probabilities (inline plan)")
      ->delimiter(',');
  sweep->add_option("--k", swp.plan.k, "ws contacts per node");
  sweep->add_option("--p", swp.plan.rewire_p, "ws fixed rewiring probability")
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--m", swp.plan.m, "ba edges per new node");
  sweep->add_option("--seed-size", swp.plan.seed_size, "ba seed ring size");
  sweep->add_option("--edge-prob", swp.plan.edge_prob, "random connection probability")
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--metric", sweep_metric, "valuation metric token");
  sweep->add_option("--reps", swp.plan.repetitions, "repetitions per cell (default 30)");
  sweep->add_option("--seed", swp.plan.master_seed, "master seed (default 0)");
  sweep->add_flag("--sandwich", swp.sandwich,
                  "random family: flag rows lying between zipf and metcalfe");
  sweep->add_option("--out", swp.out, "output CSV path")->required();
  sweep->add_flag("--json", swp.json_mirror, "also write a JSON mirror next to the CSV");
  sweep->add_flag("--svg", swp.svg, "also write an SVG plot next to the CSV");

  FitCmd fit;
  auto* fit_cmd = app.add_subcommand("fit", "least-squares fit of a two-column CSV");
  fit_cmd->add_option("--model", fit.model, "quadratic | power-law")
      ->required()
      ->check(CLI::IsMember({"quadratic", "power-law"}));
  fit_cmd->add_option("--input", fit.input, "two-column CSV path")
      ->required()
      ->check(CLI::ExistingFile);

  ReproduceCmd rep;
  auto* reproduce = app.add_subcommand("reproduce", "rebuild a reference table or figure dataset");
  auto* table_opt = reproduce->add_option("--table", rep.table, "table id: 1 | 2 | 3")
                        ->check(CLI::IsMember({1, 2, 3}));
  auto* figure_opt = reproduce->add_option("--figure", rep.figure, "figure id: 2 | 8 | 13")
                         ->check(CLI::IsMember({2, 8, 13}));
  reproduce->add_option("--out-dir", rep.out_dir, "output directory (default .)");
  reproduce->add_option("--reps", rep.reps, "repetitions per cell (default 30)");
  reproduce->add_option("--seed", rep.seed, "master seed (default 0)");
  reproduce->add_flag("--svg", rep.svg, "also write SVG plots");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\nrun 'netvalue --help' for usage");
  }

  try {
    if (app.got_subcommand(generate)) {
      if (gen.n < 0) throw std::invalid_argument("generate: n must be >= 0");
      if (gen.model == "ws") validate(WsConfig{gen.n, gen.k, gen.p});
      if (gen.model == "ba")
        validate(BaConfig{gen.n, gen.m, static_cast<NodeId>(gen.seed_size)});
      if (gen.model == "random")
        validate(RandomBinomialConfig::single_group(gen.n, gen.edge_prob));
      return gen;
    }
    if (app.got_subcommand(value)) {
      ValuationMetric::parse(val.metric);
      return val;
    }
    if (app.got_subcommand(sweep)) {
      swp.inline_plan = swp.plan_path.empty();
      if (swp.inline_plan) {
        if (sweep_family.empty() || sweep_sizes.empty())
          throw std::invalid_argument(
              "sweep: give --plan, or an inline plan with at least --family and --sizes");
        swp.plan.family = parse_family(sweep_family);
        swp.plan.sizes = sweep_sizes;
        swp.plan.p_grid = sweep_p_grid;
        swp.plan.metric = sweep_metric.empty() ? default_metric(swp.plan.family)
                                               : ValuationMetric::parse(sweep_metric);
        validate(swp.plan);
      } else if (!sweep_family.empty() || !sweep_sizes.empty() || !sweep_p_grid.empty()) {
        throw std::invalid_argument("sweep: --plan excludes inline plan flags");
      }
      if (swp.sandwich && swp.inline_plan && swp.plan.family != Family::RandomBinomial)
        throw std::invalid_argument("sweep: --sandwich needs --family random");
      return swp;
    }
    if (app.got_subcommand(fit_cmd)) return fit;
    if (app.got_subcommand(reproduce)) {
      const bool has_table = table_opt->count() > 0;
      const bool has_figure = figure_opt->count() > 0;
      if (has_table == has_figure)
        throw std::invalid_argument("reproduce: give exactly one of --table or --figure");
      if (rep.reps < 1) throw std::invalid_argument("reproduce: --reps must be >= 1");
      return rep;
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  throw UsageError("no subcommand given; run 'netvalue --help' for usage");
}

ExperimentPlan plan_from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_object()) throw std::invalid_argument("plan: document must be an object");

  static const std::set<std::string> known = {
      "family", "sizes",     "p_grid",      "k",           "p",
      "m",      "seed_size", "edge_prob",   "metric",      "repetitions",
      "master_seed"};
  for (const auto& item : doc.items())
    if (!known.contains(item.key()))
      throw std::invalid_argument("plan: unknown key '" + item.key() + "'");

  ExperimentPlan plan;
  plan.family = parse_family(doc.at("family").get<std::string>());
  plan.sizes = doc.at("sizes").get<std::vector<int>>();
  if (doc.contains("p_grid")) plan.p_grid = doc["p_grid"].get<std::vector<double>>();
  if (doc.contains("k")) plan.k = doc["k"].get<int>();
  if (doc.contains("p")) plan.rewire_p = doc["p"].get<double>();
  if (doc.contains("m")) plan.m = doc["m"].get<int>();
  if (doc.contains("seed_size")) plan.seed_size = doc["seed_size"].get<NodeId>();
  if (doc.contains("edge_prob")) plan.edge_prob = doc["edge_prob"].get<double>();
  plan.metric = doc.contains("metric")
                    ? ValuationMetric::parse(doc["metric"].get<std::string>())
                    : default_metric(plan.family);
  if (doc.contains("repetitions")) plan.repetitions = doc["repetitions"].get<int>();
  if (doc.contains("master_seed"))
    plan.master_seed = doc["master_seed"].get<std::uint64_t>();
  validate(plan);
  if (!(plan.rewire_p >= 0.0 && plan.rewire_p <= 1.0))
    throw std::invalid_argument("plan: p must lie in [0, 1]");
  if (!(plan.edge_prob >= 0.0 && plan.edge_prob <= 1.0))
    throw std::invalid_argument("plan: edge_prob must lie in [0, 1]");
  return plan;
}

namespace {

int exec_one(const GenerateCmd& cmd, std::ostream&, std::ostream& err) {
  Graph graph;
  const RngSeed seed{cmd.seed, cmd.stream};
  if (cmd.model == "ws") {
    graph = ws_generate({cmd.n, cmd.k, cmd.p}, seed);
  } else if (cmd.model == "ba") {
    graph = ba_generate({cmd.n, cmd.m, static_cast<NodeId>(cmd.seed_size)}, seed);
  } else {
    graph = random_binomial_generate(
        RandomBinomialConfig::single_group(cmd.n, cmd.edge_prob), seed);
  }
  write_file_atomic(cmd.out, graph.to_json() + "\n");
  err << "wrote " << cmd.out << " (n=" << graph.node_count()
      << ", edges=" << graph.edge_count() << ")\n";
  return 0;
}

int exec_one(const ValueCmd& cmd, std::ostream& out, std::ostream&) {
  const Graph graph = Graph::from_json(read_file(cmd.graph_path));
  const ValuationMetric metric = ValuationMetric::parse(cmd.metric);
  const ValueReport report = evaluate(graph, metric);
  if (cmd.as_json)
    out << report_to_json(report) << '\n';
  else
    out << format_double(report.value) << '\n';
  return 0;
}

std::string swap_extension(const std::string& path, const std::string& ext) {
  fs::path p(path);
  p.replace_extension(ext);
  return p.string();
}

void write_sweep_svg(const std::string& path, const ExperimentPlan& plan,
                     const SweepResult& result, bool keyed_by_p) {
  std::vector<PlotSeries> series;
  PlotSeries mean_series{keyed_by_p ? "value ratio" : "calculated value", {}, "#d62728",
                         false, true};
  for (const SweepRow& row : result.rows)
    mean_series.points.push_back({row.key, keyed_by_p ? row.ratio : row.mean_value});
  series.push_back(std::move(mean_series));

  if (keyed_by_p) {
    const QuadraticFit fit = fit_fp_from_sweep(result);
    PlotSeries curve{"quadratic fit", {}, "#1f77b4", true, false};
    const double lo = result.rows.front().key;
    const double hi = result.rows.back().key;
    for (int i = 0; i <= 100; ++i) {
      const double p = lo + (hi - lo) * i / 100.0;
      curve.points.push_back({p, fit.a * p * p + fit.b * p + fit.c});
    }
    series.push_back(std::move(curve));
  } else {
    PlotSeries zipf_series{"n*log10(n)", {}, "#2ca02c", true, false};
    PlotSeries metcalfe_series{"n^2", {}, "#9467bd", true, false};
    for (const SweepRow& row : result.rows) {
      zipf_series.points.push_back({row.key, row.zipf});
      metcalfe_series.points.push_back({row.key, row.metcalfe});
    }
    series.push_back(std::move(zipf_series));
    series.push_back(std::move(metcalfe_series));
  }
  const std::string title = keyed_by_p
                                ? "value ratio vs rewiring probability"
                                : family_token(plan.family) + " value vs network size";
  write_file_atomic(path, render_svg_plot(title, keyed_by_p ? "p" : "n",
                                          keyed_by_p ? "value / (n*log10 n)" : "value",
                                          series));
}

int exec_one(const SweepCmd& cmd, std::ostream&, std::ostream& err) {
  const ExperimentPlan plan =
      cmd.inline_plan ? cmd.plan : plan_from_json(read_file(cmd.plan_path));
  if (cmd.sandwich && plan.family != Family::RandomBinomial)
    throw std::invalid_argument("sweep: --sandwich needs the random family");

  SweepResult result;
  bool keyed_by_p = false;
  if (cmd.sandwich) {
    result = run_sandwich_check(plan);
  } else if (plan.family == Family::WattsStrogatz && !plan.p_grid.empty()) {
    result = run_p_sweep(plan);
    keyed_by_p = true;
  } else {
    result = run_size_sweep(plan);
  }

  write_file_atomic(cmd.out, to_csv(result));
  err << "wrote " << cmd.out << " (" << result.rows.size() << " rows)\n";
  if (cmd.json_mirror) {
    const std::string path = swap_extension(cmd.out, ".json");
    write_file_atomic(path, to_json(result) + "\n");
    err << "wrote " << path << '\n';
  }
  if (cmd.svg) {
    const std::string path = swap_extension(cmd.out, ".svg");
    write_sweep_svg(path, plan, result, keyed_by_p);
    err << "wrote " << path << '\n';
  }
  return 0;
}

int exec_one(const FitCmd& cmd, std::ostream& out, std::ostream&) {
  const std::vector<XY> points = parse_xy_csv(read_file(cmd.input));
  if (cmd.model == "quadratic")
    out << fit_to_json(fit_quadratic(points)) << '\n';
  else
    out << fit_to_json(fit_power_law(points)) << '\n';
  return 0;
}

int exec_one(const ReproduceCmd& cmd, std::ostream&, std::ostream& err) {
  fs::create_directories(cmd.out_dir);
  const auto out_path = [&](const std::string& name) {
    return (fs::path(cmd.out_dir) / name).string();
  };

  ExperimentPlan plan;
  plan.repetitions = cmd.reps;
  plan.master_seed = cmd.seed;

  if (cmd.table == 1 || cmd.table == 2) {
    plan.family = Family::WattsStrogatz;
    plan.sizes = size_range(40, 100, 10);
    plan.k = 4;
    plan.rewire_p = cmd.table == 1 ? 0.18 : 0.32;
    plan.metric = {MetricKind::HopReach, 2};
    print_qualitative_banner(err, plan.metric);
    const SweepResult result = run_size_sweep(plan);
    const std::string name = "table" + std::to_string(cmd.table);
    write_file_atomic(out_path(name + ".csv"), to_csv(result));
    err << "wrote " << out_path(name + ".csv") << '\n';
    if (cmd.svg) write_sweep_svg(out_path(name + ".svg"), plan, result, false);
    return 0;
  }
  if (cmd.table == 3 || cmd.figure == 13) {
    plan.family = Family::BarabasiAlbert;
    plan.sizes = size_range(30, 100, 10);
    plan.m = 1;
    plan.metric = {MetricKind::DegreeSum, 1};
    const SweepResult result = run_size_sweep(plan);
    const std::string name = cmd.table == 3 ? "table3" : "figure13";
    write_file_atomic(out_path(name + ".csv"), to_csv(result));
    err << "wrote " << out_path(name + ".csv") << '\n';
    if (cmd.svg) write_sweep_svg(out_path(name + ".svg"), plan, result, false);
    return 0;
  }
  if (cmd.figure == 2) {
    plan.family = Family::RandomBinomial;
    plan.sizes = size_range(20, 100, 10);
    plan.edge_prob = 0.3;
    plan.metric = {MetricKind::HopReach, 2};
    print_qualitative_banner(err, plan.metric);
    const SweepResult result = run_sandwich_check(plan);
    write_file_atomic(out_path("figure2.csv"), to_csv(result));
    err << "wrote " << out_path("figure2.csv") << '\n';
    if (cmd.svg) write_sweep_svg(out_path("figure2.svg"), plan, result, false);
    return 0;
  }
  // figure 8: ratio-vs-p sweep plus its quadratic fit.
  plan.family = Family::WattsStrogatz;
  plan.sizes = {100};
  plan.k = 4;
  plan.p_grid = p_grid_default();
  plan.metric = {MetricKind::HopReach, 2};
  print_qualitative_banner(err, plan.metric);
  const SweepResult result = run_p_sweep(plan);
  write_file_atomic(out_path("figure8.csv"), to_csv(result));
  err << "wrote " << out_path("figure8.csv") << '\n';
  const QuadraticFit fit = fit_fp_from_sweep(result);
  write_file_atomic(out_path("figure8_fit.json"), fit_to_json(fit) + "\n");
  err << "wrote " << out_path("figure8_fit.json") << '\n';
  if (cmd.svg) write_sweep_svg(out_path("figure8.svg"), plan, result, true);
  return 0;
}

}  // namespace

int execute(const CliCommand& cmd, std::ostream& out, std::ostream& err) {
  return std::visit([&](const auto& c) { return exec_one(c, out, err); }, cmd);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return execute(parse_args(args), out, err);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace netvalue::cli
