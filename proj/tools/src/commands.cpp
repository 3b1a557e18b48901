#include "tsphyb_cli/commands.hpp"

#include <algorithm>
#include <optional>

#include <CLI11.hpp>

#include "tsphyb/bench.hpp"

namespace tsphyb::cli {

namespace {

struct SolveArgs {
  std::string instance;
  std::string mh;
  std::string pipeline;
  std::int64_t ofc = 0;
  std::uint64_t seed = 1;
  int runs = 1;
  int final_uncross = 3;
  int population = 10;
  int jobs = 0;
  std::optional<std::int64_t> best_ref;
  std::string policy = "per_solution";
  std::string out;
  std::string json;
  std::string svg;
};

OfcPolicy parse_policy(const std::string& s) {
  if (s == "per_solution") return OfcPolicy::per_solution;
  if (s == "per_operator") return OfcPolicy::per_operator;
  throw ConfigError("--ofc-policy must be per_solution or per_operator");
}

void print_summary(const RunReport& r, std::ostream& out) {
  out << "instance      " << r.instance << " (n=" << r.n << ")\n";
  out << "hybridization " << r.hybridization() << "\n";
  out << "runs          " << r.runs.size() << ", ofc limit " << r.ofc_limit << "\n";
  out << "best BU       " << r.best_bu;
  if (r.best_ref) out << "  error " << format_error(r.best_bu, *r.best_ref) << "%";
  out << "\nbest AU       " << r.best_au;
  if (r.best_ref) out << "  error " << format_error(r.best_au, *r.best_ref) << "%";
  out << "\nmedian AU     " << r.median_au << "\n";
  out << "amplitude     " << r.amplitude << "\n";
  out << "ofc at best   " << r.ofc_best << " (mean " << r.mean_ofc_percent << "% of limit)\n";
}

int solve(const SolveArgs& a, std::ostream& out) {
  const Instance inst = load_instance(a.instance);
  ExperimentConfig cfg;
  cfg.kind = parse_mh_kind(a.mh);
  cfg.pipeline = a.pipeline;
  cfg.ofc_limit = a.ofc;
  cfg.base_seed = a.seed;
  cfg.runs = a.runs;
  cfg.final_uncross = a.final_uncross;
  cfg.population = a.population;
  cfg.jobs = a.jobs;
  cfg.best_ref = a.best_ref;
  cfg.policy = parse_policy(a.policy);
  const RunReport r = run_experiment(inst, cfg);
  print_summary(r, out);
  if (!a.out.empty()) write_text_file(a.out, to_csv({r}));
  if (!a.json.empty()) write_text_file(a.json, to_json({r}));
  if (!a.svg.empty()) write_text_file(a.svg, render_route_svg(r.best_run().tour, inst));
  return kExitOk;
}

int bench(const std::string& config_path, int jobs, std::ostream& out) {
  BenchConfig cfg = load_bench_config(config_path);
  if (jobs >= 0) cfg.base.jobs = jobs;
  const auto reports = run_bench(cfg);
  const std::string csv = to_csv(reports);
  if (cfg.out_csv) write_text_file(*cfg.out_csv, csv);
  else out << csv;
  if (cfg.out_json) write_text_file(*cfg.out_json, to_json(reports));
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hybrid metaheuristic TSP solver and benchmark runner", "tsphyb"};
  app.require_subcommand(1);

  SolveArgs sa;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance with one hybridization");
  solve_cmd->add_option("--instance", sa.instance, "TSPLIB instance file")->required();
  solve_cmd->add_option("--mh", sa.mh, "BH, EA, GSA, MVS, PSO, SA, SCA or VS")->required();
  solve_cmd->add_option("--pipeline", sa.pipeline, "e.g. SISR3tours, 3OPT100Rep, TSP-MH")
      ->required();
  solve_cmd->add_option("--ofc", sa.ofc, "objective-function call limit per run")->required();
  solve_cmd->add_option("--seed", sa.seed, "base seed; run k uses seed + k");
  solve_cmd->add_option("--runs", sa.runs, "independent runs");
  solve_cmd->add_option("--final-uncross", sa.final_uncross, "final uncross sweeps");
  solve_cmd->add_option("--population", sa.population, "population / neighbors per iteration");
  solve_cmd->add_option("--best-ref", sa.best_ref, "reference optimum for the error column");
  solve_cmd->add_option("--ofc-policy", sa.policy, "per_solution or per_operator");
  solve_cmd->add_option("--jobs", sa.jobs, "worker threads (0 = all cores)");
  solve_cmd->add_option("--out", sa.out, "write the CSV report here");
  solve_cmd->add_option("--json", sa.json, "write the JSON report here");
  solve_cmd->add_option("--svg", sa.svg, "write the best route as SVG here");

  std::string config_path;
  int bench_jobs = -1;
  auto* bench_cmd = app.add_subcommand("bench", "Run every cell of a bench config file");
  bench_cmd->add_option("--config", config_path, "bench config file")->required();
  bench_cmd->add_option("--jobs", bench_jobs, "worker threads, overrides the config");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitConfig;
  }

  try {
    if (*solve_cmd) return solve(sa, out);
    return bench(config_path, bench_jobs, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const UnsupportedMetricError& e) {
    err << "unsupported instance: " << e.what() << "\n";
    return kExitIo;
  }
}

}  // namespace tsphyb::cli
