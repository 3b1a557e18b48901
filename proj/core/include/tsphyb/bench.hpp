#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tsphyb/hybrid.hpp"
#include "tsphyb/mh.hpp"

namespace tsphyb {

/// One (instance, metaheuristic, pipeline) cell repeated `runs` times.
struct ExperimentConfig {
  MhKind kind = MhKind::vs;
  std::string pipeline = "SISR1tours";
  int runs = 30;
  std::int64_t ofc_limit = 300000;
  int final_uncross = 3;
  std::uint64_t base_seed = 1;
  std::optional<std::int64_t> best_ref;
  int population = 10;
  MhParams params;
  OfcPolicy policy = OfcPolicy::per_solution;
  /// Worker threads; 0 means hardware concurrency.
  int jobs = 0;

  /// Throws ConfigError on an unusable configuration.
  void validate(std::size_t n) const;
};

struct RunResult {
  int index = 0;
  std::uint64_t seed = 0;
  std::int64_t best_bu = 0;
  std::int64_t best_au = 0;
  std::int64_t ofc_at_best = 0;
  std::int64_t ofc_used = 0;
  std::vector<std::int64_t> final_trace;  // length after each final-loop sweep
  std::vector<int> tour;                  // best tour after the final loop

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

struct RunReport {
  std::string instance;
  std::size_t n = 0;
  std::string mh;
  std::string pipeline;
  std::int64_t ofc_limit = 0;
  std::optional<std::int64_t> best_ref;
  std::vector<RunResult> runs;  // ordered by run index

  // Aggregates, filled by summarize().
  std::int64_t best_bu = 0;      // min over runs
  std::int64_t best_au = 0;      // min over runs
  std::int64_t worst_au = 0;     // max over runs
  double median_au = 0.0;
  double amplitude = 0.0;        // (max - min) / min of best_au
  std::int64_t ofc_best = 0;     // ofc_at_best of the run holding best_au
  double mean_ofc_percent = 0.0;
  /// Per final-loop sweep k: share of runs already at their final length.
  std::vector<double> settled_fraction;

  std::string hybridization() const { return mh + "+" + pipeline; }
  /// Run holding best_au, lowest index on ties.
  const RunResult& best_run() const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

/// Recomputes the aggregate fields from `runs`.
void summarize(RunReport& report);

/// Relative error reduction of one run, (e_bu - e_au) / e_bu; 0 when e_bu = 0.
double error_reduction(const RunResult& run, std::int64_t best_ref);

/// One seeded run: driver to the budget, then the final uncross loop.
RunResult run_once(const Instance& inst, const ExperimentConfig& cfg, int index);

/// All runs of one cell, fanned out over cfg.jobs threads. Deterministic.
RunReport run_experiment(const Instance& inst, const ExperimentConfig& cfg);

/// Runs fn(0..count-1) on up to `jobs` threads (0 = hardware concurrency).
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

// Reports ------------------------------------------------------------------

inline constexpr std::string_view kCsvHeader =
    "Instance,n,Best_ref,Best_BU,Error_BU,Best_AU,Error_AU,Hybridization,OFC,StoppingCriterion";

std::string csv_row(const RunReport& r);
std::string to_csv(const std::vector<RunReport>& reports);
std::string to_json(const std::vector<RunReport>& reports);
std::vector<RunReport> reports_from_json(std::string_view text);

/// Closed route as SVG with nodes, edges and a length caption.
std::string render_route_svg(std::span<const int> order, const Instance& inst);

void write_text_file(const std::filesystem::path& path, std::string_view text);

// Bench configuration ------------------------------------------------------

struct BenchInstance {
  std::filesystem::path path;
  std::optional<std::int64_t> best_ref;
};

/// Key-value file, one `key = value` per line, `#` comments.
///   instance       = <path> [best_ref]     (repeatable)
///   mh             = all | <kind>[, <kind>...]
///   pipeline       = all | <name>[, <name>...]
///   runs, ofc, final_uncross, seed, population, jobs = <integer>
///   ofc_policy     = per_solution | per_operator
///   out            = <csv path>
///   json           = <json path>
/// Relative paths resolve against `base_dir`.
struct BenchConfig {
  std::vector<BenchInstance> instances;
  std::vector<MhKind> kinds;
  std::vector<std::string> pipelines;
  ExperimentConfig base;
  std::optional<std::filesystem::path> out_csv;
  std::optional<std::filesystem::path> out_json;

  std::size_t cells() const { return instances.size() * kinds.size() * pipelines.size(); }
};

BenchConfig parse_bench_config(std::string_view text, const std::filesystem::path& base_dir = {});
BenchConfig load_bench_config(const std::filesystem::path& path);

/// Every cell in instance-major, then kind, then pipeline order.
std::vector<RunReport> run_bench(const BenchConfig& cfg);

}  // namespace tsphyb
