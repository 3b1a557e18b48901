// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Stochastic criteria use fixed seeds, so every line is reproducible.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include <unistd.h>

#include "oracles.hpp"
#include "tsphyb/bench.hpp"
#include "tsphyb/kopt.hpp"
#include "tsphyb/uncross.hpp"
#include "tsphyb_cli/commands.hpp"

using namespace tsphyb;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& check) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = check();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("[%s] %d. %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str(),
              secs);
  std::fflush(stdout);
  failures += !o.pass;
}

// Every row of the published results table, verbatim: (instance, Best_ref,
// Best_BU, printed Error_BU, Best_AU, printed Error_AU). A row counts when both
// printed errors follow from half-up rounding of its stored integers.
struct TableRow {
  const char* instance;
  std::int64_t ref, bu;
  const char* err_bu;
  std::int64_t au;
  const char* err_au;
};

const TableRow kTable[] = {
    {"Eil51", 426, 437, "2.58", 432, "1.41"},
    {"Berlin52", 7542, 7547, "0.07", 7542, "0.00"},
    {"Wg59", 1000, 1062, "6.20", 1025, "2.50"},
    {"Silalahi68", 669, 698, "4.33", 675, "0.90"},
    {"St70", 675, 704, "4.30", 689, "2.07"},
    {"Pr76", 108159, 115207, "6.52", 112741, "4.23"},
    {"Gr96", 55209, 56540, "2.41", 56217, "1.83"},
    {"Rat99", 1211, 1240, "2.39", 1240, "2.39"},
    {"KroA100", 21282, 22169, "4.17", 21973, "3.25"},
    {"KroB100", 22141, 23160, "4.60", 22647, "2.29"},
    {"KroC100", 20749, 21733, "4.74", 21145, "1.91"},
    {"KroD100", 21294, 22673, "6.48", 22217, "4.33"},
    {"KroE100", 22068, 23119, "4.76", 22495, "1.93"},
    {"Eil101", 629, 669, "6.36", 654, "3.97"},
    {"Pr107", 44303, 44776, "1.07", 44510, "0.47"},
    {"Bier127", 118282, 120852, "2.17", 120507, "1.88"},
    {"Ch130", 6110, 6392, "4.62", 6331, "3.62"},
    {"Gr137", 69853, 73742, "5.57", 70740, "1.27"},
    {"Ch150", 6528, 6828, "4.59", 6655, "1.94"},
    {"KroA150", 26524, 29136, "9.85", 27903, "5.20"},
    {"KroB150", 26130, 28296, "8.29", 27186, "4.04"},
    {"U159", 42080, 43381, "3.09", 42749, "1.59"},
    {"D198", 15780, 16618, "5.31", 16158, "2.40"},
    {"KroA200", 29368, 31857, "8.48", 31294, "6.56"},
    {"KroB200", 29437, 32648, "10.91", 31099, "5.52"},
    {"Ts225", 126643, 1300725, "3.22", 128003, "1.07"},
    {"Tsp225", 3916, 4216, "7.66", 4060, "3.68"},
    {"A280", 2579, 2784, "7.95", 2680, "3.92"},
};

Outcome table_arithmetic() {
  int ok = 0;
  std::string bad;
  for (const auto& r : kTable) {
    if (format_error(r.bu, r.ref) == r.err_bu && format_error(r.au, r.ref) == r.err_au) ++ok;
    else bad += std::string(" ") + r.instance;
  }
  const int total = static_cast<int>(std::size(kTable));
  return {ok >= 10, std::to_string(ok) + "/" + std::to_string(total) +
                        " rows reproduced (need >= 10)" + (bad.empty() ? "" : "; mismatched:" + bad)};
}

Outcome optimal_tours() {
  std::string detail;
  bool pass = true;
  for (auto [tsp, tour, ref] : {std::tuple{"berlin52.tsp", "berlin52.opt.tour", 7542},
                                std::tuple{"kroA100.tsp", "kroA100.opt.tour", 21282},
                                std::tuple{"eil51.tsp", "eil51.opt.tour", 426}}) {
    const auto inst = load_instance(oracle::data(tsp));
    Budget b(1);
    const auto len = tour_length(load_tour(oracle::data(tour)), inst, b);
    pass = pass && len == ref;
    detail += inst.name() + "=" + std::to_string(len) + " ";
  }
  return {pass, detail + "(expected 7542, 21282, 426)"};
}

Outcome uncross_correctness() {
  // (a) a crossing square
  const Instance sq("sq", Metric::euc_2d, {{0, 0}, {10, 0}, {10, 10}, {0, 10}});
  std::vector<int> order{0, 2, 1, 3};
  uncross_pass(order, sq);
  const bool a = closed_length(order, sq) == 40 && uncross_pass(order, sq) == 0;

  // (b) 100 seeded random tours
  const auto kro = load_instance(oracle::data("kroA100.tsp"));
  bool b = true;
  for (std::uint64_t s = 0; s < 100 && b; ++s) {
    Rng rng(s);
    std::vector<int> t(100);
    std::iota(t.begin(), t.end(), 0);
    std::shuffle(t.begin(), t.end(), rng.engine());
    auto len = closed_length(t, kro);
    for (int guard = 0; guard < 10000; ++guard) {
      const int fixed = uncross_pass(t, kro);
      const auto next = closed_length(t, kro);
      b = b && next <= len;
      len = next;
      if (fixed == 0) break;
    }
    const auto settled = t;
    const auto trace = final_uncross_loop(t, kro, 3);
    b = b && t == settled && trace == std::vector<std::int64_t>{len, len, len};
  }

  // (c) the worked branch 61-9-47-53-62-33-11-39
  const Instance branch("branch", Metric::euc_2d,
                        {{0, 0}, {10, 10}, {8, 14}, {6, 16}, {4, 16}, {2, 14}, {0, 10}, {10, 0}});
  const std::vector<int> names{61, 9, 47, 53, 62, 33, 11, 39};
  std::vector<int> w{0, 1, 2, 3, 4, 5, 6, 7};
  uncross_pass(w, branch);
  std::string path;
  for (int c : w) path += (path.empty() ? "" : "-") + std::to_string(names[static_cast<std::size_t>(c)]);
  const bool c = path == "61-11-33-62-53-47-9-39";

  return {a && b && c, std::string("square ") + (a ? "ok" : "bad") + ", 100 KroA100 tours " +
                           (b ? "monotone+fixpoint" : "violated") + ", branch " + path};
}

Outcome three_opt_oracle() {
  int agree = 0;
  for (unsigned s = 0; s < 50; ++s) {
    Rng rng(s);
    std::vector<Coord> pts;
    for (int i = 0; i < 9; ++i) pts.push_back({rng.uniform(0, 100), rng.uniform(0, 100)});
    const Instance inst("n9", Metric::euc_2d, pts);
    std::vector<int> order(9);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng.engine());
    const auto e = sample_edge_triple(9, rng);
    const auto expect = oracle::three_opt_enumerate(order, inst, e.i, e.j, e.l);
    three_opt_at(order, inst, e);
    agree += order == expect;
  }
  return {agree == 50, std::to_string(agree) + "/50 cases equal exhaustive enumeration"};
}

Outcome small_optimality() {
  int hits = 0;
  for (unsigned s = 0; s < 20; ++s) {
    Rng rng(1000 + s);
    std::vector<Coord> pts;
    for (int i = 0; i < 8; ++i) pts.push_back({double(rng.uniform_int(0, 100)), double(rng.uniform_int(0, 100))});
    const Instance inst("n8_" + std::to_string(s), Metric::euc_2d, pts);
    ExperimentConfig cfg;
    cfg.kind = MhKind::vs;
    cfg.pipeline = "SISR1tours";
    cfg.runs = 1;
    cfg.ofc_limit = 20000;
    cfg.base_seed = s;
    cfg.jobs = 1;
    hits += run_experiment(inst, cfg).best_au == oracle::brute_force_optimum(inst);
  }
  return {hits >= 18, std::to_string(hits) + "/20 optima found (need >= 18)"};
}

RunReport table_run(const char* file, MhKind kind, const char* pipeline, std::int64_t ofc,
                    std::int64_t ref) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.pipeline = pipeline;
  cfg.runs = 30;
  cfg.ofc_limit = ofc;
  cfg.best_ref = ref;
  cfg.base_seed = 1;
  return run_experiment(load_instance(oracle::data(file)), cfg);
}

Outcome headline_rows() {
  const auto berlin = table_run("berlin52.tsp", MhKind::vs, "SISR3OPT1Rep", 300000, 7542);
  const double eb = error_percent(berlin.best_au, 7542);
  auto eil = table_run("eil51.tsp", MhKind::vs, "SISR3tours", 300000, 426);
  if (error_percent(eil.best_au, 426) > 3.0)
    eil = table_run("eil51.tsp", MhKind::gsa, "SISR3tours", 300000, 426);
  const double ee = error_percent(eil.best_au, 426);
  return {eb <= 1.0 && ee <= 3.0,
          "Berlin52 " + berlin.hybridization() + " AU " + std::to_string(berlin.best_au) + " (" +
              format_error(berlin.best_au, 7542) + "% <= 1.0%), Eil51 " + eil.hybridization() +
              " AU " + std::to_string(eil.best_au) + " (" + format_error(eil.best_au, 426) +
              "% <= 3.0%)"};
}

Outcome bu_au_improvement() {
  const auto r = table_run("kroA100.tsp", MhKind::vs, "SISR3tours", 500000, 21282);
  double bu = 0, au = 0;
  std::vector<double> gains;
  for (const auto& run : r.runs) {
    bu += error_percent(run.best_bu, 21282);
    au += error_percent(run.best_au, 21282);
    gains.push_back(error_reduction(run, 21282));
  }
  bu /= static_cast<double>(r.runs.size());
  au /= static_cast<double>(r.runs.size());
  std::sort(gains.begin(), gains.end());
  const double median = (gains[14] + gains[15]) / 2.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "mean error BU %.2f%% -> AU %.2f%%, median per-run reduction %.1f%% (need >= 10%%)",
                bu, au, median * 100.0);
  return {au < bu && median >= 0.10, buf};
}

Outcome budget_accounting() {
  const auto inst = load_instance(oracle::data("eil51.tsp"));
  int configs = 0, ok = 0;
  for (OfcPolicy policy : {OfcPolicy::per_solution, OfcPolicy::per_operator})
    for (MhKind k : all_mh_kinds())
      for (const auto& spec : pipeline_menu()) {
        ExperimentConfig cfg;
        cfg.kind = k;
        cfg.pipeline = spec.name();
        cfg.runs = 2;
        cfg.ofc_limit = 1237;
        cfg.policy = policy;
        cfg.jobs = 1;
        const auto r = run_experiment(inst, cfg);
        bool good = r.ofc_best <= cfg.ofc_limit;
        for (const auto& run : r.runs)
          good = good && run.ofc_used <= cfg.ofc_limit && run.ofc_at_best <= run.ofc_used &&
                 run.ofc_at_best >= 1 && run.best_au <= run.best_bu;
        ++configs;
        ok += good;
      }
  return {ok == configs, std::to_string(ok) + "/" + std::to_string(configs) +
                             " configurations within the call limit"};
}

Outcome determinism() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("tsphyb_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  std::string csv[2];
  for (int k = 0; k < 2; ++k) {
    const auto cfg = dir / ("bench" + std::to_string(k) + ".cfg");
    const auto out = dir / ("bench" + std::to_string(k) + ".csv");
    write_text_file(cfg, "instance = " + oracle::data("eil51.tsp") + " 426\n" +
                             "instance = " + oracle::data("berlin52.tsp") + " 7542\n" +
                             "mh = vs, ea, sa, pso\n"
                             "pipeline = SISR2tours, 3OPT50Rep, UNCROSS20Prob1Rep\n"
                             "runs = 4\nofc = 3000\nseed = 11\n"
                             "jobs = " + std::to_string(k == 0 ? 1 : 4) + "\n"
                             "out = " + out.string() + "\n");
    std::ostringstream sink;
    if (cli::run({"bench", "--config", cfg.string()}, sink, sink) != cli::kExitOk)
      return {false, "bench command failed: " + sink.str()};
    csv[k] = read_text_file(out);
  }
  std::filesystem::remove_all(dir);
  const auto rows = std::count(csv[0].begin(), csv[0].end(), '\n') - 1;
  return {csv[0] == csv[1] && rows == 24,
          std::to_string(rows) + " rows, " + (csv[0] == csv[1] ? "byte-identical" : "different") +
              " across two executions (1 and 4 workers)"};
}

}  // namespace

int main() {
  report(1, "Error arithmetic", table_arithmetic);
  report(2, "Parser/metric fidelity", optimal_tours);
  report(3, "Uncross correctness", uncross_correctness);
  report(4, "3-OPT oracle equivalence", three_opt_oracle);
  report(5, "Small-instance optimality", small_optimality);
  report(6, "Headline rows", headline_rows);
  report(7, "BU/AU improvement", bu_au_improvement);
  report(8, "Budget accounting", budget_accounting);
  report(9, "Determinism", determinism);
  std::printf("%d/9 criteria passed\n", 9 - failures);
  return failures == 0 ? 0 : 1;
}
