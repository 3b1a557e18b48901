#include "tsphyb/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <exception>
#include <mutex>
#include <thread>

#include "tsphyb/uncross.hpp"

namespace tsphyb {

void ExperimentConfig::validate(std::size_t n) const {
  if (runs < 1) throw ConfigError("runs must be at least 1");
  if (population < 1) throw ConfigError("population must be at least 1");
  if (final_uncross < 1) throw ConfigError("final_uncross must be at least 1");
  if (best_ref && *best_ref <= 0) throw ConfigError("best_ref must be positive");
  if (jobs < 0) throw ConfigError("jobs must be non-negative");
  if (n < 3) throw ConfigError("instance needs at least 3 cities");
  const HybridPipeline pipe = parse_pipeline_name(pipeline, n, policy);
  if (ofc_limit < population * pipe.cost())
    throw ConfigError("ofc limit " + std::to_string(ofc_limit) +
                      " cannot cover one population of " + std::to_string(population));
}

const RunResult& RunReport::best_run() const {
  return *std::min_element(runs.begin(), runs.end(), [](const RunResult& a, const RunResult& b) {
    return a.best_au < b.best_au;
  });
}

void summarize(RunReport& r) {
  if (r.runs.empty()) return;
  std::vector<std::int64_t> au;
  r.best_bu = r.runs.front().best_bu;
  double ofc_pct = 0.0;
  for (const auto& run : r.runs) {
    au.push_back(run.best_au);
    r.best_bu = std::min(r.best_bu, run.best_bu);
    ofc_pct += static_cast<double>(run.ofc_at_best) / static_cast<double>(r.ofc_limit) * 100.0;
  }
  std::sort(au.begin(), au.end());
  r.best_au = au.front();
  r.worst_au = au.back();
  const std::size_t m = au.size();
  r.median_au = m % 2 ? static_cast<double>(au[m / 2])
                      : (static_cast<double>(au[m / 2 - 1]) + static_cast<double>(au[m / 2])) / 2.0;
  r.amplitude = static_cast<double>(r.worst_au - r.best_au) / static_cast<double>(r.best_au);
  r.ofc_best = r.best_run().ofc_at_best;
  r.mean_ofc_percent = ofc_pct / static_cast<double>(m);

  std::size_t sweeps = 0;
  for (const auto& run : r.runs) sweeps = std::max(sweeps, run.final_trace.size());
  r.settled_fraction.assign(sweeps, 0.0);
  for (std::size_t k = 0; k < sweeps; ++k) {
    std::size_t settled = 0;
    for (const auto& run : r.runs) {
      const auto& t = run.final_trace;
      const auto len = t.empty() ? run.best_bu : t[std::min(k, t.size() - 1)];
      settled += len == run.best_au;
    }
    r.settled_fraction[k] = static_cast<double>(settled) / static_cast<double>(m);
  }
}

double error_reduction(const RunResult& run, std::int64_t best_ref) {
  const double bu = error_percent(run.best_bu, best_ref);
  if (bu <= 0.0) return 0.0;
  return (bu - error_percent(run.best_au, best_ref)) / bu;
}

RunResult run_once(const Instance& inst, const ExperimentConfig& cfg, int index) {
  const HybridPipeline pipe = parse_pipeline_name(cfg.pipeline, inst.size(), cfg.policy);
  Budget budget(cfg.ofc_limit);
  RunResult out;
  out.index = index;
  out.seed = cfg.base_seed + static_cast<std::uint64_t>(index);
  Rng rng(out.seed);
  const MhConfig mc{cfg.kind, cfg.population, cfg.params};
  auto mh = make_metaheuristic(mc, inst, pipe, budget, rng);
  mh->run();
  const Tour& best = mh->state().incumbent;
  out.best_bu = best.length();
  out.ofc_at_best = mh->state().incumbent_ofc;
  out.ofc_used = budget.used();
  out.tour = best.order();
  out.final_trace = final_uncross_loop(out.tour, inst, cfg.final_uncross);
  out.best_au = out.final_trace.empty() ? out.best_bu : out.final_trace.back();
  return out;
}

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 0) jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min(jobs, count);
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

RunReport run_experiment(const Instance& inst, const ExperimentConfig& cfg) {
  cfg.validate(inst.size());
  RunReport r;
  r.instance = inst.name();
  r.n = inst.size();
  r.mh = std::string(to_string(cfg.kind));
  r.pipeline = parse_pipeline_spec(cfg.pipeline).name();
  r.ofc_limit = cfg.ofc_limit;
  r.best_ref = cfg.best_ref;
  r.runs.resize(static_cast<std::size_t>(cfg.runs));
  parallel_for(cfg.runs, cfg.jobs,
               [&](int k) { r.runs[static_cast<std::size_t>(k)] = run_once(inst, cfg, k); });
  summarize(r);
  return r;
}

// Bench configuration ------------------------------------------------------

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

template <class T>
T parse_number(std::string_view s, std::string_view key, std::size_t line) {
  T v{};
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ConfigError("line " + std::to_string(line) + ": '" + std::string(key) +
                      "' expects an integer, got '" + std::string(s) + "'");
  return v;
}

bool is_all(const std::vector<std::string>& items) {
  if (items.size() != 1) return false;
  std::string u = items[0];
  for (char& c : u) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return u == "all";
}

}  // namespace

BenchConfig parse_bench_config(std::string_view text, const std::filesystem::path& base_dir) {
  BenchConfig cfg;
  auto resolve = [&](std::string_view p) {
    std::filesystem::path path{std::string(p)};
    return path.is_relative() && !base_dir.empty() ? base_dir / path : path;
  };
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    std::string key(trim(line.substr(0, eq)));
    for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    const std::string_view value = trim(line.substr(eq + 1));
    const auto items = split_list(value);
    if (items.empty())
      throw ConfigError("line " + std::to_string(line_no) + ": '" + key + "' has no value");

    if (key == "instance") {
      if (items.size() > 2)
        throw ConfigError("line " + std::to_string(line_no) + ": instance = <path> [best_ref]");
      BenchInstance bi{resolve(items[0]), std::nullopt};
      if (items.size() == 2) bi.best_ref = parse_number<std::int64_t>(items[1], key, line_no);
      cfg.instances.push_back(std::move(bi));
    } else if (key == "mh") {
      if (is_all(items)) {
        cfg.kinds = all_mh_kinds();
      } else {
        for (const auto& k : items) cfg.kinds.push_back(parse_mh_kind(k));
      }
    } else if (key == "pipeline") {
      if (is_all(items)) {
        for (const auto& p : pipeline_menu()) cfg.pipelines.push_back(p.name());
      } else {
        for (const auto& p : items) cfg.pipelines.push_back(parse_pipeline_spec(p).name());
      }
    } else if (key == "runs") {
      cfg.base.runs = parse_number<int>(value, key, line_no);
    } else if (key == "ofc") {
      cfg.base.ofc_limit = parse_number<std::int64_t>(value, key, line_no);
    } else if (key == "final_uncross") {
      cfg.base.final_uncross = parse_number<int>(value, key, line_no);
    } else if (key == "seed") {
      cfg.base.base_seed = parse_number<std::uint64_t>(value, key, line_no);
    } else if (key == "population") {
      cfg.base.population = parse_number<int>(value, key, line_no);
    } else if (key == "jobs") {
      cfg.base.jobs = parse_number<int>(value, key, line_no);
    } else if (key == "ofc_policy") {
      if (value == "per_solution") cfg.base.policy = OfcPolicy::per_solution;
      else if (value == "per_operator") cfg.base.policy = OfcPolicy::per_operator;
      else throw ConfigError("line " + std::to_string(line_no) +
                             ": ofc_policy must be per_solution or per_operator");
    } else if (key == "out") {
      cfg.out_csv = resolve(value);
    } else if (key == "json") {
      cfg.out_json = resolve(value);
    } else {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (cfg.cells() == 0)
    throw ConfigError("bench config enumerates no (instance, mh, pipeline) cell");
  return cfg;
}

BenchConfig load_bench_config(const std::filesystem::path& path) {
  return parse_bench_config(read_text_file(path), path.parent_path());
}

std::vector<RunReport> run_bench(const BenchConfig& cfg) {
  std::vector<Instance> instances;
  for (const auto& bi : cfg.instances) instances.push_back(load_instance(bi.path));
  // Validate every cell before the first run.
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (const auto& p : cfg.pipelines) {
      ExperimentConfig ec = cfg.base;
      ec.pipeline = p;
      ec.best_ref = cfg.instances[i].best_ref;
      ec.validate(instances[i].size());
    }
  std::vector<RunReport> out;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (MhKind k : cfg.kinds)
      for (const auto& p : cfg.pipelines) {
        ExperimentConfig ec = cfg.base;
        ec.kind = k;
        ec.pipeline = p;
        ec.best_ref = cfg.instances[i].best_ref;
        out.push_back(run_experiment(instances[i], ec));
      }
  return out;
}

}  // namespace tsphyb
