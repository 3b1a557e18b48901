#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tsphyb/core.hpp"
#include "tsphyb/encoding.hpp"
#include "tsphyb/hybrid.hpp"

namespace tsphyb {

enum class MhKind { bh, ea, gsa, mvs, pso, sa, sca, vs };

/// All kinds in report order.
const std::vector<MhKind>& all_mh_kinds();
/// Upper-case short name: "BH", "EA", ...
std::string_view to_string(MhKind kind);
/// Case-insensitive; throws ConfigError listing the valid names.
MhKind parse_mh_kind(std::string_view name);

struct MhParams {
  // PSO
  double pso_inertia = 0.715;
  double pso_c1 = 1.7;
  double pso_c2 = 1.7;
  // EA
  int ea_swaps = 10;
  int ea_elites = 1;
  // GSA
  double gsa_g0 = 100.0;
  double gsa_alpha = 20.0;
  int gsa_kbest = 5;
  // SA
  double sa_t0 = 2000.0;
  double sa_tf = 1e-5;
  double sa_cooling = 0.9;
  // SCA
  double sca_a = 2.0;
  // VS / MVS
  double vs_x = 0.1;
  int mvs_centers = 10;
};

struct MhConfig {
  MhKind kind = MhKind::vs;
  int population = 10;
  MhParams params;
};

/// Observable per-run state shared by every kind.
struct DriverState {
  std::vector<TentativeVector> positions;
  std::vector<std::int64_t> fitness;  // last evaluated length per individual
  Tour incumbent;
  std::int64_t incumbent_ofc = 0;
  std::int64_t generation = 0;  // completed generations after initialization
  bool initialized = false;
  bool stopped = false;

  friend bool operator==(const DriverState&, const DriverState&) = default;
};

/// SA temperature at stage k: max(tf, t0 * cooling^k).
double sa_temperature(const MhParams& p, std::int64_t stage);
/// Stages needed for the schedule to reach tf.
std::int64_t sa_stage_count(const MhParams& p);

/// VS search radius at generation t of `horizon`:
/// sigma0 / x * P^-1(max(tiny, 1 - t / horizon), x), P the regularized lower
/// incomplete gamma function.
double vs_radius(double sigma0, double x, std::int64_t t, std::int64_t horizon);

/// Driver contract for every kind: initialize() evaluates `population`
/// uniform random candidates (EA: random permutations); each step() is one
/// generation of `population` pipeline applications. Every application
/// costs pipeline.cost() budget calls and writes the resulting permutation
/// back into the candidate that produced it. When the budget runs out
/// mid-generation the rest of the generation is skipped and state().stopped
/// is set.
class Metaheuristic {
 public:
  Metaheuristic(const MhConfig& cfg, const Instance& inst, const HybridPipeline& pipeline,
                Budget& budget, Rng& rng);
  virtual ~Metaheuristic() = default;
  Metaheuristic(const Metaheuristic&) = delete;
  Metaheuristic& operator=(const Metaheuristic&) = delete;

  void initialize();
  /// One generation; returns false once stopped.
  bool step();
  /// initialize() if needed, then step() until the budget is spent.
  void run();

  const DriverState& state() const noexcept { return state_; }
  const MhConfig& config() const noexcept { return cfg_; }
  const PipelineStats& pipeline_stats() const noexcept { return stats_; }
  /// Planned generation count: (limit - population) / (population * cost).
  std::int64_t horizon() const noexcept { return horizon_; }

 protected:
  /// Evaluates the starting population; EA overrides with permutations.
  virtual void seed_population();
  virtual void on_initialized() {}
  virtual void generation() = 0;

  /// Pipeline on a continuous candidate; writes back and updates the
  /// incumbent. Returns the length, or -1 when the budget refused.
  std::int64_t evaluate(TentativeVector& pos);
  /// evaluate(positions[i]) and record fitness[i].
  std::int64_t evaluate_member(std::size_t i);
  /// Pipeline on a permutation (EA).
  std::int64_t evaluate_order(std::vector<int>& order);
  void random_position(TentativeVector& pos);
  /// Index of the individual with the smallest fitness (first on ties).
  std::size_t best_index() const;
  /// Generations completed so far relative to the horizon, in [0, 1].
  double progress() const;

  std::size_t n() const noexcept { return inst_.size(); }
  std::size_t pop() const noexcept { return static_cast<std::size_t>(cfg_.population); }

  MhConfig cfg_;
  const Instance& inst_;
  const HybridPipeline& pipeline_;
  Budget& budget_;
  Rng& rng_;
  DriverState state_;
  PipelineStats stats_;
  std::int64_t horizon_ = 1;

 private:
  std::int64_t account(Tour tour);
};

/// Throws ConfigError for population < 1 or parameters out of range.
std::unique_ptr<Metaheuristic> make_metaheuristic(const MhConfig& cfg, const Instance& inst,
                                                  const HybridPipeline& pipeline, Budget& budget,
                                                  Rng& rng);

}  // namespace tsphyb
