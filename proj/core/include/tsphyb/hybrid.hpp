#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tsphyb/core.hpp"
#include "tsphyb/kopt.hpp"
#include "tsphyb/uncross.hpp"

namespace tsphyb {

enum class PipelineFamily { tsp_mh, three_opt, sisr, sisr_three_opt, uncross };

/// A menu entry, independent of instance size.
///   tsp_mh:          no parameters
///   three_opt:       rep_percent in {50, 100, 200}
///   sisr:            subtours in {1, 2, 3, 4}
///   sisr_three_opt:  rep_percent in {1, 5, 10}
///   uncross:         prob_percent in {20, 50, 100}, rep_percent in {1, 5, 10}
struct PipelineSpec {
  PipelineFamily family = PipelineFamily::tsp_mh;
  int subtours = 0;
  int prob_percent = 0;
  int rep_percent = 0;

  std::string name() const;
  friend bool operator==(const PipelineSpec&, const PipelineSpec&) = default;
};

/// All 20 menu entries in a fixed order.
const std::vector<PipelineSpec>& pipeline_menu();

/// Accepts the canonical names, "Por" for "Rep" and any letter case.
/// Throws ConfigError listing the menu for anything else.
PipelineSpec parse_pipeline_spec(std::string_view name);

/// How heuristic work is charged against the budget.
///   per_solution: one call per pipeline application, nothing else.
///   per_operator: additionally one call per 3-OPT move or uncross sample.
enum class OfcPolicy { per_solution, per_operator };

struct PipelineStats {
  std::int64_t applications = 0;
  ThreeOptStats kopt;
  UncrossStats uncross;
};

/// A menu entry resolved against a city count.
class HybridPipeline {
 public:
  HybridPipeline(PipelineSpec spec, std::size_t n, OfcPolicy policy = OfcPolicy::per_solution);

  const PipelineSpec& spec() const noexcept { return spec_; }
  std::string name() const { return spec_.name(); }
  std::size_t cities() const noexcept { return n_; }
  OfcPolicy policy() const noexcept { return policy_; }
  /// Heuristic repetitions per application (3-OPT moves or uncross samples).
  int repetitions() const noexcept { return repetitions_; }
  int subtours() const noexcept { return subtours_; }
  double probability() const noexcept { return probability_; }
  /// Budget calls one application needs.
  std::int64_t cost() const noexcept;

  /// Stages only: decoded sequence in, permutation out. No evaluation.
  std::vector<int> transform(std::span<const int> decoded, const Instance& inst, Rng& rng,
                             PipelineStats* stats = nullptr) const;

  /// Stages plus exactly one evaluation. Returns nullopt, without touching
  /// rng or budget, when the budget cannot cover cost().
  std::optional<Tour> apply(std::span<const int> decoded, const Instance& inst, Budget& budget,
                            Rng& rng, PipelineStats* stats = nullptr) const;

 private:
  PipelineSpec spec_;
  std::size_t n_;
  OfcPolicy policy_;
  int repetitions_ = 0;
  int subtours_ = 0;
  double probability_ = 0.0;
};

HybridPipeline parse_pipeline_name(std::string_view name, std::size_t n,
                                   OfcPolicy policy = OfcPolicy::per_solution);

}  // namespace tsphyb
