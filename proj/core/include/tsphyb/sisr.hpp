#pragma once

#include <span>
#include <utility>
#include <vector>

#include "tsphyb/core.hpp"
#include "tsphyb/repair.hpp"

namespace tsphyb {

/// Where each ruin happens. The tour is cut into `subtours` equal slices of
/// positions; slice k gets one seed position and one span (number of
/// consecutive edges removed around the seed, 1..n/2).
struct RuinPlan {
  int subtours = 1;
  std::vector<std::pair<int, int>> slices;  // [begin, end) positions
  std::vector<int> seeds;
  std::vector<int> spans;
};

/// Slice k covers positions [k*n/X, (k+1)*n/X).
std::vector<std::pair<int, int>> subtour_slices(std::size_t n, int subtours);

/// Draws one seed (an occupied position when the slice has one) and one span
/// per slice. Throws ConfigError unless 1 <= subtours <= n/2.
RuinPlan draw_ruin_plan(std::span<const int> partial, int subtours, Rng& rng);

/// Positions cleared for one seed: the span is split before/after the seed,
/// the odd edge going after, and clipped to the seed's slice.
std::pair<int, int> ruin_window(int seed, int span, std::pair<int, int> slice);

/// Applies the plan: every occupied position inside a ruin window becomes
/// kVacant and its city joins `buf.missing`. Other positions are untouched.
void ruin(RepairBuffer& buf, const RuinPlan& plan);

/// Greedy reconstruction. Vacancies are filled in ascending position order;
/// each takes the missing city closest to the nearest occupied position
/// before it (cyclically), using the instance's neighbor order.
std::vector<int> recreate(std::vector<int> partial, std::span<const int> missing,
                          const Instance& inst);

/// Full SISR-based operator: strip repeats, ruin `subtours` slices, rebuild.
std::vector<int> sisr(std::span<const int> decoded, int subtours, const Instance& inst,
                      Rng& rng);

}  // namespace tsphyb
