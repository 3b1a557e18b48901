#pragma once

#include <span>
#include <vector>

#include "tsphyb/core.hpp"

namespace tsphyb {

inline constexpr int kVacant = -1;

/// A tentative sequence with repeated cities stripped out.
///
/// `partial` keeps the first occurrence of every city in place and marks the
/// positions of later repeats with kVacant. `missing` holds the absent
/// cities in ascending order; `vacancies` the vacated positions, ascending.
struct RepairBuffer {
  std::vector<int> partial;
  std::vector<int> missing;
  std::vector<int> vacancies;
};

/// Removes repeats (first occurrence stays) and collects the absent cities.
/// Throws std::logic_error on entries outside 0..n-1 (n = decoded.size()).
RepairBuffer strip_duplicates(std::span<const int> decoded);

/// Feasibility correction: strip repeats, then fill each vacancy with a
/// missing city drawn uniformly without replacement. A permutation input is
/// returned unchanged and consumes no random draws.
std::vector<int> repair_tour(std::span<const int> decoded, Rng& rng);

}  // namespace tsphyb
