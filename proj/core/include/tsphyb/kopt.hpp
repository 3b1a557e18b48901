#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "tsphyb/core.hpp"

namespace tsphyb {

/// Edge k joins positions k-1 and k (cyclically), so edge 0 closes the tour.
struct EdgeTriple {
  int i = 0;
  int j = 0;
  int l = 0;
};

struct ThreeOptStats {
  std::int64_t moves = 0;         // three_opt_at calls
  std::int64_t candidates = 0;    // reorderings scored, identity included
  std::int64_t improvements = 0;  // moves that changed the tour
  bool too_small = false;         // n < 6: nothing was attempted
};

/// Number of reorderings scored per move.
inline constexpr int kThreeOptCandidates = 120;

/// Cyclic distance between two edge indices.
int edge_gap(int a, int b, int n);

/// Uniform i < j < l with every pairwise edge_gap >= 2. Requires n >= 6.
EdgeTriple sample_edge_triple(int n, Rng& rng);

/// The node at position i-1 stays; the nodes at positions i, j-1, j, l-1, l
/// are reassigned in the best of all 120 orders (identity first, first strict
/// minimum wins). Only edges touching the moved positions are scored.
/// Returns true when the tour changed, which implies it got strictly shorter.
bool three_opt_at(std::span<int> order, const Instance& inst, EdgeTriple e,
                  ThreeOptStats* stats = nullptr);

/// `repetitions` moves on freshly sampled triples. A no-op for n < 6.
void three_opt_repeat(std::span<int> order, const Instance& inst, int repetitions, Rng& rng,
                      ThreeOptStats* stats = nullptr);

}  // namespace tsphyb
