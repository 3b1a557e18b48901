#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tsphyb/core.hpp"

namespace tsphyb {

/// Proper intersection of segments p1-p2 and q1-q2: both parameters strictly
/// inside (0, 1). Parallel or collinear segments never cross.
bool segments_cross(const Coord& p1, const Coord& p2, const Coord& q1, const Coord& q2);

/// Edges i and j (edge k joins positions k-1 and k) cross in the plane.
/// Adjacent edges never cross.
bool edges_cross(std::span<const int> order, const Instance& inst, int i, int j);

/// Integer length change of replacing edges i < j by reversing positions
/// i..j-1.
std::int64_t reversal_delta(std::span<const int> order, const Instance& inst, int i, int j);

/// Reverses positions i..j-1, which swaps the endpoints of edges i and j.
void reverse_between(std::span<int> order, int i, int j);

/// Crossing repair: reverses when edges i, j cross and the integer length
/// does not grow. Returns true when applied.
bool uncross_edges(std::span<int> order, const Instance& inst, int i, int j);

/// One sweep: for each edge i, the first later non-adjacent edge crossing it
/// is repaired, then the sweep moves on to i + 1. Returns repairs made.
int uncross_pass(std::span<int> order, const Instance& inst);

/// `iterations` sweeps; returns the tour length after each one.
std::vector<std::int64_t> final_uncross_loop(std::span<int> order, const Instance& inst,
                                             int iterations);

struct UncrossStats {
  std::int64_t samples = 0;
  std::int64_t crossings = 0;
  std::int64_t repairs = 0;
};

/// `repetitions` times: sample three distinct edges; each crossing pair among
/// them is repaired with probability `prob` (drawn only for crossing pairs).
void uncross_prob_operator(std::span<int> order, const Instance& inst, double prob,
                           int repetitions, Rng& rng, UncrossStats* stats = nullptr);

}  // namespace tsphyb
