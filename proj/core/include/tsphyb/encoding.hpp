#pragma once

#include <span>
#include <vector>

namespace tsphyb {

/// Continuous candidate: one coordinate per city slot, each in [1, n].
using TentativeVector = std::vector<double>;

/// Clamps every coordinate into [1, n].
void clamp_to_box(std::span<double> pos);

/// Round half-up, clamp to [1, n], shift to 0-based. Duplicates and
/// omissions are expected.
std::vector<int> decode(std::span<const double> pos);

/// Permutation p as coordinates p[k] + 1.
TentativeVector encode(std::span<const int> order);
void encode_into(std::span<const int> order, std::span<double> pos);

}  // namespace tsphyb
