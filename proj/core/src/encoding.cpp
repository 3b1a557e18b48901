#include "tsphyb/encoding.hpp"

#include <algorithm>
#include <cmath>

namespace tsphyb {

void clamp_to_box(std::span<double> pos) {
  const double hi = static_cast<double>(pos.size());
  for (double& x : pos) x = std::clamp(x, 1.0, hi);
}

std::vector<int> decode(std::span<const double> pos) {
  const int n = static_cast<int>(pos.size());
  std::vector<int> out(pos.size());
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const double r = std::floor(pos[k] + 0.5);
    // NaN and huge values land on a bound rather than overflowing the cast.
    const int v = r >= n ? n : (r >= 1.0 ? static_cast<int>(r) : 1);
    out[k] = v - 1;
  }
  return out;
}

TentativeVector encode(std::span<const int> order) {
  TentativeVector pos(order.size());
  encode_into(order, pos);
  return pos;
}

void encode_into(std::span<const int> order, std::span<double> pos) {
  for (std::size_t k = 0; k < order.size(); ++k) pos[k] = static_cast<double>(order[k] + 1);
}

}  // namespace tsphyb
