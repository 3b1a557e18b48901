#include "tsphyb/kopt.hpp"

#include <algorithm>
#include <stdexcept>

namespace tsphyb {

namespace {

struct Slots {
  std::array<int, 5> pos{};
  std::array<int, 12> edge_from{};  // unique edges as (position, position + 1)
  int edges = 0;
};

Slots make_slots(EdgeTriple e, int n) {
  Slots s;
  s.pos = {e.i, e.j - 1, e.j, e.l - 1, e.l};
  for (int p : s.pos) {
    for (int a : {(p - 1 + n) % n, p}) {
      bool dup = false;
      for (int k = 0; k < s.edges; ++k) dup = dup || s.edge_from[static_cast<std::size_t>(k)] == a;
      if (!dup) s.edge_from[static_cast<std::size_t>(s.edges++)] = a;
    }
  }
  return s;
}

std::int64_t local_cost(std::span<const int> order, const Instance& inst, const Slots& s) {
  const auto n = order.size();
  std::int64_t total = 0;
  for (int k = 0; k < s.edges; ++k) {
    const auto a = static_cast<std::size_t>(s.edge_from[static_cast<std::size_t>(k)]);
    total += inst.dist(order[a], order[(a + 1) % n]);
  }
  return total;
}

}  // namespace

int edge_gap(int a, int b, int n) {
  const int d = a > b ? a - b : b - a;
  return std::min(d, n - d);
}

EdgeTriple sample_edge_triple(int n, Rng& rng) {
  if (n < 6) throw std::logic_error("sample_edge_triple: need n >= 6");
  for (;;) {
    std::array<int, 3> t{rng.uniform_int(0, n - 1), rng.uniform_int(0, n - 1),
                         rng.uniform_int(0, n - 1)};
    std::sort(t.begin(), t.end());
    if (edge_gap(t[0], t[1], n) >= 2 && edge_gap(t[1], t[2], n) >= 2 &&
        edge_gap(t[0], t[2], n) >= 2)
      return {t[0], t[1], t[2]};
  }
}

bool three_opt_at(std::span<int> order, const Instance& inst, EdgeTriple e,
                  ThreeOptStats* stats) {
  const int n = static_cast<int>(order.size());
  const Slots s = make_slots(e, n);
  std::array<int, 5> nodes{};
  for (std::size_t k = 0; k < 5; ++k) nodes[k] = order[static_cast<std::size_t>(s.pos[k])];

  std::array<int, 5> perm{0, 1, 2, 3, 4};
  const std::int64_t base = local_cost(order, inst, s);
  std::int64_t best = base;
  std::array<int, 5> best_perm = perm;
  int scored = 0;
  do {
    for (std::size_t k = 0; k < 5; ++k)
      order[static_cast<std::size_t>(s.pos[k])] = nodes[static_cast<std::size_t>(perm[k])];
    const std::int64_t c = local_cost(order, inst, s);
    ++scored;
    if (c < best) {
      best = c;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  for (std::size_t k = 0; k < 5; ++k)
    order[static_cast<std::size_t>(s.pos[k])] = nodes[static_cast<std::size_t>(best_perm[k])];
  const bool changed = best < base;
  if (stats) {
    ++stats->moves;
    stats->candidates += scored;
    stats->improvements += changed;
  }
  return changed;
}

void three_opt_repeat(std::span<int> order, const Instance& inst, int repetitions, Rng& rng,
                      ThreeOptStats* stats) {
  const int n = static_cast<int>(order.size());
  if (n < 6) {
    if (stats) stats->too_small = true;
    return;
  }
  for (int r = 0; r < repetitions; ++r) three_opt_at(order, inst, sample_edge_triple(n, rng), stats);
}

}  // namespace tsphyb
