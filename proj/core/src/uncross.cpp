#include "tsphyb/uncross.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace tsphyb {

namespace {

constexpr double kEps = 1e-9;

bool adjacent(int i, int j, int n) {
  const int d = std::abs(i - j);
  return d <= 1 || d == n - 1;
}

}  // namespace

bool segments_cross(const Coord& p1, const Coord& p2, const Coord& q1, const Coord& q2) {
  // p1 + s (p2 - p1) == q1 + t (q2 - q1)
  const double rx = p2.x - p1.x, ry = p2.y - p1.y;
  const double sx = q2.x - q1.x, sy = q2.y - q1.y;
  const double den = rx * sy - ry * sx;
  if (std::abs(den) < 1e-12) return false;
  const double wx = q1.x - p1.x, wy = q1.y - p1.y;
  const double s = (wx * sy - wy * sx) / den;
  const double t = (wx * ry - wy * rx) / den;
  return s > kEps && s < 1.0 - kEps && t > kEps && t < 1.0 - kEps;
}

bool edges_cross(std::span<const int> order, const Instance& inst, int i, int j) {
  const int n = static_cast<int>(order.size());
  if (n < 4 || adjacent(i, j, n)) return false;
  auto at = [&](int p) { return inst.coord(order[static_cast<std::size_t>((p + n) % n)]); };
  return segments_cross(at(i - 1), at(i), at(j - 1), at(j));
}

std::int64_t reversal_delta(std::span<const int> order, const Instance& inst, int i, int j) {
  const int n = static_cast<int>(order.size());
  auto c = [&](int p) { return order[static_cast<std::size_t>((p + n) % n)]; };
  return inst.dist(c(i - 1), c(j - 1)) + inst.dist(c(i), c(j % n)) - inst.dist(c(i - 1), c(i)) -
         inst.dist(c(j - 1), c(j % n));
}

void reverse_between(std::span<int> order, int i, int j) {
  std::reverse(order.begin() + i, order.begin() + j);
}

bool uncross_edges(std::span<int> order, const Instance& inst, int i, int j) {
  if (i > j) std::swap(i, j);
  if (!edges_cross(order, inst, i, j)) return false;
  if (reversal_delta(order, inst, i, j) > 0) return false;
  reverse_between(order, i, j);
  return true;
}

int uncross_pass(std::span<int> order, const Instance& inst) {
  const int n = static_cast<int>(order.size());
  int repairs = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j)
      if (uncross_edges(order, inst, i, j)) {
        ++repairs;
        break;
      }
  return repairs;
}

std::vector<std::int64_t> final_uncross_loop(std::span<int> order, const Instance& inst,
                                             int iterations) {
  std::vector<std::int64_t> lengths;
  lengths.reserve(static_cast<std::size_t>(std::max(iterations, 0)));
  for (int k = 0; k < iterations; ++k) {
    uncross_pass(order, inst);
    lengths.push_back(closed_length(order, inst));
  }
  return lengths;
}

void uncross_prob_operator(std::span<int> order, const Instance& inst, double prob,
                           int repetitions, Rng& rng, UncrossStats* stats) {
  const int n = static_cast<int>(order.size());
  if (n < 4) return;
  for (int r = 0; r < repetitions; ++r) {
    std::array<int, 3> e{};
    e[0] = rng.uniform_int(0, n - 1);
    do e[1] = rng.uniform_int(0, n - 1); while (e[1] == e[0]);
    do e[2] = rng.uniform_int(0, n - 1); while (e[2] == e[0] || e[2] == e[1]);
    std::sort(e.begin(), e.end());
    if (stats) ++stats->samples;
    for (auto [a, b] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
      const int i = e[static_cast<std::size_t>(a)], j = e[static_cast<std::size_t>(b)];
      if (!edges_cross(order, inst, i, j)) continue;
      if (stats) ++stats->crossings;
      if (!rng.bernoulli(prob)) continue;
      if (reversal_delta(order, inst, i, j) > 0) continue;
      reverse_between(order, i, j);
      if (stats) ++stats->repairs;
    }
  }
}

}  // namespace tsphyb
