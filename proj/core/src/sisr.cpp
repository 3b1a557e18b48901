#include "tsphyb/sisr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tsphyb {

std::vector<std::pair<int, int>> subtour_slices(std::size_t n, int subtours) {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(subtours));
  const auto x = static_cast<std::size_t>(subtours);
  for (std::size_t k = 0; k < x; ++k)
    out.emplace_back(static_cast<int>(k * n / x), static_cast<int>((k + 1) * n / x));
  return out;
}

RuinPlan draw_ruin_plan(std::span<const int> partial, int subtours, Rng& rng) {
  const std::size_t n = partial.size();
  if (subtours < 1 || static_cast<std::size_t>(subtours) > n / 2)
    throw ConfigError("SISR: subtour count " + std::to_string(subtours) +
                      " must be within 1..n/2 (n = " + std::to_string(n) + ")");
  RuinPlan plan;
  plan.subtours = subtours;
  plan.slices = subtour_slices(n, subtours);
  const int max_span = std::max<int>(1, static_cast<int>(n / 2));
  std::vector<int> occupied;
  for (const auto& [lo, hi] : plan.slices) {
    occupied.clear();
    for (int p = lo; p < hi; ++p)
      if (partial[static_cast<std::size_t>(p)] != kVacant) occupied.push_back(p);
    const int seed = occupied.empty()
                         ? rng.uniform_int(lo, hi - 1)
                         : occupied[static_cast<std::size_t>(
                               rng.uniform_int(0, static_cast<int>(occupied.size()) - 1))];
    plan.seeds.push_back(seed);
    plan.spans.push_back(rng.uniform_int(1, max_span));
  }
  return plan;
}

std::pair<int, int> ruin_window(int seed, int span, std::pair<int, int> slice) {
  const int before = span / 2;
  const int after = span - before;
  return {std::max(slice.first, seed - before), std::min(slice.second - 1, seed + after)};
}

void ruin(RepairBuffer& buf, const RuinPlan& plan) {
  for (std::size_t k = 0; k < plan.seeds.size(); ++k) {
    const auto [from, to] = ruin_window(plan.seeds[k], plan.spans[k], plan.slices[k]);
    for (int p = from; p <= to; ++p) {
      int& slot = buf.partial[static_cast<std::size_t>(p)];
      if (slot == kVacant) continue;
      buf.missing.push_back(slot);
      buf.vacancies.push_back(p);
      slot = kVacant;
    }
  }
  std::sort(buf.missing.begin(), buf.missing.end());
  std::sort(buf.vacancies.begin(), buf.vacancies.end());
}

std::vector<int> recreate(std::vector<int> partial, std::span<const int> missing,
                          const Instance& inst) {
  const std::size_t n = partial.size();
  std::vector<bool> pending(n, false);
  std::size_t vacant = 0;
  for (int c : missing) {
    if (c < 0 || static_cast<std::size_t>(c) >= n || pending[static_cast<std::size_t>(c)])
      throw std::logic_error("recreate: invalid missing-city set");
    pending[static_cast<std::size_t>(c)] = true;
  }
  for (int v : partial) vacant += (v == kVacant);
  if (vacant != missing.size())
    throw std::logic_error("recreate: " + std::to_string(vacant) + " vacancies but " +
                           std::to_string(missing.size()) + " missing cities");

  std::size_t left = missing.size();
  for (std::size_t j = 0; j < n && left > 0; ++j) {
    if (partial[j] != kVacant) continue;
    int anchor = kVacant;
    for (std::size_t back = 1; back < n && anchor == kVacant; ++back)
      anchor = partial[(j + n - back) % n];
    int pick = kVacant;
    if (anchor == kVacant) {
      // Nothing placed anywhere yet: start from the lowest missing city.
      for (std::size_t c = 0; c < n && pick == kVacant; ++c)
        if (pending[c]) pick = static_cast<int>(c);
    } else {
      for (int c : inst.neighbors(anchor))
        if (pending[static_cast<std::size_t>(c)]) {
          pick = c;
          break;
        }
    }
    partial[j] = pick;
    pending[static_cast<std::size_t>(pick)] = false;
    --left;
  }
  return partial;
}

std::vector<int> sisr(std::span<const int> decoded, int subtours, const Instance& inst,
                      Rng& rng) {
  auto buf = strip_duplicates(decoded);
  const auto plan = draw_ruin_plan(buf.partial, subtours, rng);
  ruin(buf, plan);
  return recreate(std::move(buf.partial), buf.missing, inst);
}

}  // namespace tsphyb
