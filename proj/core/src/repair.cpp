#include "tsphyb/repair.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tsphyb {

RepairBuffer strip_duplicates(std::span<const int> decoded) {
  const std::size_t n = decoded.size();
  RepairBuffer buf;
  buf.partial.assign(decoded.begin(), decoded.end());
  std::vector<bool> present(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    const int c = decoded[k];
    if (c < 0 || static_cast<std::size_t>(c) >= n)
      throw std::logic_error("repair: entry " + std::to_string(c) + " at position " +
                             std::to_string(k) + " is outside 0.." + std::to_string(n - 1));
    if (present[static_cast<std::size_t>(c)]) {
      buf.partial[k] = kVacant;
      buf.vacancies.push_back(static_cast<int>(k));
    } else {
      present[static_cast<std::size_t>(c)] = true;
    }
  }
  for (std::size_t c = 0; c < n; ++c)
    if (!present[c]) buf.missing.push_back(static_cast<int>(c));
  return buf;
}

std::vector<int> repair_tour(std::span<const int> decoded, Rng& rng) {
  auto buf = strip_duplicates(decoded);
  if (buf.vacancies.empty()) return std::move(buf.partial);
  std::shuffle(buf.missing.begin(), buf.missing.end(), rng.engine());
  for (std::size_t k = 0; k < buf.vacancies.size(); ++k)
    buf.partial[static_cast<std::size_t>(buf.vacancies[k])] = buf.missing[k];
  return std::move(buf.partial);
}

}  // namespace tsphyb
