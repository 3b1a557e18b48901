#include "tsphyb/core.hpp"

#include <cmath>
#include <string>

namespace tsphyb {

Budget::Budget(std::int64_t limit) : limit_(limit) {
  if (limit < 0) throw std::invalid_argument("budget limit must be non-negative");
}

bool Budget::try_consume() noexcept {
  if (used_ >= limit_) return false;
  ++used_;
  return true;
}

std::int64_t closed_length(std::span<const int> order, const Instance& inst) {
  const std::size_t n = order.size();
  if (n == 0) return 0;
  std::int64_t total = 0;
  for (std::size_t k = 0; k + 1 < n; ++k) total += inst.dist(order[k], order[k + 1]);
  total += inst.dist(order[n - 1], order[0]);
  return total;
}

bool is_permutation_of_n(std::span<const int> order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int c : order) {
    if (c < 0 || static_cast<std::size_t>(c) >= n || seen[static_cast<std::size_t>(c)])
      return false;
    seen[static_cast<std::size_t>(c)] = true;
  }
  return true;
}

void expect_permutation(std::span<const int> order, std::size_t n, const char* where) {
  if (!is_permutation_of_n(order, n))
    throw std::logic_error(std::string(where) + ": not a permutation of 0.." +
                           std::to_string(n == 0 ? 0 : n - 1));
}

std::int64_t tour_length(std::span<const int> order, const Instance& inst, Budget& budget) {
  expect_permutation(order, inst.size(), "tour_length");
  if (!budget.try_consume()) throw BudgetExhausted();
  return closed_length(order, inst);
}

Tour::Tour(std::vector<int> order, std::int64_t length)
    : order_(std::move(order)), length_(length) {
  if (length_ < 0) throw std::logic_error("Tour: negative length");
}

Tour Tour::from_order(std::vector<int> order, const Instance& inst) {
  expect_permutation(order, inst.size(), "Tour::from_order");
  const auto len = closed_length(order, inst);
  return Tour(std::move(order), len);
}

double error_percent(std::int64_t best, std::int64_t best_ref) {
  if (best_ref <= 0) throw std::domain_error("error_percent: best_ref must be positive");
  return static_cast<double>(best - best_ref) / static_cast<double>(best_ref) * 100.0;
}

std::int64_t error_hundredths(std::int64_t best, std::int64_t best_ref) {
  if (best_ref <= 0) throw std::domain_error("error_percent: best_ref must be positive");
  // floor((best - ref) * 10000 / ref + 1/2) == floor((2 * (best - ref) * 10000 + ref) / (2 * ref))
  const std::int64_t num = 2 * (best - best_ref) * 10000 + best_ref;
  const std::int64_t den = 2 * best_ref;
  std::int64_t q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return q;
}

std::string format_error(std::int64_t best, std::int64_t best_ref) {
  const std::int64_t h = error_hundredths(best, best_ref);
  const std::int64_t mag = h < 0 ? -h : h;
  std::string frac = std::to_string(mag % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return (h < 0 ? "-" : "") + std::to_string(mag / 100) + "." + frac;
}

int resolve_percent(double percent, std::size_t n) {
  const double raw = percent / 100.0 * static_cast<double>(n);
  const int rounded = static_cast<int>(std::floor(raw + 0.5));
  return rounded < 1 ? 1 : rounded;
}

}  // namespace tsphyb
