#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tsphyb/tsplib.hpp"

namespace tsphyb {

/// Raised when an objective evaluation is requested with no calls left.
class BudgetExhausted : public std::runtime_error {
 public:
  BudgetExhausted() : std::runtime_error("objective-function call budget exhausted") {}
};

/// Stopping criterion expressed in objective-function calls (OFC).
///
/// `used <= limit` always holds; `best_at` is the call count at which the
/// current incumbent was evaluated.
class Budget {
 public:
  explicit Budget(std::int64_t limit);

  std::int64_t limit() const noexcept { return limit_; }
  std::int64_t used() const noexcept { return used_; }
  std::int64_t remaining() const noexcept { return limit_ - used_; }
  std::int64_t best_at() const noexcept { return best_at_; }
  bool exhausted() const noexcept { return used_ >= limit_; }

  /// Consumes one call; false (and no change) when exhausted.
  bool try_consume() noexcept;
  /// Records that the evaluation just consumed produced a new incumbent.
  void mark_best() noexcept { best_at_ = used_; }

 private:
  std::int64_t limit_;
  std::int64_t used_ = 0;
  std::int64_t best_at_ = 0;
};

/// Seeded pseudo-random stream. Identical seeds give identical draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::mt19937_64& engine() noexcept { return engine_; }

  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  /// Uniform real in [lo, hi).
  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(engine_);
  }
  double normal(double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }
  bool bernoulli(double p) { return p > 0.0 && uniform() < p; }

  friend bool operator==(const Rng& a, const Rng& b) {
    return a.seed_ == b.seed_ && a.engine_ == b.engine_;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

/// Closed-tour length without budget accounting. Used by heuristics and
/// reporting, which never count as objective-function calls.
std::int64_t closed_length(std::span<const int> order, const Instance& inst);

bool is_permutation_of_n(std::span<const int> order, std::size_t n);

/// Throws std::logic_error unless `order` is a permutation of 0..n-1.
void expect_permutation(std::span<const int> order, std::size_t n, const char* where);

/// The objective: closed-tour length. Consumes exactly one call from
/// `budget`; throws BudgetExhausted when none is left.
std::int64_t tour_length(std::span<const int> order, const Instance& inst, Budget& budget);

/// A feasible solution: a permutation of 0..n-1 with its cached length.
class Tour {
 public:
  Tour() = default;
  Tour(std::vector<int> order, std::int64_t length);
  /// Computes the length (unaccounted); validates the permutation.
  static Tour from_order(std::vector<int> order, const Instance& inst);

  const std::vector<int>& order() const noexcept { return order_; }
  std::int64_t length() const noexcept { return length_; }
  std::size_t size() const noexcept { return order_.size(); }
  bool empty() const noexcept { return order_.empty(); }

  friend bool operator==(const Tour&, const Tour&) = default;

 private:
  std::vector<int> order_;
  std::int64_t length_ = 0;
};

/// Relative error in percent, (best - best_ref) / best_ref * 100, unrounded.
/// Throws std::domain_error when best_ref <= 0.
double error_percent(std::int64_t best, std::int64_t best_ref);

/// Error in hundredths of a percent, rounded half-up in exact integer
/// arithmetic: error_hundredths(432, 426) == 141.
std::int64_t error_hundredths(std::int64_t best, std::int64_t best_ref);

/// error_hundredths formatted with two decimals, e.g. "1.41", "-0.25".
std::string format_error(std::int64_t best, std::int64_t best_ref);

/// max(1, round_half_up(percent / 100 * n)): percentages in pipeline names
/// refer to the number of cities.
int resolve_percent(double percent, std::size_t n);

}  // namespace tsphyb
