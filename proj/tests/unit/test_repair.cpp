#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tsphyb/repair.hpp"

using namespace tsphyb;

TEST(Repair, PermutationUnchangedWithoutDraws) {
  Rng rng(5), untouched(5);
  EXPECT_EQ(repair_tour(std::vector<int>{0, 1, 2, 3, 4}, rng), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(rng, untouched);
}

TEST(Repair, SingleCompletionForced) {
  Rng rng(1);
  EXPECT_EQ(repair_tour(std::vector<int>{0, 0, 2}, rng), (std::vector<int>{0, 1, 2}));
}

TEST(Repair, StripKeepsFirstOccurrence) {
  const auto buf = strip_duplicates(std::vector<int>{3, 1, 3, 1, 0});
  EXPECT_EQ(buf.partial, (std::vector<int>{3, 1, kVacant, kVacant, 0}));
  EXPECT_EQ(buf.missing, (std::vector<int>{2, 4}));
  EXPECT_EQ(buf.vacancies, (std::vector<int>{2, 3}));
}

TEST(Repair, OutOfRangeIsProgrammingError) {
  Rng rng(1);
  EXPECT_THROW(repair_tour(std::vector<int>{0, 5, 1}, rng), std::logic_error);
  EXPECT_THROW(repair_tour(std::vector<int>{0, -1, 1}, rng), std::logic_error);
}

TEST(Repair, FirstOccurrencesStayInPlace) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    std::vector<int> d(15);
    for (int& x : d) x = rng.uniform_int(0, 14);
    const auto out = repair_tour(d, rng);
    ASSERT_TRUE(is_permutation_of_n(out, 15));
    std::vector<bool> seen(15, false);
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (seen[static_cast<std::size_t>(d[k])]) continue;
      seen[static_cast<std::size_t>(d[k])] = true;
      EXPECT_EQ(out[k], d[k]);
    }
    EXPECT_EQ(repair_tour(out, rng), out);
  }
}

// Each missing city should land in each vacancy with equal frequency.
TEST(Repair, VacancyFillIsUniform) {
  std::vector<std::vector<long>> counts(5, std::vector<long>(5, 0));
  for (std::uint64_t s = 0; s < 10000; ++s) {
    Rng rng(s);
    const auto out = repair_tour(std::vector<int>{5, 5, 5, 5, 5, 5}, rng);
    ASSERT_EQ(out[0], 5);
    for (std::size_t slot = 1; slot < 6; ++slot) ++counts[static_cast<std::size_t>(out[slot])][slot - 1];
  }
  // chi-square, 4 degrees of freedom, p = 0.001 critical value 18.47
  for (const auto& row : counts) EXPECT_LT(oracle::chi_square_uniform(row), 18.47);
}
