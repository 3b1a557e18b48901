#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "tsphyb/uncross.hpp"

using namespace tsphyb;

namespace {

// Edge 1 (P0-P1) and edge 7 (P6-P7) cross; everything else is clean.
Instance worked_branch() {
  return Instance("branch", Metric::euc_2d,
                  {{0, 0}, {10, 10}, {8, 14}, {6, 16}, {4, 16}, {2, 14}, {0, 10}, {10, 0}});
}

const Instance kSquare("sq", Metric::euc_2d, {{0, 0}, {10, 0}, {10, 10}, {0, 10}});

}  // namespace

TEST(Uncross, SegmentExamples) {
  EXPECT_TRUE(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  EXPECT_FALSE(segments_cross({0, 0}, {1, 0}, {0, 1}, {1, 1}));
  EXPECT_FALSE(segments_cross({0, 0}, {1, 1}, {1, 1}, {2, 0}));
  EXPECT_FALSE(segments_cross({0, 0}, {2, 0}, {1, 0}, {3, 0}));  // collinear overlap
  EXPECT_FALSE(segments_cross({0, 0}, {1, 1}, {3, 0}, {0, 3}));  // lines meet past (1,1)
}

TEST(Uncross, SegmentTestSymmetric) {
  Rng rng(3);
  for (int t = 0; t < 2000; ++t) {
    Coord a{rng.uniform(0, 10), rng.uniform(0, 10)}, b{rng.uniform(0, 10), rng.uniform(0, 10)};
    Coord c{rng.uniform(0, 10), rng.uniform(0, 10)}, d{rng.uniform(0, 10), rng.uniform(0, 10)};
    const bool x = segments_cross(a, b, c, d);
    EXPECT_EQ(x, segments_cross(c, d, a, b));
    EXPECT_EQ(x, segments_cross(b, a, d, c));
  }
}

TEST(Uncross, WorkedBranchReversal) {
  std::vector<int> labels{61, 9, 47, 53, 62, 33, 11, 39};
  reverse_between(labels, 1, 7);
  EXPECT_EQ(labels, (std::vector<int>{61, 11, 33, 62, 53, 47, 9, 39}));

  const auto inst = worked_branch();
  std::vector<int> order{0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_TRUE(edges_cross(order, inst, 1, 7));
  EXPECT_EQ(uncross_pass(order, inst), 1);
  EXPECT_EQ(order, (std::vector<int>{0, 6, 5, 4, 3, 2, 1, 7}));
  const std::vector<int> names{61, 9, 47, 53, 62, 33, 11, 39};
  std::vector<int> named;
  for (int c : order) named.push_back(names[static_cast<std::size_t>(c)]);
  EXPECT_EQ(named, (std::vector<int>{61, 11, 33, 62, 53, 47, 9, 39}));
}

TEST(Uncross, SquareFixedInOnePass) {
  std::vector<int> order{0, 2, 1, 3};
  EXPECT_EQ(closed_length(order, kSquare), 48);
  EXPECT_EQ(uncross_pass(order, kSquare), 1);
  EXPECT_EQ(closed_length(order, kSquare), 40);
  EXPECT_EQ(uncross_pass(order, kSquare), 0);
}

TEST(Uncross, AdjacentEdgesNeverCross) {
  std::vector<int> order{0, 2, 1, 3};
  for (int i = 0; i < 4; ++i) {
    EXPECT_FALSE(edges_cross(order, kSquare, i, (i + 1) % 4));
  }
  EXPECT_FALSE(edges_cross(order, kSquare, 0, 3));
}

TEST(Uncross, PassIsMonotoneAndReachesFixpoint) {
  const auto inst = load_instance(oracle::data("kroA100.tsp"));
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(s);
    std::vector<int> order(100);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng.engine());
    auto len = closed_length(order, inst);
    int passes = 0;
    for (; passes < 5000; ++passes) {
      const int fixed = uncross_pass(order, inst);
      const auto next = closed_length(order, inst);
      ASSERT_LE(next, len);
      len = next;
      if (fixed == 0) break;
    }
    ASSERT_LT(passes, 5000);
    ASSERT_TRUE(is_permutation_of_n(order, 100));
    const auto settled = order;
    const auto trace = final_uncross_loop(order, inst, 3);
    EXPECT_EQ(trace, (std::vector<std::int64_t>{len, len, len}));
    EXPECT_EQ(order, settled);
  }
}

TEST(Uncross, FinalLoopTraceNonIncreasing) {
  const auto inst = load_instance(oracle::data("kroA100.tsp"));
  Rng rng(77);
  std::vector<int> order(100);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng.engine());
  const auto start = closed_length(order, inst);
  const auto trace = final_uncross_loop(order, inst, 5);
  ASSERT_EQ(trace.size(), 5u);
  EXPECT_LE(trace[0], start);
  for (std::size_t k = 1; k < trace.size(); ++k) EXPECT_LE(trace[k], trace[k - 1]);
  EXPECT_EQ(trace.back(), closed_length(order, inst));
}

TEST(Uncross, ProbabilityZeroIsIdentity) {
  const auto inst = load_instance(oracle::data("kroA100.tsp"));
  Rng rng(1);
  std::vector<int> order(100);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng.engine());
  const auto before = order;
  UncrossStats st;
  uncross_prob_operator(order, inst, 0.0, 500, rng, &st);
  EXPECT_EQ(order, before);
  EXPECT_GT(st.crossings, 0);
  EXPECT_EQ(st.repairs, 0);
}

TEST(Uncross, ProbabilityOneAlwaysFixes) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(s);
    std::vector<int> order{0, 2, 1, 3};
    UncrossStats st;
    uncross_prob_operator(order, kSquare, 1.0, 1, rng, &st);
    EXPECT_EQ(st.repairs, st.crossings);
    if (st.crossings > 0) {
      EXPECT_EQ(closed_length(order, kSquare), 40);
    }
  }
}

TEST(Uncross, FixFrequencyFollowsProbability) {
  long found = 0, fixed = 0;
  for (std::uint64_t s = 0; s < 40000 && found < 10000; ++s) {
    Rng rng(s);
    std::vector<int> order{0, 2, 1, 3};
    UncrossStats st;
    uncross_prob_operator(order, kSquare, 0.5, 1, rng, &st);
    if (st.crossings == 0) continue;
    ++found;
    fixed += st.repairs > 0;
  }
  ASSERT_EQ(found, 10000);
  EXPECT_NEAR(static_cast<double>(fixed) / static_cast<double>(found), 0.5, 0.02);
}
