#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace nilcommute;

TEST(Partition, RejectsNonMonotoneAndNonPositive) {
  EXPECT_THROW(Partition({3, 4}), std::invalid_argument);
  EXPECT_THROW(Partition({3, 0}), std::invalid_argument);
  EXPECT_NO_THROW(Partition({}));
  EXPECT_THROW(parse_partition("2,3"), std::invalid_argument);
  EXPECT_THROW(parse_partition("2,x"), std::invalid_argument);
  EXPECT_EQ(parse_partition("5,4,3"), Partition({5, 4, 3}));
}

TEST(Partition, FrequencyRoundTrip) {
  const Partition p{7, 6, 5, 5, 5, 2, 2, 1};
  EXPECT_EQ(frequency(p).counts, (std::vector<int>{1, 2, 0, 0, 3, 1, 1}));
  for (int n = 0; n <= 14; ++n)
    for_each_partition(n, [](const Partition& q) { EXPECT_EQ(from_frequency(frequency(q)), q); });
}

TEST(Partition, RSetOfSevenSixFive) {
  const Partition p{7, 6, 5, 5, 5, 2, 2, 1};
  EXPECT_EQ(r_set(p), (std::vector<int>{7, 5, 2}));
  EXPECT_EQ(classify(p), PartitionClass::A);
  EXPECT_EQ(classify(Partition{}), PartitionClass::A);
  EXPECT_EQ(classify(Partition{1}), PartitionClass::B);
}

TEST(Partition, RSetMatchesGreedyDecomposition) {
  for (int n = 0; n <= 16; ++n)
    for_each_partition(n, [](const Partition& p) { ASSERT_EQ(r_set(p), oracle::r_set(p)) << p.to_string(); });
}

TEST(Partition, DeltaMatchesBoxRemovalOracle) {
  for (int n = 1; n <= 16; ++n)
    for_each_partition(n, [](const Partition& p) {
      const Partition d = delta(p);
      ASSERT_EQ(d, oracle::delta(p)) << p.to_string();
      ASSERT_EQ(d.total() + static_cast<int>(r_set(p).size()), p.total());
      ASSERT_EQ(d.length(), p.length() - (classify(p) == PartitionClass::B ? 1 : 0));
    });
  EXPECT_EQ(delta(Partition{}), Partition{});
}

TEST(Partition, AlmostRectangular) {
  EXPECT_EQ(almost_rectangular(7, 3), Partition({3, 2, 2}));
  EXPECT_EQ(almost_rectangular(6, 3), Partition({2, 2, 2}));
  EXPECT_TRUE(is_almost_rectangular(Partition{3, 3, 2}));
  EXPECT_FALSE(is_almost_rectangular(Partition{3, 1}));
  for (int m = 1; m <= 12; ++m)
    for (int k = 1; k <= m; ++k) {
      const Partition p = almost_rectangular(m, k);
      EXPECT_EQ(p.total(), m);
      EXPECT_EQ(p.length(), k);
      EXPECT_TRUE(is_almost_rectangular(p));
    }
}

TEST(Partition, StableAndKey) {
  EXPECT_TRUE(is_stable(Partition{8, 5, 2}));
  EXPECT_TRUE(is_stable(Partition{7}));
  EXPECT_FALSE(is_stable(Partition{5, 4}));
  EXPECT_FALSE(is_stable(Partition{6, 1, 1}));
  EXPECT_EQ(key(Partition{8, 5, 2}).s, (std::vector<int>{2, 2, 2}));
  EXPECT_EQ(key(Partition{9, 5}).s, (std::vector<int>{3, 5}));
  EXPECT_THROW(key(Partition{5, 4}), std::invalid_argument);
}

TEST(Partition, DominanceIsPartialOrder) {
  EXPECT_EQ(dominance_compare(Partition{4, 2}, Partition{3, 3}), Dominance::greater_or_equal);
  EXPECT_EQ(dominance_compare(Partition{3, 3}, Partition{4, 1, 1}), Dominance::incomparable);
  EXPECT_THROW(dominance_compare(Partition{2}, Partition{1}), std::invalid_argument);
  for (int n = 1; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps) {
      EXPECT_TRUE(dominates(a, a));
      for (const auto& b : ps) {
        if (dominates(a, b) && dominates(b, a)) {
          EXPECT_EQ(a, b);
        }
        for (const auto& c : ps)
          if (dominates(a, b) && dominates(b, c)) {
            EXPECT_TRUE(dominates(a, c));
          }
      }
    }
  }
}

TEST(Partition, DominanceMaximum) {
  EXPECT_EQ(dominance_maximum({Partition{3, 1}, Partition{4}, Partition{2, 2}}), Partition({4}));
  EXPECT_FALSE(dominance_maximum({Partition{3, 3}, Partition{4, 1, 1}}).has_value());
  EXPECT_FALSE(dominance_maximum({}).has_value());
}

TEST(Partition, MinArCoverMatchesSetPartitionSearch) {
  for (int n = 0; n <= 10; ++n)
    for_each_partition(n, [](const Partition& p) { ASSERT_EQ(min_ar_cover(p), oracle::min_ar_cover(p)) << p.to_string(); });
  EXPECT_THROW(min_ar_cover(Partition{21}), std::invalid_argument);
}

TEST(Partition, BlockNotation) {
  EXPECT_EQ(to_block_string(Partition{4, 1, 1, 1}), "(4,[3]^3)");
  EXPECT_EQ(to_block_string(Partition{4, 3, 3, 3}), "([13]^4)");
  EXPECT_EQ(to_block_string(Partition{7, 6, 5, 5, 5, 2, 2, 1}), "([13]^2,[15]^3,[5]^3)");
  EXPECT_EQ(Partition({5, 5, 2}).to_exponent_string(), "(5^2,2)");
}

TEST(Partition, CoranksInvertJordanType) {
  for (int n = 0; n <= 20; ++n)
    for_each_partition(n, [](const Partition& p) { ASSERT_EQ(jordan_from_coranks(corank_profile_of(p)), p); });
  const std::vector<int> bad_start{1, 2};
  const std::vector<int> convex{0, 1, 3, 3};
  const std::vector<int> unfinished{0, 2, 3};
  EXPECT_THROW(jordan_from_coranks(bad_start), std::invalid_argument);
  EXPECT_THROW(jordan_from_coranks(convex), std::invalid_argument);
  EXPECT_THROW(jordan_from_coranks(unfinished), std::invalid_argument);
}

TEST(Partition, GenerationCounts) {
  const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]);
}
