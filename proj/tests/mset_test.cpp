#include <gtest/gtest.h>

#include "pbm/mset.hpp"

using pbm::Mset;

TEST(Mset, RegularCardinality) {
  const Mset m = Mset::regular(3, 5);
  EXPECT_EQ(m.cardinality(), 15);
  EXPECT_EQ(m.root_size(), 3);
}

TEST(Mset, RootSetSkipsZeroCounts) {
  const Mset m(3, 5, {0, 2, 5});
  EXPECT_EQ(m.root_set(), (std::vector<int>{1, 2}));
  EXPECT_EQ(m.cardinality(), 7);
  EXPECT_TRUE(m.contains(2, 1));
  EXPECT_FALSE(m.contains(3, 1));
}

TEST(Mset, RejectsBadCounts) {
  EXPECT_THROW(Mset(2, 2, {3, 0}), pbm::PreconditionError);
  EXPECT_THROW(Mset(2, 2, {-1, 0}), pbm::PreconditionError);
  EXPECT_THROW(Mset(2, 2, {0}), pbm::PreconditionError);
}

TEST(Mset, Operations) {
  const Mset a(3, 4, {1, 3, 0});
  const Mset b(3, 4, {2, 2, 4});
  EXPECT_EQ(pbm::mset_union(a, b), Mset(3, 4, {2, 3, 4}));
  EXPECT_EQ(pbm::mset_intersection(a, b), Mset(3, 4, {1, 2, 0}));
  EXPECT_EQ(pbm::mset_sum(a, b), Mset(3, 4, {3, 4, 4}));
  EXPECT_EQ(pbm::mset_difference(a, b), Mset(3, 4, {0, 1, 0}));
  EXPECT_EQ(pbm::complement(a), Mset(3, 4, {3, 1, 4}));
  EXPECT_TRUE(pbm::is_submset(pbm::mset_intersection(a, b), a));
  EXPECT_FALSE(pbm::is_submset(a, b));
}

TEST(Mset, IncompatibleOperands) {
  EXPECT_THROW(pbm::mset_union(Mset(2, 2), Mset(3, 2)), pbm::PreconditionError);
  EXPECT_THROW(pbm::is_submset(Mset(2, 2), Mset(2, 3)), pbm::PreconditionError);
}

TEST(Mset, WithCount) {
  const Mset m = Mset(2, 3).with_count(1, 2);
  EXPECT_EQ(m.count(1), 2);
  EXPECT_EQ(m.count(0), 0);
}
