#include <gtest/gtest.h>

#include <algorithm>

#include "pbm/oracle.hpp"
#include "pbm/pomset.hpp"
#include "pbm/sweep.hpp"

using pbm::Ideal;
using pbm::Mset;
using pbm::Pomset;

namespace {

Pomset forked() {
  // 1 below 2 and 3 (0-based: 0 < 1, 0 < 2), height 2.
  const std::vector<std::pair<int, int>> rel{{0, 1}, {0, 2}};
  return Pomset::from_relations(3, 2, rel);
}

std::vector<std::vector<int>> counts_of(const std::vector<Ideal>& ideals) {
  std::vector<std::vector<int>> out;
  for (const auto& i : ideals) out.emplace_back(i.mset().counts().begin(), i.mset().counts().end());
  return out;
}

}  // namespace

TEST(Pomset, Antichain) {
  const Pomset p = Pomset::antichain(3, 5);
  EXPECT_TRUE(p.relations().empty());
  EXPECT_TRUE(p.is_antichain());
  EXPECT_FALSE(p.is_chain());
}

TEST(Pomset, FromRelations) {
  const Pomset p = forked();
  EXPECT_TRUE(p.less(0, 1));
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_FALSE(p.comparable(1, 2));
  EXPECT_EQ(p.relations().size(), 2U);
}

TEST(Pomset, TransitiveClosure) {
  const std::vector<std::pair<int, int>> rel{{0, 1}, {1, 2}};
  const Pomset p = Pomset::from_relations(3, 1, rel);
  EXPECT_TRUE(p.less(0, 2));
  EXPECT_TRUE(p.is_chain());
  EXPECT_EQ(p, Pomset::chain(3, 1));
}

TEST(Pomset, RejectsCyclesAndBadLabels) {
  const std::vector<std::pair<int, int>> cycle{{0, 1}, {1, 0}};
  EXPECT_THROW(Pomset::from_relations(2, 1, cycle), pbm::PreconditionError);
  const std::vector<std::pair<int, int>> self{{1, 1}};
  EXPECT_THROW(Pomset::from_relations(2, 1, self), pbm::PreconditionError);
  const std::vector<std::pair<int, int>> out{{0, 5}};
  EXPECT_THROW(Pomset::from_relations(2, 1, out), pbm::PreconditionError);
}

TEST(Pomset, Dual) {
  const Pomset d = forked().dual();
  EXPECT_TRUE(d.less(1, 0));
  EXPECT_TRUE(d.less(2, 0));
  EXPECT_EQ(d.dual(), forked());
}

TEST(Ideal, PartialCountInAntichain) {
  // In an antichain every count vector is an ideal.
  const Pomset p = Pomset::antichain(3, 5);
  const Mset i(3, 5, {0, 2, 5});
  EXPECT_TRUE(pbm::is_ideal(p, i));
  EXPECT_FALSE(Ideal::make(p, i).is_full_count());
}

TEST(Ideal, FullCount) {
  const auto i = Ideal::make(forked(), Mset(3, 2, {2, 2, 0}));
  EXPECT_TRUE(i.is_full_count());
  EXPECT_EQ(i.root_size(), 2);
}

TEST(Ideal, NotDownwardClosed) {
  EXPECT_FALSE(pbm::is_ideal(forked(), Mset(3, 2, {1, 1, 0})));
  EXPECT_FALSE(pbm::is_ideal(forked(), Mset(3, 2, {0, 0, 2})));
  EXPECT_THROW(Ideal::make(forked(), Mset(3, 2, {1, 1, 0})), pbm::PreconditionError);
  EXPECT_FALSE(Ideal::try_make(forked(), Mset(3, 2, {0, 2, 0})).has_value());
}

TEST(Ideal, Generated) {
  const auto g = pbm::generated_ideal(forked(), Mset(3, 2, {2, 2, 1}));
  EXPECT_EQ(g.mset(), Mset(3, 2, {2, 2, 1}));
  const auto g2 = pbm::generated_ideal(forked(), Mset(3, 2, {0, 1, 0}));
  EXPECT_EQ(g2.mset(), Mset(3, 2, {2, 1, 0}));
  EXPECT_EQ(pbm::generated_ideal(forked(), Mset(3, 2)).cardinality(), 0);
}

TEST(Ideal, MaximalElements) {
  const auto i = Ideal::make(forked(), Mset(3, 2, {2, 1, 2}));
  EXPECT_EQ(i.maximal_elements(forked()), (std::vector<int>{1, 2}));
}

TEST(EnumerateIdeals, AntichainCount) {
  EXPECT_EQ(pbm::enumerate_ideals(Pomset::antichain(3, 5)).size(), 216U);
}

TEST(EnumerateIdeals, ChainUniquePerCardinality) {
  const auto got = pbm::ideals_of_cardinality(Pomset::chain(3, 2), 3);
  ASSERT_EQ(got.size(), 1U);
  EXPECT_EQ(got[0].mset(), Mset(3, 2, {2, 1, 0}));
  for (int t = 0; t <= 6; ++t) EXPECT_EQ(pbm::ideals_of_cardinality(Pomset::chain(3, 2), t).size(), 1U);
}

TEST(EnumerateIdeals, ChainOfTwo) {
  EXPECT_EQ(counts_of(pbm::enumerate_ideals(Pomset::chain(2, 2))),
            (std::vector<std::vector<int>>{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}}));
}

TEST(EnumerateIdeals, FilterByCardinalityAndRoots) {
  const auto got = pbm::enumerate_ideals(forked(), pbm::IdealFilter{.cardinality = 3, .root_size = 2});
  EXPECT_EQ(counts_of(got), (std::vector<std::vector<int>>{{2, 0, 1}, {2, 1, 0}}));
  const auto four = pbm::enumerate_ideals(forked(), pbm::IdealFilter{.cardinality = 4, .root_size = 2});
  EXPECT_EQ(counts_of(four), (std::vector<std::vector<int>>{{2, 0, 2}, {2, 2, 0}}));
}

TEST(EnumerateIdeals, LexicographicOrder) {
  const auto all = counts_of(pbm::enumerate_ideals(forked()));
  EXPECT_EQ(all.size(), 11U);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(EnumerateIdeals, MatchesOracleOnRandomPomsets) {
  pbm::sweep::Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = pbm::sweep::uniform(rng, 1, 5);
    const int h = pbm::sweep::uniform(rng, 1, 3);
    const Pomset p = pbm::sweep::random_pomset(n, h, rng, 0.5);
    auto lib = counts_of(pbm::enumerate_ideals(p));
    std::vector<std::vector<int>> ref;
    for (const auto& s : pbm::oracle::exhaustive_ideals(p)) ref.emplace_back(s.counts().begin(), s.counts().end());
    std::sort(ref.begin(), ref.end());
    EXPECT_EQ(lib, ref) << "trial " << trial;
  }
}

TEST(IdealComplement, IsIdealOfDual) {
  const Pomset c = Pomset::chain(3, 2);
  const auto comp = pbm::ideal_complement(c, Ideal::make(c, Mset(3, 2, {2, 1, 0})));
  EXPECT_EQ(comp.mset(), Mset(3, 2, {0, 1, 2}));
  EXPECT_TRUE(pbm::oracle::is_ideal_by_definition(c.dual(), comp.mset().counts()));
}

TEST(IdealComplement, RandomPomsets) {
  pbm::sweep::Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const Pomset p = pbm::sweep::random_pomset(4, 2, rng, 0.5);
    for (const auto& i : pbm::enumerate_ideals(p)) {
      const auto comp = pbm::ideal_complement(p, i);
      EXPECT_TRUE(pbm::oracle::is_ideal_by_definition(p.dual(), comp.mset().counts()));
      EXPECT_EQ(comp.cardinality() + i.cardinality(), 8);
    }
  }
}
