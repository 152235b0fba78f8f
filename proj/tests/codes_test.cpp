#include <gtest/gtest.h>

#include <map>
#include <set>

#include "pbm/codes.hpp"
#include "pbm/io.hpp"
#include "pbm/oracle.hpp"
#include "pbm/sweep.hpp"

using namespace pbm;

namespace {

Pomset forked() {
  const std::vector<std::pair<int, int>> rel{{0, 1}, {0, 2}};
  return Pomset::from_relations(3, 2, rel);
}

SpaceConfig z5() { return SpaceConfig(5, {2, 4, 1}, forked()); }

BlockCode z5_code() { return BlockCode::from_generators(z5(), {BlockVector({0, 3, 0, 2, 0, 0, 1})}); }

BlockCode z10_code() {
  return io::code_from_json(io::load_document(std::string(PBM_DATA_DIR) + "/z10_code.json"));
}

Ideal ideal(const Pomset& p, std::vector<int> counts) {
  return Ideal::make(p, Mset(p.size(), p.height(), std::move(counts)));
}

}  // namespace

TEST(BlockCode, SpanOfSingleRow) {
  const auto c = z5_code();
  EXPECT_TRUE(c.is_linear());
  ASSERT_EQ(c.size(), 5U);
  for (const auto& w : {BlockVector({0, 0, 0, 0, 0, 0, 0}), BlockVector({0, 3, 0, 2, 0, 0, 1}),
                        BlockVector({0, 1, 0, 4, 0, 0, 2}), BlockVector({0, 4, 0, 1, 0, 0, 3}),
                        BlockVector({0, 2, 0, 3, 0, 0, 4})}) {
    EXPECT_TRUE(c.contains(w));
  }
}

TEST(BlockCode, LinearityIsDetected) {
  EXPECT_TRUE(z10_code().is_linear());
  EXPECT_EQ(z10_code().size(), 20U);
  const auto cfg = z5();
  const auto nonlinear = BlockCode::from_codewords(cfg, {zero_vector(cfg), BlockVector({1, 0, 0, 0, 0, 0, 0})});
  EXPECT_FALSE(nonlinear.is_linear());
  const auto dup = BlockCode::from_codewords(cfg, {zero_vector(cfg), zero_vector(cfg)});
  EXPECT_EQ(dup.size(), 1U);
  EXPECT_THROW(BlockCode::from_codewords(cfg, {}), PreconditionError);
}

TEST(BlockCode, GeneratingSetSpansCode) {
  const auto c = z10_code();
  const auto gens = c.generating_set();
  const auto span = oracle::exhaustive_span(c.config(), gens);
  EXPECT_EQ(span, std::vector<BlockVector>(c.codewords().begin(), c.codewords().end()));
}

TEST(Logs, CeilAndExact) {
  EXPECT_EQ(ceil_log(5, 1), 0);
  EXPECT_EQ(ceil_log(5, 5), 1);
  EXPECT_EQ(ceil_log(5, 6), 2);
  EXPECT_EQ(ceil_log(10, 20), 2);
  EXPECT_EQ(exact_log(5, 15625), 6);
  EXPECT_FALSE(exact_log(10, 20).has_value());
}

TEST(MinimumDistance, Examples) {
  EXPECT_EQ(minimum_distance(z5_code()), 5);
  EXPECT_EQ(minimum_distance(z10_code()), 1);
  EXPECT_EQ(poset_minimum_distance(z5_code()), 3);
  const auto cfg = z5();
  EXPECT_THROW(minimum_distance(BlockCode::from_codewords(cfg, {zero_vector(cfg)})), PreconditionError);
}

TEST(MinimumDistance, WeightPathMatchesPairwise) {
  for (const auto& inst : sweep::general_sweep(21, 60, {.max_space = 20'000})) {
    if (inst.code.size() < 2 || inst.code.size() > 3000) continue;
    EXPECT_EQ(minimum_distance(inst.code), minimum_distance_pairwise(inst.code));
    EXPECT_EQ(minimum_distance(inst.code), oracle::exhaustive_min_distance(inst.config, inst.code.codewords()));
  }
}

TEST(Singleton, Z5Example) {
  const auto rep = mds_report(z5_code());
  EXPECT_EQ(rep.minimum_distance, 5);
  EXPECT_EQ(rep.r, 2);
  EXPECT_EQ(rep.t, 4);
  EXPECT_EQ(rep.max_sum, 6);
  EXPECT_EQ(rep.bound, 6);
  EXPECT_TRUE(rep.holds());
  EXPECT_TRUE(is_mds(z5_code()));
}

TEST(Singleton, FamilyReadings) {
  // Strict: |J| = 4 and two roots. Loose: two roots and |J| <= 4.
  const auto strict = ideal_family(forked(), 2, 4);
  ASSERT_EQ(strict.size(), 2U);
  EXPECT_EQ(strict[0].mset(), Mset(3, 2, {2, 0, 2}));
  EXPECT_EQ(strict[1].mset(), Mset(3, 2, {2, 2, 0}));
  const auto loose = ideal_family(forked(), 2, 4, true);
  ASSERT_EQ(loose.size(), 4U);
  EXPECT_EQ(loose[0].mset(), Mset(3, 2, {2, 0, 1}));
  EXPECT_EQ(loose[1].mset(), Mset(3, 2, {2, 0, 2}));
  EXPECT_EQ(loose[2].mset(), Mset(3, 2, {2, 1, 0}));
  EXPECT_EQ(loose[3].mset(), Mset(3, 2, {2, 2, 0}));
}

TEST(Singleton, SmallerCardinalityOverride) {
  const auto rep = singleton_deficiency(z5_code(), 2);
  EXPECT_EQ(rep.t, 2);
  EXPECT_TRUE(rep.holds());
  EXPECT_THROW(singleton_deficiency(z5_code(), 5), PreconditionError);
}

TEST(Singleton, RelabelledPomset) {
  // Same code with 2 below 1 and 3; the oracle finds it is still MDS.
  const std::vector<std::pair<int, int>> rel{{1, 0}, {1, 2}};
  const SpaceConfig cfg(5, {2, 4, 1}, Pomset::from_relations(3, 2, rel));
  const auto code = z5_code().with_config(cfg);
  const auto ref = oracle::exhaustive_singleton(cfg, code.codewords());
  const auto rep = mds_report(code);
  EXPECT_EQ(rep.minimum_distance, ref.d);
  EXPECT_EQ(rep.max_sum, ref.max_sum);
  EXPECT_TRUE(is_mds(code));
}

TEST(Singleton, WholeSpaceAndZeroCode) {
  const SpaceConfig cfg(3, {1, 2}, Pomset::chain(2, 1));
  const auto whole = BlockCode::from_codewords(cfg, enumerate_space(cfg));
  const auto rep = mds_report(whole);
  EXPECT_EQ(rep.bound, 0);
  EXPECT_EQ(rep.max_sum, 0);
  EXPECT_TRUE(rep.attained());
  EXPECT_TRUE(is_mds(BlockCode::from_codewords(cfg, {zero_vector(cfg)})));
}

TEST(PosetSingleton, Z5Example) {
  const auto rep = poset_mds_report(z5_code());
  EXPECT_EQ(rep.minimum_distance, 3);
  EXPECT_EQ(rep.max_sum, 6);
  EXPECT_EQ(rep.bound, 6);
  EXPECT_TRUE(is_mds_poset_block(z5_code()));
}

TEST(WeightHistogram, Z5Example) {
  EXPECT_EQ(weight_histogram(z5_code()), (std::vector<std::uint64_t>{1, 0, 0, 0, 0, 4, 0}));
}

TEST(IPerfect, Z10Example) {
  const auto c = z10_code();
  const auto i = ideal(c.config().pomset(), {0, 2, 5});
  EXPECT_TRUE(is_I_perfect(c, i));
  EXPECT_TRUE(is_I_perfect(c, i, {}, PerfectionMethod::marking));
  EXPECT_TRUE(oracle::exhaustive_is_I_perfect(c.config(), c.codewords(), i.mset()));
}

TEST(IPerfect, Z5Example) {
  const auto c = z5_code();
  const auto p = forked();
  // Oracle: only {2/1,2/2} tiles; {2/1,2/3} covers 5 * 5^3 < 5^7 vectors.
  EXPECT_TRUE(is_I_perfect(c, ideal(p, {2, 2, 0})));
  EXPECT_FALSE(is_I_perfect(c, ideal(p, {2, 0, 2})));
  EXPECT_FALSE(is_I_perfect(c, ideal(p, {2, 1, 0})));
  EXPECT_FALSE(is_I_perfect(c, ideal(p, {2, 0, 1})));
  for (const auto& counts : std::vector<std::vector<int>>{{2, 2, 0}, {2, 0, 2}, {2, 1, 0}, {2, 0, 1}}) {
    EXPECT_EQ(is_I_perfect(c, ideal(p, counts), {}, PerfectionMethod::marking),
              oracle::exhaustive_is_I_perfect(c.config(), c.codewords(), Mset(3, 2, counts)));
  }
}

TEST(IPerfect, ForeignIdealRejected) {
  EXPECT_THROW(is_I_perfect(z5_code(), ideal(Pomset::antichain(3, 2), {0, 2, 0})), PreconditionError);
}

TEST(RPerfect, RadiusZero) {
  const SpaceConfig cfg(3, {1, 1}, Pomset::antichain(2, 1));
  const auto whole = BlockCode::from_codewords(cfg, enumerate_space(cfg));
  EXPECT_TRUE(is_r_perfect(whole, 0));
  EXPECT_FALSE(is_r_perfect(z10_code(), 0));
  EXPECT_TRUE(is_r_error_correcting_direct(z10_code(), 0));
  EXPECT_TRUE(is_r_error_correcting_criterion(z10_code(), 0));
}

TEST(RErrorCorrecting, Z10AllRadii) {
  const auto c = z10_code();
  for (int r = 0; r <= 15; ++r) {
    const bool ref = oracle::exhaustive_is_r_error_correcting(c.config(), c.codewords(), r);
    EXPECT_EQ(is_r_error_correcting_direct(c, r), ref) << r;
    EXPECT_EQ(is_r_error_correcting_criterion(c, r), ref) << r;
    EXPECT_EQ(is_r_perfect(c, r), oracle::exhaustive_is_r_perfect(c.config(), c.codewords(), r)) << r;
  }
}

TEST(RErrorCorrecting, UnionCombinationIsTooWeak) {
  // Z_11, one block, h = 5: {0, 3} has d = 3; radius-2 balls share 1 and 2.
  const SpaceConfig cfg(11, {1}, Pomset::antichain(1, 5));
  const auto c = BlockCode::from_codewords(cfg, {BlockVector({0}), BlockVector({3})});
  EXPECT_FALSE(is_r_error_correcting_direct(c, 2));
  EXPECT_FALSE(is_r_error_correcting_criterion(c, 2, BallCombination::mset_sum));
  EXPECT_TRUE(is_r_error_correcting_criterion(c, 2, BallCombination::mset_union));
  EXPECT_FALSE(oracle::exhaustive_is_r_error_correcting(cfg, c.codewords(), 2));
}

TEST(NoPerfectCodes, TinyExhaustiveSearch) {
  // When several ideals have cardinality N - k, no code of size m^k is
  // (N - k)-perfect. Every subset of the right size is tried.
  struct Case {
    int m;
    std::vector<int> k;
    int code_exp;
  };
  for (const auto& cs : {Case{2, {1, 1}, 1}, Case{3, {1, 1}, 1}, Case{2, {1, 1, 1}, 1}, Case{2, {1, 1, 1}, 2},
                         Case{4, {1, 1}, 1}, Case{2, {2, 1}, 2}}) {
    const SpaceConfig cfg(cs.m, cs.k, Pomset::antichain(static_cast<int>(cs.k.size()), cs.m / 2));
    const auto all = enumerate_space(cfg);
    const int r = cfg.length() - cs.code_exp;
    ASSERT_GE(ideals_of_cardinality(cfg.pomset(), r).size(), 2U);
    const auto size = static_cast<std::size_t>(detail::pow_or_throw(cs.m, cs.code_exp));
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      std::vector<BlockVector> words;
      for (auto i : idx) words.push_back(all[i]);
      ASSERT_FALSE(is_r_perfect(BlockCode::from_codewords(cfg, words), r));
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == all.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

TEST(Dual, Z5Code) {
  const auto c = z5_code();
  const auto d = dual_code(c);
  EXPECT_EQ(d.size(), 15625U);
  EXPECT_EQ(c.size() * d.size(), 78125U);
  EXPECT_TRUE(d.is_linear());
  const auto ref = oracle::exhaustive_dual(c.config(), c.codewords());
  EXPECT_EQ(std::vector<BlockVector>(d.codewords().begin(), d.codewords().end()), ref);
}

TEST(Dual, ZeroCodeAndNonlinear) {
  const SpaceConfig cfg(4, {1, 2}, Pomset::antichain(2, 2));
  const auto zero = BlockCode::from_codewords(cfg, {zero_vector(cfg)});
  EXPECT_EQ(dual_code(zero).size(), 64U);
  const auto nonlinear = BlockCode::from_codewords(cfg, {zero_vector(cfg), BlockVector({1, 0, 0})});
  EXPECT_THROW(dual_code(nonlinear), PreconditionError);
}

TEST(Dual, CardinalityProductOnSweep) {
  for (const auto& inst : sweep::general_sweep(31, 40, {.max_space = 5'000})) {
    if (!inst.code.is_linear()) continue;
    const auto d = dual_code(inst.code);
    EXPECT_EQ(inst.code.size() * d.size(), *inst.config.space_size());
    EXPECT_EQ(dual_code(d).size(), inst.code.size());
  }
}

TEST(Systematic, PartialCountConflict) {
  const auto c = z10_code();
  const auto res = systematic_function(c, ideal(c.config().pomset(), {0, 2, 5}));
  EXPECT_FALSE(res.map.has_value());
  ASSERT_TRUE(res.conflict.has_value());
  EXPECT_EQ(res.conflict->information, BlockVector({0}));
  ASSERT_EQ(res.conflicts.size(), 10U);
  const auto& one = res.conflicts[1];
  EXPECT_EQ(one.information, BlockVector({1}));
  EXPECT_EQ(one.first_image, BlockVector({0, 0}));
  EXPECT_EQ(one.second_image, BlockVector({5, 0}));
  std::map<BlockVector, std::set<BlockVector>> images;
  for (const auto& w : c.codewords()) {
    auto [info, parity] = split_blocks(c.config(), w, std::vector<int>{1, 2});
    images[info].insert(parity);
  }
  EXPECT_EQ(images.at(BlockVector({1})), (std::set<BlockVector>{BlockVector({0, 0}), BlockVector({5, 0})}));
}

TEST(Systematic, FullCountIsLinearMap) {
  const auto c = z5_code();
  const auto res = systematic_function(c, ideal(forked(), {2, 2, 0}));
  ASSERT_TRUE(res.map.has_value());
  EXPECT_EQ(res.map->information_blocks, std::vector<int>{2});
  EXPECT_TRUE(res.map->total);
  EXPECT_TRUE(res.map->linear);
  EXPECT_EQ(res.map->table.at(BlockVector({1})), BlockVector({0, 3, 0, 2, 0, 0}));
}

TEST(Systematic, RequiresPerfection) {
  EXPECT_THROW(systematic_function(z5_code(), ideal(forked(), {2, 1, 0})), PreconditionError);
}

TEST(Systematic, ConstructedCodesAreIPerfect) {
  sweep::Rng rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto cfg = sweep::random_config({.max_space = 20'000}, rng);
    const auto parity = sweep::random_full_count_ideal(cfg.pomset(), rng);
    const auto code = sweep::systematic_code(cfg, parity, rng);
    EXPECT_TRUE(is_I_perfect(code, parity));
    const auto res = systematic_function(code, parity);
    ASSERT_TRUE(res.map.has_value());
    EXPECT_TRUE(res.map->total);
    EXPECT_TRUE(res.map->linear);
  }
}
