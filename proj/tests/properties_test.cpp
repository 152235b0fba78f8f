// Fixed-seed sweeps comparing the library with the oracle.

#include <gtest/gtest.h>

#include "pbm/sweep.hpp"
#include "pbm/verify.hpp"

using namespace pbm;

TEST(Properties, LibraryMatchesOracleOnGeneralSweep) {
  const verify::SuiteOptions opt{.max_space = 20'000, .max_work = 2'000'000};
  for (const auto& inst : sweep::general_sweep(sweep::default_seed, 80, {.max_space = 20'000})) {
    for (const auto& r : verify::instance_suite(inst.code, opt)) {
      EXPECT_TRUE(r.pass()) << r.claim << " on " << r.instance << ": oracle " << r.expected << ", library "
                            << r.computed;
    }
  }
}

TEST(Properties, LibraryMatchesOracleOnChainSweep) {
  const verify::SuiteOptions opt{.max_space = 20'000, .max_work = 2'000'000};
  for (const auto& inst : sweep::chain_sweep(sweep::default_seed + 1, 40, {.max_space = 20'000})) {
    for (const auto& r : verify::instance_suite(inst.code, opt)) {
      EXPECT_TRUE(r.pass()) << r.claim << " on " << r.instance << ": oracle " << r.expected << ", library "
                            << r.computed;
    }
  }
}

TEST(Properties, SingletonBoundHolds) {
  for (const auto& inst : sweep::general_sweep(sweep::default_seed + 2, 150, {.max_space = 100'000})) {
    const auto rep = mds_report(inst.code);
    EXPECT_TRUE(rep.holds()) << "max_sum " << rep.max_sum << " bound " << rep.bound;
    if (rep.attained()) EXPECT_TRUE(is_mds_poset_block(inst.code));
  }
}

TEST(Properties, SweepsAreReproducible) {
  const auto a = sweep::general_sweep(99, 10);
  const auto b = sweep::general_sweep(99, 10);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].config, b[i].config);
    EXPECT_EQ(std::vector<BlockVector>(a[i].code.codewords().begin(), a[i].code.codewords().end()),
              std::vector<BlockVector>(b[i].code.codewords().begin(), b[i].code.codewords().end()));
  }
}

TEST(Properties, SuiteRunsInParallel) {
  const auto inst = sweep::general_sweep(5, 1, {.max_space = 5'000})[0];
  const auto serial = verify::instance_suite(inst.code, {.jobs = 1});
  const auto parallel = verify::instance_suite(inst.code, {.jobs = 4});
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].claim, parallel[i].claim);
    EXPECT_EQ(serial[i].computed, parallel[i].computed);
  }
}
