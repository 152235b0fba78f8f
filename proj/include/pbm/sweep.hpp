#pragma once

// Seeded random instances for property sweeps.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pbm/block_space.hpp"
#include "pbm/chain.hpp"
#include "pbm/codes.hpp"
#include "pbm/pomset.hpp"

namespace pbm::sweep {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t default_seed = 20240611;

struct SweepParams {
  std::vector<int> moduli{3, 4, 5, 6, 7};
  int max_blocks = 4;
  int max_block_length = 3;
  std::uint64_t max_space = 1'000'000;
};

struct Instance {
  SpaceConfig config;
  BlockCode code;
  std::string kind;
};

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

/// Random strict order: labels are shuffled into a linear extension and each
/// forward pair becomes a relation with probability `density`.
inline Pomset random_pomset(int n, int h, Rng& rng, double density = 0.35) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng, density)) rel.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    }
  }
  return Pomset::from_relations(n, h, rel);
}

/// A total order on shuffled labels.
inline Pomset random_chain(int n, int h, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
  return Pomset::from_relations(n, h, rel);
}

/// Random block lengths and modulus with m^N under a cap drawn toward small
/// spaces, so that most instances are cheap and a few are near the limit.
inline std::pair<int, std::vector<int>> random_shape(const SweepParams& params, Rng& rng, int min_blocks = 1,
                                                     int min_height = 1) {
  static constexpr std::uint64_t caps[] = {1'000, 10'000, 100'000, 1'000'000};
  static constexpr double weights[] = {5, 3, 2, 1};
  std::discrete_distribution<int> pick_cap(std::begin(weights), std::end(weights));
  std::vector<int> moduli;
  for (int m : params.moduli) {
    if (m / 2 >= min_height) moduli.push_back(m);
  }
  if (moduli.empty()) throw PreconditionError("no modulus satisfies the height requirement");
  for (;;) {
    const std::uint64_t cap = std::min(params.max_space, caps[pick_cap(rng)]);
    const int m = moduli[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(moduli.size()) - 1))];
    const int n = uniform(rng, min_blocks, params.max_blocks);
    std::vector<int> k(static_cast<std::size_t>(n));
    for (int& x : k) x = uniform(rng, 1, params.max_block_length);
    const auto size = detail::checked_pow(static_cast<std::uint64_t>(m),
                                          static_cast<std::uint64_t>(std::accumulate(k.begin(), k.end(), 0)));
    if (size && *size <= cap) return {m, std::move(k)};
  }
}

inline SpaceConfig random_config(const SweepParams& params, Rng& rng) {
  auto [m, k] = random_shape(params, rng);
  const int n = static_cast<int>(k.size());
  return SpaceConfig(m, std::move(k), random_pomset(n, m / 2, rng));
}

inline SpaceConfig random_chain_config(const SweepParams& params, Rng& rng, int min_blocks = 1, int min_height = 1) {
  auto [m, k] = random_shape(params, rng, min_blocks, min_height);
  const int n = static_cast<int>(k.size());
  return SpaceConfig(m, std::move(k), random_chain(n, m / 2, rng));
}

inline BlockVector random_vector(const SpaceConfig& cfg, Rng& rng) {
  std::vector<int> x(static_cast<std::size_t>(cfg.length()));
  for (int& v : x) v = uniform(rng, 0, cfg.modulus() - 1);
  return BlockVector(std::move(x));
}

/// Span of one to three random vectors.
inline BlockCode random_generator_code(const SpaceConfig& cfg, Rng& rng, const EnumerationLimits& limits = {}) {
  std::vector<BlockVector> rows;
  const int count = uniform(rng, 1, 3);
  for (int i = 0; i < count; ++i) rows.push_back(random_vector(cfg, rng));
  return BlockCode::from_generators(cfg, std::move(rows), limits);
}

/// A few random vectors with no structure (usually nonlinear).
inline BlockCode random_word_code(const SpaceConfig& cfg, Rng& rng) {
  std::vector<BlockVector> words{zero_vector(cfg)};
  const int count = uniform(rng, 1, 6);
  for (int i = 0; i < count; ++i) words.push_back(random_vector(cfg, rng));
  return BlockCode::from_codewords(cfg, std::move(words));
}

/// {(x, L x)}: information coordinates outside the root blocks of `parity`,
/// parity coordinates on them, L a random linear map.
inline BlockCode systematic_code(const SpaceConfig& cfg, const Ideal& parity, Rng& rng,
                                 const EnumerationLimits& limits = {}) {
  std::vector<char> is_parity(static_cast<std::size_t>(cfg.block_count()), 0);
  for (int b : parity.root_set()) is_parity[static_cast<std::size_t>(b)] = 1;
  std::vector<int> info_coords;
  std::vector<int> parity_coords;
  for (int b = 0; b < cfg.block_count(); ++b) {
    for (int j = 0; j < cfg.block_length(b); ++j) {
      (is_parity[static_cast<std::size_t>(b)] ? parity_coords : info_coords).push_back(cfg.block_offset(b) + j);
    }
  }
  std::vector<BlockVector> rows;
  for (int c : info_coords) {
    std::vector<int> row(static_cast<std::size_t>(cfg.length()), 0);
    row[static_cast<std::size_t>(c)] = 1;
    for (int p : parity_coords) row[static_cast<std::size_t>(p)] = uniform(rng, 0, cfg.modulus() - 1);
    rows.emplace_back(std::move(row));
  }
  if (rows.empty()) return BlockCode::from_codewords(cfg, {zero_vector(cfg)});
  return BlockCode::from_generators(cfg, std::move(rows), limits);
}

inline Ideal random_full_count_ideal(const Pomset& p, Rng& rng) {
  std::vector<Ideal> full;
  for (auto& i : enumerate_ideals(p)) {
    if (i.is_full_count()) full.push_back(std::move(i));
  }
  return full[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(full.size()) - 1))];
}

/// Systematic chain code with parity on the lowest r positions (1 <= r < n);
/// such codes are MDS with |C| = m^k.
inline BlockCode chain_mds_code(const SpaceConfig& cfg, Rng& rng, const EnumerationLimits& limits = {}) {
  const ChainContext ctx(cfg);
  const int n = cfg.block_count();
  const int r = n > 1 ? uniform(rng, 1, n - 1) : 0;
  return systematic_code(cfg, ctx.ideal_of_cardinality(r * cfg.height()), rng, limits);
}

/// General sweep: random pomsets with random generator codes, systematic codes
/// for a random full-count ideal, and a few unstructured codes.
inline std::vector<Instance> general_sweep(std::uint64_t seed, int count, const SweepParams& params = {},
                                           const EnumerationLimits& limits = {}) {
  Rng rng(seed);
  std::vector<Instance> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    SpaceConfig cfg = random_config(params, rng);
    const int roll = uniform(rng, 0, 9);
    if (roll < 6) {
      out.push_back({cfg, random_generator_code(cfg, rng, limits), "generators"});
    } else if (roll < 9) {
      const Ideal parity = random_full_count_ideal(cfg.pomset(), rng);
      out.push_back({cfg, systematic_code(cfg, parity, rng, limits), "systematic"});
    } else {
      out.push_back({cfg, random_word_code(cfg, rng), "words"});
    }
  }
  return out;
}

/// Chain sweep: constructed MDS codes and random linear codes on shuffled chains.
inline std::vector<Instance> chain_sweep(std::uint64_t seed, int count, const SweepParams& params = {},
                                         const EnumerationLimits& limits = {}) {
  Rng rng(seed);
  std::vector<Instance> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    SpaceConfig cfg = random_chain_config(params, rng);
    if (coin(rng, 0.5)) {
      out.push_back({cfg, chain_mds_code(cfg, rng, limits), "chain-mds"});
    } else {
      out.push_back({cfg, random_generator_code(cfg, rng, limits), "chain-generators"});
    }
  }
  return out;
}

/// Constructed MDS chain codes with floor(m/2) >= 2 and at least two blocks,
/// half of them forced to have unequal neighbouring block lengths.
inline std::vector<Instance> mds_chain_sweep(std::uint64_t seed, int count, const SweepParams& params = {},
                                             const EnumerationLimits& limits = {}) {
  Rng rng(seed);
  std::vector<Instance> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    SpaceConfig cfg = random_chain_config(params, rng, 2, 2);
    auto k = cfg.block_lengths();
    const bool uneven = std::adjacent_find(k.begin(), k.end(), std::not_equal_to<>()) != k.end();
    if (!uneven && out.size() % 2 == 0) continue;
    out.push_back({cfg, chain_mds_code(cfg, rng, limits), "chain-mds"});
  }
  return out;
}

}  // namespace pbm::sweep
