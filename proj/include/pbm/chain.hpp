#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pbm/block_space.hpp"
#include "pbm/codes.hpp"
#include "pbm/error.hpp"
#include "pbm/pomset.hpp"

namespace pbm {

/// A space whose pomset is a chain. Labels are relabeled by chain position so
/// that closed forms can be written for the usual order 0 < 1 < ... < n-1;
/// every function below accepts objects in the original labeling.
class ChainContext {
 public:
  explicit ChainContext(SpaceConfig cfg) : cfg_(std::move(cfg)) {
    const Pomset& p = cfg_.pomset();
    if (!p.is_chain()) throw PreconditionError("pomset is not a chain");
    const int n = p.size();
    order_.assign(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a) {
      int below = 0;
      for (int b = 0; b < n; ++b) below += p.less(b, a) ? 1 : 0;
      order_[static_cast<std::size_t>(below)] = a;
    }
    std::vector<int> k(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) k[static_cast<std::size_t>(pos)] = cfg_.block_length(label_at(pos));
    normalized_ = SpaceConfig(cfg_.modulus(), std::move(k), Pomset::chain(n, cfg_.height()));
  }

  const SpaceConfig& config() const noexcept { return cfg_; }
  /// Same space with blocks reordered so that the chain is 0 < 1 < ... < n-1.
  const SpaceConfig& normalized() const noexcept { return normalized_; }

  /// Label sitting at a chain position.
  int label_at(int position) const { return order_.at(static_cast<std::size_t>(position)); }

  BlockVector normalize(const BlockVector& v) const {
    std::vector<int> out;
    out.reserve(v.size());
    for (int label : order_) {
      auto b = v.block(cfg_, label);
      out.insert(out.end(), b.begin(), b.end());
    }
    return BlockVector(std::move(out));
  }

  BlockVector denormalize(const BlockVector& v) const {
    std::vector<int> out(v.size());
    for (int pos = 0; pos < cfg_.block_count(); ++pos) {
      const int label = label_at(pos);
      auto src = v.block(normalized_, pos);
      std::copy(src.begin(), src.end(), out.begin() + cfg_.block_offset(label));
    }
    return BlockVector(std::move(out));
  }

  Ideal normalize(const Ideal& ideal) const {
    std::vector<int> counts(order_.size());
    for (std::size_t pos = 0; pos < order_.size(); ++pos) counts[pos] = ideal.count(order_[pos]);
    return Ideal::make(normalized_.pomset(), Mset(cfg_.block_count(), cfg_.height(), std::move(counts)));
  }

  BlockCode normalize(const BlockCode& code) const {
    std::vector<BlockVector> words;
    words.reserve(code.size());
    for (const auto& c : code.codewords()) words.push_back(normalize(c));
    return BlockCode::from_codewords(normalized_, std::move(words));
  }

  /// The unique ideal of cardinality t, in the original labeling.
  Ideal ideal_of_cardinality(int t) const {
    const int h = cfg_.height();
    const int n = cfg_.block_count();
    if (t < 0 || t > n * h) throw PreconditionError("no ideal of cardinality " + std::to_string(t));
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (int pos = 0; pos < n && t > 0; ++pos) {
      const int c = std::min(t, h);
      counts[static_cast<std::size_t>(label_at(pos))] = c;
      t -= c;
    }
    return Ideal::make(cfg_.pomset(), Mset(n, h, std::move(counts)));
  }

  /// Sum of normalized block lengths over positions [0, positions).
  int prefix_length(int positions) const {
    int s = 0;
    for (int pos = 0; pos < positions; ++pos) s += normalized_.block_length(pos);
    return s;
  }

 private:
  SpaceConfig cfg_;
  SpaceConfig normalized_;
  std::vector<int> order_;
};

/// c + (position of the top nonzero block) * floor(m/2), where c is the largest
/// Lee weight in that block. Zero for the zero vector.
inline int chain_weight(const ChainContext& ctx, const BlockVector& v) {
  validate_vector(ctx.config(), v);
  const auto& cfg = ctx.normalized();
  const BlockVector nv = ctx.normalize(v);
  for (int pos = cfg.block_count() - 1; pos >= 0; --pos) {
    int c = 0;
    for (int x : nv.block(cfg, pos)) c = std::max(c, lee_weight(x, cfg.modulus()));
    if (c > 0) return c + pos * cfg.height();
  }
  return 0;
}

/// Closed-form |B_I| for a chain: m^{sum of k} for full count, otherwise
/// (1 + 2c)^{k_top} m^{sum of k below the top}, with c = |I| - (|I*| - 1) floor(m/2).
inline std::uint64_t chain_ball_cardinality(const ChainContext& ctx, const Ideal& ideal) {
  const auto& cfg = ctx.normalized();
  const Ideal ni = ctx.normalize(ideal);
  const int roots = ni.root_size();
  if (roots == 0) return 1;
  const auto m = static_cast<std::uint64_t>(cfg.modulus());
  if (ni.is_full_count()) return detail::pow_or_throw(m, static_cast<std::uint64_t>(ctx.prefix_length(roots)));
  const int top = roots - 1;
  const int c = ni.cardinality() - top * cfg.height();
  const auto partial = detail::pow_or_throw(static_cast<std::uint64_t>(1 + 2 * c),
                                            static_cast<std::uint64_t>(cfg.block_length(top)));
  const auto full = detail::pow_or_throw(m, static_cast<std::uint64_t>(ctx.prefix_length(top)));
  auto out = detail::checked_mul(partial, full);
  if (!out) throw CapExceeded("ball cardinality overflows 64 bits");
  return *out;
}

/// Chain Singleton bound: the unique full-count ideal with
/// r = floor((d-1)/floor(m/2)) roots covers sum_k <= N - ceil(log_m |C|) coordinates.
struct ChainSingletonReport {
  int r = 0;
  int sum = 0;
  int bound = 0;

  bool holds() const noexcept { return sum <= bound; }
  bool attained() const noexcept { return sum == bound; }
};

/// Evaluates the chain bound and checks it against the generic one; a
/// disagreement raises InvariantViolation.
inline ChainSingletonReport chain_singleton_report(const ChainContext& ctx, const BlockCode& code) {
  const auto& cfg = ctx.config();
  const int d = minimum_distance(code);
  ChainSingletonReport rep;
  rep.r = (d - 1) / cfg.height();
  rep.sum = ctx.prefix_length(rep.r);
  rep.bound = cfg.length() - ceil_log(static_cast<std::uint64_t>(cfg.modulus()), code.size());
  const auto generic = singleton_deficiency(code);
  if (generic.max_sum != rep.sum || generic.bound != rep.bound || generic.r != rep.r) {
    throw InvariantViolation("chain Singleton bound disagrees with the generic evaluation");
  }
  return rep;
}

inline bool chain_singleton_check(const ChainContext& ctx, const BlockCode& code) {
  return chain_singleton_report(ctx, code).holds();
}

/// For a chain, I-perfect and |I|-perfect coincide. Returns the common value;
/// raises InvariantViolation if the two tests disagree.
inline bool chain_perfect_equivalence(const ChainContext& ctx, const BlockCode& code, const Ideal& ideal,
                                      const EnumerationLimits& limits = {}) {
  if (!(code.config() == ctx.config())) throw PreconditionError("code config differs from the chain context");
  const bool by_ideal = is_I_perfect(code, ideal, limits);
  const bool by_radius = is_r_perfect(code, ideal.cardinality(), limits);
  if (by_ideal != by_radius) {
    throw InvariantViolation("I-perfect (" + std::to_string(by_ideal) + ") and r-perfect (" +
                             std::to_string(by_radius) + ") disagree for r = " + std::to_string(ideal.cardinality()));
  }
  return by_ideal;
}

namespace detail {

struct ChainMdsData {
  int k = 0;          // |C| = m^k
  int information = 0;  // number of chain positions fully covered by the attaining ideal
};

inline ChainMdsData require_chain_mds(const ChainContext& ctx, const BlockCode& code) {
  const auto& cfg = ctx.config();
  if (!code.is_linear()) throw PreconditionError("code must be linear");
  const auto k = exact_log(static_cast<std::uint64_t>(cfg.modulus()), code.size());
  if (!k) throw PreconditionError("code size is not a power of the modulus");
  const auto rep = mds_report(code);
  if (!rep.attained()) throw PreconditionError("code is not MDS");
  return ChainMdsData{*k, rep.r};
}

}  // namespace detail

/// |B_I(0) ∩ C| for a linear MDS chain code with |C| = m^k.
///
/// The code meets every coset of B_J exactly once, where J is the full-count
/// ideal on the first r chain positions (covering N - k coordinates). Ideals
/// inside J meet C only in 0; larger ones are unions of cosets of B_J.
/// The cut-off is |I| <= floor(m/2) * r; it coincides with floor(m/2) * (N - k)
/// only when the first r blocks have length 1.
inline std::uint64_t mds_ball_intersection(const ChainContext& ctx, const BlockCode& code, const Ideal& ideal) {
  const auto data = detail::require_chain_mds(ctx, code);
  const auto& cfg = ctx.normalized();
  const int h = cfg.height();
  const Ideal ni = ctx.normalize(ideal);
  if (ni.cardinality() <= h * data.information) return 1;
  const int redundancy = cfg.length() - data.k;
  const auto m = static_cast<std::uint64_t>(cfg.modulus());
  const int roots = ni.root_size();
  if (ni.is_full_count()) {
    return detail::pow_or_throw(m, static_cast<std::uint64_t>(ctx.prefix_length(roots) - redundancy));
  }
  const int top = roots - 1;
  const int c = ni.cardinality() - top * h;
  const auto partial = detail::pow_or_throw(static_cast<std::uint64_t>(1 + 2 * c),
                                            static_cast<std::uint64_t>(cfg.block_length(top)));
  const auto full = detail::pow_or_throw(m, static_cast<std::uint64_t>(ctx.prefix_length(top) - redundancy));
  auto out = detail::checked_mul(partial, full);
  if (!out) throw CapExceeded("intersection size overflows 64 bits");
  return *out;
}

/// Which block length the weight-distribution formula uses at i = h*t + 1.
enum class IndexConvention {
  /// Block t + 1 (the block carrying the partial count); the derivation's own
  /// reading, consistent with the i = h*t + j case.
  next_block,
  /// Block t, as the displayed formula is typeset.
  as_printed,
};

/// Closed-form weight distribution A_0..A_{n floor(m/2)} of a linear MDS chain
/// code with |C| = m^k. Entries are nullopt where the formula is undefined
/// (a block index outside 1..n, or a negative exponent).
inline std::vector<std::optional<std::uint64_t>> mds_weight_distribution(
    const ChainContext& ctx, const BlockCode& code, IndexConvention convention = IndexConvention::next_block) {
  const auto data = detail::require_chain_mds(ctx, code);
  const auto& cfg = ctx.normalized();
  const int h = cfg.height();
  const int n = cfg.block_count();
  const auto m = static_cast<std::uint64_t>(cfg.modulus());
  const int redundancy = cfg.length() - data.k;
  std::vector<std::optional<std::uint64_t>> a(static_cast<std::size_t>(n * h + 1), std::uint64_t{0});
  a[0] = 1;
  if (code.size() < 2) return a;
  const int d = minimum_distance(code);

  // Block length at 1-based block index b.
  auto k_of = [&](int b) -> std::optional<std::uint64_t> {
    if (b < 1 || b > n) return std::nullopt;
    return static_cast<std::uint64_t>(cfg.block_length(b - 1));
  };
  auto m_pow = [&](int exponent) -> std::optional<std::uint64_t> {
    if (exponent < 0) return std::nullopt;
    return detail::checked_pow(m, static_cast<std::uint64_t>(exponent));
  };
  auto diff_times = [](std::optional<std::uint64_t> x, std::optional<std::uint64_t> y,
                       std::optional<std::uint64_t> scale) -> std::optional<std::uint64_t> {
    if (!x || !y || !scale || *x < *y) return std::nullopt;
    return detail::checked_mul(*x - *y, *scale);
  };
  auto power = [](std::uint64_t base, std::optional<std::uint64_t> e) -> std::optional<std::uint64_t> {
    if (!e) return std::nullopt;
    return detail::checked_pow(base, *e);
  };

  for (int i = d; i <= n * h; ++i) {
    const int t = i / h;
    const int j = i % h;
    std::optional<std::uint64_t> value;
    if (j == 0) {
      // Full-count ideal on blocks 1..t minus its predecessor with count h-1 on block t.
      value = diff_times(power(m, k_of(t)), power(static_cast<std::uint64_t>(2 * h - 1), k_of(t)),
                         m_pow(ctx.prefix_length(t - 1) - redundancy));
    } else {
      const int block = (j == 1 && convention == IndexConvention::as_printed) ? t : t + 1;
      value = diff_times(power(static_cast<std::uint64_t>(2 * j + 1), k_of(block)),
                         power(static_cast<std::uint64_t>(2 * j - 1), k_of(block)),
                         m_pow(ctx.prefix_length(t) - redundancy));
    }
    a[static_cast<std::size_t>(i)] = value;
  }
  return a;
}

struct WeightDistributionMismatch {
  int weight = 0;
  std::optional<std::uint64_t> closed_form;
  std::uint64_t observed = 0;
};

/// Closed form against the codeword weight histogram, for both index readings.
struct WeightDistributionReport {
  std::vector<std::optional<std::uint64_t>> closed_form;  // next_block reading
  std::vector<std::optional<std::uint64_t>> as_printed;
  std::vector<std::uint64_t> observed;
  std::vector<WeightDistributionMismatch> mismatches;            // next_block vs observed
  std::vector<WeightDistributionMismatch> as_printed_mismatches;  // as_printed vs observed

  bool closed_form_match() const noexcept { return mismatches.empty(); }
  bool as_printed_match() const noexcept { return as_printed_mismatches.empty(); }
};

inline WeightDistributionReport weight_distribution_report(const ChainContext& ctx, const BlockCode& code) {
  WeightDistributionReport rep;
  rep.closed_form = mds_weight_distribution(ctx, code, IndexConvention::next_block);
  rep.as_printed = mds_weight_distribution(ctx, code, IndexConvention::as_printed);
  rep.observed = weight_histogram(code);
  for (std::size_t i = 0; i < rep.observed.size(); ++i) {
    const int w = static_cast<int>(i);
    if (rep.closed_form[i] != rep.observed[i]) rep.mismatches.push_back({w, rep.closed_form[i], rep.observed[i]});
    if (rep.as_printed[i] != rep.observed[i]) {
      rep.as_printed_mismatches.push_back({w, rep.as_printed[i], rep.observed[i]});
    }
  }
  return rep;
}

/// MDS status of a linear chain code and of its dual under the dual chain.
struct DualityReport {
  bool code_mds = false;
  bool dual_mds = false;
  std::uint64_t dual_size = 0;

  bool agrees() const noexcept { return code_mds == dual_mds; }
};

inline DualityReport duality_report(const ChainContext& ctx, const BlockCode& code,
                                    const EnumerationLimits& limits = {}) {
  const auto& cfg = ctx.config();
  if (!code.is_linear()) throw PreconditionError("duality requires a linear code");
  if (!exact_log(static_cast<std::uint64_t>(cfg.modulus()), code.size())) {
    throw PreconditionError("code size is not a power of the modulus");
  }
  const BlockCode dual = dual_code(code, limits).with_config(cfg.with_pomset(cfg.pomset().dual()));
  return DualityReport{is_mds(code), is_mds(dual), dual.size()};
}

/// Returns whether C is MDS; raises InvariantViolation when the dual disagrees.
inline bool duality_check(const ChainContext& ctx, const BlockCode& code, const EnumerationLimits& limits = {}) {
  const auto rep = duality_report(ctx, code, limits);
  if (!rep.agrees()) {
    throw InvariantViolation("code MDS = " + std::to_string(rep.code_mds) + " but dual MDS = " +
                             std::to_string(rep.dual_mds));
  }
  return rep.code_mds;
}

}  // namespace pbm
