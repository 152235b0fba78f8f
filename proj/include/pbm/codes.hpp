#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pbm/block_space.hpp"
#include "pbm/error.hpp"
#include "pbm/mset.hpp"
#include "pbm/pomset.hpp"

namespace pbm {

namespace detail {

// Subgroup generated by `group` and `g`: the union of group + a*g over all a.
inline std::vector<BlockVector> extend_span(const SpaceConfig& cfg, const std::vector<BlockVector>& group,
                                            const BlockVector& g, const EnumerationLimits& limits) {
  std::vector<BlockVector> out = group;
  BlockVector step = g;
  while (!step.is_zero()) {
    if (std::binary_search(group.begin(), group.end(), step)) break;
    for (const auto& x : group) out.push_back(add(cfg, x, step));
    require_cap(out.size(), limits, "span");
    step = add(cfg, step, g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// A finite nonempty subset of Z_m^N. Codewords are kept sorted and unique.
/// Linearity (closure under addition, hence under Z_m scalars) is detected from
/// the codewords, never taken from the caller.
class BlockCode {
 public:
  static BlockCode from_codewords(SpaceConfig cfg, std::vector<BlockVector> words) {
    if (words.empty()) throw PreconditionError("a code needs at least one codeword");
    for (const auto& w : words) validate_vector(cfg, w);
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    BlockCode code(std::move(cfg), std::move(words));
    code.detect_linearity();
    return code;
  }

  /// All Z_m-linear combinations of the rows.
  static BlockCode from_generators(SpaceConfig cfg, std::vector<BlockVector> rows,
                                   const EnumerationLimits& limits = {}) {
    for (const auto& r : rows) validate_vector(cfg, r);
    std::vector<BlockVector> group{zero_vector(cfg)};
    for (const auto& r : rows) group = detail::extend_span(cfg, group, r, limits);
    BlockCode code(std::move(cfg), std::move(group));
    code.linear_ = true;
    code.generators_ = std::move(rows);
    return code;
  }

  const SpaceConfig& config() const noexcept { return cfg_; }
  std::span<const BlockVector> codewords() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  bool is_linear() const noexcept { return linear_; }
  /// Rows the code was presented with, if any.
  const std::optional<std::vector<BlockVector>>& generators() const noexcept { return generators_; }

  bool contains(const BlockVector& v) const { return std::binary_search(words_.begin(), words_.end(), v); }

  /// A set of codewords whose span is the code. Requires a linear code.
  std::vector<BlockVector> generating_set(const EnumerationLimits& limits = {}) const {
    if (!linear_) throw PreconditionError("generating set requested for a nonlinear code");
    if (generators_) return *generators_;
    std::vector<BlockVector> gens;
    std::vector<BlockVector> group{zero_vector(cfg_)};
    for (const auto& w : words_) {
      if (std::binary_search(group.begin(), group.end(), w)) continue;
      gens.push_back(w);
      group = detail::extend_span(cfg_, group, w, limits);
    }
    return gens;
  }

  /// Same codewords interpreted in another config of identical shape (used to
  /// swap the pomset, e.g. for the dual order).
  BlockCode with_config(SpaceConfig cfg) const {
    if (cfg.modulus() != cfg_.modulus() ||
        !std::equal(cfg.block_lengths().begin(), cfg.block_lengths().end(), cfg_.block_lengths().begin(),
                    cfg_.block_lengths().end())) {
      throw PreconditionError("config change must keep the modulus and label map");
    }
    BlockCode out = *this;
    out.cfg_ = std::move(cfg);
    return out;
  }

 private:
  BlockCode(SpaceConfig cfg, std::vector<BlockVector> words) : cfg_(std::move(cfg)), words_(std::move(words)) {}

  void detect_linearity() {
    linear_ = false;
    if (!contains(zero_vector(cfg_))) return;
    std::vector<BlockVector> group{zero_vector(cfg_)};
    const EnumerationLimits unlimited{.max_vectors = words_.size()};
    for (const auto& w : words_) {
      if (std::binary_search(group.begin(), group.end(), w)) continue;
      try {
        group = detail::extend_span(cfg_, group, w, unlimited);
      } catch (const CapExceeded&) {
        return;
      }
      if (group.size() > words_.size()) return;
    }
    linear_ = group == words_;
  }

  SpaceConfig cfg_;
  std::vector<BlockVector> words_;
  std::optional<std::vector<BlockVector>> generators_;
  bool linear_ = false;
};

/// Smallest e with base^e >= value (exact integer arithmetic).
inline int ceil_log(std::uint64_t base, std::uint64_t value) {
  if (base < 2) throw PreconditionError("logarithm base must be at least 2");
  if (value == 0) throw PreconditionError("logarithm of zero");
  int e = 0;
  std::uint64_t p = 1;
  while (p < value) {
    auto next = detail::checked_mul(p, base);
    ++e;
    if (!next) break;
    p = *next;
  }
  return e;
}

/// e with base^e == value, if any.
inline std::optional<int> exact_log(std::uint64_t base, std::uint64_t value) {
  const int e = ceil_log(base, value);
  auto p = detail::checked_pow(base, static_cast<std::uint64_t>(e));
  if (p && *p == value) return e;
  return std::nullopt;
}

/// Smallest nonzero (Pm,pi)-weight among codewords.
inline int minimum_weight(const BlockCode& code) {
  int best = -1;
  for (const auto& c : code.codewords()) {
    if (c.is_zero()) continue;
    const int w = pomset_block_weight(code.config(), c);
    if (best < 0 || w < best) best = w;
  }
  if (best < 0) throw PreconditionError("code has no nonzero codeword");
  return best;
}

/// Minimum over distinct codeword pairs.
inline int minimum_distance_pairwise(const BlockCode& code) {
  if (code.size() < 2) throw PreconditionError("minimum distance needs at least two codewords");
  const auto words = code.codewords();
  int best = -1;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      const int d = pomset_block_distance(code.config(), words[a], words[b]);
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

/// Minimum (Pm,pi)-distance; linear codes use the minimum nonzero weight.
inline int minimum_distance(const BlockCode& code) {
  if (code.size() < 2) throw PreconditionError("minimum distance needs at least two codewords");
  return code.is_linear() ? minimum_weight(code) : minimum_distance_pairwise(code);
}

/// Minimum (P,pi)-distance (poset block metric on the induced order).
inline int poset_minimum_distance(const BlockCode& code) {
  if (code.size() < 2) throw PreconditionError("minimum distance needs at least two codewords");
  const auto words = code.codewords();
  int best = -1;
  if (code.is_linear()) {
    for (const auto& c : words) {
      if (c.is_zero()) continue;
      const int w = poset_block_weight(code.config(), c);
      if (best < 0 || w < best) best = w;
    }
    return best;
  }
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      const int d = poset_block_distance(code.config(), words[a], words[b]);
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

/// Singleton-bound data for a code.
///
/// r = floor((d-1)/floor(m/2)), t = r*floor(m/2) unless overridden,
/// max_sum = max over ideals J with |J| = t and |J*| = r of the block lengths
/// on J*, bound = N - ceil(log_m |C|). The bound max_sum <= bound always holds;
/// the code is MDS when they are equal.
struct SingletonReport {
  int minimum_distance = 0;
  int r = 0;
  int t = 0;
  int max_sum = 0;
  int bound = 0;
  /// Number of ideals in the family the maximum was taken over.
  std::size_t family_size = 0;

  bool holds() const noexcept { return max_sum <= bound; }
  bool attained() const noexcept { return family_size > 0 && max_sum == bound; }
};

namespace detail {

inline SingletonReport singleton_from_distance(const SpaceConfig& cfg, std::uint64_t code_size, int d,
                                               std::optional<int> cardinality) {
  const int h = cfg.height();
  SingletonReport rep;
  rep.minimum_distance = d;
  rep.r = (d - 1) / h;
  rep.t = cardinality.value_or(rep.r * h);
  rep.bound = cfg.length() - ceil_log(static_cast<std::uint64_t>(cfg.modulus()), code_size);
  const auto family = ideal_family(cfg.pomset(), rep.r, rep.t);
  rep.family_size = family.size();
  for (const auto& j : family) rep.max_sum = std::max(rep.max_sum, cfg.block_length_sum(j.root_set()));
  return rep;
}

}  // namespace detail

/// Singleton bound evaluation. The optional cardinality replaces t = r*floor(m/2)
/// (any t <= d - 1 is admissible in the bound); MDS tests always use the default.
inline SingletonReport singleton_deficiency(const BlockCode& code, std::optional<int> cardinality = std::nullopt) {
  const int d = minimum_distance(code);
  if (cardinality && (*cardinality < 0 || *cardinality > d - 1)) {
    throw PreconditionError("ideal cardinality must lie in [0, d - 1]");
  }
  return detail::singleton_from_distance(code.config(), code.size(), d, cardinality);
}

/// Singleton data used for MDS decisions. A one-word code has no pair of
/// distinct codewords; it is treated as having distance n*floor(m/2) + 1, which
/// makes {0} MDS (r = n, max_sum = N = bound).
inline SingletonReport mds_report(const BlockCode& code) {
  const auto& cfg = code.config();
  const int d = code.size() < 2 ? cfg.block_count() * cfg.height() + 1 : minimum_distance(code);
  return detail::singleton_from_distance(cfg, code.size(), d, std::nullopt);
}

inline bool is_mds(const BlockCode& code) { return mds_report(code).attained(); }

/// Singleton data for the comparison (P,pi)-metric: max over order ideals of
/// size d_P - 1 of the block lengths they cover, against N - ceil(log_m |C|).
struct PosetSingletonReport {
  int minimum_distance = 0;
  int max_sum = 0;
  int bound = 0;

  bool holds() const noexcept { return max_sum <= bound; }
  bool attained() const noexcept { return max_sum == bound; }
};

inline PosetSingletonReport poset_mds_report(const BlockCode& code) {
  const auto& cfg = code.config();
  PosetSingletonReport rep;
  rep.minimum_distance = code.size() < 2 ? cfg.block_count() + 1 : poset_minimum_distance(code);
  rep.bound = cfg.length() - ceil_log(static_cast<std::uint64_t>(cfg.modulus()), code.size());
  const int s = rep.minimum_distance - 1;
  // Order ideals of size s are the root sets of full-count ideals with s roots.
  for (const auto& j : enumerate_ideals(cfg.pomset(), IdealFilter{.cardinality = s * cfg.height(), .root_size = s})) {
    rep.max_sum = std::max(rep.max_sum, cfg.block_length_sum(j.root_set()));
  }
  return rep;
}

inline bool is_mds_poset_block(const BlockCode& code) { return poset_mds_report(code).attained(); }

/// Number of codewords of each (Pm,pi)-weight 0..n*floor(m/2).
inline std::vector<std::uint64_t> weight_histogram(const BlockCode& code) {
  const auto& cfg = code.config();
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(cfg.block_count() * cfg.height() + 1), 0);
  for (const auto& c : code.codewords()) ++hist[static_cast<std::size_t>(pomset_block_weight(cfg, c))];
  return hist;
}

enum class PerfectionMethod {
  /// Covering/packing shortcut for full-count ideals of linear codes, marking otherwise.
  automatic,
  /// Always mark every ball vector in a bitmap of the space.
  marking,
};

namespace detail {

// True iff the translates c + offsets (c in the code) are pairwise disjoint;
// when `require_cover` also that they cover the space.
inline bool translates_tile(const BlockCode& code, const std::vector<BlockVector>& offsets, bool require_cover,
                            const EnumerationLimits& limits) {
  const auto& cfg = code.config();
  SpaceIndexer ix(cfg, limits);
  auto total = checked_mul(code.size(), offsets.size());
  if (!total || *total > ix.size()) return false;
  if (require_cover && *total != ix.size()) return false;
  std::vector<char> seen(ix.size(), 0);
  std::vector<int> buf(static_cast<std::size_t>(cfg.length()));
  const int m = cfg.modulus();
  for (const auto& c : code.codewords()) {
    for (const auto& off : offsets) {
      for (std::size_t j = 0; j < buf.size(); ++j) buf[j] = (c[j] + off[j]) % m;
      const auto idx = ix.encode(buf);
      if (seen[idx]) return false;
      seen[idx] = 1;
    }
  }
  return true;
}

inline void require_ideal_of(const SpaceConfig& cfg, const Ideal& ideal) {
  if (!is_ideal(cfg.pomset(), ideal.mset())) throw PreconditionError("ideal does not belong to the code's pomset");
}

}  // namespace detail

/// The I-balls around the codewords are pairwise disjoint and cover Z_m^N.
inline bool is_I_perfect(const BlockCode& code, const Ideal& ideal, const EnumerationLimits& limits = {},
                         PerfectionMethod method = PerfectionMethod::automatic) {
  const auto& cfg = code.config();
  detail::require_ideal_of(cfg, ideal);
  SpaceIndexer ix(cfg, limits);
  const auto ball = ball_cardinality(cfg, ideal);
  auto total = detail::checked_mul(code.size(), ball);
  if (!total || *total != ix.size()) return false;
  if (method == PerfectionMethod::automatic && code.is_linear() && ideal.is_full_count()) {
    // Covering condition holds (|C| |B_I| = m^N); packing: only 0 in C inside B_I.
    std::size_t inside = 0;
    for (const auto& c : code.codewords()) {
      if (is_submset(block_support(cfg, c), ideal.mset())) ++inside;
    }
    return inside == 1;
  }
  return detail::translates_tile(code, enumerate_mset_ball_at_zero(cfg, ideal.mset(), limits), true, limits);
}

/// The radius-r balls around the codewords are pairwise disjoint and cover Z_m^N.
inline bool is_r_perfect(const BlockCode& code, int r, const EnumerationLimits& limits = {}) {
  const auto& cfg = code.config();
  return detail::translates_tile(code, r_ball(cfg, zero_vector(cfg), r, limits), true, limits);
}

/// Radius-r balls around distinct codewords are pairwise disjoint (direct check).
inline bool is_r_error_correcting_direct(const BlockCode& code, int r, const EnumerationLimits& limits = {}) {
  const auto& cfg = code.config();
  return detail::translates_tile(code, r_ball(cfg, zero_vector(cfg), r, limits), false, limits);
}

/// How the two ideals I, J of cardinality r are combined in the criterion
/// "u - v is outside B_{I+J} for all I, J".
enum class BallCombination {
  /// Pointwise sum capped at the height. Matches the triangle inequality of the
  /// Lee weight; this is the combination under which the criterion is exact.
  mset_sum,
  /// Pointwise maximum. Kept for comparison; it accepts codes whose radius-r
  /// balls overlap (e.g. {0, 3} in Z_11 with r = 2).
  mset_union,
};

/// r-error-correction through difference supports: no difference of distinct
/// codewords has its block support inside the combination of two ideals of
/// cardinality r.
inline bool is_r_error_correcting_criterion(const BlockCode& code, int r,
                                            BallCombination combine = BallCombination::mset_sum) {
  const auto& cfg = code.config();
  const int max_r = cfg.block_count() * cfg.height();
  if (r < 0 || r > max_r) {
    throw PreconditionError("radius " + std::to_string(r) + " outside [0, " + std::to_string(max_r) + "]");
  }
  std::set<std::vector<int>> supports;
  const auto words = code.codewords();
  auto record = [&](const BlockVector& diff) {
    const auto s = block_support(cfg, diff);
    supports.emplace(s.counts().begin(), s.counts().end());
  };
  if (code.is_linear()) {
    for (const auto& c : words) {
      if (!c.is_zero()) record(c);
    }
  } else {
    for (std::size_t a = 0; a < words.size(); ++a) {
      for (std::size_t b = a + 1; b < words.size(); ++b) record(subtract(cfg, words[a], words[b]));
    }
  }
  const auto ideals = ideals_of_cardinality(cfg.pomset(), r);
  std::set<std::vector<int>> combined;
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    for (std::size_t b = a; b < ideals.size(); ++b) {
      const Mset k = combine == BallCombination::mset_sum ? mset_sum(ideals[a].mset(), ideals[b].mset())
                                                          : mset_union(ideals[a].mset(), ideals[b].mset());
      combined.emplace(k.counts().begin(), k.counts().end());
    }
  }
  for (const auto& s : supports) {
    for (const auto& k : combined) {
      bool inside = true;
      for (std::size_t i = 0; i < s.size() && inside; ++i) inside = s[i] <= k[i];
      if (inside) return false;
    }
  }
  return true;
}

/// Annihilator of a linear code under the coordinatewise inner product mod m,
/// by scanning the whole space.
inline BlockCode dual_code(const BlockCode& code, const EnumerationLimits& limits = {}) {
  if (!code.is_linear()) throw PreconditionError("dual code requires a linear code");
  const auto& cfg = code.config();
  SpaceIndexer ix(cfg, limits);
  const auto gens = code.generating_set(limits);
  const int m = cfg.modulus();
  std::vector<BlockVector> out;
  std::vector<int> x(static_cast<std::size_t>(cfg.length()));
  for (std::uint64_t i = 0; i < ix.size(); ++i) {
    ix.decode_into(i, x);
    bool orthogonal = true;
    for (const auto& g : gens) {
      long long dot = 0;
      for (std::size_t j = 0; j < x.size(); ++j) dot += static_cast<long long>(x[j]) * g[j];
      if (dot % m != 0) {
        orthogonal = false;
        break;
      }
    }
    if (orthogonal) out.emplace_back(x);
  }
  return BlockCode::from_codewords(cfg, std::move(out));
}

/// Splits a vector into its coordinates outside and inside a set of blocks.
inline std::pair<BlockVector, BlockVector> split_blocks(const SpaceConfig& cfg, const BlockVector& v,
                                                        std::span<const int> inside_blocks) {
  std::vector<char> inside(static_cast<std::size_t>(cfg.block_count()), 0);
  for (int i : inside_blocks) inside[static_cast<std::size_t>(i)] = 1;
  std::vector<int> outer;
  std::vector<int> inner;
  for (int i = 0; i < cfg.block_count(); ++i) {
    auto b = v.block(cfg, i);
    auto& dst = inside[static_cast<std::size_t>(i)] ? inner : outer;
    dst.insert(dst.end(), b.begin(), b.end());
  }
  return {BlockVector(std::move(outer)), BlockVector(std::move(inner))};
}

/// Mapping from the coordinates outside the I* blocks to those inside.
struct SystematicMap {
  std::vector<int> information_blocks;
  std::vector<int> parity_blocks;
  std::map<BlockVector, BlockVector> table;
  /// Every information vector has an image.
  bool total = false;
  /// f(x + y) = f(x) + f(y) on the whole domain (checked only when total).
  bool linear = false;
};

/// Two codewords sharing information coordinates with different parity parts.
struct SystematicConflict {
  BlockVector information;
  BlockVector first_image;
  BlockVector second_image;
};

struct SystematicResult {
  std::optional<SystematicMap> map;
  /// First conflict, in codeword order.
  std::optional<SystematicConflict> conflict;
  /// One entry per information vector with more than one image.
  std::vector<SystematicConflict> conflicts;
};

/// For an I-perfect code, recovers f with C = {(v, f(v))}. For full-count I the
/// map always exists; for a partial-count I the result may instead carry a
/// conflict witness. Throws PreconditionError when C is not I-perfect.
inline SystematicResult systematic_function(const BlockCode& code, const Ideal& ideal,
                                            const EnumerationLimits& limits = {}) {
  const auto& cfg = code.config();
  if (!is_I_perfect(code, ideal, limits)) throw PreconditionError("code is not I-perfect for the given ideal");
  SystematicMap map;
  map.parity_blocks = ideal.root_set();
  for (int i = 0; i < cfg.block_count(); ++i) {
    if (ideal.count(i) == 0) map.information_blocks.push_back(i);
  }
  std::vector<SystematicConflict> conflicts;
  for (const auto& c : code.codewords()) {
    auto [info, parity] = split_blocks(cfg, c, map.parity_blocks);
    auto [it, inserted] = map.table.emplace(info, parity);
    if (inserted || it->second == parity) continue;
    const bool seen = std::any_of(conflicts.begin(), conflicts.end(),
                                  [&](const SystematicConflict& k) { return k.information == it->first; });
    if (!seen) conflicts.push_back(SystematicConflict{it->first, it->second, std::move(parity)});
  }
  if (!conflicts.empty()) {
    auto first = conflicts.front();
    return SystematicResult{.map = std::nullopt, .conflict = std::move(first), .conflicts = std::move(conflicts)};
  }
  const int info_len = cfg.block_length_sum(map.information_blocks);
  const auto domain = detail::checked_pow(static_cast<std::uint64_t>(cfg.modulus()), static_cast<std::uint64_t>(info_len));
  map.total = domain && *domain == map.table.size();
  if (map.total) {
    // Additivity against unit vectors generates additivity everywhere over Z_m.
    const int m = cfg.modulus();
    auto plus = [m](const BlockVector& a, const BlockVector& b) {
      BlockVector out(std::vector<int>(a.size()));
      for (std::size_t j = 0; j < a.size(); ++j) out[j] = (a[j] + b[j]) % m;
      return out;
    };
    const BlockVector zero_info(std::vector<int>(static_cast<std::size_t>(info_len), 0));
    map.linear = map.table.at(zero_info).is_zero();
    for (std::size_t j = 0; map.linear && j < static_cast<std::size_t>(info_len); ++j) {
      BlockVector unit = zero_info;
      unit[j] = 1;
      const auto& fu = map.table.at(unit);
      for (const auto& [x, fx] : map.table) {
        if (map.table.at(plus(x, unit)) != plus(fx, fu)) {
          map.linear = false;
          break;
        }
      }
    }
  }
  return SystematicResult{.map = std::move(map), .conflict = std::nullopt, .conflicts = {}};
}

}  // namespace pbm
