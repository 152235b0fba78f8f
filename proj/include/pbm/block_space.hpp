#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pbm/error.hpp"
#include "pbm/mset.hpp"
#include "pbm/pomset.hpp"

namespace pbm {

/// Upper bound on the number of vectors an operation may materialize.
struct EnumerationLimits {
  std::uint64_t max_vectors = 1'000'000;
};

namespace detail {

inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
  return a * b;
}

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    auto next = checked_mul(out, base);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

inline std::uint64_t pow_or_throw(std::uint64_t base, std::uint64_t exponent) {
  auto v = checked_pow(base, exponent);
  if (!v) throw CapExceeded("integer power " + std::to_string(base) + "^" + std::to_string(exponent) + " overflows");
  return *v;
}

}  // namespace detail

/// The ambient space Z_m^N split into n blocks of lengths k_1..k_n, together
/// with a pomset of height floor(m/2) on the block labels.
class SpaceConfig {
 public:
  SpaceConfig() = default;

  SpaceConfig(int modulus, std::vector<int> block_lengths, Pomset pomset)
      : m_(modulus), k_(std::move(block_lengths)), pomset_(std::move(pomset)) {
    if (m_ < 2) throw PreconditionError("modulus must be at least 2");
    if (k_.empty()) throw PreconditionError("label map must have at least one block");
    for (int k : k_) {
      if (k < 1) throw PreconditionError("block lengths must be positive");
    }
    if (pomset_.size() != static_cast<int>(k_.size())) {
      throw PreconditionError("pomset has " + std::to_string(pomset_.size()) + " labels but the label map has " +
                              std::to_string(k_.size()) + " blocks");
    }
    if (pomset_.height() != m_ / 2) {
      throw PreconditionError("pomset height " + std::to_string(pomset_.height()) + " differs from floor(m/2) = " +
                              std::to_string(m_ / 2));
    }
    offsets_.resize(k_.size());
    std::exclusive_scan(k_.begin(), k_.end(), offsets_.begin(), 0);
    length_ = std::accumulate(k_.begin(), k_.end(), 0);
  }

  int modulus() const noexcept { return m_; }
  /// floor(m/2), the largest Lee weight of a residue.
  int height() const noexcept { return m_ / 2; }
  int block_count() const noexcept { return static_cast<int>(k_.size()); }
  /// Total length N.
  int length() const noexcept { return length_; }
  int block_length(int block) const { return k_.at(static_cast<std::size_t>(block)); }
  int block_offset(int block) const { return offsets_.at(static_cast<std::size_t>(block)); }
  std::span<const int> block_lengths() const noexcept { return k_; }
  const Pomset& pomset() const noexcept { return pomset_; }

  /// m^N, or nullopt when it does not fit in 64 bits.
  std::optional<std::uint64_t> space_size() const {
    return detail::checked_pow(static_cast<std::uint64_t>(m_), static_cast<std::uint64_t>(length_));
  }

  /// Sum of block lengths over the given labels.
  int block_length_sum(std::span<const int> labels) const {
    int s = 0;
    for (int i : labels) s += block_length(i);
    return s;
  }

  SpaceConfig with_pomset(Pomset p) const { return SpaceConfig(m_, k_, std::move(p)); }

  friend bool operator==(const SpaceConfig&, const SpaceConfig&) = default;

 private:
  int m_ = 0;
  std::vector<int> k_;
  Pomset pomset_;
  std::vector<int> offsets_;
  int length_ = 0;
};

/// An N-tuple of residues; block i occupies [offset_i, offset_i + k_i).
class BlockVector {
 public:
  BlockVector() = default;
  explicit BlockVector(std::vector<int> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }
  int& operator[](std::size_t i) { return entries_[i]; }
  std::span<const int> entries() const noexcept { return entries_; }
  std::span<int> entries() noexcept { return entries_; }

  bool is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](int x) { return x == 0; });
  }

  /// Residues of one block.
  std::span<const int> block(const SpaceConfig& cfg, int label) const {
    return std::span<const int>(entries_).subspan(static_cast<std::size_t>(cfg.block_offset(label)),
                                                  static_cast<std::size_t>(cfg.block_length(label)));
  }

  friend auto operator<=>(const BlockVector&, const BlockVector&) = default;
  friend bool operator==(const BlockVector&, const BlockVector&) = default;

 private:
  std::vector<int> entries_;
};

/// Checks length and residue range of a vector against a config.
inline void validate_vector(const SpaceConfig& cfg, const BlockVector& v) {
  if (static_cast<int>(v.size()) != cfg.length()) {
    throw PreconditionError("vector has length " + std::to_string(v.size()) + ", space length is " +
                            std::to_string(cfg.length()));
  }
  for (int x : v.entries()) {
    if (x < 0 || x >= cfg.modulus()) {
      throw PreconditionError("residue " + std::to_string(x) + " outside [0, " + std::to_string(cfg.modulus()) + ")");
    }
  }
}

inline BlockVector zero_vector(const SpaceConfig& cfg) {
  return BlockVector(std::vector<int>(static_cast<std::size_t>(cfg.length()), 0));
}

inline int lee_weight(int x, int m) noexcept { return std::min(x, m - x); }

inline BlockVector add(const SpaceConfig& cfg, const BlockVector& u, const BlockVector& v) {
  BlockVector out(std::vector<int>(u.size()));
  for (std::size_t j = 0; j < u.size(); ++j) out[j] = (u[j] + v[j]) % cfg.modulus();
  return out;
}

inline BlockVector subtract(const SpaceConfig& cfg, const BlockVector& u, const BlockVector& v) {
  BlockVector out(std::vector<int>(u.size()));
  for (std::size_t j = 0; j < u.size(); ++j) out[j] = (u[j] - v[j] + cfg.modulus()) % cfg.modulus();
  return out;
}

inline BlockVector scale(const SpaceConfig& cfg, int a, const BlockVector& v) {
  BlockVector out(std::vector<int>(v.size()));
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = static_cast<int>((static_cast<long long>(a) * v[j]) % cfg.modulus());
  return out;
}

/// Largest Lee weight in each block; zero blocks get count 0.
inline Mset block_support(const SpaceConfig& cfg, const BlockVector& v) {
  validate_vector(cfg, v);
  std::vector<int> counts(static_cast<std::size_t>(cfg.block_count()), 0);
  for (int i = 0; i < cfg.block_count(); ++i) {
    int best = 0;
    for (int x : v.block(cfg, i)) best = std::max(best, lee_weight(x, cfg.modulus()));
    counts[static_cast<std::size_t>(i)] = best;
  }
  return Mset(cfg.block_count(), cfg.height(), std::move(counts));
}

namespace detail {

// |<S>| for a support mset S: labels strictly below some root label count h,
// the rest keep their own count.
inline int generated_cardinality(const Pomset& p, std::span<const int> counts) {
  int total = 0;
  for (int a = 0; a < p.size(); ++a) {
    bool below_root = false;
    for (int b = 0; b < p.size(); ++b) {
      if (counts[static_cast<std::size_t>(b)] > 0 && p.less(a, b)) {
        below_root = true;
        break;
      }
    }
    total += below_root ? p.height() : counts[static_cast<std::size_t>(a)];
  }
  return total;
}

}  // namespace detail

/// Cardinality of the ideal generated by the block support.
inline int pomset_block_weight(const SpaceConfig& cfg, const BlockVector& v) {
  const Mset s = block_support(cfg, v);
  return detail::generated_cardinality(cfg.pomset(), s.counts());
}

inline int pomset_block_distance(const SpaceConfig& cfg, const BlockVector& u, const BlockVector& v) {
  return pomset_block_weight(cfg, subtract(cfg, u, v));
}

/// Number of labels in the order-ideal closure of the nonzero blocks.
inline int poset_block_weight(const SpaceConfig& cfg, const BlockVector& v) {
  const Pomset& p = cfg.pomset();
  std::vector<char> nonzero(static_cast<std::size_t>(cfg.block_count()), 0);
  for (int i = 0; i < cfg.block_count(); ++i) {
    const auto b = v.block(cfg, i);
    nonzero[static_cast<std::size_t>(i)] = std::any_of(b.begin(), b.end(), [](int x) { return x != 0; });
  }
  int closure = 0;
  for (int a = 0; a < p.size(); ++a) {
    bool in = nonzero[static_cast<std::size_t>(a)] != 0;
    for (int b = 0; !in && b < p.size(); ++b) in = nonzero[static_cast<std::size_t>(b)] != 0 && p.less(a, b);
    closure += in ? 1 : 0;
  }
  return closure;
}

inline int poset_block_distance(const SpaceConfig& cfg, const BlockVector& u, const BlockVector& v) {
  return poset_block_weight(cfg, subtract(cfg, u, v));
}

/// v lies in the ball B_K(center) of an arbitrary mset K: supp(center - v) is a
/// submset of K. For an ideal this is the same as <supp> being inside K.
inline bool in_mset_ball(const SpaceConfig& cfg, const BlockVector& center, const BlockVector& v, const Mset& k) {
  const Mset s = block_support(cfg, subtract(cfg, center, v));
  return is_submset(s, k);
}

inline bool in_ball(const SpaceConfig& cfg, const BlockVector& center, const BlockVector& v, const Ideal& ideal) {
  return in_mset_ball(cfg, center, v, ideal.mset());
}

/// Residues with Lee weight at most c, ascending.
inline std::vector<int> residues_within(int c, int m) {
  std::vector<int> out;
  for (int x = 0; x < m; ++x) {
    if (lee_weight(x, m) <= c) out.push_back(x);
  }
  return out;
}

/// |B_I| = product over root labels of min(2 C_I(i) + 1, m)^{k_i}.
inline std::uint64_t ball_cardinality(const SpaceConfig& cfg, const Mset& counts) {
  std::uint64_t total = 1;
  for (int i = 0; i < cfg.block_count(); ++i) {
    const int c = counts.count(i);
    if (c == 0) continue;
    const auto per_coord = static_cast<std::uint64_t>(std::min(2 * c + 1, cfg.modulus()));
    auto next = detail::checked_mul(total, detail::pow_or_throw(per_coord, static_cast<std::uint64_t>(cfg.block_length(i))));
    if (!next) throw CapExceeded("ball cardinality overflows 64 bits");
    total = *next;
  }
  return total;
}

inline std::uint64_t ball_cardinality(const SpaceConfig& cfg, const Ideal& ideal) {
  return ball_cardinality(cfg, ideal.mset());
}

namespace detail {

inline void require_cap(std::uint64_t count, const EnumerationLimits& limits, const char* what) {
  if (count > limits.max_vectors) {
    throw CapExceeded(std::string(what) + " has " + std::to_string(count) + " vectors, above the limit of " +
                      std::to_string(limits.max_vectors));
  }
}

}  // namespace detail

/// Vectors supp(v) within the mset K, in lexicographic order (the ball B_K(0)).
inline std::vector<BlockVector> enumerate_mset_ball_at_zero(const SpaceConfig& cfg, const Mset& k,
                                                             const EnumerationLimits& limits = {}) {
  detail::require_cap(ball_cardinality(cfg, k), limits, "ball");
  std::vector<std::vector<int>> choices(static_cast<std::size_t>(cfg.length()), std::vector<int>{0});
  for (int i = 0; i < cfg.block_count(); ++i) {
    if (k.count(i) == 0) continue;
    const auto allowed = residues_within(k.count(i), cfg.modulus());
    for (int j = 0; j < cfg.block_length(i); ++j) choices[static_cast<std::size_t>(cfg.block_offset(i) + j)] = allowed;
  }
  std::vector<BlockVector> out;
  std::vector<std::size_t> pos(choices.size(), 0);
  std::vector<int> cur(choices.size(), 0);
  while (true) {
    for (std::size_t j = 0; j < choices.size(); ++j) cur[j] = choices[j][pos[j]];
    out.emplace_back(cur);
    std::size_t j = choices.size();
    while (j > 0) {
      --j;
      if (++pos[j] < choices[j].size()) break;
      pos[j] = 0;
      if (j == 0) return out;
    }
  }
}

/// B_I(center) = center + B_I(0), sorted.
inline std::vector<BlockVector> enumerate_ball(const SpaceConfig& cfg, const BlockVector& center, const Ideal& ideal,
                                               const EnumerationLimits& limits = {}) {
  validate_vector(cfg, center);
  auto ball = enumerate_mset_ball_at_zero(cfg, ideal.mset(), limits);
  for (auto& v : ball) v = add(cfg, center, v);
  std::sort(ball.begin(), ball.end());
  return ball;
}

/// The metric ball {v : d(center, v) <= r}, built as the union of the I-balls
/// over all ideals of cardinality r. Sorted and deduplicated.
inline std::vector<BlockVector> r_ball(const SpaceConfig& cfg, const BlockVector& center, int r,
                                       const EnumerationLimits& limits = {}) {
  const int max_r = cfg.block_count() * cfg.height();
  if (r < 0 || r > max_r) {
    throw PreconditionError("radius " + std::to_string(r) + " outside [0, " + std::to_string(max_r) + "]");
  }
  validate_vector(cfg, center);
  std::vector<BlockVector> out;
  for (const auto& ideal : ideals_of_cardinality(cfg.pomset(), r)) {
    auto part = enumerate_mset_ball_at_zero(cfg, ideal.mset(), limits);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    detail::require_cap(out.size(), limits, "radius ball");
  }
  for (auto& v : out) v = add(cfg, center, v);
  std::sort(out.begin(), out.end());
  return out;
}

/// Mixed-radix numbering of Z_m^N with coordinate 0 most significant, so index
/// order is lexicographic order.
class SpaceIndexer {
 public:
  explicit SpaceIndexer(const SpaceConfig& cfg, const EnumerationLimits& limits = {})
      : m_(static_cast<std::uint64_t>(cfg.modulus())), length_(static_cast<std::size_t>(cfg.length())) {
    auto size = cfg.space_size();
    if (!size) throw CapExceeded("space size overflows 64 bits");
    detail::require_cap(*size, limits, "space");
    size_ = *size;
  }

  std::uint64_t size() const noexcept { return size_; }

  std::uint64_t encode(std::span<const int> v) const noexcept {
    std::uint64_t idx = 0;
    for (int x : v) idx = idx * m_ + static_cast<std::uint64_t>(x);
    return idx;
  }
  std::uint64_t encode(const BlockVector& v) const noexcept { return encode(v.entries()); }

  void decode_into(std::uint64_t idx, std::span<int> out) const noexcept {
    for (std::size_t j = length_; j > 0; --j) {
      out[j - 1] = static_cast<int>(idx % m_);
      idx /= m_;
    }
  }

  BlockVector decode(std::uint64_t idx) const {
    BlockVector v{std::vector<int>(static_cast<std::size_t>(length_))};
    decode_into(idx, v.entries());
    return v;
  }

 private:
  std::uint64_t m_;
  std::size_t length_;
  std::uint64_t size_ = 0;
};

/// Every vector of the space in lexicographic order.
inline std::vector<BlockVector> enumerate_space(const SpaceConfig& cfg, const EnumerationLimits& limits = {}) {
  SpaceIndexer ix(cfg, limits);
  std::vector<BlockVector> out;
  out.reserve(ix.size());
  for (std::uint64_t i = 0; i < ix.size(); ++i) out.push_back(ix.decode(i));
  return out;
}

}  // namespace pbm
