#pragma once

// Brute-force reference implementations.
//
// Everything here is evaluated straight from the definitions by scanning count
// vectors or the whole ambient space. Nothing in this header calls the
// weight, ball, ideal-enumeration or code-analysis routines it is used to
// check; only the plain data types (Pomset order queries, SpaceConfig shape,
// Mset/BlockVector containers) are shared.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pbm/block_space.hpp"
#include "pbm/error.hpp"
#include "pbm/mset.hpp"
#include "pbm/pomset.hpp"

namespace pbm::oracle {

/// One checked claim: pass iff expected equals computed.
struct OracleReport {
  std::string claim;
  std::string instance;
  std::string expected;
  std::string computed;

  bool pass() const { return expected == computed; }
};

namespace detail {

inline std::uint64_t space_size(const SpaceConfig& cfg, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (int j = 0; j < cfg.length(); ++j) {
    size *= static_cast<std::uint64_t>(cfg.modulus());
    if (size > cap) throw CapExceeded("oracle space scan above cap of " + std::to_string(cap));
  }
  return size;
}

// Odometer over {0..radix-1}^len, last coordinate fastest.
inline bool next_tuple(std::vector<int>& digits, int radix) {
  for (std::size_t j = digits.size(); j > 0; --j) {
    if (++digits[j - 1] < radix) return true;
    digits[j - 1] = 0;
  }
  return false;
}

inline int lee(int x, int m) {
  int r = ((x % m) + m) % m;
  return 2 * r <= m ? r : m - r;
}

// Block support as a count vector.
inline std::vector<int> support(const SpaceConfig& cfg, const std::vector<int>& v) {
  std::vector<int> out(static_cast<std::size_t>(cfg.block_count()), 0);
  int pos = 0;
  for (int i = 0; i < cfg.block_count(); ++i) {
    for (int j = 0; j < cfg.block_length(i); ++j, ++pos) {
      out[static_cast<std::size_t>(i)] = std::max(out[static_cast<std::size_t>(i)], lee(v[static_cast<std::size_t>(pos)], cfg.modulus()));
    }
  }
  return out;
}

// Count vector of <S>: q/b belongs iff q <= C_S(b), or b lies strictly below a
// label a with C_S(a) > 0 (then every q in 1..h is related to some p/a in S).
inline std::vector<int> generated(const Pomset& p, const std::vector<int>& s) {
  std::vector<int> out(s.size(), 0);
  for (int b = 0; b < p.size(); ++b) {
    for (int q = 1; q <= p.height(); ++q) {
      bool member = q <= s[static_cast<std::size_t>(b)];
      for (int a = 0; !member && a < p.size(); ++a) member = s[static_cast<std::size_t>(a)] >= 1 && p.less(b, a);
      if (member) out[static_cast<std::size_t>(b)] = q;
    }
  }
  return out;
}

inline int sum(const std::vector<int>& c) {
  int s = 0;
  for (int x : c) s += x;
  return s;
}

inline bool pointwise_le(const std::vector<int>& a, std::span<const int> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

inline std::vector<int> diff(const SpaceConfig& cfg, std::span<const int> u, std::span<const int> v) {
  std::vector<int> out(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) out[j] = ((u[j] - v[j]) % cfg.modulus() + cfg.modulus()) % cfg.modulus();
  return out;
}

inline std::vector<int> to_vec(const BlockVector& v) { return {v.entries().begin(), v.entries().end()}; }

}  // namespace detail

/// Ideal predicate written from the mset-relation definition: for every p/a in I
/// and every q/b with b != a and q/b related below p/a, q/b is in I.
inline bool is_ideal_by_definition(const Pomset& p, std::span<const int> counts) {
  for (int a = 0; a < p.size(); ++a) {
    for (int pm = 1; pm <= counts[static_cast<std::size_t>(a)]; ++pm) {
      for (int b = 0; b < p.size(); ++b) {
        if (b == a || !p.less(b, a)) continue;
        for (int q = 1; q <= p.height(); ++q) {
          if (counts[static_cast<std::size_t>(b)] < q) return false;
        }
      }
    }
  }
  return true;
}

/// Every count vector in {0..h}^n that is an ideal, lexicographic order.
inline std::vector<Mset> exhaustive_ideals(const Pomset& p, std::uint64_t cap = 10'000'000) {
  std::uint64_t total = 1;
  for (int i = 0; i < p.size(); ++i) {
    total *= static_cast<std::uint64_t>(p.height() + 1);
    if (total > cap) throw CapExceeded("oracle ideal scan above cap");
  }
  std::vector<Mset> out;
  std::vector<int> c(static_cast<std::size_t>(p.size()), 0);
  do {
    if (is_ideal_by_definition(p, c)) out.emplace_back(p.size(), p.height(), c);
  } while (detail::next_tuple(c, p.height() + 1));
  return out;
}

/// (Pm,pi)-weight from the definitions.
inline int weight(const SpaceConfig& cfg, const BlockVector& v) {
  return detail::sum(detail::generated(cfg.pomset(), detail::support(cfg, detail::to_vec(v))));
}

inline int distance(const SpaceConfig& cfg, const BlockVector& u, const BlockVector& v) {
  return detail::sum(detail::generated(cfg.pomset(), detail::support(cfg, detail::diff(cfg, u.entries(), v.entries()))));
}

/// (P,pi)-weight: labels in the downward closure of the nonzero blocks.
inline int poset_weight(const SpaceConfig& cfg, const BlockVector& v) {
  const auto s = detail::support(cfg, detail::to_vec(v));
  int closure = 0;
  for (int b = 0; b < cfg.block_count(); ++b) {
    bool in = false;
    for (int a = 0; a < cfg.block_count(); ++a) {
      if (s[static_cast<std::size_t>(a)] > 0 && (a == b || cfg.pomset().less(b, a))) in = true;
    }
    closure += in;
  }
  return closure;
}

/// {v : <supp(center - v)> is a submset of `ideal`}, by scanning the space.
inline std::vector<BlockVector> exhaustive_ball(const SpaceConfig& cfg, const BlockVector& center, const Mset& ideal,
                                                std::uint64_t cap = 1'000'000) {
  detail::space_size(cfg, cap);
  std::vector<BlockVector> out;
  std::vector<int> v(static_cast<std::size_t>(cfg.length()), 0);
  do {
    const auto g = detail::generated(cfg.pomset(), detail::support(cfg, detail::diff(cfg, center.entries(), v)));
    if (detail::pointwise_le(g, ideal.counts())) out.emplace_back(v);
  } while (detail::next_tuple(v, cfg.modulus()));
  return out;
}

/// {v : d(center, v) <= r}, by scanning the space.
inline std::vector<BlockVector> exhaustive_metric_ball(const SpaceConfig& cfg, const BlockVector& center, int r,
                                                       std::uint64_t cap = 1'000'000) {
  detail::space_size(cfg, cap);
  std::vector<BlockVector> out;
  std::vector<int> v(static_cast<std::size_t>(cfg.length()), 0);
  do {
    const auto g = detail::generated(cfg.pomset(), detail::support(cfg, detail::diff(cfg, center.entries(), v)));
    if (detail::sum(g) <= r) out.emplace_back(v);
  } while (detail::next_tuple(v, cfg.modulus()));
  return out;
}

inline int exhaustive_min_distance(const SpaceConfig& cfg, std::span<const BlockVector> words) {
  if (words.size() < 2) throw PreconditionError("oracle minimum distance needs two codewords");
  int best = -1;
  for (std::size_t a = 0; a < words.size(); ++a) {
    for (std::size_t b = 0; b < words.size(); ++b) {
      if (a == b) continue;
      const int d = distance(cfg, words[a], words[b]);
      if (best < 0 || d < best) best = d;
    }
  }
  return best;
}

inline std::vector<std::uint64_t> exhaustive_weight_histogram(const SpaceConfig& cfg, std::span<const BlockVector> words) {
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(cfg.block_count() * cfg.height() + 1), 0);
  for (const auto& w : words) ++hist[static_cast<std::size_t>(weight(cfg, w))];
  return hist;
}

/// Every x with <x, c> = 0 mod m for all codewords c.
inline std::vector<BlockVector> exhaustive_dual(const SpaceConfig& cfg, std::span<const BlockVector> words,
                                                std::uint64_t cap = 1'000'000) {
  detail::space_size(cfg, cap);
  std::vector<BlockVector> out;
  std::vector<int> x(static_cast<std::size_t>(cfg.length()), 0);
  do {
    bool ok = true;
    for (const auto& c : words) {
      long long dot = 0;
      for (std::size_t j = 0; j < x.size(); ++j) dot += static_cast<long long>(x[j]) * c[j];
      if (dot % cfg.modulus() != 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.emplace_back(x);
  } while (detail::next_tuple(x, cfg.modulus()));
  return out;
}

/// All Z_m-combinations of the rows, by enumerating coefficient tuples.
inline std::vector<BlockVector> exhaustive_span(const SpaceConfig& cfg, std::span<const BlockVector> rows,
                                                std::uint64_t cap = 10'000'000) {
  std::uint64_t tuples = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    tuples *= static_cast<std::uint64_t>(cfg.modulus());
    if (tuples > cap) throw CapExceeded("oracle span above cap");
  }
  std::vector<BlockVector> out;
  std::vector<int> coef(rows.size(), 0);
  do {
    std::vector<int> v(static_cast<std::size_t>(cfg.length()), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + coef[r] * rows[r][j]) % cfg.modulus();
    }
    out.emplace_back(std::move(v));
  } while (!rows.empty() && detail::next_tuple(coef, cfg.modulus()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace detail {

// For every vector of the space, the number of codewords whose ball (given by
// the membership test on the difference) contains it.
template <typename InBall>
std::vector<int> coverage(const SpaceConfig& cfg, std::span<const BlockVector> words, InBall in_ball,
                          std::uint64_t cap) {
  space_size(cfg, cap);
  std::vector<int> counts;
  std::vector<int> y(static_cast<std::size_t>(cfg.length()), 0);
  do {
    int hits = 0;
    for (const auto& c : words) hits += in_ball(diff(cfg, c.entries(), y)) ? 1 : 0;
    counts.push_back(hits);
  } while (next_tuple(y, cfg.modulus()));
  return counts;
}

}  // namespace detail

/// Every vector lies in exactly one I-ball around a codeword.
inline bool exhaustive_is_I_perfect(const SpaceConfig& cfg, std::span<const BlockVector> words, const Mset& ideal,
                                    std::uint64_t cap = 1'000'000) {
  auto in_ball = [&](const std::vector<int>& d) {
    return detail::pointwise_le(detail::generated(cfg.pomset(), detail::support(cfg, d)), ideal.counts());
  };
  const auto cov = detail::coverage(cfg, words, in_ball, cap);
  return std::all_of(cov.begin(), cov.end(), [](int c) { return c == 1; });
}

/// Every vector lies in exactly one radius-r ball around a codeword.
inline bool exhaustive_is_r_perfect(const SpaceConfig& cfg, std::span<const BlockVector> words, int r,
                                    std::uint64_t cap = 1'000'000) {
  auto in_ball = [&](const std::vector<int>& d) {
    return detail::sum(detail::generated(cfg.pomset(), detail::support(cfg, d))) <= r;
  };
  const auto cov = detail::coverage(cfg, words, in_ball, cap);
  return std::all_of(cov.begin(), cov.end(), [](int c) { return c == 1; });
}

/// No vector lies in two radius-r balls around codewords.
inline bool exhaustive_is_r_error_correcting(const SpaceConfig& cfg, std::span<const BlockVector> words, int r,
                                             std::uint64_t cap = 1'000'000) {
  auto in_ball = [&](const std::vector<int>& d) {
    return detail::sum(detail::generated(cfg.pomset(), detail::support(cfg, d))) <= r;
  };
  const auto cov = detail::coverage(cfg, words, in_ball, cap);
  return std::all_of(cov.begin(), cov.end(), [](int c) { return c <= 1; });
}

/// Number of codewords c with <supp(c)> inside the ideal, i.e. |B_I(0) ∩ C|.
inline std::uint64_t exhaustive_ball_intersection(const SpaceConfig& cfg, std::span<const BlockVector> words,
                                                  const Mset& ideal) {
  std::uint64_t n = 0;
  for (const auto& c : words) {
    n += detail::pointwise_le(detail::generated(cfg.pomset(), detail::support(cfg, detail::to_vec(c))), ideal.counts());
  }
  return n;
}

/// Closed under addition mod m (hence a Z_m-submodule).
inline bool exhaustive_is_linear(const SpaceConfig& cfg, std::span<const BlockVector> words) {
  std::vector<BlockVector> sorted(words.begin(), words.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& a : sorted) {
    for (const auto& b : sorted) {
      std::vector<int> s(a.size());
      for (std::size_t j = 0; j < s.size(); ++j) s[j] = (a[j] + b[j]) % cfg.modulus();
      if (!std::binary_search(sorted.begin(), sorted.end(), BlockVector(s))) return false;
    }
  }
  return !sorted.empty();
}

/// Singleton data from the definitions; one-word codes use d = n*h + 1.
struct SingletonData {
  int d = 0;
  int r = 0;
  int max_sum = 0;
  int bound = 0;
  bool mds() const { return max_sum == bound; }
};

inline int ceil_log_m(int m, std::uint64_t size) {
  int e = 0;
  std::uint64_t p = 1;
  while (p < size) {
    p *= static_cast<std::uint64_t>(m);
    ++e;
  }
  return e;
}

inline SingletonData exhaustive_singleton(const SpaceConfig& cfg, std::span<const BlockVector> words) {
  const int h = cfg.height();
  SingletonData s;
  s.d = words.size() < 2 ? cfg.block_count() * h + 1 : exhaustive_min_distance(cfg, words);
  s.r = (s.d - 1) / h;
  s.bound = cfg.length() - ceil_log_m(cfg.modulus(), words.size());
  for (const auto& ideal : exhaustive_ideals(cfg.pomset())) {
    int card = 0;
    int roots = 0;
    int ksum = 0;
    for (int i = 0; i < cfg.block_count(); ++i) {
      card += ideal.count(i);
      if (ideal.count(i) > 0) {
        ++roots;
        ksum += cfg.block_length(i);
      }
    }
    if (card == s.r * h && roots == s.r) s.max_sum = std::max(s.max_sum, ksum);
  }
  return s;
}

/// (P,pi) Singleton data: order ideals are the downward-closed label subsets.
inline SingletonData exhaustive_poset_singleton(const SpaceConfig& cfg, std::span<const BlockVector> words) {
  const int n = cfg.block_count();
  SingletonData s;
  if (words.size() < 2) {
    s.d = n + 1;
  } else {
    s.d = -1;
    for (std::size_t a = 0; a < words.size(); ++a) {
      for (std::size_t b = 0; b < words.size(); ++b) {
        if (a == b) continue;
        const int d = poset_weight(cfg, BlockVector(detail::diff(cfg, words[a].entries(), words[b].entries())));
        if (s.d < 0 || d < s.d) s.d = d;
      }
    }
  }
  s.r = s.d - 1;
  s.bound = cfg.length() - ceil_log_m(cfg.modulus(), words.size());
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    bool closed = true;
    for (int a = 0; a < n && closed; ++a) {
      if (!(mask >> a & 1U)) continue;
      for (int b = 0; b < n; ++b) {
        if (cfg.pomset().less(b, a) && !(mask >> b & 1U)) closed = false;
      }
    }
    if (!closed || std::popcount(mask) != s.r) continue;
    int ksum = 0;
    for (int a = 0; a < n; ++a) {
      if (mask >> a & 1U) ksum += cfg.block_length(a);
    }
    s.max_sum = std::max(s.max_sum, ksum);
  }
  return s;
}

}  // namespace pbm::oracle
