#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "pbm/error.hpp"

namespace pbm {

/// A multiset over the ground set {0, ..., n-1} whose counts are bounded by a
/// height h. Every label has a count (absent labels have count 0).
///
/// Labels are 0-based in the C++ API; the JSON encoding uses 1-based labels.
class Mset {
 public:
  Mset() = default;

  /// Empty mset (all counts zero).
  Mset(int ground_size, int height) : Mset(ground_size, height, std::vector<int>(check_size(ground_size), 0)) {}

  Mset(int ground_size, int height, std::vector<int> counts)
      : n_(ground_size), h_(height), counts_(std::move(counts)) {
    if (n_ < 1) throw PreconditionError("mset ground size must be positive");
    if (h_ < 1) throw PreconditionError("mset height must be positive");
    if (static_cast<int>(counts_.size()) != n_) {
      throw PreconditionError("mset count vector has length " + std::to_string(counts_.size()) + ", expected " +
                              std::to_string(n_));
    }
    for (int c : counts_) {
      if (c < 0 || c > h_) {
        throw PreconditionError("mset count " + std::to_string(c) + " outside [0, " + std::to_string(h_) + "]");
      }
    }
  }

  /// The regular mset {h/0, ..., h/(n-1)}.
  static Mset regular(int ground_size, int height) {
    return Mset(ground_size, height, std::vector<int>(check_size(ground_size), height));
  }

  int ground_size() const noexcept { return n_; }
  int height() const noexcept { return h_; }

  int count(int label) const { return counts_.at(static_cast<std::size_t>(label)); }
  std::span<const int> counts() const noexcept { return counts_; }

  /// Copy with one count replaced.
  Mset with_count(int label, int count) const {
    auto counts = counts_;
    counts.at(static_cast<std::size_t>(label)) = count;
    return Mset(n_, h_, std::move(counts));
  }

  /// Sum of all counts.
  int cardinality() const noexcept { return std::accumulate(counts_.begin(), counts_.end(), 0); }

  /// Labels with a positive count, ascending.
  std::vector<int> root_set() const {
    std::vector<int> roots;
    for (int i = 0; i < n_; ++i) {
      if (counts_[static_cast<std::size_t>(i)] > 0) roots.push_back(i);
    }
    return roots;
  }

  int root_size() const noexcept {
    return static_cast<int>(std::count_if(counts_.begin(), counts_.end(), [](int c) { return c > 0; }));
  }

  bool empty() const noexcept { return cardinality() == 0; }

  /// Membership of the element p/a, i.e. label a occurs at least p times.
  bool contains(int multiplicity, int label) const { return count(label) >= multiplicity; }

  friend bool operator==(const Mset&, const Mset&) = default;

 private:
  static std::size_t check_size(int n) {
    if (n < 1) throw PreconditionError("mset ground size must be positive");
    return static_cast<std::size_t>(n);
  }

  int n_ = 0;
  int h_ = 0;
  std::vector<int> counts_;
};

namespace detail {

inline void require_compatible(const Mset& a, const Mset& b) {
  if (a.ground_size() != b.ground_size() || a.height() != b.height()) {
    throw PreconditionError("msets over different ground sets or heights");
  }
}

template <typename Op>
Mset pointwise(const Mset& a, const Mset& b, Op op) {
  require_compatible(a, b);
  std::vector<int> out(static_cast<std::size_t>(a.ground_size()));
  for (int i = 0; i < a.ground_size(); ++i) out[static_cast<std::size_t>(i)] = op(a.count(i), b.count(i));
  return Mset(a.ground_size(), a.height(), std::move(out));
}

}  // namespace detail

/// Pointwise count comparison.
inline bool is_submset(const Mset& a, const Mset& b) {
  detail::require_compatible(a, b);
  for (int i = 0; i < a.ground_size(); ++i) {
    if (a.count(i) > b.count(i)) return false;
  }
  return true;
}

inline Mset mset_union(const Mset& a, const Mset& b) {
  return detail::pointwise(a, b, [](int x, int y) { return std::max(x, y); });
}

inline Mset mset_intersection(const Mset& a, const Mset& b) {
  return detail::pointwise(a, b, [](int x, int y) { return std::min(x, y); });
}

/// Pointwise sum capped at the height.
inline Mset mset_sum(const Mset& a, const Mset& b) {
  const int h = a.height();
  return detail::pointwise(a, b, [h](int x, int y) { return std::min(x + y, h); });
}

/// Pointwise difference floored at zero.
inline Mset mset_difference(const Mset& a, const Mset& b) {
  return detail::pointwise(a, b, [](int x, int y) { return std::max(x - y, 0); });
}

inline Mset complement(const Mset& a) {
  std::vector<int> out(a.counts().begin(), a.counts().end());
  for (int& c : out) c = a.height() - c;
  return Mset(a.ground_size(), a.height(), std::move(out));
}

}  // namespace pbm
