#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pbm/error.hpp"
#include "pbm/mset.hpp"

namespace pbm {

/// A pomset on the regular mset {h/0, ..., h/(n-1)}, stored as its height and
/// the strict partial order it induces on the labels.
class Pomset {
 public:
  Pomset() = default;

  static Pomset antichain(int n, int height) { return Pomset(n, height); }

  /// Total order 0 < 1 < ... < n-1.
  static Pomset chain(int n, int height) {
    Pomset p(n, height);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) p.set_less(a, b);
    }
    return p;
  }

  /// Transitive closure of the given pairs; (a, b) means a is strictly below b.
  static Pomset from_relations(int n, int height, std::span<const std::pair<int, int>> pairs) {
    Pomset p(n, height);
    for (auto [a, b] : pairs) {
      if (a < 0 || a >= n || b < 0 || b >= n) {
        throw PreconditionError("relation (" + std::to_string(a) + ", " + std::to_string(b) +
                                ") references a label outside the ground set");
      }
      p.set_less(a, b);
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k) {
      for (int a = 0; a < n; ++a) {
        if (!p.less(a, k)) continue;
        for (int b = 0; b < n; ++b) {
          if (p.less(k, b)) p.set_less(a, b);
        }
      }
    }
    for (int a = 0; a < n; ++a) {
      if (p.less(a, a)) throw PreconditionError("relations contain a cycle through label " + std::to_string(a));
    }
    return p;
  }

  int size() const noexcept { return n_; }
  int height() const noexcept { return h_; }

  /// Strict order: a is below b.
  bool less(int a, int b) const noexcept { return less_[index(a, b)] != 0; }
  bool comparable(int a, int b) const noexcept { return less(a, b) || less(b, a); }

  bool is_chain() const noexcept {
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (!comparable(a, b)) return false;
      }
    }
    return true;
  }

  bool is_antichain() const noexcept {
    for (char c : less_) {
      if (c != 0) return false;
    }
    return true;
  }

  /// Every comparable pair (a, b) with a below b, in lexicographic order.
  std::vector<std::pair<int, int>> relations() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (less(a, b)) out.emplace_back(a, b);
      }
    }
    return out;
  }

  Mset regular_mset() const { return Mset::regular(n_, h_); }

  /// Same mset with every comparability reversed.
  Pomset dual() const {
    Pomset d(n_, h_);
    for (int a = 0; a < n_; ++a) {
      for (int b = 0; b < n_; ++b) {
        if (less(a, b)) d.set_less(b, a);
      }
    }
    return d;
  }

  friend bool operator==(const Pomset&, const Pomset&) = default;

 private:
  Pomset(int n, int height) : n_(n), h_(height) {
    if (n < 1) throw PreconditionError("pomset ground size must be positive");
    if (height < 1) throw PreconditionError("pomset height must be positive");
    less_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  }

  std::size_t index(int a, int b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }
  void set_less(int a, int b) noexcept { less_[index(a, b)] = 1; }

  int n_ = 0;
  int h_ = 0;
  std::vector<char> less_;
};

inline Pomset dual_pomset(const Pomset& p) { return p.dual(); }

/// True iff the mset is an ideal of the pomset: whenever a < b and b is in the
/// root set, a carries the full count h.
inline bool is_ideal(const Pomset& p, const Mset& s) {
  if (s.ground_size() != p.size() || s.height() != p.height()) return false;
  for (int b = 0; b < p.size(); ++b) {
    if (s.count(b) == 0) continue;
    for (int a = 0; a < p.size(); ++a) {
      if (p.less(a, b) && s.count(a) != p.height()) return false;
    }
  }
  return true;
}

/// An ideal of a pomset. Holds only the counts; operations that need the order
/// take the pomset explicitly.
class Ideal {
 public:
  /// Validates the counts against the pomset.
  static Ideal make(const Pomset& p, Mset counts) {
    if (counts.ground_size() != p.size() || counts.height() != p.height()) {
      throw PreconditionError("ideal counts do not match the pomset's ground set or height");
    }
    if (!is_ideal(p, counts)) throw PreconditionError("mset is not an ideal of the pomset");
    return Ideal(std::move(counts));
  }

  static std::optional<Ideal> try_make(const Pomset& p, Mset counts) {
    if (!is_ideal(p, counts)) return std::nullopt;
    return Ideal(std::move(counts));
  }

  static Ideal empty(const Pomset& p) { return Ideal(Mset(p.size(), p.height())); }
  static Ideal full(const Pomset& p) { return Ideal(p.regular_mset()); }

  const Mset& mset() const noexcept { return counts_; }
  int count(int label) const { return counts_.count(label); }
  int cardinality() const noexcept { return counts_.cardinality(); }
  std::vector<int> root_set() const { return counts_.root_set(); }
  int root_size() const noexcept { return counts_.root_size(); }

  /// Every root element carries the full height (vacuous for the empty ideal).
  bool is_full_count() const noexcept {
    for (int c : counts_.counts()) {
      if (c != 0 && c != counts_.height()) return false;
    }
    return true;
  }

  /// Root labels not strictly below another root label.
  std::vector<int> maximal_elements(const Pomset& p) const {
    std::vector<int> out;
    const auto roots = root_set();
    for (int a : roots) {
      bool maximal = true;
      for (int b : roots) {
        if (p.less(a, b)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(a);
    }
    return out;
  }

  friend bool operator==(const Ideal&, const Ideal&) = default;

 private:
  explicit Ideal(Mset counts) : counts_(std::move(counts)) {}

  Mset counts_;
};

inline bool is_full_count(const Ideal& ideal) { return ideal.is_full_count(); }

/// Smallest ideal containing s: every root label keeps its count and every
/// label strictly below a root label gets the full height.
inline Ideal generated_ideal(const Pomset& p, const Mset& s) {
  if (s.ground_size() != p.size() || s.height() != p.height()) {
    throw PreconditionError("generator mset does not match the pomset's ground set or height");
  }
  std::vector<int> counts(s.counts().begin(), s.counts().end());
  for (int a = 0; a < p.size(); ++a) {
    if (s.count(a) == 0) continue;
    for (int b = 0; b < p.size(); ++b) {
      if (p.less(b, a)) counts[static_cast<std::size_t>(b)] = p.height();
    }
  }
  return Ideal::make(p, Mset(p.size(), p.height(), std::move(counts)));
}

/// Optional restrictions for ideal enumeration.
struct IdealFilter {
  std::optional<int> cardinality = std::nullopt;
  std::optional<int> root_size = std::nullopt;
  std::optional<int> maximal_count = std::nullopt;

  bool accepts(const Pomset& p, const Ideal& ideal) const {
    if (cardinality && ideal.cardinality() != *cardinality) return false;
    if (root_size && ideal.root_size() != *root_size) return false;
    if (maximal_count && static_cast<int>(ideal.maximal_elements(p).size()) != *maximal_count) return false;
    return true;
  }
};

namespace detail {

// Depth-first assignment of counts label by label. The ideal condition is a
// set of pairwise constraints (a < b and count(b) > 0 imply count(a) = h), so
// every partial assignment can be checked against the labels already fixed.
// Counts are tried in increasing order, which yields lexicographic output.
class IdealEnumerator {
 public:
  IdealEnumerator(const Pomset& p, const IdealFilter& filter, std::vector<Ideal>& out)
      : p_(p), filter_(filter), out_(out), counts_(static_cast<std::size_t>(p.size()), 0) {}

  void run() { assign(0, 0); }

 private:
  bool consistent(int label, int c) const {
    const int h = p_.height();
    for (int other = 0; other < label; ++other) {
      const int oc = counts_[static_cast<std::size_t>(other)];
      if (p_.less(other, label) && c > 0 && oc != h) return false;
      if (p_.less(label, other) && oc > 0 && c != h) return false;
    }
    return true;
  }

  void assign(int label, int partial_sum) {
    if (filter_.cardinality && partial_sum > *filter_.cardinality) return;
    if (label == p_.size()) {
      auto ideal = Ideal::make(p_, Mset(p_.size(), p_.height(), counts_));
      if (filter_.accepts(p_, ideal)) out_.push_back(std::move(ideal));
      return;
    }
    for (int c = 0; c <= p_.height(); ++c) {
      if (!consistent(label, c)) continue;
      counts_[static_cast<std::size_t>(label)] = c;
      assign(label + 1, partial_sum + c);
    }
    counts_[static_cast<std::size_t>(label)] = 0;
  }

  const Pomset& p_;
  const IdealFilter& filter_;
  std::vector<Ideal>& out_;
  std::vector<int> counts_;
};

}  // namespace detail

/// All ideals of the pomset passing the filter, in lexicographic order of
/// their count vectors.
inline std::vector<Ideal> enumerate_ideals(const Pomset& p, const IdealFilter& filter = {}) {
  std::vector<Ideal> out;
  detail::IdealEnumerator(p, filter, out).run();
  return out;
}

/// Ideals with r root elements and cardinality t, or cardinality at most t
/// when `up_to` is set.
inline std::vector<Ideal> ideal_family(const Pomset& p, int r, int t, bool up_to = false) {
  if (!up_to) return enumerate_ideals(p, IdealFilter{.cardinality = t, .root_size = r});
  std::vector<Ideal> out;
  for (auto& i : enumerate_ideals(p, IdealFilter{.root_size = r})) {
    if (i.cardinality() <= t) out.push_back(std::move(i));
  }
  return out;
}

/// Ideals of cardinality t.
inline std::vector<Ideal> ideals_of_cardinality(const Pomset& p, int t) {
  return enumerate_ideals(p, IdealFilter{.cardinality = t});
}

/// The complement h - count on every label, as an ideal of the dual pomset.
inline Ideal ideal_complement(const Pomset& p, const Ideal& ideal) {
  return Ideal::make(p.dual(), complement(ideal.mset()));
}

}  // namespace pbm
