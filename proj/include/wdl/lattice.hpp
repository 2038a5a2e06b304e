#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdl/element_set.hpp"
#include "wdl/error.hpp"

namespace wdl {

using ElementPair = std::pair<Element, Element>;

/// A finite bounded lattice on the dense carrier [0, n).
///
/// Instances are immutable once built. Every public constructor validates its
/// input; `from_tables` is the one trusted path, used by constructions that
/// already know the meet and join tables are consistent (products, powers,
/// quotients).
class BoundedLattice {
 public:
  BoundedLattice() = default;

  /// `up[x]` must hold exactly the y with x <= y.
  static BoundedLattice from_order(std::vector<ElementSet> up,
                                   std::vector<std::string> labels = {}) {
    const std::size_t n = up.size();
    if (n == 0) throw Error(Errc::invalid_argument, "a lattice needs at least one element");
    for (const auto& row : up)
      if (row.universe() != n)
        throw Error(Errc::invalid_argument, "order relation rows must have width n");
    BoundedLattice l;
    l.n_ = n;
    l.up_ = std::move(up);
    l.set_labels(std::move(labels));
    l.check_partial_order();
    l.compute_down();
    l.compute_tables();
    l.compute_bounds();
    return l;
  }

  /// Builds the order as the reflexive-transitive closure of the cover pairs
  /// (i, j), meaning i is covered by j.
  static BoundedLattice from_covers(std::size_t n, const std::vector<ElementPair>& covers,
                                    std::vector<std::string> labels = {}) {
    if (n == 0) throw Error(Errc::invalid_argument, "a lattice needs at least one element");
    std::vector<ElementSet> up(n, ElementSet(n));
    for (std::size_t x = 0; x < n; ++x) up[x].insert(static_cast<Element>(x));
    for (auto [i, j] : covers) {
      if (i >= n || j >= n)
        throw Error(Errc::invalid_argument,
                    "cover pair (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") references an element outside [0, " + std::to_string(n) + ")",
                    {i, j});
      if (i == j)
        throw Error(Errc::not_a_partial_order,
                    "cover pair (" + std::to_string(i) + ", " + std::to_string(i) + ") is a loop",
                    {i, j});
      up[i].insert(j);
    }
    // Warshall over bit rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x)
        if (up[x].contains(static_cast<Element>(k))) up[x] |= up[k];
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y)
        if (up[x].contains(static_cast<Element>(y)) && up[y].contains(static_cast<Element>(x)))
          throw Error(Errc::not_a_partial_order,
                      "cover relation contains a cycle through " + std::to_string(x) + " and " +
                          std::to_string(y),
                      {static_cast<Element>(x), static_cast<Element>(y)});
    return from_order(std::move(up), std::move(labels));
  }

  /// Trusted construction from precomputed tables (row-major n*n).
  static BoundedLattice from_tables(std::vector<ElementSet> up, std::vector<Element> meet,
                                    std::vector<Element> join, std::vector<std::string> labels) {
    BoundedLattice l;
    l.n_ = up.size();
    l.up_ = std::move(up);
    l.meet_ = std::move(meet);
    l.join_ = std::move(join);
    l.set_labels(std::move(labels));
    l.compute_down();
    l.compute_bounds();
    return l;
  }

  std::size_t size() const noexcept { return n_; }
  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  bool lt(Element x, Element y) const { return x != y && leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * n_ + y]; }
  Element join(Element x, Element y) const { return join_[x * n_ + y]; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  const ElementSet& up(Element x) const { return up_[x]; }
  const ElementSet& down(Element x) const { return down_[x]; }
  const std::vector<ElementSet>& up_rows() const noexcept { return up_; }

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element x) const { return labels_[x]; }
  std::optional<Element> find_label(const std::string& name) const {
    for (std::size_t i = 0; i < n_; ++i)
      if (labels_[i] == name) return static_cast<Element>(i);
    return std::nullopt;
  }

  Element meet_of(const ElementSet& s) const {
    Element acc = top_;
    s.for_each([&](Element e) { acc = meet(acc, e); });
    return acc;
  }
  Element join_of(const ElementSet& s) const {
    Element acc = bottom_;
    s.for_each([&](Element e) { acc = join(acc, e); });
    return acc;
  }

  ElementSet carrier() const { return ElementSet::full(n_); }

  /// Same carrier size and identical order (labels ignored).
  bool same_order(const BoundedLattice& o) const { return n_ == o.n_ && up_ == o.up_; }

  BoundedLattice with_labels(std::vector<std::string> labels) const {
    BoundedLattice copy = *this;
    copy.set_labels(std::move(labels));
    return copy;
  }

 private:
  void set_labels(std::vector<std::string> labels) {
    if (labels.empty()) {
      labels.reserve(n_);
      for (std::size_t i = 0; i < n_; ++i) labels.push_back(std::to_string(i));
    }
    if (labels.size() != n_)
      throw Error(Errc::invalid_argument, "expected " + std::to_string(n_) + " labels, got " +
                                              std::to_string(labels.size()));
    labels_ = std::move(labels);
  }

  void check_partial_order() const {
    for (std::size_t x = 0; x < n_; ++x)
      if (!up_[x].contains(static_cast<Element>(x)))
        throw Error(Errc::not_a_partial_order, "relation is not reflexive at " + std::to_string(x),
                    {static_cast<Element>(x), static_cast<Element>(x)});
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = x + 1; y < n_; ++y)
        if (up_[x].contains(static_cast<Element>(y)) && up_[y].contains(static_cast<Element>(x)))
          throw Error(Errc::not_a_partial_order,
                      "relation is not antisymmetric at (" + std::to_string(x) + ", " +
                          std::to_string(y) + ")",
                      {static_cast<Element>(x), static_cast<Element>(y)});
    for (std::size_t x = 0; x < n_; ++x) {
      for (Element y : up_[x].members()) {
        ElementSet missing = up_[y] - up_[x];
        if (!missing.empty())
          throw Error(Errc::not_a_partial_order,
                      "relation is not transitive at (" + std::to_string(x) + ", " +
                          std::to_string(y) + ", " + std::to_string(missing.first()) + ")",
                      {static_cast<Element>(x), y, missing.first()});
      }
    }
  }

  void compute_down() {
    down_.assign(n_, ElementSet(n_));
    for (std::size_t x = 0; x < n_; ++x)
      up_[x].for_each([&](Element y) { down_[y].insert(static_cast<Element>(x)); });
  }

  // Greatest element of `s` w.r.t. the order, when one exists.
  static std::optional<Element> maximum(const ElementSet& s, const std::vector<ElementSet>& below) {
    if (s.empty()) return std::nullopt;
    Element best = s.first();
    std::size_t best_count = 0;
    s.for_each([&](Element e) {
      auto c = (below[e] & s).count();
      if (c > best_count) best = e, best_count = c;
    });
    if (best_count != s.count()) return std::nullopt;
    return best;
  }

  void compute_tables() {
    meet_.assign(n_ * n_, 0);
    join_.assign(n_ * n_, 0);
    for (std::size_t x = 0; x < n_; ++x) {
      for (std::size_t y = x; y < n_; ++y) {
        auto m = maximum(down_[x] & down_[y], down_);
        auto j = maximum(up_[x] & up_[y], up_);
        if (!m || !j)
          throw Error(Errc::not_a_lattice,
                      "pair (" + std::to_string(x) + ", " + std::to_string(y) + ") has no " +
                          (m ? "least upper bound" : "greatest lower bound"),
                      {static_cast<Element>(x), static_cast<Element>(y)});
        meet_[x * n_ + y] = meet_[y * n_ + x] = *m;
        join_[x * n_ + y] = join_[y * n_ + x] = *j;
      }
    }
  }

  void compute_bounds() {
    auto full = ElementSet::full(n_);
    std::optional<Element> lo, hi;
    for (std::size_t x = 0; x < n_; ++x) {
      if (up_[x] == full) lo = static_cast<Element>(x);
      if (down_[x] == full) hi = static_cast<Element>(x);
    }
    if (!lo || !hi) throw Error(Errc::no_bounds, "order has no global minimum or maximum");
    bottom_ = *lo;
    top_ = *hi;
  }

  std::size_t n_ = 0;
  std::vector<ElementSet> up_, down_;
  std::vector<Element> meet_, join_;
  std::vector<std::string> labels_;
  Element bottom_ = 0, top_ = 0;
};

/// "{a,b,1}" with members in index order.
inline std::string set_label(const BoundedLattice& l, const ElementSet& s) {
  std::string out = "{";
  s.for_each([&](Element x) { out += (out.size() > 1 ? "," : "") + l.label(x); });
  return out + "}";
}

// ---------------------------------------------------------------------------
// Structural queries

/// Cover pairs (x, y), x covered by y, sorted lexicographically.
inline std::vector<ElementPair> covers(const BoundedLattice& l) {
  std::vector<ElementPair> out;
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x) {
    ElementSet above = l.up(x);
    above.erase(x);
    above.for_each([&](Element y) {
      ElementSet between = above & l.down(y);
      between.erase(y);
      if (between.empty()) out.emplace_back(x, y);
    });
  }
  return out;
}

using Triple = std::array<Element, 3>;

/// First triple (lexicographic) with x∧(y∨z) != (x∧y)∨(x∧z), if any.
inline std::optional<Triple> distributivity_violation(const BoundedLattice& l) {
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) return Triple{x, y, z};
  return std::nullopt;
}

inline bool is_distributive(const BoundedLattice& l) { return !distributivity_violation(l); }

/// v with v != ⋁{x < v}.
inline ElementSet join_irreducibles(const BoundedLattice& l) {
  ElementSet out(l.size());
  for (Element v = 0; v < l.size(); ++v) {
    ElementSet below = l.down(v);
    below.erase(v);
    if (l.join_of(below) != v) out.insert(v);
  }
  return out;
}

/// v with v != ⋀{x > v}.
inline ElementSet meet_irreducibles(const BoundedLattice& l) {
  ElementSet out(l.size());
  for (Element v = 0; v < l.size(); ++v) {
    ElementSet above = l.up(v);
    above.erase(v);
    if (l.meet_of(above) != v) out.insert(v);
  }
  return out;
}

/// Extra constraint hook for isomorphism search: called when x is tentatively
/// mapped to `image`; may inspect the partial mapping (unmapped entries hold
/// `size()` of the target).
using MappingConstraint =
    std::function<bool(Element x, Element image, const std::vector<Element>& partial)>;

/// Order isomorphism L1 -> L2 found by backtracking; elements of L1 are
/// assigned in index order and candidates tried in ascending order, so the
/// result is the lexicographically first isomorphism.
inline std::optional<std::vector<Element>> find_isomorphism(const BoundedLattice& a,
                                                            const BoundedLattice& b,
                                                            const MappingConstraint& extra = {}) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  const auto unmapped = static_cast<Element>(n);
  std::vector<Element> phi(n, unmapped);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> up_a(n), down_a(n), up_b(n), down_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    up_a[i] = a.up(static_cast<Element>(i)).count();
    down_a[i] = a.down(static_cast<Element>(i)).count();
    up_b[i] = b.up(static_cast<Element>(i)).count();
    down_b[i] = b.down(static_cast<Element>(i)).count();
  }
  std::function<bool(Element)> assign = [&](Element x) -> bool {
    if (x == n) return true;
    for (Element c = 0; c < n; ++c) {
      if (used[c] || up_a[x] != up_b[c] || down_a[x] != down_b[c]) continue;
      bool ok = true;
      for (Element y = 0; y < x && ok; ++y)
        ok = a.leq(x, y) == b.leq(c, phi[y]) && a.leq(y, x) == b.leq(phi[y], c);
      if (!ok) continue;
      phi[x] = c;
      used[c] = true;
      if ((!extra || extra(x, c, phi)) && assign(x + 1)) return true;
      used[c] = false;
      phi[x] = unmapped;
    }
    return false;
  };
  if (assign(0)) return phi;
  return std::nullopt;
}

/// S contains both bounds and is closed under ∧ and ∨.
inline bool is_sublattice_closed(const BoundedLattice& l, const ElementSet& s) {
  if (!s.contains(l.bottom()) || !s.contains(l.top())) return false;
  const auto m = s.members();
  for (Element x : m)
    for (Element y : m)
      if (!s.contains(l.meet(x, y)) || !s.contains(l.join(x, y))) return false;
  return true;
}

inline bool is_upset(const BoundedLattice& l, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](Element x) { ok = ok && l.up(x).is_subset_of(s); });
  return ok;
}

inline bool is_downset(const BoundedLattice& l, const ElementSet& s) {
  bool ok = true;
  s.for_each([&](Element x) { ok = ok && l.down(x).is_subset_of(s); });
  return ok;
}

inline void require_enumerable(std::size_t n, const char* what) {
  if (n > kSubsetEnumerationCap)
    throw Error(Errc::cap_exceeded, std::string(what) + " refuses carriers above " +
                                        std::to_string(kSubsetEnumerationCap) + " elements (got " +
                                        std::to_string(n) + ")");
}

/// All nonempty upward-closed subsets, ascending by bit value.
inline std::vector<ElementSet> upsets(const BoundedLattice& l) {
  require_enumerable(l.size(), "upset enumeration");
  const std::size_t n = l.size();
  // Decide elements from the top of a linear extension downwards so that every
  // forced inclusion/exclusion propagates before the element is reached.
  std::vector<Element> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Element>(i);
  std::sort(order.begin(), order.end(), [&](Element x, Element y) {
    return l.down(x).count() > l.down(y).count();
  });
  std::vector<ElementSet> out;
  std::function<void(std::size_t, ElementSet, ElementSet)> rec = [&](std::size_t i, ElementSet in,
                                                                     ElementSet out_set) {
    if (i == n) {
      if (!in.empty()) out.push_back(in);
      return;
    }
    Element x = order[i];
    if (in.contains(x) || out_set.contains(x)) {
      rec(i + 1, std::move(in), std::move(out_set));
      return;
    }
    if (l.up(x).is_subset_of(in | ElementSet::of(n, std::array{x}))) {
      ElementSet with = in;
      with.insert(x);
      rec(i + 1, std::move(with), out_set);
    }
    ElementSet without = out_set | l.down(x);
    rec(i + 1, std::move(in), std::move(without));
  };
  rec(0, ElementSet(n), ElementSet(n));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wdl
