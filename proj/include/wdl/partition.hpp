#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wdl/element_set.hpp"
#include "wdl/error.hpp"
#include "wdl/wdl.hpp"

namespace wdl {

/// Binary relation on [0, n) as rows: rows[x] = { y : (x, y) in R }.
struct Relation {
  std::vector<ElementSet> rows;

  explicit Relation(std::size_t n = 0) : rows(n, ElementSet(n)) {}
  std::size_t size() const noexcept { return rows.size(); }
  bool contains(Element x, Element y) const { return rows[x].contains(y); }
  void insert(Element x, Element y) { rows[x].insert(y); }
  friend bool operator==(const Relation&, const Relation&) = default;

  bool is_subset_of(const Relation& o) const {
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (!rows[i].is_subset_of(o.rows[i])) return false;
    return true;
  }
};

/// Relational product: (x, z) with x R y and y S z for some y.
inline Relation compose(const Relation& r, const Relation& s) {
  if (r.size() != s.size()) throw Error(Errc::carrier_mismatch, "relations of different sizes");
  Relation out(r.size());
  for (std::size_t x = 0; x < r.size(); ++x)
    r.rows[x].for_each([&](Element y) { out.rows[x] |= s.rows[y]; });
  return out;
}

/// An equivalence relation on [0, n). Block ids are 0..k-1 numbered by
/// increasing minimum member.
class Partition {
 public:
  Partition() = default;

  /// Any labelling of blocks; it is renumbered canonically.
  explicit Partition(const std::vector<Element>& labels) : block_of_(labels.size()) {
    std::vector<Element> remap;
    std::vector<Element> seen_label;
    for (std::size_t x = 0; x < labels.size(); ++x) {
      auto it = std::find(seen_label.begin(), seen_label.end(), labels[x]);
      if (it == seen_label.end()) {
        seen_label.push_back(labels[x]);
        block_of_[x] = static_cast<Element>(seen_label.size() - 1);
      } else {
        block_of_[x] = static_cast<Element>(it - seen_label.begin());
      }
    }
    blocks_ = seen_label.size();
  }

  static Partition identity(std::size_t n) {
    std::vector<Element> b(n);
    std::iota(b.begin(), b.end(), Element{0});
    return Partition(b);
  }
  static Partition full(std::size_t n) { return Partition(std::vector<Element>(n, 0)); }

  static Partition from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks) {
    std::vector<Element> b(n, static_cast<Element>(n));
    for (std::size_t i = 0; i < blocks.size(); ++i)
      for (Element x : blocks[i]) {
        if (x >= n) throw Error(Errc::invalid_argument, "block member outside carrier", {x});
        if (b[x] != n) throw Error(Errc::invalid_argument, "element in two blocks", {x});
        b[x] = static_cast<Element>(i);
      }
    for (std::size_t x = 0; x < n; ++x)
      if (b[x] == n)
        throw Error(Errc::invalid_argument, "element in no block", {static_cast<Element>(x)});
    return Partition(b);
  }

  /// Equivalence closure of an arbitrary relation.
  static Partition closure_of(const Relation& r) {
    const std::size_t n = r.size();
    std::vector<Element> parent(n);
    std::iota(parent.begin(), parent.end(), Element{0});
    auto find = [&](Element x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t x = 0; x < n; ++x)
      r.rows[x].for_each([&](Element y) {
        auto a = find(static_cast<Element>(x)), b = find(y);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      });
    std::vector<Element> b(n);
    for (std::size_t x = 0; x < n; ++x) b[x] = find(static_cast<Element>(x));
    return Partition(b);
  }

  std::size_t size() const noexcept { return block_of_.size(); }
  std::size_t block_count() const noexcept { return blocks_; }
  Element block_of(Element x) const { return block_of_[x]; }
  const std::vector<Element>& block_ids() const noexcept { return block_of_; }
  bool related(Element x, Element y) const { return block_of_[x] == block_of_[y]; }

  ElementSet block(Element id) const {
    ElementSet s(size());
    for (std::size_t x = 0; x < size(); ++x)
      if (block_of_[x] == id) s.insert(static_cast<Element>(x));
    return s;
  }
  ElementSet class_of(Element x) const { return block(block_of_[x]); }
  std::vector<ElementSet> blocks() const {
    std::vector<ElementSet> out(blocks_, ElementSet(size()));
    for (std::size_t x = 0; x < size(); ++x) out[block_of_[x]].insert(static_cast<Element>(x));
    return out;
  }

  bool is_identity() const noexcept { return blocks_ == size(); }
  bool is_full() const noexcept { return blocks_ == 1; }

  /// this ⊆ o as relations.
  bool refines(const Partition& o) const {
    same_size(o);
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = x + 1; y < size(); ++y)
        if (related(static_cast<Element>(x), static_cast<Element>(y)) &&
            !o.related(static_cast<Element>(x), static_cast<Element>(y)))
          return false;
    return true;
  }

  Relation relation() const {
    Relation r(size());
    auto bs = blocks();
    for (std::size_t x = 0; x < size(); ++x) r.rows[x] = bs[block_of_[x]];
    return r;
  }

  friend Partition meet(const Partition& a, const Partition& b) {
    a.same_size(b);
    std::vector<Element> key(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
      key[x] = static_cast<Element>(a.block_of_[x] * b.blocks_ + b.block_of_[x]);
    return Partition(key);
  }
  friend Partition join(const Partition& a, const Partition& b) {
    a.same_size(b);
    Relation r = a.relation();
    for (std::size_t x = 0; x < a.size(); ++x) r.rows[x] |= b.class_of(static_cast<Element>(x));
    return closure_of(r);
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Canonical order: more blocks first, then block ids lexicographically.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = b.blocks_ <=> a.blocks_; c != 0) return c;
    return a.block_of_ <=> b.block_of_;
  }

 private:
  void same_size(const Partition& o) const {
    if (o.size() != size()) throw Error(Errc::carrier_mismatch, "partitions of different sizes");
  }

  std::vector<Element> block_of_;
  std::size_t blocks_ = 0;
};

/// First compatibility failure of a partition with the WDL operations.
struct CongruenceWitness {
  std::string operation;  // "delta", "nabla", "meet" or "join"
  Element x = 0, y = 0;   // related pair whose images separate
  std::optional<Element> z;  // translating element for meet/join
};

inline std::optional<CongruenceWitness> congruence_violation(const Wdl& w, const Partition& p) {
  if (p.size() != w.size()) throw Error(Errc::carrier_mismatch, "partition size differs");
  const auto n = static_cast<Element>(w.size());
  for (Element x = 0; x < n; ++x)
    for (Element y = x + 1; y < n; ++y) {
      if (!p.related(x, y)) continue;
      if (!p.related(w.delta(x), w.delta(y))) return CongruenceWitness{"delta", x, y, {}};
      if (!p.related(w.nabla(x), w.nabla(y))) return CongruenceWitness{"nabla", x, y, {}};
      for (Element z = 0; z < n; ++z) {
        if (!p.related(w.meet(x, z), w.meet(y, z))) return CongruenceWitness{"meet", x, y, z};
        if (!p.related(w.join(x, z), w.join(y, z))) return CongruenceWitness{"join", x, y, z};
      }
    }
  return std::nullopt;
}

inline bool is_congruence(const Wdl& w, const Partition& p) {
  return !congruence_violation(w, p);
}

inline void require_congruence(const Wdl& w, const Partition& p) {
  if (auto v = congruence_violation(w, p)) {
    std::vector<Element> wit{v->x, v->y};
    std::string msg = "pair (" + w.label(v->x) + ", " + w.label(v->y) + ") is separated by " +
                      v->operation;
    if (v->z) {
      wit.push_back(*v->z);
      msg += " with " + w.label(*v->z);
    }
    throw Error(Errc::not_a_congruence, msg, wit);
  }
}

}  // namespace wdl
