#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "wdl/error.hpp"

namespace wdl {

/// A subset of the carrier [0, n) stored as a fixed-width bit set.
///
/// Sets compare as unsigned integers of their bit representation (element i
/// is bit i), which gives the deterministic enumeration order used
/// throughout the library.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  ElementSet(std::size_t universe, std::initializer_list<Element> members)
      : ElementSet(universe) {
    for (Element e : members) insert(e);
  }
  template <class Range>
  static ElementSet of(std::size_t universe, const Range& members) {
    ElementSet s(universe);
    for (auto e : members) s.insert(static_cast<Element>(e));
    return s;
  }
  static ElementSet full(std::size_t universe) {
    ElementSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<Element>(i));
    return s;
  }
  // Only meaningful for universe <= 64.
  static ElementSet from_mask(std::size_t universe, std::uint64_t mask) {
    ElementSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask & s.last_word_mask_if_single();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Element e) const noexcept {
    return e < universe_ && ((words_[e / 64] >> (e % 64)) & 1U) != 0;
  }
  void insert(Element e) {
    check(e);
    words_[e / 64] |= std::uint64_t{1} << (e % 64);
  }
  void erase(Element e) {
    check(e);
    words_[e / 64] &= ~(std::uint64_t{1} << (e % 64));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  bool is_subset_of(const ElementSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const ElementSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  ElementSet& operator|=(const ElementSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElementSet& operator&=(const ElementSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

  ElementSet complement() const {
    return full(universe_) - *this;
  }

  std::vector<Element> members() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        auto b = static_cast<std::size_t>(std::countr_zero(bits));
        f(static_cast<Element>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  // Smallest member, or universe() when empty.
  Element first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] != 0)
        return static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return static_cast<Element>(universe_);
  }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend std::strong_ordering operator<=>(const ElementSet& a, const ElementSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const noexcept {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 1099511628211ULL ^ static_cast<std::size_t>(w);
    return h;
  }

 private:
  void check(Element e) const {
    if (e >= universe_)
      throw Error(Errc::invalid_argument,
                  "element " + std::to_string(e) + " outside carrier of size " +
                      std::to_string(universe_),
                  {e});
  }
  void same_universe(const ElementSet& o) const {
    if (o.universe_ != universe_)
      throw Error(Errc::carrier_mismatch, "element sets over different carriers");
  }
  std::uint64_t last_word_mask_if_single() const noexcept {
    return universe_ >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe_) - 1);
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace wdl
