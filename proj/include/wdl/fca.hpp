#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wdl/element_set.hpp"
#include "wdl/error.hpp"
#include "wdl/lattice.hpp"
#include "wdl/wdl.hpp"

namespace wdl {

inline constexpr std::size_t kContextCap = 20;

/// Objects G, attributes M and incidence I, stored as one attribute row per
/// object.
class FormalContext {
 public:
  FormalContext() = default;
  FormalContext(std::vector<std::string> objects, std::vector<std::string> attributes,
                std::vector<ElementSet> rows)
      : objects_(std::move(objects)), attributes_(std::move(attributes)), rows_(std::move(rows)) {
    if (rows_.size() != objects_.size())
      throw Error(Errc::invalid_argument, "incidence needs one row per object");
    for (const auto& r : rows_)
      if (r.universe() != attributes_.size())
        throw Error(Errc::invalid_argument, "incidence rows must span all attributes");
    require_unique(objects_, "object");
    require_unique(attributes_, "attribute");
  }

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  bool incident(Element g, Element m) const { return rows_[g].contains(m); }
  const ElementSet& intent_of(Element g) const { return rows_[g]; }

  ElementSet all_objects() const { return ElementSet::full(objects_.size()); }
  ElementSet all_attributes() const { return ElementSet::full(attributes_.size()); }

  friend bool operator==(const FormalContext&, const FormalContext&) = default;

 private:
  static void require_unique(const std::vector<std::string>& names, const char* what) {
    std::set<std::string> seen;
    for (const auto& n : names)
      if (!seen.insert(n).second)
        throw Error(Errc::invalid_argument, std::string("duplicate ") + what + " name '" + n + "'");
  }

  std::vector<std::string> objects_, attributes_;
  std::vector<ElementSet> rows_;
};

/// A' : attributes shared by every object of A (all attributes for A = ∅).
inline ElementSet derive_objects(const FormalContext& k, const ElementSet& a) {
  ElementSet out = k.all_attributes();
  a.for_each([&](Element g) { out &= k.intent_of(g); });
  return out;
}

/// B' : objects having every attribute of B (all objects for B = ∅).
inline ElementSet derive_attributes(const FormalContext& k, const ElementSet& b) {
  ElementSet out(k.object_count());
  for (Element g = 0; g < k.object_count(); ++g)
    if (b.is_subset_of(k.intent_of(g))) out.insert(g);
  return out;
}

struct Concept {
  ElementSet extent;
  ElementSet intent;
  friend bool operator==(const Concept&, const Concept&) = default;
};

/// All formal concepts, ascending by extent bit value (a linear extension of
/// extent inclusion).
inline std::vector<Concept> concepts(const FormalContext& k) {
  if (k.object_count() > kContextCap || k.attribute_count() > kContextCap)
    throw Error(Errc::cap_exceeded, "concept enumeration is limited to " +
                                        std::to_string(kContextCap) + " objects and attributes");
  std::set<ElementSet> extents;
  const std::uint64_t subsets = std::uint64_t{1} << k.object_count();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    auto a = ElementSet::from_mask(k.object_count(), mask);
    extents.insert(derive_attributes(k, derive_objects(k, a)));
  }
  std::vector<Concept> out;
  for (const auto& e : extents) out.push_back({e, derive_objects(k, e)});
  return out;
}

/// Concept lattice with weak negation Δ and weak opposition ∇:
/// (A,B)^Δ = ((G∖A)'', (G∖A)'), (A,B)^∇ = ((M∖B)', (M∖B)'').
inline Wdl concept_algebra(const FormalContext& k, std::string name = "concepts") {
  const auto cs = concepts(k);
  const std::size_t n = cs.size();
  std::vector<ElementSet> up(n, ElementSet(n));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j)
      if (cs[i].extent.is_subset_of(cs[j].extent)) up[i].insert(static_cast<Element>(j));
  }
  auto index_of_extent = [&](const ElementSet& e) {
    for (std::size_t i = 0; i < n; ++i)
      if (cs[i].extent == e) return static_cast<Element>(i);
    throw Error(Errc::invalid_argument, "extent is not closed");
  };
  std::vector<Element> d(n), nb(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto ga = k.all_objects() - cs[i].extent;
    d[i] = index_of_extent(derive_attributes(k, derive_objects(k, ga)));
    auto mb = k.all_attributes() - cs[i].intent;
    nb[i] = index_of_extent(derive_attributes(k, mb));
  }
  auto lattice = BoundedLattice::from_order(std::move(up), std::move(labels));
  return Wdl(std::move(lattice), std::move(d), std::move(nb), std::move(name));
}

// ---------------------------------------------------------------------------
// Burmeister .cxt format

inline FormalContext parse_cxt(const std::string& text) {
  std::vector<std::string> lines;
  {
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      lines.push_back(line);
    }
  }
  std::size_t at = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (at >= lines.size())
      throw Error(Errc::parse_error, std::string("unexpected end of input, expected ") + what);
    return lines[at++];
  };
  auto count = [&](const char* what) {
    const auto& s = next(what);
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      throw Error(Errc::parse_error, "line " + std::to_string(at) + ": expected " + what);
    return static_cast<std::size_t>(std::stoul(s));
  };
  if (next("header") != "B") throw Error(Errc::parse_error, "line 1: header must be 'B'");
  if (!next("blank line").empty()) throw Error(Errc::parse_error, "line 2: expected blank line");
  const auto g = count("object count");
  const auto m = count("attribute count");
  if (!next("blank line").empty()) throw Error(Errc::parse_error, "line 5: expected blank line");
  std::vector<std::string> objects, attributes;
  for (std::size_t i = 0; i < g; ++i) objects.push_back(next("object name"));
  for (std::size_t i = 0; i < m; ++i) attributes.push_back(next("attribute name"));
  std::vector<ElementSet> rows;
  for (std::size_t i = 0; i < g; ++i) {
    const auto& row = next("incidence row");
    if (row.size() != m)
      throw Error(Errc::parse_error, "line " + std::to_string(at) + ": row has width " +
                                         std::to_string(row.size()) + ", expected " +
                                         std::to_string(m));
    ElementSet r(m);
    for (std::size_t j = 0; j < m; ++j) {
      const char c = row[j];
      if (c == 'X' || c == 'x') r.insert(static_cast<Element>(j));
      else if (c != '.')
        throw Error(Errc::parse_error, "line " + std::to_string(at) + ": illegal character '" +
                                           std::string(1, c) + "'");
    }
    rows.push_back(std::move(r));
  }
  for (; at < lines.size(); ++at)
    if (!lines[at].empty())
      throw Error(Errc::parse_error, "line " + std::to_string(at + 1) + ": trailing content");
  try {
    return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
  } catch (const Error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

inline std::string emit_cxt(const FormalContext& k) {
  std::string out = "B\n\n" + std::to_string(k.object_count()) + "\n" +
                    std::to_string(k.attribute_count()) + "\n\n";
  for (const auto& o : k.objects()) out += o + "\n";
  for (const auto& a : k.attributes()) out += a + "\n";
  for (Element g = 0; g < k.object_count(); ++g) {
    for (Element m = 0; m < k.attribute_count(); ++m) out += k.incident(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

/// Context with objects g1..gN, attributes m1..mM and each incidence drawn
/// independently with probability `density`.
inline FormalContext random_context(std::mt19937_64& rng, std::size_t objects,
                                    std::size_t attributes, double density) {
  std::bernoulli_distribution cell(density);
  std::vector<std::string> g, m;
  for (std::size_t i = 0; i < objects; ++i) g.push_back("g" + std::to_string(i + 1));
  for (std::size_t j = 0; j < attributes; ++j) m.push_back("m" + std::to_string(j + 1));
  std::vector<ElementSet> rows;
  for (std::size_t i = 0; i < objects; ++i) {
    ElementSet r(attributes);
    for (std::size_t j = 0; j < attributes; ++j)
      if (cell(rng)) r.insert(static_cast<Element>(j));
    rows.push_back(std::move(r));
  }
  return FormalContext(std::move(g), std::move(m), std::move(rows));
}

}  // namespace wdl
