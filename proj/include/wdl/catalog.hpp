#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wdl/constructions.hpp"
#include "wdl/error.hpp"
#include "wdl/lattice.hpp"
#include "wdl/wdl.hpp"

namespace wdl {

namespace detail {

struct CatalogEntry {
  const char* name;
  const char* labels;  // space separated, in index order
  const char* covers;  // "x<y" pairs, space separated
  const char* delta;   // image labels in index order
  const char* nabla;
};

// Small and medium examples with their dicomplementations as printed.
// L7 shares the K7 carrier; N5 is the subalgebra {0,d,e,c,1} of M7.
inline constexpr CatalogEntry kEntries[] = {
    {"M42", "0 a b e 1", "0<a 0<b a<e b<e e<1", "1 1 1 1 0", "1 b a 0 0"},
    {"P6", "0 u v a b 1", "0<u 0<v u<a v<a v<b a<1 b<1", "1 b 1 b u 0", "1 b u 0 u 0"},
    {"L6", "0 u v a b 1", "0<u 0<v u<a v<a v<b a<1 b<1", "1 b 1 b u 0", "1 v u 0 0 0"},
    {"K7", "0 u v a b w 1", "0<u 0<w 0<v u<a w<a w<b v<b a<1 b<1", "1 b a v u 1 0",
     "1 v u 0 0 0 0"},
    {"L7", "0 u v a b w 1", "0<u 0<w 0<v u<a w<a w<b v<b a<1 b<1", "1 1 1 b a 1 0",
     "1 v u 0 0 0 0"},
    {"M7", "0 d a b e c 1", "0<d 0<c d<a d<b a<e b<e e<1 c<1", "1 1 1 1 c e 0",
     "1 c 0 0 0 d 0"},
    {"N5", "0 d e c 1", "0<d d<e e<1 0<c c<1", "1 1 c e 0", "1 c 0 d 0"},
    {"L9", "0 a b c d u v w 1", "0<c 0<v c<b c<w v<w v<u b<a w<a w<d u<d a<1 d<1",
     "1 u u 1 b b 1 1 0", "1 0 u u 0 b b 0 0"},
};

inline std::vector<std::string> words(const char* s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

inline Element index_of_label(const std::vector<std::string>& labels, const std::string& l) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == l) return static_cast<Element>(i);
  throw Error(Errc::invalid_argument, "catalog label '" + l + "' not in carrier");
}

inline Wdl build(const CatalogEntry& e) {
  auto labels = words(e.labels);
  std::vector<ElementPair> cov;
  for (const auto& c : words(e.covers)) {
    auto lt = c.find('<');
    cov.emplace_back(index_of_label(labels, c.substr(0, lt)),
                     index_of_label(labels, c.substr(lt + 1)));
  }
  auto table = [&](const char* col) {
    std::vector<Element> out;
    for (const auto& w : words(col)) out.push_back(index_of_label(labels, w));
    return out;
  };
  auto lattice = BoundedLattice::from_covers(labels.size(), cov, labels);
  return Wdl(std::move(lattice), table(e.delta), table(e.nabla), e.name);
}

// 4x4 grid; element (i, j) has index 4i + j and (i, j) <= (k, l) iff i <= k
// and j <= l. ∇ sends everything above u = (1,1) to 0, and the boundary
// elements a, b, c and their ∇-images swap; Δ is the dual under the
// order-reversing symmetry (i, j) -> (3-j, 3-i).
inline Wdl build_l16() {
  auto idx = [](int i, int j) { return static_cast<Element>(4 * i + j); };
  std::vector<ElementPair> cov;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i < 3) cov.emplace_back(idx(i, j), idx(i + 1, j));
      if (j < 3) cov.emplace_back(idx(i, j), idx(i, j + 1));
    }
  std::vector<std::string> labels(16);
  const char* names[4][4] = {{"0", "cN", "bN", "aN"},
                             {"a", "u", "v", "dD"},
                             {"b", "w", "x22", "cD"},
                             {"c", "d", "e", "1"}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) labels[idx(i, j)] = names[i][j];
  std::vector<Element> nb(16), d(16);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Element img = idx(0, 0);
      if (i == 0 && j == 0) img = idx(3, 3);
      else if (j == 0) img = idx(0, 4 - i);
      else if (i == 0) img = idx(4 - j, 0);
      nb[idx(i, j)] = img;
    }
  auto sigma = [&](Element x) { return idx(3 - static_cast<int>(x % 4), 3 - static_cast<int>(x / 4)); };
  for (Element x = 0; x < 16; ++x) d[x] = sigma(nb[sigma(x)]);
  auto lattice = BoundedLattice::from_covers(16, cov, labels);
  return Wdl(std::move(lattice), std::move(d), std::move(nb), "L16");
}

}  // namespace detail

inline std::vector<std::string> catalog_names() {
  return {"C2", "C3", "C4", "C5", "C6", "C7", "M42", "P6", "L6",
          "K7", "L7", "M7", "N5", "L9", "L16"};
}

inline Wdl catalog(const std::string& name) {
  if (name.size() == 2 && name[0] == 'C' && name[1] >= '2' && name[1] <= '7')
    return chain(static_cast<std::size_t>(name[1] - '0'));
  for (const auto& e : detail::kEntries)
    if (name == e.name) return detail::build(e);
  if (name == "L16") return detail::build_l16();
  throw Error(Errc::unknown_name, "no catalog entry named '" + name + "'");
}

/// Compares catalog tables with the constructions they are claimed to equal.
/// Each returned string describes one disagreement.
inline std::vector<std::string> catalog_validation_warnings() {
  std::vector<std::string> out;
  auto compare = [&](const std::string& name, const Wdl& built, const char* how) {
    auto w = catalog(name);
    if (!find_isomorphism(w.lattice(), built.lattice()))
      out.push_back(name + ": carrier is not order-isomorphic to " + how);
    else if (!find_wdl_isomorphism(w, built))
      out.push_back(name + ": printed dicomplementation differs from " + how);
  };
  compare("P6", product(chain(2), chain(3)), "product(C2, C3)");
  compare("L9", power(chain(3), 2), "power(C3, 2)");
  return out;
}

}  // namespace wdl
