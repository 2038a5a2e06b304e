#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wdl/element_set.hpp"
#include "wdl/error.hpp"
#include "wdl/lattice.hpp"
#include "wdl/partition.hpp"
#include "wdl/wdl.hpp"

namespace wdl {

inline BoundedLattice chain_lattice(std::size_t n, std::vector<std::string> labels = {}) {
  if (n < 1) throw Error(Errc::invalid_argument, "a chain needs at least one element");
  std::vector<ElementPair> cov;
  for (std::size_t i = 0; i + 1 < n; ++i)
    cov.emplace_back(static_cast<Element>(i), static_cast<Element>(i + 1));
  return BoundedLattice::from_covers(n, cov, std::move(labels));
}

/// C_n with its unique dicomplementation. Interior elements are labelled
/// "e" for n = 3 and c1..c{n-2} otherwise.
inline Wdl chain(std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_argument, "chain length must be at least 2");
  if (n > kMaxCarrier) throw Error(Errc::cap_exceeded, "chain longer than the carrier cap");
  std::vector<std::string> labels{"0"};
  if (n == 3) {
    labels.push_back("e");
  } else {
    for (std::size_t i = 1; i + 1 < n; ++i) labels.push_back("c" + std::to_string(i));
  }
  labels.push_back("1");
  return trivial_dicomplementation(chain_lattice(n, std::move(labels)), "C" + std::to_string(n));
}

/// Cartesian product of the factors with componentwise operations. The
/// index of a tuple (t_0, ..., t_{k-1}) is its mixed-radix value with t_0 as
/// the most significant digit, so two factors index row-major.
inline Wdl product_of(const std::vector<const Wdl*>& factors, std::string name) {
  if (factors.empty()) throw Error(Errc::invalid_argument, "empty product");
  std::size_t total = 1;
  for (const auto* f : factors) {
    total *= f->size();
    if (total > kMaxCarrier)
      throw Error(Errc::cap_exceeded,
                  "product exceeds " + std::to_string(kMaxCarrier) + " elements");
  }
  const std::size_t k = factors.size();
  std::vector<std::vector<Element>> digits(total, std::vector<Element>(k));
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = k; i-- > 0;) {
      digits[idx][i] = static_cast<Element>(rest % factors[i]->size());
      rest /= factors[i]->size();
    }
  }
  auto encode = [&](const std::vector<Element>& t) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * factors[i]->size() + t[i];
    return static_cast<Element>(idx);
  };
  auto pointwise = [&](std::size_t a, std::size_t b, auto op) {
    std::vector<Element> t(k);
    for (std::size_t i = 0; i < k; ++i) t[i] = op(*factors[i], digits[a][i], digits[b][i]);
    return encode(t);
  };
  std::vector<ElementSet> up(total, ElementSet(total));
  std::vector<Element> meet(total * total), join(total * total);
  for (std::size_t a = 0; a < total; ++a) {
    for (std::size_t b = 0; b < total; ++b) {
      bool le = true;
      for (std::size_t i = 0; i < k && le; ++i) le = factors[i]->leq(digits[a][i], digits[b][i]);
      if (le) up[a].insert(static_cast<Element>(b));
      meet[a * total + b] =
          pointwise(a, b, [](const Wdl& w, Element x, Element y) { return w.meet(x, y); });
      join[a * total + b] =
          pointwise(a, b, [](const Wdl& w, Element x, Element y) { return w.join(x, y); });
    }
  }
  std::vector<std::string> labels(total);
  std::vector<Element> d(total), nb(total);
  for (std::size_t a = 0; a < total; ++a) {
    std::string s = "(";
    std::vector<Element> td(k), tn(k);
    for (std::size_t i = 0; i < k; ++i) {
      s += (i ? "," : "") + factors[i]->label(digits[a][i]);
      td[i] = factors[i]->delta(digits[a][i]);
      tn[i] = factors[i]->nabla(digits[a][i]);
    }
    labels[a] = s + ")";
    d[a] = encode(td);
    nb[a] = encode(tn);
  }
  auto lattice = BoundedLattice::from_tables(std::move(up), std::move(meet), std::move(join),
                                             std::move(labels));
  return Wdl(std::move(lattice), std::move(d), std::move(nb), std::move(name));
}

inline Wdl product(const Wdl& a, const Wdl& b) {
  return product_of({&a, &b}, a.name() + "x" + b.name());
}

inline Wdl power(const Wdl& w, std::size_t k) {
  if (k < 1) throw Error(Errc::invalid_argument, "power exponent must be at least 1");
  std::vector<const Wdl*> factors(k, &w);
  return product_of(factors, w.name() + "^" + std::to_string(k));
}

/// Index in power(w, k) of the tuple t.
inline Element power_index(std::size_t n, const std::vector<Element>& t) {
  std::size_t idx = 0;
  for (Element v : t) idx = idx * n + v;
  return static_cast<Element>(idx);
}

/// Tuple of the element `idx` in a k-th power of an n-element algebra.
inline std::vector<Element> power_tuple(std::size_t n, std::size_t k, Element idx) {
  std::vector<Element> t(k);
  std::size_t rest = idx;
  for (std::size_t i = k; i-- > 0;) {
    t[i] = static_cast<Element>(rest % n);
    rest /= n;
  }
  return t;
}

/// The constant map x -> a as an element of power(w, k).
inline Element constant_embedding(std::size_t n, std::size_t k, Element a) {
  return power_index(n, std::vector<Element>(k, a));
}

/// Least subset containing seed and both bounds that is closed under ∧, ∨, Δ, ∇.
inline ElementSet subalgebra_generated(const Wdl& w, const ElementSet& seed) {
  ElementSet s = seed;
  s.insert(w.bottom());
  s.insert(w.top());
  for (bool grew = true; grew;) {
    grew = false;
    const auto m = s.members();
    ElementSet next = s;
    for (Element x : m) {
      next.insert(w.delta(x));
      next.insert(w.nabla(x));
      for (Element y : m) {
        next.insert(w.meet(x, y));
        next.insert(w.join(x, y));
      }
    }
    if (next != s) {
      s = std::move(next);
      grew = true;
    }
  }
  return s;
}

inline bool is_subalgebra(const Wdl& w, const ElementSet& s) {
  return subalgebra_generated(w, s) == s;
}

/// The algebra induced on a subalgebra M, with its element map into W.
struct InducedAlgebra {
  Wdl algebra;
  std::vector<Element> members;  // index in algebra -> element of W
  std::vector<Element> index_of;  // element of W -> index, or w.size() if absent
};

inline InducedAlgebra induced_algebra(const Wdl& w, const ElementSet& m) {
  if (!is_subalgebra(w, m))
    throw Error(Errc::not_a_subalgebra, "set is not closed under the WDL operations");
  auto ind = induced_lattice(w.lattice(), m);
  std::vector<Element> index_of(w.size(), static_cast<Element>(w.size()));
  for (std::size_t i = 0; i < ind.members.size(); ++i)
    index_of[ind.members[i]] = static_cast<Element>(i);
  std::vector<Element> d, nb;
  for (Element x : ind.members) {
    d.push_back(index_of[w.delta(x)]);
    nb.push_back(index_of[w.nabla(x)]);
  }
  Wdl alg(std::move(ind.lattice), std::move(d), std::move(nb), w.name() + "|sub");
  return {std::move(alg), std::move(ind.members), std::move(index_of)};
}

struct Quotient {
  Wdl algebra;
  std::vector<Element> projection;  // element -> block index
};

inline std::string block_label(const Wdl& w, const ElementSet& block) {
  if (block.count() == 1) return w.label(block.first());
  std::string s = "[";
  block.for_each([&](Element x) { s += (s.size() > 1 ? " " : "") + w.label(x); });
  return s + "]";
}

/// W/θ on blocks ordered by minimum member. Well-definedness of every
/// operation is re-verified over all pairs.
inline Quotient quotient(const Wdl& w, const Partition& theta) {
  require_congruence(w, theta);
  const std::size_t k = theta.block_count();
  const auto blocks = theta.blocks();
  std::vector<Element> rep(k);
  for (std::size_t b = 0; b < k; ++b) rep[b] = blocks[b].first();
  auto cls = [&](Element x) { return theta.block_of(x); };
  std::vector<Element> meet(k * k), join(k * k), d(k), nb(k);
  std::vector<ElementSet> up(k, ElementSet(k));
  for (std::size_t a = 0; a < k; ++a) {
    d[a] = cls(w.delta(rep[a]));
    nb[a] = cls(w.nabla(rep[a]));
    for (std::size_t b = 0; b < k; ++b) {
      meet[a * k + b] = cls(w.meet(rep[a], rep[b]));
      join[a * k + b] = cls(w.join(rep[a], rep[b]));
      if (join[a * k + b] == b) up[a].insert(static_cast<Element>(b));
    }
  }
  const auto n = static_cast<Element>(w.size());
  for (Element x = 0; x < n; ++x) {
    if (cls(w.delta(x)) != d[cls(x)] || cls(w.nabla(x)) != nb[cls(x)])
      throw Error(Errc::not_a_congruence, "quotient unary operation not well defined", {x});
    for (Element y = 0; y < n; ++y)
      if (cls(w.meet(x, y)) != meet[cls(x) * k + cls(y)] ||
          cls(w.join(x, y)) != join[cls(x) * k + cls(y)])
        throw Error(Errc::not_a_congruence, "quotient lattice operation not well defined", {x, y});
  }
  std::vector<std::string> labels;
  for (const auto& b : blocks) labels.push_back(block_label(w, b));
  auto lattice = BoundedLattice::from_tables(std::move(up), std::move(meet), std::move(join),
                                             std::move(labels));
  return {Wdl(std::move(lattice), std::move(d), std::move(nb), w.name() + "/theta"),
          theta.block_ids()};
}

inline void require_coordinate(std::size_t k, std::size_t coord) {
  if (coord >= k)
    throw Error(Errc::invalid_argument, "coordinate " + std::to_string(coord) +
                                            " outside [0, " + std::to_string(k) + ")");
}

/// γ(F) = { f in L^k : f(coord) in F }.
inline ElementSet lift_filter_power(const Wdl& base, std::size_t k, std::size_t coord,
                                    const ElementSet& f) {
  require_coordinate(k, coord);
  if (f.universe() != base.size())
    throw Error(Errc::carrier_mismatch, "filter is not over the base algebra");
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= base.size();
  ElementSet out(total);
  for (std::size_t idx = 0; idx < total; ++idx)
    if (f.contains(power_tuple(base.size(), k, static_cast<Element>(idx))[coord]))
      out.insert(static_cast<Element>(idx));
  return out;
}

/// μ(θ) = { (f, g) : (f(coord), g(coord)) in θ }.
inline Partition lift_congruence_power(const Wdl& base, std::size_t k, std::size_t coord,
                                       const Partition& theta) {
  require_coordinate(k, coord);
  if (theta.size() != base.size())
    throw Error(Errc::carrier_mismatch, "partition is not over the base algebra");
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= base.size();
  std::vector<Element> ids(total);
  for (std::size_t idx = 0; idx < total; ++idx)
    ids[idx] = theta.block_of(power_tuple(base.size(), k, static_cast<Element>(idx))[coord]);
  return Partition(ids);
}

}  // namespace wdl
