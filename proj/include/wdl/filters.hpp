#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdl/constructions.hpp"
#include "wdl/element_set.hpp"
#include "wdl/error.hpp"
#include "wdl/lattice.hpp"
#include "wdl/wdl.hpp"

namespace wdl {

enum class FilterKind { order_filter, filter, normal_filter, order_ideal, ideal, normal_ideal };

inline std::string_view to_string(FilterKind k) {
  switch (k) {
    case FilterKind::order_filter: return "order_filter";
    case FilterKind::filter: return "filter";
    case FilterKind::normal_filter: return "normal_filter";
    case FilterKind::order_ideal: return "order_ideal";
    case FilterKind::ideal: return "ideal";
    case FilterKind::normal_ideal: return "normal_ideal";
  }
  return "?";
}

inline bool is_meet_closed(const BoundedLattice& l, const ElementSet& s) {
  const auto m = s.members();
  for (Element x : m)
    for (Element y : m)
      if (!s.contains(l.meet(x, y))) return false;
  return true;
}

inline bool is_join_closed(const BoundedLattice& l, const ElementSet& s) {
  const auto m = s.members();
  for (Element x : m)
    for (Element y : m)
      if (!s.contains(l.join(x, y))) return false;
  return true;
}

inline bool is_filter(const BoundedLattice& l, const ElementSet& s) {
  return !s.empty() && is_upset(l, s) && is_meet_closed(l, s);
}
inline bool is_ideal(const BoundedLattice& l, const ElementSet& s) {
  return !s.empty() && is_downset(l, s) && is_join_closed(l, s);
}

inline bool is_normal_filter(const Wdl& w, const ElementSet& s) {
  if (!is_filter(w.lattice(), s)) return false;
  bool ok = true;
  s.for_each([&](Element x) { ok = ok && s.contains(eta_delta(w, x)); });
  return ok;
}
inline bool is_normal_ideal(const Wdl& w, const ElementSet& s) {
  if (!is_ideal(w.lattice(), s)) return false;
  bool ok = true;
  s.for_each([&](Element x) { ok = ok && s.contains(eta_nabla(w, x)); });
  return ok;
}

/// Every kind the subset qualifies as, in enum order.
inline std::vector<FilterKind> classify_subset(const Wdl& w, const ElementSet& s) {
  if (s.empty()) throw Error(Errc::empty_set, "filters and ideals are nonempty");
  const auto& l = w.lattice();
  std::vector<FilterKind> out;
  if (is_upset(l, s)) out.push_back(FilterKind::order_filter);
  if (is_filter(l, s)) out.push_back(FilterKind::filter);
  if (is_normal_filter(w, s)) out.push_back(FilterKind::normal_filter);
  if (is_downset(l, s)) out.push_back(FilterKind::order_ideal);
  if (is_ideal(l, s)) out.push_back(FilterKind::ideal);
  if (is_normal_ideal(w, s)) out.push_back(FilterKind::normal_ideal);
  return out;
}

inline void require_normal_filter(const Wdl& w, const ElementSet& s) {
  if (!is_normal_filter(w, s))
    throw Error(Errc::not_normal, set_label(w.lattice(), s) + " is not a normal filter");
}
inline void require_normal_ideal(const Wdl& w, const ElementSet& s) {
  if (!is_normal_ideal(w, s))
    throw Error(Errc::not_normal, set_label(w.lattice(), s) + " is not a normal ideal");
}

inline ElementSet upset_of(const BoundedLattice& l, const ElementSet& x) {
  ElementSet out(l.size());
  x.for_each([&](Element e) { out |= l.up(e); });
  return out;
}
inline ElementSet downset_of(const BoundedLattice& l, const ElementSet& x) {
  ElementSet out(l.size());
  x.for_each([&](Element e) { out |= l.down(e); });
  return out;
}

/// Filter generated by X: the upset of all finite meets; {1} for X = ∅.
inline ElementSet filter_generated(const BoundedLattice& l, const ElementSet& x) {
  ElementSet s = x;
  s.insert(l.top());
  for (bool grew = true; grew;) {
    grew = false;
    for (Element a : s.members())
      for (Element b : s.members())
        if (!s.contains(l.meet(a, b))) s.insert(l.meet(a, b)), grew = true;
  }
  return upset_of(l, s);
}

/// N[X): least fixpoint of upward closure, ∧ and η_Δ starting from X ∪ {1}.
inline ElementSet normal_filter_generated(const Wdl& w, const ElementSet& x) {
  const auto& l = w.lattice();
  ElementSet f = x;
  f.insert(w.top());
  f = upset_of(l, f);
  for (bool grew = true; grew;) {
    ElementSet next = f;
    const auto m = f.members();
    for (Element a : m) {
      next.insert(eta_delta(w, a));
      for (Element b : m) next.insert(l.meet(a, b));
    }
    next = upset_of(l, next);
    grew = next != f;
    f = std::move(next);
  }
  return f;
}

/// N(X]: dual of normal_filter_generated.
inline ElementSet normal_ideal_generated(const Wdl& w, const ElementSet& x) {
  const auto& l = w.lattice();
  ElementSet j = x;
  j.insert(w.bottom());
  j = downset_of(l, j);
  for (bool grew = true; grew;) {
    ElementSet next = j;
    const auto m = j.members();
    for (Element a : m) {
      next.insert(eta_nabla(w, a));
      for (Element b : m) next.insert(l.join(a, b));
    }
    next = downset_of(l, next);
    grew = next != j;
    j = std::move(next);
  }
  return j;
}

/// N[X) = { x : (x1 ∧ ... ∧ xn)^{m(Δ∇)} <= x for some xi in X, m >= 0 }.
inline ElementSet normal_filter_by_formula(const Wdl& w, const ElementSet& x) {
  const auto& l = w.lattice();
  if (x.empty()) return ElementSet(l.size(), {l.top()});
  ElementSet meets = x;
  for (bool grew = true; grew;) {
    grew = false;
    for (Element a : meets.members())
      for (Element b : x.members())
        if (!meets.contains(l.meet(a, b))) meets.insert(l.meet(a, b)), grew = true;
  }
  ElementSet bases(l.size());
  meets.for_each([&](Element m) {
    for (Element c : normal_chain(w, m)) bases.insert(c);
  });
  return upset_of(l, bases);
}

/// Fixpoint of the normal chain of a.
inline Element normal_fixpoint(const Wdl& w, Element a) { return normal_chain(w, a).back(); }
inline Element dual_normal_fixpoint(const Wdl& w, Element a) {
  return dual_normal_chain(w, a).back();
}

/// N[a) = upset of the last element of the normal chain of a.
inline ElementSet principal_normal_filter(const Wdl& w, Element a) {
  return w.lattice().up(normal_fixpoint(w, a));
}
inline ElementSet principal_normal_ideal(const Wdl& w, Element a) {
  return w.lattice().down(dual_normal_fixpoint(w, a));
}

/// F ∨̄ G = { x : a ∧̄ b <= x for some a in F, b in G }.
inline ElementSet nf_join(const Wdl& w, const ElementSet& f, const ElementSet& g) {
  require_normal_filter(w, f);
  require_normal_filter(w, g);
  ElementSet out(w.size());
  for (Element a : f.members())
    for (Element b : g.members()) out |= w.lattice().up(derived_op(w, DerivedOp::bar_wedge, a, b));
  return out;
}

/// I ∨̃ J = { x : x <= a ∨̃ b for some a in I, b in J }.
inline ElementSet ni_join(const Wdl& w, const ElementSet& i, const ElementSet& j) {
  require_normal_ideal(w, i);
  require_normal_ideal(w, j);
  ElementSet out(w.size());
  for (Element a : i.members())
    for (Element b : j.members())
      out |= w.lattice().down(derived_op(w, DerivedOp::tilde_vee, a, b));
  return out;
}

/// All normal filters, ascending by bit value. In a finite lattice every
/// filter is principal, and ↑a is normal exactly when a = a^{Δ∇}.
inline std::vector<ElementSet> all_normal_filters(const Wdl& w) {
  std::vector<ElementSet> out;
  for (Element a = 0; a < w.size(); ++a)
    if (eta_delta(w, a) == a) out.push_back(w.lattice().up(a));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<ElementSet> all_normal_ideals(const Wdl& w) {
  std::vector<ElementSet> out;
  for (Element a = 0; a < w.size(); ++a)
    if (eta_nabla(w, a) == a) out.push_back(w.lattice().down(a));
  std::sort(out.begin(), out.end());
  return out;
}

/// Lattice of the given sets ordered by inclusion, labelled by their members.
inline BoundedLattice inclusion_lattice(const BoundedLattice& l, const std::vector<ElementSet>& sets) {
  const std::size_t k = sets.size();
  std::vector<ElementSet> up(k, ElementSet(k));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(set_label(l, sets[i]));
    for (std::size_t j = 0; j < k; ++j)
      if (sets[i].is_subset_of(sets[j])) up[i].insert(static_cast<Element>(j));
  }
  return BoundedLattice::from_order(std::move(up), std::move(labels));
}

/// NF(L) ordered by inclusion; element i is all_normal_filters(w)[i].
inline BoundedLattice nf_lattice(const Wdl& w) {
  return inclusion_lattice(w.lattice(), all_normal_filters(w));
}

inline BoundedLattice ni_lattice(const Wdl& w) {
  return inclusion_lattice(w.lattice(), all_normal_ideals(w));
}

/// J(F) = { z : z <= x^∇ for some x in F }.
inline ElementSet filter_to_ideal(const Wdl& w, const ElementSet& f) {
  require_normal_filter(w, f);
  ElementSet out(w.size());
  f.for_each([&](Element x) { out |= w.lattice().down(w.nabla(x)); });
  return out;
}

/// F(J) = { z : z >= x^Δ for some x in J }.
inline ElementSet ideal_to_filter(const Wdl& w, const ElementSet& j) {
  require_normal_ideal(w, j);
  ElementSet out(w.size());
  j.for_each([&](Element x) { out |= w.lattice().up(w.delta(x)); });
  return out;
}

inline std::ptrdiff_t index_in(const std::vector<ElementSet>& sets, const ElementSet& s) {
  auto it = std::find(sets.begin(), sets.end(), s);
  return it == sets.end() ? -1 : it - sets.begin();
}

struct NfNiReport {
  bool isomorphic = false;
  std::vector<std::size_t> ideal_to_filter;  // NI index -> NF index
  std::string failure;                       // empty when isomorphic
};

/// ideal_to_filter as a map NI -> NF: bijective, inverse to filter_to_ideal,
/// inclusion preserving and reflecting, sending ∩ to ∩ and ∨̃ to ∨̄.
inline NfNiReport check_nf_ni_isomorphism(const Wdl& w) {
  NfNiReport r;
  const auto nf = all_normal_filters(w);
  const auto ni = all_normal_ideals(w);
  auto fail = [&](std::string why) {
    r.failure = std::move(why);
    return r;
  };
  if (nf.size() != ni.size())
    return fail("|NF| = " + std::to_string(nf.size()) + " but |NI| = " + std::to_string(ni.size()));
  std::vector<bool> hit(nf.size(), false);
  for (const auto& j : ni) {
    auto f = ideal_to_filter(w, j);
    auto idx = index_in(nf, f);
    if (idx < 0) return fail("F(" + set_label(w.lattice(), j) + ") is not a normal filter");
    if (hit[static_cast<std::size_t>(idx)]) return fail("two normal ideals map to the same filter");
    hit[static_cast<std::size_t>(idx)] = true;
    if (filter_to_ideal(w, f) != j)
      return fail("J(F(" + set_label(w.lattice(), j) + ")) differs from the ideal");
    r.ideal_to_filter.push_back(static_cast<std::size_t>(idx));
  }
  for (std::size_t a = 0; a < ni.size(); ++a)
    for (std::size_t b = 0; b < ni.size(); ++b) {
      const auto& fa = nf[r.ideal_to_filter[a]];
      const auto& fb = nf[r.ideal_to_filter[b]];
      if (ni[a].is_subset_of(ni[b]) != fa.is_subset_of(fb)) return fail("inclusion not preserved");
      if (ideal_to_filter(w, ni[a] & ni[b]) != (fa & fb)) return fail("meets not preserved");
      if (ideal_to_filter(w, ni_join(w, ni[a], ni[b])) != nf_join(w, fa, fb))
        return fail("joins not preserved");
    }
  r.isomorphic = true;
  return r;
}

/// F_G = { x : u <= x for some u in G } for a normal filter G of the algebra
/// induced on the subalgebra M.
inline ElementSet lift_filter_from_subalgebra(const Wdl& w, const ElementSet& m,
                                              const ElementSet& g) {
  auto ind = induced_algebra(w, m);
  if (!g.is_subset_of(m)) throw Error(Errc::invalid_argument, "G is not a subset of M");
  ElementSet local(ind.members.size());
  g.for_each([&](Element x) { local.insert(ind.index_of[x]); });
  if (!is_normal_filter(ind.algebra, local))
    throw Error(Errc::not_normal, set_label(w.lattice(), g) + " is not normal in the subalgebra");
  return upset_of(w.lattice(), g);
}

struct NfCenterReport {
  bool hypothesis_holds = false;       // every normal chain reaches a fixpoint
  std::vector<Element> unstable;       // elements whose chain does not stabilize
  bool isomorphic = false;             // lifting F(B(L)) -> NF(L) is a lattice isomorphism
  std::size_t center_filters = 0;
  std::size_t normal_filters = 0;
  std::string failure;
};

/// Lifting filters of the Boolean center into L versus NF(L).
inline NfCenterReport check_nf_center_isomorphism(const Wdl& w) {
  NfCenterReport r;
  for (Element x = 0; x < w.size(); ++x) {
    auto c = normal_chain(w, x);
    if (eta_delta(w, c.back()) != c.back()) r.unstable.push_back(x);
  }
  r.hypothesis_holds = r.unstable.empty();
  const auto b = center(w);
  auto ind = induced_lattice(w.lattice(), b);
  std::vector<ElementSet> center_filters;
  for (Element i = 0; i < ind.lattice.size(); ++i) {
    ElementSet g(w.size());
    ind.lattice.up(i).for_each([&](Element j) { g.insert(ind.members[j]); });
    center_filters.push_back(g);
  }
  std::sort(center_filters.begin(), center_filters.end());
  const auto nf = all_normal_filters(w);
  r.center_filters = center_filters.size();
  r.normal_filters = nf.size();
  if (nf.size() != center_filters.size()) {
    r.failure = "|F(B(L))| = " + std::to_string(center_filters.size()) +
                " but |NF(L)| = " + std::to_string(nf.size());
    return r;
  }
  std::vector<ElementSet> lifted;
  for (const auto& g : center_filters) {
    auto f = lift_filter_from_subalgebra(w, b, g);
    if (index_in(nf, f) < 0) {
      r.failure = "lift of " + set_label(w.lattice(), g) + " is not a normal filter";
      return r;
    }
    if (index_in(lifted, f) >= 0) {
      r.failure = "lifting is not injective";
      return r;
    }
    lifted.push_back(f);
  }
  for (std::size_t i = 0; i < lifted.size(); ++i)
    for (std::size_t j = 0; j < lifted.size(); ++j)
      if (center_filters[i].is_subset_of(center_filters[j]) !=
          lifted[i].is_subset_of(lifted[j])) {
        r.failure = "lifting does not preserve inclusion";
        return r;
      }
  r.isomorphic = true;
  return r;
}

}  // namespace wdl
