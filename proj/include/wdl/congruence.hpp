#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wdl/constructions.hpp"
#include "wdl/element_set.hpp"
#include "wdl/error.hpp"
#include "wdl/filters.hpp"
#include "wdl/lattice.hpp"
#include "wdl/partition.hpp"
#include "wdl/wdl.hpp"

namespace wdl {

/// Least congruence containing (a, b).
inline Partition principal_congruence(const Wdl& w, Element a, Element b) {
  const std::size_t n = w.size();
  std::vector<Element> parent(n);
  std::iota(parent.begin(), parent.end(), Element{0});
  auto find = [&](Element x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<ElementPair> work;
  auto merge = [&](Element x, Element y) {
    auto rx = find(x), ry = find(y);
    if (rx == ry) return;
    parent[std::max(rx, ry)] = std::min(rx, ry);
    work.emplace_back(x, y);
  };
  merge(a, b);
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    merge(w.delta(x), w.delta(y));
    merge(w.nabla(x), w.nabla(y));
    for (Element z = 0; z < n; ++z) {
      merge(w.meet(x, z), w.meet(y, z));
      merge(w.join(x, z), w.join(y, z));
    }
  }
  std::vector<Element> ids(n);
  for (std::size_t x = 0; x < n; ++x) ids[x] = find(static_cast<Element>(x));
  return Partition(ids);
}

/// Con(L) with its canonical order: identity first, full relation last.
struct CongruenceLattice {
  std::vector<Partition> congruences;
  std::size_t identity_index = 0;
  std::size_t full_index = 0;

  std::size_t size() const noexcept { return congruences.size(); }

  /// Refinement order as a bounded lattice; element i is congruences[i].
  BoundedLattice order() const {
    const std::size_t k = congruences.size();
    std::vector<ElementSet> up(k, ElementSet(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (congruences[i].refines(congruences[j])) up[i].insert(static_cast<Element>(j));
    return BoundedLattice::from_order(std::move(up));
  }

  std::ptrdiff_t index_of(const Partition& p) const {
    auto it = std::find(congruences.begin(), congruences.end(), p);
    return it == congruences.end() ? -1 : it - congruences.begin();
  }
};

inline CongruenceLattice all_congruences(const Wdl& w) {
  require_enumerable(w.size(), "congruence enumeration");
  const auto n = static_cast<Element>(w.size());
  std::set<Partition> found{Partition::identity(n)};
  std::vector<Partition> principals;
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      auto p = principal_congruence(w, a, b);
      if (found.insert(p).second) principals.push_back(p);
    }
  // Every congruence is a join of principal ones; close under joining with
  // principals until nothing new appears.
  std::vector<Partition> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (const auto& c : frontier)
      for (const auto& p : principals) {
        auto j = join(c, p);
        if (found.insert(j).second) next.push_back(std::move(j));
      }
    frontier = std::move(next);
  }
  CongruenceLattice con;
  con.congruences.assign(found.begin(), found.end());
  con.identity_index = 0;
  con.full_index = con.congruences.size() - 1;
  return con;
}

/// Φ: x ~ y iff x^Δ = y^Δ and x^∇ = y^∇.
inline Partition detcon(const Wdl& w) {
  std::vector<Element> ids(w.size());
  for (Element x = 0; x < w.size(); ++x)
    ids[x] = static_cast<Element>(w.delta(x) * w.size() + w.nabla(x));
  return Partition(ids);
}

/// θ_F = { (x, y) : x ∨ u^Δ = y ∨ u^Δ for some u in F }.
inline Partition theta_filter(const Wdl& w, const ElementSet& f) {
  require_normal_filter(w, f);
  Relation r(w.size());
  f.for_each([&](Element u) {
    const Element ud = w.delta(u);
    for (Element x = 0; x < w.size(); ++x)
      for (Element y = 0; y < w.size(); ++y)
        if (w.join(x, ud) == w.join(y, ud)) r.insert(x, y);
  });
  return Partition::closure_of(r);
}

struct ThetaReport {
  Partition theta;
  bool distributive = false;
  bool is_congruence = false;
  bool top_class_is_filter = false;  // [1] equals F
};

inline ThetaReport theta_filter_report(const Wdl& w, const ElementSet& f) {
  ThetaReport r;
  r.theta = theta_filter(w, f);
  r.distributive = is_distributive(w.lattice());
  r.is_congruence = is_congruence(w, r.theta);
  r.top_class_is_filter = r.theta.class_of(w.top()) == f;
  return r;
}

/// Least congruence whose top class contains F, as a join of principals.
inline Partition least_congruence_collapsing(const Wdl& w, const ElementSet& f) {
  Partition p = Partition::identity(w.size());
  f.for_each([&](Element x) {
    if (!p.related(x, w.top())) p = join(p, principal_congruence(w, x, w.top()));
  });
  return p;
}

/// [1]_θ.
inline ElementSet cokernel(const Wdl& w, const Partition& p) {
  require_congruence(w, p);
  return p.class_of(w.top());
}

/// [0]_θ.
inline ElementSet kernel(const Wdl& w, const Partition& p) {
  require_congruence(w, p);
  return p.class_of(w.bottom());
}

inline bool is_regular(const Wdl& w) { return detcon(w).is_identity(); }

inline bool is_simple(const Wdl& w) { return all_congruences(w).size() == 2; }

struct SiResult {
  bool subdirectly_irreducible = false;
  std::optional<Partition> monolith;
};

/// Birkhoff: SI iff the non-identity congruences have a least element. The
/// minimal ones are principal, so their meet decides it.
inline SiResult is_subdirectly_irreducible(const Wdl& w) {
  const auto n = static_cast<Element>(w.size());
  std::optional<Partition> m;
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b) {
      auto p = principal_congruence(w, a, b);
      m = m ? meet(*m, p) : p;
    }
  SiResult r;
  if (m && !m->is_identity()) {
    r.subdirectly_irreducible = true;
    r.monolith = std::move(m);
  }
  return r;
}

inline Relation compose(const Partition& p, const Partition& q) {
  return compose(p.relation(), q.relation());
}

inline Partition join_congruences(const Partition& p, const Partition& q) { return join(p, q); }

/// Outcome of checking one theorem instance. `holds` is meaningful only when
/// the hypotheses do.
struct TheoremCheck {
  bool hypotheses_hold = true;
  bool holds = false;
  std::string detail;
};

/// θ_F ∨ Ψ = θ_F ∘ Ψ ∘ θ_F.
inline TheoremCheck check_join_formula(const Wdl& w, const ElementSet& f, const Partition& psi) {
  TheoremCheck c;
  if (!is_distributive(w.lattice()) || !is_normal_filter(w, f) || !is_congruence(w, psi)) {
    c.hypotheses_hold = false;
    c.detail = "needs a distributive algebra, a normal filter and a congruence";
    return c;
  }
  auto t = theta_filter(w, f);
  auto lhs = join(t, psi).relation();
  auto rhs = compose(compose(t.relation(), psi.relation()), t.relation());
  c.holds = lhs == rhs;
  if (!c.holds) c.detail = "join differs from the triple composite for " + set_label(w.lattice(), f);
  return c;
}

/// θ_{F1} ∘ θ_{F2} = θ_{F2} ∘ θ_{F1}, and both equal the join.
inline TheoremCheck check_permutability(const Wdl& w, const ElementSet& f1, const ElementSet& f2) {
  TheoremCheck c;
  if (!is_distributive(w.lattice()) || !is_normal_filter(w, f1) || !is_normal_filter(w, f2)) {
    c.hypotheses_hold = false;
    c.detail = "needs a distributive algebra and two normal filters";
    return c;
  }
  auto a = theta_filter(w, f1), b = theta_filter(w, f2);
  auto ab = compose(a, b), ba = compose(b, a);
  c.holds = ab == ba && ab == join(a, b).relation();
  if (!c.holds)
    c.detail = "theta of " + set_label(w.lattice(), f1) + " and " + set_label(w.lattice(), f2) +
               " do not permute";
  return c;
}

/// p restricted to S; element i of the result is the i-th member of S.
inline Partition restrict(const Partition& p, const ElementSet& s) {
  std::vector<Element> ids;
  s.for_each([&](Element x) { ids.push_back(p.block_of(x)); });
  return Partition(ids);
}

struct RestrictionReport {
  bool detcon_trivial_on_skeleton = false;
  bool detcon_trivial_on_dual_skeleton = false;
  std::size_t pairs_checked = 0;
  std::size_t join_failures_skeleton = 0;
  std::size_t join_failures_dual_skeleton = 0;
  bool restrictions_are_congruences = false;  // θ|S ∈ Con(S(L)) lattice-wise

  bool ok() const {
    return detcon_trivial_on_skeleton && detcon_trivial_on_dual_skeleton &&
           join_failures_skeleton == 0 && join_failures_dual_skeleton == 0 &&
           restrictions_are_congruences;
  }
};

inline RestrictionReport check_restriction_laws(const Wdl& w) {
  RestrictionReport r;
  const auto s = skeleton(w), sd = dual_skeleton(w);
  const auto phi = detcon(w);
  r.detcon_trivial_on_skeleton = restrict(phi, s).is_identity();
  r.detcon_trivial_on_dual_skeleton = restrict(phi, sd).is_identity();
  const auto con = all_congruences(w);
  r.restrictions_are_congruences = true;
  for (const auto& t : con.congruences) {
    // Compatibility of θ|S with the skeleton operations (∧, ⊔, ∇).
    auto m = s.members();
    for (Element x : m)
      for (Element y : m) {
        if (!t.related(x, y)) continue;
        if (!t.related(w.nabla(x), w.nabla(y))) r.restrictions_are_congruences = false;
        for (Element z : m) {
          if (!t.related(w.meet(x, z), w.meet(y, z)) ||
              !t.related(derived_op(w, DerivedOp::sqcup, x, z),
                         derived_op(w, DerivedOp::sqcup, y, z)))
            r.restrictions_are_congruences = false;
        }
      }
  }
  for (const auto& a : con.congruences)
    for (const auto& b : con.congruences) {
      ++r.pairs_checked;
      auto j = join(a, b);
      if (restrict(j, s) != join(restrict(a, s), restrict(b, s))) ++r.join_failures_skeleton;
      if (restrict(j, sd) != join(restrict(a, sd), restrict(b, sd)))
        ++r.join_failures_dual_skeleton;
    }
  return r;
}

/// Extends a congruence of the subalgebra M to W as θ_{F_G}, G = [1] of thetaM.
/// thetaM is indexed by the members of M in increasing order.
inline Partition cep_extend(const Wdl& w, const ElementSet& m, const Partition& theta_m) {
  if (!is_distributive(w.lattice()))
    throw Error(Errc::hypothesis_violation, "congruence extension needs a distributive algebra");
  if (!is_regular(w))
    throw Error(Errc::hypothesis_violation, "congruence extension needs a regular algebra");
  auto ind = induced_algebra(w, m);
  if (!is_regular(ind.algebra))
    throw Error(Errc::hypothesis_violation, "the subalgebra is not regular");
  if (theta_m.size() != ind.members.size())
    throw Error(Errc::carrier_mismatch, "partition does not match the subalgebra");
  require_congruence(ind.algebra, theta_m);
  ElementSet g(w.size());
  theta_m.class_of(ind.algebra.top()).for_each([&](Element i) { g.insert(ind.members[i]); });
  return theta_filter(w, lift_filter_from_subalgebra(w, m, g));
}

/// Maximal members of NF(L) ∖ {L}, ascending by bit value.
inline std::vector<ElementSet> maximal_normal_filters(const Wdl& w) {
  const auto nf = all_normal_filters(w);
  const auto full = ElementSet::full(w.size());
  std::vector<ElementSet> out;
  for (const auto& f : nf) {
    if (f == full) continue;
    bool maximal = true;
    for (const auto& g : nf)
      if (g != full && g != f && f.is_subset_of(g)) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

/// The maximal proper normal filters intersect in {1}.
inline bool is_semisimple(const Wdl& w) {
  const auto mx = maximal_normal_filters(w);
  if (mx.empty()) return false;
  ElementSet acc = ElementSet::full(w.size());
  for (const auto& f : mx) acc &= f;
  return acc == ElementSet(w.size(), {w.top()});
}

/// On regular distributive W: θ is a coatom of Con(L) iff [1]_θ is a maximal
/// normal filter.
inline TheoremCheck check_maximal_correspondence(const Wdl& w) {
  TheoremCheck c;
  if (!is_distributive(w.lattice()) || !is_regular(w)) {
    c.hypotheses_hold = false;
    c.detail = "needs a regular distributive algebra";
    return c;
  }
  const auto con = all_congruences(w);
  const auto mx = maximal_normal_filters(w);
  const auto& full = con.congruences[con.full_index];
  c.holds = true;
  for (const auto& t : con.congruences) {
    if (t == full) continue;
    bool coatom = true;
    for (const auto& u : con.congruences)
      if (u != full && u != t && t.refines(u)) coatom = false;
    bool max_filter = index_in(mx, t.class_of(w.top())) >= 0;
    if (coatom != max_filter) {
      c.holds = false;
      c.detail = "congruence with top class " + set_label(w.lattice(), t.class_of(w.top())) +
                 (coatom ? " is maximal but its top class is not" : " is not maximal but its top class is");
      return c;
    }
  }
  return c;
}

/// F -> θ_F is an order isomorphism NF(L) -> Con(L).
inline TheoremCheck check_con_nf_isomorphism(const Wdl& w) {
  TheoremCheck c;
  if (!is_regular(w)) {
    c.hypotheses_hold = false;
    c.detail = "needs a regular algebra";
    return c;
  }
  const auto nf = all_normal_filters(w);
  const auto con = all_congruences(w);
  if (nf.size() != con.size()) {
    c.detail = "|NF| = " + std::to_string(nf.size()) + " but |Con| = " + std::to_string(con.size());
    return c;
  }
  std::vector<Partition> image;
  for (const auto& f : nf) {
    auto t = theta_filter(w, f);
    if (con.index_of(t) < 0) {
      c.detail = "theta of " + set_label(w.lattice(), f) + " is not a congruence";
      return c;
    }
    if (std::find(image.begin(), image.end(), t) != image.end()) {
      c.detail = "F -> theta_F is not injective";
      return c;
    }
    image.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < nf.size(); ++i)
    for (std::size_t j = 0; j < nf.size(); ++j)
      if (nf[i].is_subset_of(nf[j]) != image[i].refines(image[j])) {
        c.detail = "F -> theta_F does not preserve and reflect inclusion";
        return c;
      }
  c.holds = true;
  return c;
}

/// W/θ_F is simple iff F is a maximal proper normal filter.
inline TheoremCheck quotient_simple_iff_maximal(const Wdl& w, const ElementSet& f) {
  TheoremCheck c;
  if (!is_regular(w) || !is_distributive(w.lattice()) || !is_normal_filter(w, f)) {
    c.hypotheses_hold = false;
    c.detail = "needs a regular distributive algebra and a normal filter";
    return c;
  }
  auto q = quotient(w, theta_filter(w, f));
  bool simple = q.algebra.size() > 1 && is_simple(q.algebra);
  bool maximal = index_in(maximal_normal_filters(w), f) >= 0;
  c.holds = simple == maximal;
  if (!c.holds)
    c.detail = std::string("quotient is ") + (simple ? "" : "not ") + "simple but the filter is " +
               (maximal ? "" : "not ") + "maximal";
  return c;
}

/// (L/θ)/Φ ≅ (L/β)/Φ when θ and β agree on both skeletons.
inline TheoremCheck check_quotient_detcon_iso(const Wdl& w, const Partition& theta,
                                              const Partition& beta) {
  TheoremCheck c;
  const auto s = skeleton(w), sd = dual_skeleton(w);
  if (!is_congruence(w, theta) || !is_congruence(w, beta) ||
      restrict(theta, s) != restrict(beta, s) || restrict(theta, sd) != restrict(beta, sd)) {
    c.hypotheses_hold = false;
    c.detail = "needs two congruences agreeing on both skeletons";
    return c;
  }
  auto q1 = quotient(w, theta).algebra;
  auto q2 = quotient(w, beta).algebra;
  if (!is_congruence(q1, detcon(q1)) || !is_congruence(q2, detcon(q2))) {
    c.hypotheses_hold = false;
    c.detail = "the determination relation of a quotient is not a congruence";
    return c;
  }
  auto d1 = quotient(q1, detcon(q1)).algebra;
  auto d2 = quotient(q2, detcon(q2)).algebra;
  c.holds = find_wdl_isomorphism(d1, d2).has_value();
  if (!c.holds) c.detail = "double quotients are not isomorphic";
  return c;
}

}  // namespace wdl
