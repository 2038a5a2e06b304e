#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wdl/element_set.hpp"
#include "wdl/error.hpp"
#include "wdl/lattice.hpp"

namespace wdl {

enum class Axiom { a1, a2, a3, a1d, a2d, a3d };

inline constexpr std::array<Axiom, 6> kAllAxioms{Axiom::a1,  Axiom::a2,  Axiom::a3,
                                                 Axiom::a1d, Axiom::a2d, Axiom::a3d};

inline std::string_view axiom_id(Axiom a) {
  switch (a) {
    case Axiom::a1: return "1";
    case Axiom::a2: return "2";
    case Axiom::a3: return "3";
    case Axiom::a1d: return "1'";
    case Axiom::a2d: return "2'";
    case Axiom::a3d: return "3'";
  }
  return "?";
}

inline std::string_view axiom_statement(Axiom a) {
  switch (a) {
    case Axiom::a1: return "x^DD <= x";
    case Axiom::a2: return "x <= y implies y^D <= x^D";
    case Axiom::a3: return "(x & y) | (x & y^D) = x";
    case Axiom::a1d: return "x^NN >= x";
    case Axiom::a2d: return "x <= y implies y^N <= x^N";
    case Axiom::a3d: return "(x | y) & (x | y^N) = x";
  }
  return "?";
}

struct AxiomStatus {
  Axiom axiom;
  bool holds = true;
  std::vector<Element> witness;  // x, or (x, y); lexicographically least
};

struct AxiomReport {
  std::array<AxiomStatus, 6> axioms{};

  bool ok() const {
    for (const auto& a : axioms)
      if (!a.holds) return false;
    return true;
  }
  const AxiomStatus* first_failure() const {
    for (const auto& a : axioms)
      if (!a.holds) return &a;
    return nullptr;
  }
};

inline void check_unary_map(const BoundedLattice& l, const std::vector<Element>& f,
                            const char* name) {
  if (f.size() != l.size())
    throw Error(Errc::invalid_argument, std::string(name) + " must have " +
                                            std::to_string(l.size()) + " entries, got " +
                                            std::to_string(f.size()));
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] >= l.size())
      throw Error(Errc::invalid_argument,
                  std::string(name) + "(" + std::to_string(i) + ") = " + std::to_string(f[i]) +
                      " is outside the carrier",
                  {static_cast<Element>(i)});
}

/// Exhaustive check of the six axioms. Failures are reported, never thrown;
/// only malformed maps (wrong length, out-of-range values) throw.
inline AxiomReport check_axioms(const BoundedLattice& l, const std::vector<Element>& d,
                                const std::vector<Element>& nb) {
  check_unary_map(l, d, "delta");
  check_unary_map(l, nb, "nabla");
  AxiomReport r;
  for (std::size_t i = 0; i < 6; ++i) r.axioms[i].axiom = kAllAxioms[i];
  auto fail = [&](std::size_t i, std::vector<Element> w) {
    if (r.axioms[i].holds) {
      r.axioms[i].holds = false;
      r.axioms[i].witness = std::move(w);
    }
  };
  const auto n = static_cast<Element>(l.size());
  for (Element x = 0; x < n; ++x) {
    if (!l.leq(d[d[x]], x)) fail(0, {x});
    if (!l.leq(x, nb[nb[x]])) fail(3, {x});
    for (Element y = 0; y < n; ++y) {
      if (l.leq(x, y) && !l.leq(d[y], d[x])) fail(1, {x, y});
      if (l.join(l.meet(x, y), l.meet(x, d[y])) != x) fail(2, {x, y});
      if (l.leq(x, y) && !l.leq(nb[y], nb[x])) fail(4, {x, y});
      if (l.meet(l.join(x, y), l.join(x, nb[y])) != x) fail(5, {x, y});
    }
  }
  return r;
}

/// A bounded lattice with weak complementation Δ and dual weak
/// complementation ∇. Construction verifies all six axioms.
class Wdl {
 public:
  Wdl() = default;
  Wdl(BoundedLattice lattice, std::vector<Element> delta, std::vector<Element> nabla,
      std::string name = {})
      : lattice_(std::move(lattice)),
        delta_(std::move(delta)),
        nabla_(std::move(nabla)),
        name_(std::move(name)) {
    auto report = check_axioms(lattice_, delta_, nabla_);
    if (const auto* f = report.first_failure()) {
      std::string w;
      for (auto e : f->witness) w += (w.empty() ? "" : ", ") + lattice_.label(e);
      throw Error(Errc::axiom_violation,
                  "axiom (" + std::string(axiom_id(f->axiom)) + ") " +
                      std::string(axiom_statement(f->axiom)) + " fails at (" + w + ")",
                  f->witness);
    }
  }

  const BoundedLattice& lattice() const noexcept { return lattice_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return lattice_.size(); }

  Element delta(Element x) const { return delta_[x]; }
  Element nabla(Element x) const { return nabla_[x]; }
  const std::vector<Element>& delta_table() const noexcept { return delta_; }
  const std::vector<Element>& nabla_table() const noexcept { return nabla_; }

  Element meet(Element x, Element y) const { return lattice_.meet(x, y); }
  Element join(Element x, Element y) const { return lattice_.join(x, y); }
  bool leq(Element x, Element y) const { return lattice_.leq(x, y); }
  Element bottom() const noexcept { return lattice_.bottom(); }
  Element top() const noexcept { return lattice_.top(); }
  const std::string& label(Element x) const { return lattice_.label(x); }

  Wdl renamed(std::string name) const {
    Wdl copy = *this;
    copy.name_ = std::move(name);
    return copy;
  }

  friend bool operator==(const Wdl& a, const Wdl& b) {
    return a.lattice_.same_order(b.lattice_) && a.delta_ == b.delta_ && a.nabla_ == b.nabla_;
  }

 private:
  BoundedLattice lattice_;
  std::vector<Element> delta_, nabla_;
  std::string name_;
};

// ---------------------------------------------------------------------------
// Derived operations

enum class DerivedOp { sqcap, sqcup, bar_sqcap, under_sqcup, bar_wedge, tilde_vee };

inline Element derived_op(const Wdl& w, DerivedOp op, Element x, Element y) {
  switch (op) {
    case DerivedOp::sqcap: return w.nabla(w.join(w.nabla(x), w.nabla(y)));
    case DerivedOp::sqcup: return w.nabla(w.meet(w.nabla(x), w.nabla(y)));
    case DerivedOp::bar_sqcap: return w.delta(w.join(w.delta(x), w.delta(y)));
    case DerivedOp::under_sqcup: return w.delta(w.meet(w.delta(x), w.delta(y)));
    case DerivedOp::bar_wedge: return w.nabla(w.delta(w.meet(x, y)));
    case DerivedOp::tilde_vee: return w.delta(w.nabla(w.join(x, y)));
  }
  throw Error(Errc::invalid_argument, "unknown derived operation");
}

inline Element eta_delta(const Wdl& w, Element x) { return w.nabla(w.delta(x)); }
inline Element eta_nabla(const Wdl& w, Element x) { return w.delta(w.nabla(x)); }

/// a, a^{Δ∇}, a^{2(Δ∇)}, ... up to and including the first fixpoint.
inline std::vector<Element> normal_chain(const Wdl& w, Element a) {
  std::vector<Element> chain{a};
  for (;;) {
    Element next = eta_delta(w, chain.back());
    if (next == chain.back()) return chain;
    chain.push_back(next);
  }
}

/// a, a^{∇Δ}, ... up to the first fixpoint (the increasing dual chain).
inline std::vector<Element> dual_normal_chain(const Wdl& w, Element a) {
  std::vector<Element> chain{a};
  for (;;) {
    Element next = eta_nabla(w, chain.back());
    if (next == chain.back()) return chain;
    chain.push_back(next);
  }
}

// ---------------------------------------------------------------------------
// Distinguished subsets

template <class Pred>
ElementSet select(const Wdl& w, Pred pred) {
  ElementSet s(w.size());
  for (Element x = 0; x < w.size(); ++x)
    if (pred(x)) s.insert(x);
  return s;
}

inline ElementSet skeleton(const Wdl& w) {
  return select(w, [&](Element x) { return w.nabla(w.nabla(x)) == x; });
}
inline ElementSet dual_skeleton(const Wdl& w) {
  return select(w, [&](Element x) { return w.delta(w.delta(x)) == x; });
}
inline ElementSet center(const Wdl& w) {
  return select(w, [&](Element x) { return w.delta(x) == w.nabla(x); });
}
inline ElementSet dense(const Wdl& w) {
  return select(w, [&](Element x) { return w.nabla(x) == w.bottom(); });
}
inline ElementSet dual_dense(const Wdl& w) {
  return select(w, [&](Element x) { return w.delta(x) == w.top(); });
}

/// The sub-poset of L on S as a lattice in its own right, with the element
/// map back into L. Throws NotClosed when the induced order is not a bounded
/// lattice.
struct InducedLattice {
  BoundedLattice lattice;
  std::vector<Element> members;  // index in induced lattice -> element of L
};

inline InducedLattice induced_lattice(const BoundedLattice& l, const ElementSet& s) {
  auto members = s.members();
  if (members.empty()) throw Error(Errc::empty_set, "cannot induce a lattice on the empty set");
  const std::size_t k = members.size();
  std::vector<ElementSet> up(k, ElementSet(k));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(l.label(members[i]));
    for (std::size_t j = 0; j < k; ++j)
      if (l.leq(members[i], members[j])) up[i].insert(static_cast<Element>(j));
  }
  try {
    return {BoundedLattice::from_order(std::move(up), std::move(labels)), std::move(members)};
  } catch (const Error& e) {
    std::vector<Element> witness;
    for (auto i : e.witness()) witness.push_back(members[i]);
    throw Error(Errc::not_closed, "induced order is not a bounded lattice", witness);
  }
}

enum class SkeletonFlavor { skeleton, dual_skeleton };

/// Ortholattice test on S with the induced structure: skeleton flavor uses
/// (∧, ⊔, ∇), dual flavor uses (⊓̄, ∨, Δ).
inline bool is_ortholattice_on(const Wdl& w, const ElementSet& s, SkeletonFlavor flavor) {
  const bool sk = flavor == SkeletonFlavor::skeleton;
  auto meet = [&](Element x, Element y) {
    return sk ? w.meet(x, y) : derived_op(w, DerivedOp::bar_sqcap, x, y);
  };
  auto join = [&](Element x, Element y) {
    return sk ? derived_op(w, DerivedOp::sqcup, x, y) : w.join(x, y);
  };
  auto comp = [&](Element x) { return sk ? w.nabla(x) : w.delta(x); };
  auto not_closed = [&](const std::string& what, std::vector<Element> wit) {
    throw Error(Errc::not_closed, "set is not closed under " + what, std::move(wit));
  };
  if (!s.contains(w.bottom())) not_closed("the bottom element", {w.bottom()});
  if (!s.contains(w.top())) not_closed("the top element", {w.top()});
  const auto m = s.members();
  for (Element x : m) {
    if (!s.contains(comp(x))) not_closed("complementation", {x});
    for (Element y : m) {
      if (!s.contains(meet(x, y))) not_closed("the induced meet", {x, y});
      if (!s.contains(join(x, y))) not_closed("the induced join", {x, y});
    }
  }
  for (Element x : m) {
    if (comp(comp(x)) != x) return false;
    if (join(x, comp(x)) != w.top() || meet(x, comp(x)) != w.bottom()) return false;
    for (Element y : m)
      if (w.leq(x, y) && !w.leq(comp(y), comp(x))) return false;
  }
  return true;
}

inline bool is_complemented(const BoundedLattice& l) {
  for (Element x = 0; x < l.size(); ++x) {
    bool found = false;
    for (Element y = 0; y < l.size() && !found; ++y)
      found = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
    if (!found) return false;
  }
  return true;
}

/// Boolean test on the induced sub-poset: a distributive complemented lattice.
inline bool is_boolean_on(const Wdl& w, const ElementSet& s) {
  auto induced = induced_lattice(w.lattice(), s);
  return is_distributive(induced.lattice) && is_complemented(induced.lattice);
}

inline bool is_boolean_lattice(const BoundedLattice& l) {
  return is_distributive(l) && is_complemented(l);
}

struct WdlClassification {
  bool distributive = false;
  bool boolean_wdl = false;
  bool s_boolean = false;
  bool weak_s_boolean = false;
  bool pure = false;
  ElementSet skeleton, dual_skeleton, center;
  bool skeleton_is_boolean = false;
  bool dual_skeleton_is_boolean = false;
  bool skeleton_is_ortholattice = false;
  bool dual_skeleton_is_ortholattice = false;
};

inline WdlClassification classify(const Wdl& w) {
  WdlClassification c;
  c.distributive = is_distributive(w.lattice());
  c.skeleton = skeleton(w);
  c.dual_skeleton = dual_skeleton(w);
  c.center = center(w);
  c.skeleton_is_boolean = is_boolean_on(w, c.skeleton);
  c.dual_skeleton_is_boolean = is_boolean_on(w, c.dual_skeleton);
  c.skeleton_is_ortholattice = is_ortholattice_on(w, c.skeleton, SkeletonFlavor::skeleton);
  c.dual_skeleton_is_ortholattice =
      is_ortholattice_on(w, c.dual_skeleton, SkeletonFlavor::dual_skeleton);
  c.boolean_wdl = c.skeleton == c.dual_skeleton && c.skeleton == c.center;
  c.s_boolean = c.skeleton_is_boolean && c.dual_skeleton_is_boolean;
  c.weak_s_boolean = c.skeleton_is_boolean || c.dual_skeleton_is_boolean;
  c.pure = (c.skeleton | c.dual_skeleton) == ElementSet::full(w.size());
  return c;
}

// ---------------------------------------------------------------------------
// Building dicomplementations

/// x^Δ = ⋁{a ∈ G | a ≰ x}, x^∇ = ⋀{m ∈ H | x ≰ m}.
inline Wdl standard_dicomplementation(const BoundedLattice& l, const ElementSet& g,
                                      const ElementSet& h, std::string name = {}) {
  auto missing_j = join_irreducibles(l) - g;
  if (!missing_j.empty())
    throw Error(Errc::insufficient_generators,
                "G misses join-irreducible " + l.label(missing_j.first()), {missing_j.first()});
  auto missing_m = meet_irreducibles(l) - h;
  if (!missing_m.empty())
    throw Error(Errc::insufficient_generators,
                "H misses meet-irreducible " + l.label(missing_m.first()), {missing_m.first()});
  std::vector<Element> d(l.size()), nb(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    d[x] = l.join_of(g - l.down(x));
    nb[x] = l.meet_of(h - l.up(x));
  }
  return Wdl(l, std::move(d), std::move(nb), std::move(name));
}

inline Wdl standard_dicomplementation(const BoundedLattice& l, std::string name = {}) {
  return standard_dicomplementation(l, join_irreducibles(l), meet_irreducibles(l),
                                    std::move(name));
}

inline Wdl trivial_dicomplementation(const BoundedLattice& l, std::string name = {}) {
  std::vector<Element> d(l.size()), nb(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    d[x] = x == l.top() ? l.bottom() : l.top();
    nb[x] = x == l.bottom() ? l.top() : l.bottom();
  }
  return Wdl(l, std::move(d), std::move(nb), std::move(name));
}

/// x^{Δ1} <= x^{Δ2} and x^{∇1} >= x^{∇2} for all x.
inline bool finer_than(const Wdl& a, const Wdl& b) {
  if (!a.lattice().same_order(b.lattice()))
    throw Error(Errc::carrier_mismatch, "finer_than needs the same carrier lattice");
  for (Element x = 0; x < a.size(); ++x)
    if (!a.leq(a.delta(x), b.delta(x)) || !a.leq(b.nabla(x), a.nabla(x))) return false;
  return true;
}

/// Order isomorphism commuting with Δ and ∇.
inline std::optional<std::vector<Element>> find_wdl_isomorphism(const Wdl& a, const Wdl& b) {
  const auto unmapped = static_cast<Element>(a.size());
  MappingConstraint commutes = [&](Element x, Element, const std::vector<Element>& phi) {
    // Check every now-complete instance of phi(f(y)) = g(phi(y)).
    auto ok = [&](Element y, Element fy, Element gy_img) {
      return phi[y] == unmapped || phi[fy] == unmapped || phi[fy] == gy_img;
    };
    for (Element y = 0; y <= x; ++y) {
      if (phi[y] == unmapped) continue;
      if (!ok(y, a.delta(y), b.delta(phi[y])) || !ok(y, a.nabla(y), b.nabla(phi[y])))
        return false;
    }
    return true;
  };
  return find_isomorphism(a.lattice(), b.lattice(), commutes);
}

}  // namespace wdl
