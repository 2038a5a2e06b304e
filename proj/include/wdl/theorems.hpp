#pragma once

#include <string>
#include <utility>
#include <vector>

#include "wdl/congruence.hpp"
#include "wdl/constructions.hpp"
#include "wdl/filters.hpp"
#include "wdl/wdl.hpp"

namespace wdl {

enum class CheckStatus { pass, fail, skipped };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct TheoremResult {
  std::string id;
  std::string statement;
  CheckStatus status = CheckStatus::pass;
  std::size_t instances = 0;  // number of concrete instances evaluated
  std::string detail;         // first failure, or why the check was skipped
};

namespace detail {

class SuiteBuilder {
 public:
  explicit SuiteBuilder(const Wdl& w) : w_(w) {}

  TheoremResult& begin(std::string id, std::string statement) {
    results_.push_back({std::move(id), std::move(statement), CheckStatus::pass, 0, {}});
    return results_.back();
  }
  void skip(std::string why) {
    results_.back().status = CheckStatus::skipped;
    results_.back().detail = std::move(why);
  }
  // Records one instance; the first failing instance is kept as the detail.
  void expect(bool ok, const std::string& what) {
    auto& r = results_.back();
    ++r.instances;
    if (!ok && r.status != CheckStatus::fail) {
      r.status = CheckStatus::fail;
      r.detail = what;
    }
  }
  std::vector<TheoremResult> take() { return std::move(results_); }
  const Wdl& w() const { return w_; }

 private:
  const Wdl& w_;
  std::vector<TheoremResult> results_;
};

}  // namespace detail

/// Evaluates every structural theorem on one algebra. Checks whose
/// hypotheses the algebra does not meet are reported as skipped.
inline std::vector<TheoremResult> run_theorem_suite(const Wdl& w) {
  detail::SuiteBuilder s(w);
  const auto& l = w.lattice();
  const auto n = static_cast<Element>(w.size());
  const bool distributive = is_distributive(l);
  const bool regular = is_regular(w);
  const auto nf = all_normal_filters(w);
  const auto ni = all_normal_ideals(w);
  const auto con = all_congruences(w);
  const auto phi = detcon(w);
  const auto lbl = [&](const ElementSet& x) { return set_label(l, x); };
  const auto full = ElementSet::full(n);
  const auto one = ElementSet(n, {w.top()});

  s.begin("axioms", "all six WDL axioms hold");
  s.expect(check_axioms(l, w.delta_table(), w.nabla_table()).ok(), "axiom report has a failure");

  s.begin("identities", "(x&y)^D = x^D | y^D, (x|y)^N = x^N & y^N, x|x^D = 1, x&x^N = 0, "
                        "x^N <= x^D, x^DN <= x^DD <= x <= x^NN <= x^ND");
  for (Element x = 0; x < n; ++x) {
    s.expect(w.join(x, w.delta(x)) == w.top() && w.meet(x, w.nabla(x)) == w.bottom() &&
                 w.leq(w.nabla(x), w.delta(x)),
             "complement laws fail at " + w.label(x));
    s.expect(w.leq(eta_delta(w, x), w.delta(w.delta(x))) && w.leq(w.delta(w.delta(x)), x) &&
                 w.leq(x, w.nabla(w.nabla(x))) && w.leq(w.nabla(w.nabla(x)), eta_nabla(w, x)),
             "sandwich chain fails at " + w.label(x));
    for (Element y = 0; y < n; ++y)
      s.expect(w.delta(w.meet(x, y)) == w.join(w.delta(x), w.delta(y)) &&
                   w.nabla(w.join(x, y)) == w.meet(w.nabla(x), w.nabla(y)),
               "de Morgan laws fail at (" + w.label(x) + ", " + w.label(y) + ")");
  }

  s.begin("center", "the Boolean center is a Boolean algebra");
  s.expect(is_boolean_on(w, center(w)), "B(L) = " + lbl(center(w)) + " is not Boolean");

  s.begin("nf_principal", "N[a) = N[a^DN), N[a) v N[b) = N[a & b), N[a | b) <= N[a) n N[b), "
                          "N[a) v N[a^D) = L");
  for (Element a = 0; a < n; ++a) {
    const auto na = principal_normal_filter(w, a);
    s.expect(na == principal_normal_filter(w, eta_delta(w, a)),
             "N[a) differs from N[a^DN) at " + w.label(a));
    s.expect(na == normal_filter_generated(w, ElementSet(n, {a})),
             "principal form differs from generated filter at " + w.label(a));
    s.expect(nf_join(w, na, principal_normal_filter(w, w.delta(a))) == full,
             "N[a) v N[a^D) is proper at " + w.label(a));
    for (Element b = 0; b < n; ++b) {
      const auto nb = principal_normal_filter(w, b);
      s.expect(nf_join(w, na, nb) == principal_normal_filter(w, w.meet(a, b)),
               "N[a) v N[b) differs from N[a & b) at (" + w.label(a) + ", " + w.label(b) + ")");
      s.expect(principal_normal_filter(w, w.join(a, b)).is_subset_of(na & nb),
               "N[a | b) not inside N[a) n N[b) at (" + w.label(a) + ", " + w.label(b) + ")");
    }
  }

  s.begin("nf_ni_iso", "(a) NF(L) and NI(L) are isomorphic via F(J), with inverse J(F)");
  {
    auto r = check_nf_ni_isomorphism(w);
    s.expect(r.isomorphic, r.failure);
    for (const auto& f : nf)
      s.expect(ideal_to_filter(w, filter_to_ideal(w, f)) == f, "F(J(F)) != F for " + lbl(f));
    for (const auto& j : ni)
      s.expect(filter_to_ideal(w, ideal_to_filter(w, j)) == j, "J(F(J)) != J for " + lbl(j));
  }

  s.begin("theta_least", "(b) theta_F is the least congruence with top class F");
  if (!distributive) {
    s.skip("lattice is not distributive");
  } else {
    for (const auto& f : nf) {
      const auto t = theta_filter(w, f);
      s.expect(is_congruence(w, t), "theta of " + lbl(f) + " is not a congruence");
      s.expect(t.class_of(w.top()) == f, "top class of theta differs from " + lbl(f));
      s.expect(t == least_congruence_collapsing(w, f),
               "theta of " + lbl(f) + " is not the least congruence collapsing it");
      for (const auto& p : con.congruences)
        if (f.is_subset_of(p.class_of(w.top())))
          s.expect(t.refines(p), "a congruence collapsing " + lbl(f) + " does not contain theta");
    }
  }

  s.begin("join_formula", "(c) theta_F v Psi = theta_F o Psi o theta_F");
  if (!distributive) {
    s.skip("lattice is not distributive");
  } else {
    for (const auto& f : nf)
      for (const auto& p : con.congruences) {
        auto c = check_join_formula(w, f, p);
        s.expect(c.holds, c.detail);
      }
  }

  s.begin("permutability", "(d) theta_F1 o theta_F2 = theta_F2 o theta_F1");
  if (!distributive) {
    s.skip("lattice is not distributive");
  } else {
    for (const auto& f : nf)
      for (const auto& g : nf) {
        auto c = check_permutability(w, f, g);
        s.expect(c.holds, c.detail);
      }
  }

  s.begin("classes_normal", "(e) [1] of every congruence is a normal filter and [0] a normal "
                            "ideal, with J([1]) = [0] and F([0]) = [1]");
  for (const auto& p : con.congruences) {
    const auto top = p.class_of(w.top()), bot = p.class_of(w.bottom());
    const bool normal = is_normal_filter(w, top) && is_normal_ideal(w, bot);
    s.expect(normal, "classes of a congruence with top class " + lbl(top) + " are not normal");
    if (normal)
      s.expect(filter_to_ideal(w, top) == bot && ideal_to_filter(w, bot) == top,
               "J/F do not exchange the classes " + lbl(top) + " and " + lbl(bot));
    s.expect((top == one) == (bot == ElementSet(n, {w.bottom()})),
             "[1] = {1} and [0] = {0} disagree for " + lbl(top));
  }

  s.begin("detcon_max", "(f) Phi is a congruence, [1]_Phi = {1}, and it contains every "
                        "congruence with singleton top class");
  {
    s.expect(phi.class_of(w.top()) == one, "[1]_Phi is not {1}");
    for (const auto& p : con.congruences)
      if (p.class_of(w.top()) == one)
        s.expect(p.refines(phi), "a congruence with [1] = {1} is not inside Phi");
    if (auto v = congruence_violation(w, phi))
      s.expect(false, "Phi is not a congruence: (" + w.label(v->x) + ", " + w.label(v->y) +
                          ") separated by " + v->operation +
                          (v->z ? " with " + w.label(*v->z) : std::string()));
    else
      s.expect(true, "");
  }

  s.begin("con_nf_iso", "(g) on regular algebras F -> theta_F is an isomorphism NF(L) -> Con(L)");
  if (!regular) {
    s.skip("algebra is not regular");
  } else {
    auto c = check_con_nf_isomorphism(w);
    s.expect(c.holds, c.detail);
  }

  s.begin("nf_center_iso", "NF(L) is isomorphic to the filter lattice of B(L)");
  {
    auto r = check_nf_center_isomorphism(w);
    if (!r.hypothesis_holds) s.skip("some normal chain does not stabilize");
    else s.expect(r.isomorphic, r.failure);
  }

  s.begin("si_criteria", "simple iff |NF| = 2 and SI iff NF(L) has a unique atom "
                         "(regular distributive algebras)");
  if (!regular || !distributive) {
    s.skip("needs a regular distributive algebra");
  } else {
    const auto nfl = nf_lattice(w);
    std::size_t atoms = 0;
    for (const auto& [a, b] : covers(nfl))
      if (a == nfl.bottom()) ++atoms;
    s.expect(is_simple(w) == (nf.size() == 2), "simplicity disagrees with |NF| = 2");
    s.expect(is_subdirectly_irreducible(w).subdirectly_irreducible == (atoms == 1),
             "subdirect irreducibility disagrees with the atoms of NF(L)");
  }

  s.begin("maximal", "theta maximal iff [1]_theta maximal; W/theta_F simple iff F maximal");
  if (!regular || !distributive) {
    s.skip("needs a regular distributive algebra");
  } else {
    auto c = check_maximal_correspondence(w);
    s.expect(c.holds, c.detail);
    for (const auto& f : nf) {
      auto q = quotient_simple_iff_maximal(w, f);
      s.expect(q.holds, q.detail + " for " + lbl(f));
    }
  }

  s.begin("restriction", "Phi is trivial on both skeletons and restriction to them commutes "
                         "with joins of congruences");
  {
    auto r = check_restriction_laws(w);
    s.expect(r.detcon_trivial_on_skeleton, "Phi is not trivial on S(L)");
    s.expect(r.detcon_trivial_on_dual_skeleton, "Phi is not trivial on the dual skeleton");
    s.expect(r.join_failures_skeleton == 0, "restriction to S(L) does not commute with joins");
    s.expect(r.join_failures_dual_skeleton == 0,
             "restriction to the dual skeleton does not commute with joins");
    s.expect(r.restrictions_are_congruences, "a restriction to S(L) is not a congruence of S(L)");
  }

  s.begin("quotient_regular", "W/Phi is regular");
  if (!is_congruence(w, phi)) {
    s.skip("Phi is not a congruence");
  } else {
    auto q = quotient(w, phi).algebra;
    s.expect(is_regular(q), "W/Phi is not regular");
  }

  return s.take();
}

}  // namespace wdl
