#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace wdl;
using support::diamond;
using support::el;
using support::set;

namespace {

std::vector<Wdl> all_catalog() {
  std::vector<Wdl> out;
  for (const auto& n : catalog_names()) out.push_back(catalog(n));
  return out;
}

// Re-evaluates an axiom at its witness.
bool violated(const BoundedLattice& l, const std::vector<Element>& d, const std::vector<Element>& nb,
              const AxiomStatus& s) {
  const auto& w = s.witness;
  switch (s.axiom) {
    case Axiom::a1: return !l.leq(d[d[w[0]]], w[0]);
    case Axiom::a2: return l.leq(w[0], w[1]) && !l.leq(d[w[1]], d[w[0]]);
    case Axiom::a3: return l.join(l.meet(w[0], w[1]), l.meet(w[0], d[w[1]])) != w[0];
    case Axiom::a1d: return !l.leq(w[0], nb[nb[w[0]]]);
    case Axiom::a2d: return l.leq(w[0], w[1]) && !l.leq(nb[w[1]], nb[w[0]]);
    case Axiom::a3d: return l.meet(l.join(w[0], w[1]), l.join(w[0], nb[w[1]])) != w[0];
  }
  return false;
}

}  // namespace

TEST(Axioms, ChainAndP6Pass) {
  auto c3 = trivial_dicomplementation(chain_lattice(3));
  EXPECT_TRUE(check_axioms(c3.lattice(), c3.delta_table(), c3.nabla_table()).ok());
  auto p6 = catalog("P6");
  EXPECT_TRUE(check_axioms(p6.lattice(), p6.delta_table(), p6.nabla_table()).ok());
}

TEST(Axioms, MutatedP6FailsWithGenuineWitness) {
  auto p6 = catalog("P6");
  auto d = p6.delta_table();
  d[el(p6, "v")] = el(p6, "u");
  auto rep = check_axioms(p6.lattice(), d, p6.nabla_table());
  ASSERT_FALSE(rep.ok());
  const bool two_or_three = !rep.axioms[1].holds || !rep.axioms[2].holds;
  EXPECT_TRUE(two_or_three);
  for (const auto& s : rep.axioms)
    if (!s.holds) {
      EXPECT_TRUE(violated(p6.lattice(), d, p6.nabla_table(), s)) << axiom_id(s.axiom);
    }
  EXPECT_THROW(Wdl(p6.lattice(), d, p6.nabla_table()), Error);
}

TEST(Axioms, WitnessesAreGenuineOnRandomMaps) {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    auto l = random_distributive_lattice(rng, 3);
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(l.size() - 1));
    std::vector<Element> d(l.size()), nb(l.size());
    for (auto& x : d) x = pick(rng);
    for (auto& x : nb) x = pick(rng);
    auto rep = check_axioms(l, d, nb);
    for (const auto& s : rep.axioms)
      if (!s.holds) {
        ASSERT_TRUE(violated(l, d, nb, s));
      }
  }
}

TEST(DerivedOps, Identities) {
  for (const auto& w : all_catalog()) {
    for (Element x = 0; x < w.size(); ++x) {
      EXPECT_EQ(derived_op(w, DerivedOp::bar_wedge, x, w.delta(x)), w.bottom()) << w.name();
      EXPECT_EQ(derived_op(w, DerivedOp::tilde_vee, x, w.nabla(x)), w.top()) << w.name();
      for (Element y = 0; y < w.size(); ++y) {
        const auto j = w.join(x, y);
        EXPECT_EQ(derived_op(w, DerivedOp::sqcup, x, y), w.nabla(w.nabla(j))) << w.name();
        EXPECT_EQ(derived_op(w, DerivedOp::sqcap, x, y), w.nabla(w.join(w.nabla(x), w.nabla(y))));
        EXPECT_EQ(derived_op(w, DerivedOp::bar_sqcap, x, y), w.delta(w.join(w.delta(x), w.delta(y))));
        EXPECT_EQ(derived_op(w, DerivedOp::under_sqcup, x, y), w.delta(w.meet(w.delta(x), w.delta(y))));
      }
    }
  }
  auto p6 = catalog("P6");
  EXPECT_EQ(derived_op(p6, DerivedOp::bar_wedge, el(p6, "a"), el(p6, "b")), el(p6, "0"));
}

TEST(DerivedOps, Monotone) {
  const DerivedOp ops[] = {DerivedOp::sqcap,     DerivedOp::sqcup,     DerivedOp::bar_sqcap,
                           DerivedOp::under_sqcup, DerivedOp::bar_wedge, DerivedOp::tilde_vee};
  for (const auto& w : all_catalog()) {
    const auto n = static_cast<Element>(w.size());
    for (auto op : ops)
      for (Element x1 = 0; x1 < n; ++x1)
        for (Element x2 = 0; x2 < n; ++x2) {
          if (!w.leq(x1, x2)) continue;
          for (Element y1 = 0; y1 < n; ++y1)
            for (Element y2 = 0; y2 < n; ++y2)
              if (w.leq(y1, y2)) {
                ASSERT_TRUE(w.leq(derived_op(w, op, x1, y1), derived_op(w, op, x2, y2))) << w.name();
              }
        }
  }
}

TEST(NormalChain, Examples) {
  for (const auto& w : all_catalog()) EXPECT_EQ(normal_chain(w, w.top()), std::vector<Element>{w.top()});
  auto p6 = catalog("P6");
  EXPECT_EQ(normal_chain(p6, el(p6, "v")), (std::vector<Element>{el(p6, "v"), el(p6, "0")}));
  auto l6 = catalog("L6");
  EXPECT_EQ(normal_chain(l6, el(l6, "a")), (std::vector<Element>{el(l6, "a"), el(l6, "0")}));
}

TEST(Skeletons, Examples) {
  auto p6 = catalog("P6");
  EXPECT_EQ(skeleton(p6), set(p6, {"0", "u", "b", "1"}));
  EXPECT_EQ(dual_skeleton(p6), set(p6, {"0", "u", "b", "1"}));
  auto m = catalog("M42");
  EXPECT_EQ(skeleton(m), set(m, {"0", "a", "b", "1"}));
  EXPECT_EQ(dual_skeleton(m), set(m, {"0", "1"}));
  auto l6 = catalog("L6");
  EXPECT_EQ(skeleton(l6), set(l6, {"0", "u", "v", "1"}));
  EXPECT_EQ(dual_skeleton(l6), set(l6, {"0", "u", "b", "1"}));
  EXPECT_EQ(skeleton(l6) & dual_skeleton(l6), set(l6, {"0", "u", "1"}));
  auto k7 = catalog("K7");
  EXPECT_EQ(skeleton(k7), set(k7, {"0", "u", "v", "1"}));
  EXPECT_EQ(dual_skeleton(k7), set(k7, {"0", "u", "v", "a", "b", "1"}));
  auto m7 = catalog("M7");
  EXPECT_EQ(skeleton(m7), set(m7, {"0", "d", "c", "1"}));
  EXPECT_EQ(dual_skeleton(m7), set(m7, {"0", "e", "c", "1"}));
  auto l9 = catalog("L9");
  EXPECT_EQ(skeleton(l9), set(l9, {"0", "u", "b", "1"}));
  EXPECT_EQ(dual_skeleton(l9), set(l9, {"0", "u", "b", "1"}));
}

TEST(Skeletons, DenseSets) {
  for (const auto& w : all_catalog()) {
    ElementSet d(w.size()), dd(w.size());
    for (Element x = 0; x < w.size(); ++x) {
      if (w.nabla(x) == w.bottom()) d.insert(x);
      if (w.delta(x) == w.top()) dd.insert(x);
    }
    EXPECT_EQ(dense(w), d);
    EXPECT_EQ(dual_dense(w), dd);
  }
}

TEST(Skeletons, OrthoAndBoolean) {
  auto p6 = catalog("P6");
  EXPECT_TRUE(is_boolean_on(p6, skeleton(p6)));
  auto k7 = catalog("K7");
  EXPECT_TRUE(is_ortholattice_on(k7, dual_skeleton(k7), SkeletonFlavor::dual_skeleton));
  EXPECT_FALSE(is_boolean_on(k7, dual_skeleton(k7)));
  for (const auto& w : all_catalog()) {
    EXPECT_TRUE(is_boolean_on(w, center(w))) << w.name();
    EXPECT_TRUE(is_ortholattice_on(w, skeleton(w), SkeletonFlavor::skeleton)) << w.name();
    EXPECT_TRUE(is_ortholattice_on(w, dual_skeleton(w), SkeletonFlavor::dual_skeleton)) << w.name();
  }
}

TEST(Skeletons, NotClosedIsReported) {
  auto p6 = catalog("P6");
  try {
    is_ortholattice_on(p6, set(p6, {"0", "v", "1"}), SkeletonFlavor::skeleton);
    FAIL() << "expected NotClosed";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_closed);
  }
}

TEST(Classify, Examples) {
  auto p6 = classify(catalog("P6"));
  EXPECT_TRUE(p6.boolean_wdl);
  EXPECT_TRUE(p6.s_boolean);
  EXPECT_FALSE(p6.pure);
  auto m = classify(catalog("M42"));
  EXPECT_TRUE(m.s_boolean);
  EXPECT_FALSE(m.boolean_wdl);
  EXPECT_FALSE(m.pure);
  auto n5 = classify(catalog("N5"));
  EXPECT_TRUE(n5.pure);
  EXPECT_TRUE(n5.s_boolean);
  EXPECT_FALSE(n5.distributive);
  auto l9 = classify(catalog("L9"));
  EXPECT_TRUE(l9.boolean_wdl);
  for (const auto& w : all_catalog()) {
    auto c = classify(w);
    if (c.boolean_wdl) {
      EXPECT_TRUE(c.s_boolean) << w.name();
    }
    if (c.s_boolean) {
      EXPECT_TRUE(c.weak_s_boolean) << w.name();
    }
  }
}

TEST(Dicomplementation, StandardConstructionExamples) {
  auto m = catalog("M42").lattice();
  auto w = standard_dicomplementation(m, join_irreducibles(m), meet_irreducibles(m));
  for (const char* x : {"0", "a", "b", "e"}) EXPECT_EQ(w.delta(el(m, x)), el(m, "1")) << x;
  EXPECT_EQ(w.delta(el(m, "1")), el(m, "0"));
  EXPECT_EQ(w.nabla(el(m, "a")), el(m, "b"));
  EXPECT_EQ(w.nabla(el(m, "b")), el(m, "a"));
  EXPECT_EQ(w.nabla(el(m, "e")), el(m, "0"));
  EXPECT_EQ(w.nabla(el(m, "1")), el(m, "0"));
  EXPECT_EQ(w.nabla(el(m, "0")), el(m, "1"));

  auto k = catalog("K7").lattice();
  auto wk = standard_dicomplementation(k, join_irreducibles(k), meet_irreducibles(k));
  EXPECT_EQ(wk.nabla(el(k, "u")), el(k, "v"));
  EXPECT_EQ(wk.nabla(el(k, "v")), el(k, "u"));
  EXPECT_EQ(wk.delta(el(k, "u")), el(k, "b"));
  EXPECT_EQ(wk.delta(el(k, "v")), el(k, "a"));
  EXPECT_EQ(wk.delta(el(k, "a")), el(k, "v"));
  EXPECT_EQ(wk.delta(el(k, "b")), el(k, "u"));
  EXPECT_EQ(wk.delta(el(k, "w")), el(k, "1"));
  EXPECT_TRUE(wk == catalog("K7"));
}

TEST(Dicomplementation, FullGeneratorsOnRandomLattices) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    std::uniform_int_distribution<std::size_t> pts(1, 3);
    auto l = random_distributive_lattice(rng, pts(rng));
    if (l.size() > 8) continue;
    auto w = standard_dicomplementation(l, l.carrier(), l.carrier());
    EXPECT_TRUE(check_axioms(l, w.delta_table(), w.nabla_table()).ok());
  }
}

TEST(Dicomplementation, InsufficientGenerators) {
  auto m = catalog("M42").lattice();
  try {
    standard_dicomplementation(m, set(m, {"a", "b"}), meet_irreducibles(m));
    FAIL() << "expected InsufficientGenerators";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::insufficient_generators);
  }
}

TEST(Dicomplementation, Trivial) {
  auto c2 = trivial_dicomplementation(chain_lattice(2));
  EXPECT_EQ(c2.delta(0), 1U);
  EXPECT_EQ(c2.delta(1), 0U);
  EXPECT_EQ(c2.nabla(0), 1U);
  EXPECT_EQ(c2.nabla(1), 0U);
  auto c5 = trivial_dicomplementation(chain_lattice(5));
  auto bounds = ElementSet::of(5, std::vector<Element>{0, 4});
  EXPECT_EQ(skeleton(c5), bounds);
  EXPECT_EQ(dual_skeleton(c5), bounds);
  auto d = trivial_dicomplementation(diamond());
  EXPECT_EQ(center(d), set(d, {"0", "1"}));
}

TEST(FinerThan, Examples) {
  for (const auto& w : all_catalog()) {
    EXPECT_TRUE(finer_than(w, w));
    EXPECT_TRUE(finer_than(w, trivial_dicomplementation(w.lattice()))) << w.name();
  }
  EXPECT_TRUE(finer_than(catalog("P6"), catalog("L6")));
  EXPECT_TRUE(finer_than(catalog("K7"), catalog("L7")));
  try {
    finer_than(catalog("P6"), catalog("K7"));
    FAIL() << "expected CarrierMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::carrier_mismatch);
  }
}

TEST(FinerThan, NormalFiltersTransferToFinerStructures) {
  std::vector<std::pair<Wdl, Wdl>> pairs{{catalog("P6"), catalog("L6")}, {catalog("K7"), catalog("L7")}};
  for (const auto& w : all_catalog()) pairs.emplace_back(w, trivial_dicomplementation(w.lattice()));
  for (const auto& [fine, coarse] : pairs) {
    ASSERT_TRUE(finer_than(fine, coarse));
    for (const auto& f : all_normal_filters(coarse)) EXPECT_TRUE(is_normal_filter(fine, f)) << fine.name();
  }
}

TEST(Catalog, PrintedValues) {
  auto l6 = catalog("L6");
  EXPECT_EQ(l6.delta(el(l6, "u")), el(l6, "b"));
  EXPECT_EQ(l6.nabla(el(l6, "u")), el(l6, "v"));
  EXPECT_EQ(l6.delta(el(l6, "a")), el(l6, "b"));
  EXPECT_EQ(l6.nabla(el(l6, "a")), el(l6, "0"));
  auto m7 = catalog("M7");
  EXPECT_EQ(m7.delta(el(m7, "e")), el(m7, "c"));
  EXPECT_EQ(m7.delta(el(m7, "c")), el(m7, "e"));
  EXPECT_EQ(m7.nabla(el(m7, "d")), el(m7, "c"));
  EXPECT_EQ(m7.nabla(el(m7, "c")), el(m7, "d"));
  auto l9 = catalog("L9");
  EXPECT_EQ(l9.delta(el(l9, "a")), el(l9, "u"));
  EXPECT_EQ(l9.nabla(el(l9, "a")), el(l9, "0"));
  EXPECT_EQ(l9.delta(el(l9, "c")), el(l9, "1"));
  EXPECT_EQ(l9.nabla(el(l9, "c")), el(l9, "u"));
  try {
    catalog("Q8");
    FAIL() << "expected UnknownName";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_name);
  }
  EXPECT_TRUE(catalog_validation_warnings().empty());
}

TEST(Catalog, EveryEntryPassesAxioms) {
  for (const auto& w : all_catalog())
    EXPECT_TRUE(check_axioms(w.lattice(), w.delta_table(), w.nabla_table()).ok()) << w.name();
  EXPECT_EQ(catalog("L16").size(), 16U);
}

TEST(Catalog, N5IsASubalgebraOfM7) {
  auto m7 = catalog("M7");
  auto s = set(m7, {"0", "d", "e", "c", "1"});
  EXPECT_TRUE(is_subalgebra(m7, s));
  EXPECT_TRUE(oracle::wdl_isomorphic(induced_algebra(m7, s).algebra, catalog("N5")));
  EXPECT_EQ(skeleton(m7) | dual_skeleton(m7), s);
}

TEST(Identities, HoldOnEveryCatalogEntry) {
  for (const auto& w : all_catalog()) {
    const auto n = static_cast<Element>(w.size());
    bool all_fixed = true;
    for (Element x = 0; x < n; ++x) {
      const auto dd = w.delta(w.delta(x)), nn = w.nabla(w.nabla(x));
      EXPECT_EQ(w.join(x, w.delta(x)), w.top());
      EXPECT_EQ(w.meet(x, w.nabla(x)), w.bottom());
      EXPECT_TRUE(w.leq(w.nabla(x), w.delta(x)));
      EXPECT_TRUE(w.leq(eta_delta(w, x), dd) && w.leq(dd, x) && w.leq(x, nn) && w.leq(nn, eta_nabla(w, x)));
      EXPECT_EQ(w.nabla(w.nabla(nn)), nn);
      EXPECT_EQ(w.delta(w.delta(dd)), dd);
      all_fixed = all_fixed && eta_delta(w, x) == x;
      for (Element y = 0; y < n; ++y) {
        EXPECT_EQ(w.delta(w.meet(x, y)), w.join(w.delta(x), w.delta(y)));
        EXPECT_EQ(w.nabla(w.join(x, y)), w.meet(w.nabla(x), w.nabla(y)));
        EXPECT_EQ(w.leq(w.delta(x), y), w.leq(w.delta(y), x));
        EXPECT_EQ(w.leq(y, w.nabla(x)), w.leq(x, w.nabla(y)));
        if (w.leq(x, y)) {
          EXPECT_TRUE(w.leq(w.nabla(w.nabla(x)), w.nabla(w.nabla(y))));
          EXPECT_TRUE(w.leq(w.delta(w.delta(x)), w.delta(w.delta(y))));
        }
        auto ax = x, by = y;
        for (int k = 1; k <= 3; ++k) {
          ax = eta_delta(w, ax);
          by = eta_delta(w, by);
          auto m = w.meet(x, y);
          for (int i = 0; i < k; ++i) m = eta_delta(w, m);
          EXPECT_EQ(m, w.meet(ax, by)) << w.name();
        }
      }
    }
    EXPECT_EQ(all_fixed, center(w) == ElementSet::full(n)) << w.name();
  }
}

TEST(Isomorphism, WdlIsomorphismRespectsOperations) {
  auto a = catalog("P6");
  auto b = product(chain(2), chain(3));
  auto phi = find_wdl_isomorphism(a, b);
  ASSERT_TRUE(phi.has_value());
  for (Element x = 0; x < a.size(); ++x) {
    EXPECT_EQ((*phi)[a.delta(x)], b.delta((*phi)[x]));
    EXPECT_EQ((*phi)[a.nabla(x)], b.nabla((*phi)[x]));
  }
  EXPECT_FALSE(find_wdl_isomorphism(catalog("P6"), catalog("L6")).has_value());
  EXPECT_FALSE(oracle::wdl_isomorphic(catalog("P6"), catalog("L6")));
}
