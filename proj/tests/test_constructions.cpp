#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace wdl;
using support::diamond;
using support::el;
using support::set;

namespace {

ElementSet tuples_in(const Wdl& base, std::size_t k, const ElementSet& s) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= base.size();
  ElementSet out(total);
  for (Element idx = 0; idx < total; ++idx) {
    bool all = true;
    for (Element v : power_tuple(base.size(), k, idx)) all = all && s.contains(v);
    if (all) out.insert(idx);
  }
  return out;
}

}  // namespace

TEST(Chain, Examples) {
  auto c2 = chain(2);
  EXPECT_EQ(c2.delta_table(), (std::vector<Element>{1, 0}));
  EXPECT_EQ(c2.nabla_table(), (std::vector<Element>{1, 0}));
  auto c3 = chain(3);
  EXPECT_EQ(c3.delta(el(c3, "0")), el(c3, "1"));
  EXPECT_EQ(c3.delta(el(c3, "e")), el(c3, "1"));
  EXPECT_EQ(c3.delta(el(c3, "1")), el(c3, "0"));
  auto c4 = chain(4);
  EXPECT_EQ(skeleton(c4), set(c4, {"0", "1"}));
  EXPECT_EQ(dual_skeleton(c4), set(c4, {"0", "1"}));
  EXPECT_THROW(chain(1), Error);
}

TEST(Chain, UniqueStructure) {
  // Every pair of maps on C_4 satisfying the axioms is the trivial one.
  auto l = chain_lattice(4);
  std::size_t valid = 0;
  for (std::size_t dm = 0; dm < 256; ++dm)
    for (std::size_t nm = 0; nm < 256; ++nm) {
      std::vector<Element> d(4), nb(4);
      for (int i = 0; i < 4; ++i) {
        d[i] = static_cast<Element>((dm >> (2 * i)) & 3U);
        nb[i] = static_cast<Element>((nm >> (2 * i)) & 3U);
      }
      if (check_axioms(l, d, nb).ok()) {
        ++valid;
        EXPECT_TRUE(Wdl(l, d, nb) == chain(4));
      }
    }
  EXPECT_EQ(valid, 1U);
}

TEST(Product, ReconstructsP6) {
  auto p = product(chain(2), chain(3));
  EXPECT_TRUE(check_axioms(p.lattice(), p.delta_table(), p.nabla_table()).ok());
  EXPECT_TRUE(oracle::wdl_isomorphic(p, catalog("P6")));
}

TEST(Product, RowMajorIndexing) {
  auto a = chain(2), b = chain(3);
  auto p = product(a, b);
  for (Element i = 0; i < 2; ++i)
    for (Element j = 0; j < 3; ++j) {
      const Element idx = i * 3 + j;
      EXPECT_EQ(p.label(idx), "(" + a.label(i) + "," + b.label(j) + ")");
      EXPECT_EQ(p.delta(idx), a.delta(i) * 3 + b.delta(j));
      EXPECT_EQ(p.nabla(idx), a.nabla(i) * 3 + b.nabla(j));
    }
}

TEST(Product, CenterOfBooleanTimesC2) {
  auto boolean4 = standard_dicomplementation(diamond());
  ASSERT_TRUE(is_boolean_lattice(boolean4.lattice()));
  for (const auto& w : {chain(2), boolean4}) {
    auto p = product(w, chain(2));
    ElementSet want(p.size());
    center(w).for_each([&](Element x) {
      for (Element y = 0; y < 2; ++y) want.insert(x * 2 + y);
    });
    EXPECT_EQ(center(p), want);
  }
  EXPECT_TRUE(oracle::wdl_isomorphic(product(chain(2), chain(2)), boolean4));
}

TEST(Power, ReconstructsL9) {
  auto p = power(chain(3), 2);
  EXPECT_TRUE(oracle::wdl_isomorphic(p, catalog("L9")));
  for (const auto& n : catalog_names()) {
    auto w = catalog(n);
    if (w.size() > 9) continue;
    EXPECT_TRUE(oracle::wdl_isomorphic(power(w, 1), w)) << n;
  }
}

TEST(Power, StructurePreserved) {
  for (const auto& n : catalog_names()) {
    auto w = catalog(n);
    if (w.size() > 7) continue;
    auto p = power(w, 2);
    EXPECT_TRUE(check_axioms(p.lattice(), p.delta_table(), p.nabla_table()).ok());
    EXPECT_EQ(skeleton(p), tuples_in(w, 2, skeleton(w))) << n;
    EXPECT_EQ(dual_skeleton(p), tuples_in(w, 2, dual_skeleton(w))) << n;
    EXPECT_EQ(center(p), tuples_in(w, 2, center(w))) << n;
    EXPECT_EQ(dense(p), tuples_in(w, 2, dense(w))) << n;
    EXPECT_EQ(dual_dense(p), tuples_in(w, 2, dual_dense(w))) << n;
    auto cw = classify(w), cp = classify(p);
    EXPECT_EQ(cw.boolean_wdl, cp.boolean_wdl) << n;
    if (cp.pure) {
      EXPECT_TRUE(cw.pure) << n;
    }
    EXPECT_EQ(cw.distributive, cp.distributive) << n;
  }
}

TEST(Power, PurityIsNotPreserved) {
  // N5 = S ∪ S̄, but a pair taking one coordinate from S ∖ S̄ and the other
  // from S̄ ∖ S lies in neither skeleton of N5².
  auto n5 = catalog("N5");
  ASSERT_TRUE(classify(n5).pure);
  auto s = skeleton(n5), sd = dual_skeleton(n5);
  auto only_s = s - sd, only_sd = sd - s;
  ASSERT_FALSE(only_s.empty());
  ASSERT_FALSE(only_sd.empty());
  auto p = power(n5, 2);
  const Element mixed = power_index(n5.size(), {only_s.first(), only_sd.first()});
  EXPECT_FALSE(skeleton(p).contains(mixed));
  EXPECT_FALSE(dual_skeleton(p).contains(mixed));
  EXPECT_FALSE(classify(p).pure);
}

TEST(Power, ConstantEmbeddingIsAHomomorphism) {
  for (const auto& n : {"P6", "M42", "N5"}) {
    auto w = catalog(n);
    const std::size_t k = 3;
    auto p = power(w, k);
    auto phi = [&](Element a) { return constant_embedding(w.size(), k, a); };
    for (Element a = 0; a < w.size(); ++a) {
      EXPECT_EQ(p.delta(phi(a)), phi(w.delta(a)));
      EXPECT_EQ(p.nabla(phi(a)), phi(w.nabla(a)));
      for (Element b = 0; b < w.size(); ++b) {
        EXPECT_EQ(p.meet(phi(a), phi(b)), phi(w.meet(a, b)));
        EXPECT_EQ(p.join(phi(a), phi(b)), phi(w.join(a, b)));
      }
    }
  }
}

TEST(Power, CapExceeded) {
  try {
    power(chain(7), 5);
    FAIL() << "expected CapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cap_exceeded);
  }
}

TEST(Subalgebra, Generated) {
  for (const auto& n : catalog_names()) {
    auto w = catalog(n);
    if (w.size() > 12) continue;
    auto base = subalgebra_generated(w, ElementSet(w.size()));
    EXPECT_TRUE(base.contains(w.bottom()) && base.contains(w.top()));
    center(w).for_each([&](Element x) {
      EXPECT_TRUE(subalgebra_generated(w, ElementSet(w.size(), {x})).is_subset_of(center(w))) << n;
    });
    // Oracle: least closed superset found by scanning all subsets.
    for (Element x = 0; x < w.size(); ++x) {
      std::optional<ElementSet> best;
      for (auto m : oracle::all_masks(w.size())) {
        auto s = oracle::to_set(w.size(), m);
        if (!s.contains(x) || !s.contains(w.bottom()) || !s.contains(w.top())) continue;
        bool closed = true;
        s.for_each([&](Element a) {
          closed = closed && s.contains(w.delta(a)) && s.contains(w.nabla(a));
          s.for_each([&](Element b) {
            closed = closed && s.contains(w.meet(a, b)) && s.contains(w.join(a, b));
          });
        });
        if (closed && (!best || s.count() < best->count())) best = s;
      }
      EXPECT_EQ(subalgebra_generated(w, ElementSet(w.size(), {x})), *best) << n;
    }
  }
  auto m7 = catalog("M7");
  auto s = subalgebra_generated(m7, set(m7, {"d"}));
  EXPECT_EQ(s, set(m7, {"0", "d", "e", "c", "1"}));
}

TEST(Quotient, IdentityAndDetcon) {
  for (const auto& n : catalog_names()) {
    auto w = catalog(n);
    if (w.size() > 9) continue;
    EXPECT_TRUE(oracle::wdl_isomorphic(quotient(w, Partition::identity(w.size())).algebra, w)) << n;
  }
  for (std::size_t n = 3; n <= 7; ++n) {
    auto c = chain(n);
    auto q = quotient(c, detcon(c));
    EXPECT_TRUE(oracle::wdl_isomorphic(q.algebra, chain(3))) << n;
  }
}

TEST(Quotient, P6ByThetaOfB1) {
  auto p6 = catalog("P6");
  auto f = set(p6, {"b", "1"});
  auto r = oracle::theta_relation(p6, f);
  std::vector<Element> ids(6);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y <= x; ++y)
      if (r[x][y]) {
        ids[x] = y;
        break;
      }
  Partition brute(ids);
  EXPECT_EQ(brute, Partition::from_blocks(6, {{0, 1}, {2, 3}, {4, 5}}));
  auto q = quotient(p6, theta_filter(p6, f));
  EXPECT_TRUE(oracle::wdl_isomorphic(q.algebra, chain(3)));
  EXPECT_EQ(q.projection, (std::vector<Element>{0, 0, 1, 1, 2, 2}));
}

TEST(Quotient, RejectsNonCongruence) {
  auto p6 = catalog("P6");
  auto bad = Partition::from_blocks(6, {{el(p6, "0"), el(p6, "v")},
                                        {el(p6, "u"), el(p6, "a"), el(p6, "b"), el(p6, "1")}});
  try {
    quotient(p6, bad);
    FAIL() << "expected NotACongruence";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_congruence);
  }
}

TEST(Quotient, ByDetconIsRegularWhenPhiIsACongruence) {
  for (const auto& n : catalog_names()) {
    auto w = catalog(n);
    if (!is_congruence(w, detcon(w))) continue;
    EXPECT_TRUE(is_regular(quotient(w, detcon(w)).algebra)) << n;
  }
}

TEST(PowerLift, Filters) {
  auto c3 = chain(3);
  auto g = lift_filter_power(c3, 2, 0, set(c3, {"e", "1"}));
  EXPECT_EQ(g.count(), 6U);
  auto p = power(c3, 2);
  auto top = lift_filter_power(c3, 2, 1, set(c3, {"1"}));
  EXPECT_TRUE(is_normal_filter(p, top));
  EXPECT_THROW(lift_filter_power(c3, 2, 2, set(c3, {"1"})), Error);
}

TEST(PowerLift, PreservesAndReflects) {
  for (const auto& n : {"C3", "P6", "M42", "L6", "N5"}) {
    auto w = catalog(n);
    auto p = power(w, 2);
    std::vector<ElementSet> filters;
    for (const auto& u : upsets(w.lattice()))
      if (is_filter(w.lattice(), u)) filters.push_back(u);
    for (std::size_t coord = 0; coord < 2; ++coord) {
      for (const auto& f : filters) {
        auto gf = lift_filter_power(w, 2, coord, f);
        EXPECT_TRUE(is_filter(p.lattice(), gf));
        if (is_normal_filter(w, f)) {
          EXPECT_TRUE(is_normal_filter(p, gf)) << n;
        }
        for (const auto& h : filters)
          EXPECT_EQ(f.is_subset_of(h), gf.is_subset_of(lift_filter_power(w, 2, coord, h)));
      }
      auto mu = lift_congruence_power(w, 2, coord, Partition::identity(w.size()));
      for (Element x = 0; x < p.size(); ++x)
        for (Element y = 0; y < p.size(); ++y)
          EXPECT_EQ(mu.related(x, y),
                    power_tuple(w.size(), 2, x)[coord] == power_tuple(w.size(), 2, y)[coord]);
      if (!is_distributive(w.lattice())) continue;
      for (const auto& f : all_normal_filters(w))
        EXPECT_EQ(lift_congruence_power(w, 2, coord, theta_filter(w, f)),
                  theta_filter(p, lift_filter_power(w, 2, coord, f)))
            << n;
    }
  }
}
