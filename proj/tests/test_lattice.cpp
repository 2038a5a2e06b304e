#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace wdl;
using support::diamond;
using support::el;
using support::set;

namespace {

std::vector<ElementSet> rows(std::size_t n, const std::vector<std::vector<Element>>& ups) {
  std::vector<ElementSet> out;
  for (const auto& r : ups) out.push_back(ElementSet::of(n, r));
  return out;
}

}  // namespace

TEST(Lattice, TwoChainFromOrder) {
  auto l = BoundedLattice::from_order(rows(2, {{0, 1}, {1}}));
  EXPECT_EQ(l.bottom(), 0U);
  EXPECT_EQ(l.top(), 1U);
  EXPECT_EQ(l.meet(0, 1), 0U);
  EXPECT_EQ(l.join(0, 1), 1U);
}

TEST(Lattice, DiamondOperations) {
  auto l = diamond();
  EXPECT_EQ(l.meet(el(l, "a"), el(l, "b")), el(l, "0"));
  EXPECT_EQ(l.join(el(l, "a"), el(l, "b")), el(l, "1"));
  EXPECT_FALSE(l.leq(el(l, "a"), el(l, "b")));
}

TEST(Lattice, TwoCrownIsNotALattice) {
  // a, b < c, d: {a, b} has the two minimal upper bounds c and d.
  const auto up = rows(4, {{0, 2, 3}, {1, 2, 3}, {2}, {3}});
  std::vector<Element> minimal_upper;
  for (Element z = 0; z < 4; ++z) {
    if (!up[0].contains(z) || !up[1].contains(z)) continue;
    bool minimal = true;
    for (Element t = 0; t < 4; ++t)
      if (t != z && up[0].contains(t) && up[1].contains(t) && up[t].contains(z)) minimal = false;
    if (minimal) minimal_upper.push_back(z);
  }
  ASSERT_EQ(minimal_upper.size(), 2U);
  try {
    BoundedLattice::from_order(up, {"a", "b", "c", "d"});
    FAIL() << "expected NotALattice";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_lattice);
    EXPECT_EQ(e.witness(), (std::vector<Element>{0, 1}));
  }
}

TEST(Lattice, RejectsNonPartialOrders) {
  EXPECT_THROW(
      {
        try {
          BoundedLattice::from_order(rows(2, {{0, 1}, {0, 1}}));
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), Errc::not_a_partial_order);
          EXPECT_EQ(e.witness(), (std::vector<Element>{0, 1}));
          throw;
        }
      },
      Error);
  // Missing reflexivity.
  EXPECT_THROW(BoundedLattice::from_order(rows(2, {{1}, {1}})), Error);
  // 0 <= 1 <= 2 without 0 <= 2.
  try {
    BoundedLattice::from_order(rows(3, {{0, 1}, {1, 2}, {2}}));
    FAIL() << "expected NotAPartialOrder";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_partial_order);
  }
  try {
    BoundedLattice::from_covers(3, {{0, 1}, {1, 2}, {2, 0}});
    FAIL() << "expected a cycle error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_partial_order);
  }
  EXPECT_THROW(BoundedLattice::from_covers(2, {{0, 5}}), Error);
}

TEST(Lattice, Covers) {
  auto c3 = chain(3).lattice();
  EXPECT_EQ(covers(c3), (std::vector<ElementPair>{{el(c3, "0"), el(c3, "e")}, {el(c3, "e"), el(c3, "1")}}));
  auto d = diamond();
  EXPECT_EQ(covers(d), (std::vector<ElementPair>{{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  auto m = catalog("M42").lattice();
  std::set<std::pair<std::string, std::string>> got, want{{"0", "a"}, {"0", "b"}, {"a", "e"},
                                                          {"b", "e"}, {"e", "1"}};
  for (auto [x, y] : covers(m)) got.emplace(m.label(x), m.label(y));
  EXPECT_EQ(got, want);
}

TEST(Lattice, Distributivity) {
  for (std::size_t n = 2; n <= 7; ++n) EXPECT_TRUE(is_distributive(chain(n).lattice()));
  EXPECT_TRUE(is_distributive(catalog("P6").lattice()));
  const auto n5 = catalog("N5").lattice();
  auto v = distributivity_violation(n5);
  ASSERT_TRUE(v.has_value());
  auto [x, y, z] = *v;
  EXPECT_NE(n5.meet(x, n5.join(y, z)), n5.join(n5.meet(x, y), n5.meet(x, z)));
}

TEST(Lattice, Irreducibles) {
  auto m = catalog("M42").lattice();
  EXPECT_EQ(join_irreducibles(m), set(m, {"a", "b", "1"}));
  EXPECT_EQ(meet_irreducibles(m), set(m, {"e", "a", "b"}));
  auto k = catalog("K7").lattice();
  EXPECT_EQ(join_irreducibles(k), set(k, {"w", "u", "v"}));
  EXPECT_EQ(meet_irreducibles(k), set(k, {"u", "v", "a", "b"}));
  auto c2 = chain(2).lattice();
  EXPECT_EQ(join_irreducibles(c2), set(c2, {"1"}));
  EXPECT_EQ(meet_irreducibles(c2), set(c2, {"0"}));
}

TEST(Lattice, IrreduciblesMatchCoverCounts) {
  for (const auto& name : catalog_names()) {
    auto l = catalog(name).lattice();
    ElementSet j(l.size()), m(l.size());
    std::vector<int> below(l.size()), above(l.size());
    for (auto [x, y] : covers(l)) ++below[y], ++above[x];
    for (Element x = 0; x < l.size(); ++x) {
      if (below[x] == 1) j.insert(x);
      if (above[x] == 1) m.insert(x);
    }
    EXPECT_EQ(join_irreducibles(l), j) << name;
    EXPECT_EQ(meet_irreducibles(l), m) << name;
  }
}

TEST(Lattice, TablesAgreeWithOrder) {
  for (const auto& name : catalog_names()) {
    auto l = catalog(name).lattice();
    for (Element x = 0; x < l.size(); ++x)
      for (Element y = 0; y < l.size(); ++y) {
        ASSERT_EQ(l.meet(x, y), oracle::glb(l, x, y)) << name;
        ASSERT_EQ(l.join(x, y), oracle::lub(l, x, y)) << name;
      }
  }
}

TEST(Lattice, Isomorphism) {
  auto c3 = chain(3).lattice();
  auto id = find_isomorphism(c3, c3);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(*id, (std::vector<Element>{0, 1, 2}));
  EXPECT_FALSE(find_isomorphism(chain(4).lattice(), diamond()).has_value());
  auto p6 = catalog("P6").lattice();
  auto prod = product(chain(2), chain(3)).lattice();
  auto phi = find_isomorphism(p6, prod);
  ASSERT_TRUE(phi.has_value());
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) EXPECT_EQ(p6.leq(x, y), prod.leq((*phi)[x], (*phi)[y]));
}

TEST(Lattice, IsomorphismAgreesWithPermutationSearch) {
  const auto names = catalog_names();
  for (const auto& a : names)
    for (const auto& b : names) {
      auto la = catalog(a).lattice(), lb = catalog(b).lattice();
      if (la.size() != lb.size() || la.size() > 9) continue;
      EXPECT_EQ(find_isomorphism(la, lb).has_value(), oracle::order_isomorphic(la, lb)) << a << " " << b;
    }
}

TEST(Lattice, SublatticeAndUpsets) {
  for (const auto& name : catalog_names()) {
    auto l = catalog(name).lattice();
    EXPECT_TRUE(is_sublattice_closed(l, ElementSet::of(l.size(), std::vector<Element>{l.bottom(), l.top()})));
  }
  auto c2 = chain(2).lattice();
  EXPECT_EQ(upsets(c2), (std::vector<ElementSet>{set(c2, {"1"}), set(c2, {"0", "1"})}));
  EXPECT_EQ(upsets(diamond()).size(), 5U);
}

TEST(Lattice, UpsetsMatchSubsetScan) {
  for (const auto& name : catalog_names()) {
    auto l = catalog(name).lattice();
    if (l.size() > 16) continue;
    std::vector<ElementSet> want;
    for (auto m : oracle::all_masks(l.size())) {
      if (m == 0) continue;
      bool up = true;
      for (Element x = 0; x < l.size() && up; ++x)
        for (Element y = 0; y < l.size() && up; ++y)
          if (oracle::in(m, x) && l.leq(x, y) && !oracle::in(m, y)) up = false;
      if (up) want.push_back(oracle::to_set(l.size(), m));
    }
    EXPECT_EQ(upsets(l), want) << name;
  }
}

TEST(Lattice, EnumerationCap) {
  auto big = chain_lattice(31);
  try {
    upsets(big);
    FAIL() << "expected CapExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::cap_exceeded);
  }
}
