#include <gtest/gtest.h>

#include <set>

#include "corpus.hpp"
#include "gequiv/oracle.hpp"
#include "gequiv/rank.hpp"

using namespace gequiv;

namespace {

const GAction& z2() {
  static const GAction a = shift_action(cyclic_group(2), 2);
  return a;
}
const GAction& z4() {
  static const GAction a = shift_action(cyclic_group(4), 2);
  return a;
}

// Endomorphisms that differ from the identity on exactly one orbit and move
// that orbit entirely outside itself.
std::set<Image> single_orbit_collapses(const GAction& a) {
  const auto c = classify(a);
  std::set<Image> out;
  const auto end = enumerate_end(a);
  for (const auto& f : end.members()) {
    std::set<int> moved_orbits;
    for (Point x = 0; x < a.point_count(); ++x)
      if (f[x] != x) moved_orbits.insert(c.orbit_of[x]);
    if (moved_orbits.size() != 1) continue;
    const int o = *moved_orbits.begin();
    bool leaves = true;
    for (Point x : c.orbits[o]) leaves = leaves && c.orbit_of[f[x]] != o;
    if (leaves) out.insert(f);
  }
  return out;
}

}  // namespace

TEST(USet, Z4Shift) {
  const auto c = classify(z4());
  EXPECT_EQ(u_set(z4(), c, 0).size(), 1u);
  const auto u1 = u_set(z4(), c, 1);
  ASSERT_EQ(u1.size(), 2u);
  EXPECT_EQ(u1[0].canonical().size(), 4);
  EXPECT_EQ(u1[1].canonical().size(), 2);
  EXPECT_EQ(u_set(z4(), c, 2).size(), 3u);
  try {
    u_set(z4(), c, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IndexOutOfRange);
  }
}

TEST(Kappa, Examples) {
  EXPECT_EQ(kappa(classify(z4())), 1u);
  const auto c4 = cyclic_group(4);
  EXPECT_EQ(kappa(classify(regular_action(c4))), 1u);
  EXPECT_EQ(kappa(classify(disjoint_union(regular_action(c4), regular_action(c4)))), 0u);
}

TEST(RelativeRank, Examples) {
  const auto r4 = relative_rank(z4());
  EXPECT_EQ(r4.relative_rank, 5u);
  EXPECT_EQ(r4.kappa, 1u);
  EXPECT_EQ(r4.aut_order, 1536);
  EXPECT_EQ(r4.end_order, 65536);
  ASSERT_EQ(r4.classes.size(), 3u);
  EXPECT_EQ(r4.classes[2].alpha, 3u);
  EXPECT_EQ(r4.classes[2].stabilizer_order, 1);

  const auto r2 = relative_rank(z2());
  EXPECT_EQ(r2.relative_rank, 2u);
  EXPECT_EQ(r2.aut_order, 4);
  EXPECT_EQ(r2.end_order, 16);

  for (const auto& inst : gequiv::testing::coset_corpus()) EXPECT_EQ(relative_rank(inst.action).relative_rank, 0u);
}

TEST(RelativeRank, BigOrdersStayExact) {
  // Z5 on 3^5 configurations: the end order is far beyond 64 bits.
  const auto a = shift_action(cyclic_group(5), 3);
  const auto r = relative_rank(a);
  const auto c = classify(a);
  BigInt brute = 1;
  for (const auto& o : c.orbits) {
    const auto h = c.stab(o.front());
    int targets = 0;
    for (Point y = 0; y < a.point_count(); ++y) targets += is_subgroup_leq(h, c.stab(y));
    brute *= targets;
  }
  EXPECT_EQ(r.end_order, brute);
  EXPECT_GT(r.end_order, BigInt(1) << 200);
}

TEST(GeneratingSetW, Examples) {
  EXPECT_TRUE(generating_set_W(regular_action(cyclic_group(3))).empty());
  std::set<Image> w2;
  for (const auto& f : generating_set_W(z2())) w2.insert(f.image());
  EXPECT_EQ(w2, (std::set<Image>{{3, 1, 2, 3}, {0, 1, 2, 0}, {0, 0, 0, 3}, {0, 3, 3, 3}}));
}

TEST(GeneratingSetW, MatchesBruteForceCollapses) {
  auto corpus = gequiv::testing::union_corpus();
  for (auto& s : gequiv::testing::shift_corpus()) corpus.push_back(s);
  for (const auto& inst : corpus) {
    const auto w = generating_set_W(inst.action);
    std::set<Image> ours;
    for (const auto& f : w) ours.insert(f.image());
    EXPECT_EQ(ours.size(), w.size()) << inst.name;
    EXPECT_EQ(ours, single_orbit_collapses(inst.action)) << inst.name;
  }
  EXPECT_EQ(generating_set_W(z4()).size(), single_orbit_collapses(z4()).size());
  EXPECT_EQ(generating_set_W(z4()).size(), 40u);
}

TEST(GeneratingSetV, Examples) {
  const auto c4 = classify(z4());
  const auto v4 = generating_set_V(z4(), c4);
  std::set<Image> got;
  for (const auto& m : v4) got.insert(m.map.image());
  std::set<Image> want;
  for (auto [x, y] : std::vector<std::pair<Point, Point>>{{0, 15}, {5, 0}, {1, 5}, {1, 0}, {1, 3}})
    want.insert(collapsing(z4(), x, y).image());
  EXPECT_EQ(got, want);
  EXPECT_EQ(v4.size(), 5u);
  EXPECT_EQ(v4.front().source, 0);
  EXPECT_EQ(v4.front().target, 15);
  for (const auto& m : v4) {
    EXPECT_EQ(m.map, collapsing(z4(), m.source, m.target));
    const auto t = classify_elementary_collapsing(z4(), c4, m.map);
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(*t, m.type);
  }

  const auto v2 = generating_set_V(z2(), classify(z2()));
  ASSERT_EQ(v2.size(), 2u);
  EXPECT_EQ(v2[0].map, collapsing(z2(), 0, 3));
  EXPECT_EQ(v2[1].map, collapsing(z2(), 1, 0));

  const auto reg = regular_action(symmetric_group(3));
  EXPECT_TRUE(generating_set_V(reg, classify(reg)).empty());
}

TEST(GeneratingSetV, SizeIsRelativeRankOnCorpus) {
  auto corpus = gequiv::testing::union_corpus();
  for (auto& s : gequiv::testing::shift_corpus()) corpus.push_back(s);
  for (int n = 2; n <= 6; ++n) corpus.push_back({"trivial" + std::to_string(n), gequiv::testing::trivial_action(n)});
  for (const auto& inst : corpus) {
    const auto c = classify(inst.action);
    const auto v = generating_set_V(inst.action, c);
    EXPECT_EQ(v.size(), relative_rank(inst.action, c).relative_rank) << inst.name;
    std::set<std::pair<std::size_t, std::vector<Elem>>> types;
    for (const auto& m : v) types.insert({m.type.class_index, m.type.target_class.canonical().carrier()});
    EXPECT_EQ(types.size(), v.size()) << inst.name;
  }
}

TEST(Orders, Examples) {
  EXPECT_EQ(aut_order(z4(), classify(z4())), 1536);
  EXPECT_EQ(aut_order(z2(), classify(z2())), 4);
  EXPECT_EQ(end_order(z2(), classify(z2())), 16);
  EXPECT_EQ(end_order(z4(), classify(z4())), 65536);
  for (const auto& [name, g] : gequiv::testing::groups_up_to_order_8())
    for (const auto& h : gequiv::testing::all_subgroups(g)) {
      const auto a = coset_action(g, h);
      const auto c = classify(a);
      EXPECT_EQ(aut_order(a, c), normalizer(g, h).size() / h.size()) << name;
      EXPECT_EQ(end_order(a, c), aut_order(a, c)) << name;
    }
}
