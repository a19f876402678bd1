#include <gtest/gtest.h>

#include <algorithm>
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

// All m^m self-maps filtered by the commuting condition.
std::set<Image> naive_end(const GAction& a) {
  const int m = a.point_count();
  std::set<Image> out;
  Image f(m, 0);
  while (true) {
    bool ok = true;
    for (Elem g = 0; g < a.group().order() && ok; ++g)
      for (Point x = 0; x < m && ok; ++x) ok = f[a.act(g, x)] == a.act(g, f[x]);
    if (ok) out.insert(f);
    int pos = 0;
    while (pos < m && ++f[pos] == m) f[pos++] = 0;
    if (pos == m) break;
  }
  return out;
}

std::set<Image> as_set(const MapSet& s) { return {s.members().begin(), s.members().end()}; }

const CheckResult& find_check(const InvariantReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check " + name);
}

std::uint64_t count_of(const CheckResult& r, const std::string& key) {
  for (const auto& [k, v] : r.counts)
    if (k == key) return v;
  throw std::runtime_error("no count " + key);
}

std::vector<GMap> v_maps(const GAction& a) {
  std::vector<GMap> out;
  for (const auto& m : generating_set_V(a, classify(a))) out.push_back(m.map);
  return out;
}

}  // namespace

TEST(MapSet, InsertionOrderAndDedup) {
  MapSet s;
  EXPECT_TRUE(s.insert({1, 0}));
  EXPECT_TRUE(s.insert({0, 1}));
  EXPECT_FALSE(s.insert({1, 0}));
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.members().front(), (Image{1, 0}));
  MapSet t;
  t.insert({0, 1});
  t.insert({1, 0});
  EXPECT_TRUE(s.same_members(t));
}

TEST(EnumerateEnd, Examples) {
  EXPECT_EQ(enumerate_end(regular_action(cyclic_group(2))).size(), 2u);
  EXPECT_EQ(enumerate_end(z2()).size(), 16u);
  EXPECT_EQ(enumerate_end(z4()).size(), 65536u);
}

TEST(EnumerateEnd, AgreesWithNaiveEnumeration) {
  std::vector<gequiv::testing::Instance> small;
  for (auto& i : gequiv::testing::union_corpus())
    if (i.action.point_count() <= 6) small.push_back(i);
  small.push_back({"C2/shift2", z2()});
  small.push_back({"trivial4", gequiv::testing::trivial_action(4)});
  ASSERT_GE(small.size(), 4u);
  for (const auto& inst : small) EXPECT_EQ(as_set(enumerate_end(inst.action)), naive_end(inst.action)) << inst.name;
}

TEST(EnumerateEnd, BudgetRefusal) {
  OracleBudget tight;
  tight.enumeration = 100;
  try {
    enumerate_end(z4(), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
    EXPECT_TRUE(e.is_budget());
  }
}

TEST(EnumerateAut, Examples) {
  EXPECT_EQ(enumerate_aut(z2()).size(), 4u);
  EXPECT_EQ(enumerate_aut(z4()).size(), 1536u);
  const auto s3 = symmetric_group(3);
  const Elem t[] = {gequiv::testing::perm_id(3, {1, 0, 2})};
  const auto aut = enumerate_aut(coset_action(s3, subgroup_closure(s3, t)));
  ASSERT_EQ(aut.size(), 1u);
  EXPECT_EQ(aut.members().front(), (Image{0, 1, 2}));
}

TEST(MonoidClosure, Examples) {
  const auto id = GMap::identity(4);
  EXPECT_EQ(monoid_closure(z2(), std::vector<GMap>{id}).size(), 1u);
  EXPECT_EQ(monoid_closure(z2(), std::vector<GMap>{}).size(), 1u);
  const GMap swap(Image{3, 1, 2, 0});
  const auto two = monoid_closure(z2(), std::vector<GMap>{swap});
  EXPECT_EQ(two.size(), 2u);
  EXPECT_TRUE(two.closed_under_composition);

  auto seeds = v_maps(z2());
  const auto aut = aut_generators(z2(), classify(z2()));
  seeds.insert(seeds.end(), aut.begin(), aut.end());
  EXPECT_EQ(monoid_closure(z2(), seeds).size(), 16u);
}

TEST(MonoidClosure, IdempotentAndOrderIndependent) {
  auto seeds = v_maps(z4());
  const auto aut = aut_generators(z4(), classify(z4()));
  seeds.insert(seeds.end(), aut.begin(), aut.end());
  const auto first = monoid_closure(z4(), seeds);
  std::reverse(seeds.begin(), seeds.end());
  const auto reversed = monoid_closure(z4(), seeds);
  EXPECT_TRUE(first.same_members(reversed));
  EXPECT_EQ(first.size(), 65536u);

  const auto small = monoid_closure(z2(), v_maps(z2()));
  std::vector<GMap> again;
  for (const auto& f : small.members()) again.emplace_back(f);
  EXPECT_TRUE(monoid_closure(z2(), again).same_members(small));
}

TEST(MonoidClosure, BudgetRefusal) {
  OracleBudget tight;
  tight.enumeration = 3;
  EXPECT_THROW(monoid_closure(z2(), aut_generators(z2(), classify(z2())), tight), Error);
  auto seeds = v_maps(z2());
  try {
    monoid_closure(z2(), seeds, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(AutGenerators, GenerateAutOnCorpus) {
  auto corpus = gequiv::testing::union_corpus();
  for (auto& s : gequiv::testing::shift_corpus()) corpus.push_back(s);
  for (const auto& inst : corpus) {
    const auto gens = aut_generators(inst.action, classify(inst.action));
    for (const auto& g : gens) EXPECT_TRUE(g.is_bijective()) << inst.name;
    EXPECT_TRUE(monoid_closure(inst.action, gens).same_members(enumerate_aut(inst.action))) << inst.name;
  }
}

TEST(GeneratesModuloAut, Examples) {
  EXPECT_TRUE(generates_modulo_aut(z2(), v_maps(z2())));
  EXPECT_FALSE(generates_modulo_aut(z2(), std::vector<GMap>{}));
  EXPECT_TRUE(generates_modulo_aut(regular_action(cyclic_group(3)), std::vector<GMap>{}));
  for (const auto& inst : gequiv::testing::union_corpus())
    if (relative_rank(inst.action).end_order <= 100000)
      EXPECT_TRUE(generates_modulo_aut(inst.action, v_maps(inst.action))) << inst.name;
}

TEST(MinGeneratingSize, Examples) {
  EXPECT_EQ(min_generating_size(regular_action(cyclic_group(4)), 3), 0u);
  EXPECT_EQ(min_generating_size(z2(), 3), 2u);
  EXPECT_EQ(min_generating_size(gequiv::testing::trivial_action(3), 2), 1u);
  // Cap below the true value reports cap + 1.
  EXPECT_EQ(min_generating_size(z2(), 1), 2u);
}

TEST(MinGeneratingSize, SearchBudget) {
  OracleBudget tight;
  tight.search = 10;
  try {
    min_generating_size(z2(), 3, tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SearchBudgetExceeded);
  }
}

TEST(MinGeneratingSize, EqualsFormulaWhereSearchable) {
  std::vector<gequiv::testing::Instance> cases{{"C2/shift2", z2()},
                                               {"trivial2", gequiv::testing::trivial_action(2)},
                                               {"trivial3", gequiv::testing::trivial_action(3)}};
  for (auto& i : gequiv::testing::union_corpus())
    if (i.action.point_count() <= 6) cases.push_back(i);
  for (const auto& inst : cases) {
    const auto r = relative_rank(inst.action).relative_rank;
    EXPECT_EQ(min_generating_size(inst.action, r), r) << inst.name;
  }
}

TEST(CollapsingTypes, Examples) {
  EXPECT_EQ(collapsing_types(z4(), classify(z4())).size(), 5u);
  const auto reg = regular_action(cyclic_group(3));
  EXPECT_TRUE(collapsing_types(reg, classify(reg)).empty());
  const auto t2 = collapsing_types(z2(), classify(z2()));
  ASSERT_EQ(t2.size(), 2u);
  EXPECT_EQ(t2[0].class_index, 0u);
  EXPECT_EQ(t2[0].target_class.canonical().size(), 2);
  EXPECT_EQ(t2[1].class_index, 1u);
  EXPECT_EQ(t2[1].target_class.canonical().size(), 2);
}

TEST(VerifyLowerBound, Examples) {
  const auto v = verify_lower_bound(z4(), v_maps(z4()));
  EXPECT_TRUE(v.consistent);
  ASSERT_EQ(v.coverage.size(), 5u);
  std::set<std::size_t> witnesses;
  for (const auto& c : v.coverage) witnesses.insert(*c.witness);
  EXPECT_EQ(witnesses.size(), 5u);

  EXPECT_TRUE(verify_lower_bound(z4(), generating_set_W(z4())).consistent);

  try {
    verify_lower_bound(z2(), std::vector<GMap>{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotGenerating);
  }
}

TEST(VerifyLowerBound, ReplacingAMemberByAComposite) {
  // Replace [1 -> 0] by [0 -> 3] o [1 -> 0], which sends the free orbit to 3.
  auto w = v_maps(z2());
  ASSERT_EQ(w.size(), 2u);
  w[1] = compose(w[0], w[1]);
  const bool generates = generates_modulo_aut(z2(), w);
  if (generates) {
    EXPECT_TRUE(verify_lower_bound(z2(), w).consistent);
  } else {
    EXPECT_THROW(verify_lower_bound(z2(), w), Error);
  }
}

TEST(InvariantSuite, Examples) {
  const auto r2 = check_invariant_suite(z2());
  EXPECT_TRUE(r2.all_passed());
  EXPECT_EQ(count_of(find_check(r2, "block_quotient_identity"), "aut"), 4u);

  const auto r4 = check_invariant_suite(z4());
  EXPECT_TRUE(r4.all_passed());
  EXPECT_EQ(count_of(find_check(r4, "block_end_wreath_order"), "block_2_end"), 1728u);

  const auto s3 = symmetric_group(3);
  const Elem t[] = {gequiv::testing::perm_id(3, {1, 0, 2})};
  const auto nat = check_invariant_suite(coset_action(s3, subgroup_closure(s3, t)));
  EXPECT_TRUE(nat.all_passed());
  const auto& trans = find_check(nat, "transitive_end_equals_aut");
  EXPECT_EQ(count_of(trans, "end"), 1u);
  EXPECT_EQ(count_of(trans, "aut"), 1u);
}

TEST(InvariantSuite, KernelPairCountsOnEnd) {
  for (const auto& a : {z2(), z4()}) {
    const auto end = enumerate_end(a);
    const auto m = static_cast<std::size_t>(a.point_count());
    for (const auto& f : end.members()) {
      const GMap g(f);
      if (g.is_bijective())
        EXPECT_EQ(kernel(g).pair_count, m);
      else
        EXPECT_GT(kernel(g).pair_count, m);
    }
  }
}
