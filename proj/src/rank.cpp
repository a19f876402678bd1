#include "gequiv/rank.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <string>

namespace gequiv {

std::vector<SubgroupClass> u_set(const GAction& a, const Classification& c, std::size_t i) {
  if (i >= c.r()) {
    std::ostringstream os;
    os << "class index " << i << " with r = " << c.r();
    throw Error(Errc::IndexOutOfRange, os.str());
  }
  const auto& G = a.group();
  const auto& cls = c.classes[i];
  std::vector<SubgroupClass> u;
  for (const auto& k : c.stabs) {
    if (!is_subgroup_leq(cls.rep, k)) continue;
    SubgroupClass nk = n_conjugacy_class(G, k, cls.normalizer);
    if (std::find(u.begin(), u.end(), nk) == u.end()) u.push_back(std::move(nk));
  }
  std::sort(u.begin(), u.end(),
            [](const SubgroupClass& p, const SubgroupClass& q) { return p.canonical() < q.canonical(); });
  return u;
}

std::size_t kappa(const Classification& c) {
  return static_cast<std::size_t>(
      std::count_if(c.classes.begin(), c.classes.end(), [](const StabilizerClass& s) { return s.alpha == 1; }));
}

RankReport relative_rank(const GAction& a) { return relative_rank(a, classify(a)); }

RankReport relative_rank(const GAction& a, const Classification& c) {
  RankReport rep;
  std::size_t total = 0;
  for (std::size_t i = 0; i < c.r(); ++i) {
    ClassRank cr{c.classes[i].rep.size(), c.classes[i].alpha, u_set(a, c, i)};
    total += cr.u_classes.size();
    rep.classes.push_back(std::move(cr));
  }
  rep.kappa = kappa(c);
  rep.relative_rank = total - rep.kappa;
  rep.aut_order = aut_order(a, c);
  rep.end_order = end_order(a, c);
  return rep;
}

std::vector<GMap> generating_set_W(const GAction& a) {
  const Classification c = classify(a);
  const int m = a.point_count();
  std::vector<GMap> out;
  std::set<Image> seen;
  for (Point x = 0; x < m; ++x)
    for (Point y = 0; y < m; ++y) {
      if (c.same_orbit(x, y) || !is_subgroup_leq(c.stab(x), c.stab(y))) continue;
      GMap f = collapsing(a, x, y);
      if (seen.insert(f.image()).second) out.push_back(std::move(f));
    }
  return out;
}

namespace {

Point least_point_with_stab(const Classification& c, const Subgroup& h, int skip_orbit = -1) {
  for (Point x = 0; x < static_cast<Point>(c.stab_of.size()); ++x)
    if (c.orbit_of[x] != skip_orbit && c.stab(x) == h) return x;
  return -1;
}

}  // namespace

std::vector<AnnotatedMap> generating_set_V(const GAction& a, const Classification& c) {
  std::vector<AnnotatedMap> v;
  for (std::size_t i = 0; i < c.r(); ++i) {
    const auto& cls = c.classes[i];
    const Point xi = least_point_with_stab(c, cls.rep);
    for (auto& k : u_set(a, c, i)) {
      Point y;
      if (k.canonical() == cls.rep) {
        if (cls.alpha < 2) continue;
        y = least_point_with_stab(c, cls.rep, c.orbit_of[xi]);
      } else {
        y = least_point_with_stab(c, k.canonical());
      }
      v.push_back(AnnotatedMap{collapsing(a, xi, y), xi, y, CollapsingType{i, std::move(k)}});
    }
  }
  return v;
}

BigInt aut_order(const GAction&, const Classification& c) {
  BigInt total = 1;
  for (const auto& cls : c.classes) {
    const BigInt index = cls.normalizer.size() / cls.rep.size();
    BigInt factorial = 1;
    for (std::size_t k = 2; k <= cls.alpha; ++k) factorial *= k;
    total *= boost::multiprecision::pow(index, static_cast<unsigned>(cls.alpha)) * factorial;
  }
  return total;
}

BigInt end_order(const GAction&, const Classification& c) {
  // Points whose stabilizer contains stabs[s], for each distinct stabilizer.
  std::vector<std::size_t> per_stab(c.stabs.size(), 0);
  for (int t : c.stab_of) ++per_stab[t];
  std::vector<std::size_t> admissible(c.stabs.size(), 0);
  for (std::size_t s = 0; s < c.stabs.size(); ++s)
    for (std::size_t t = 0; t < c.stabs.size(); ++t)
      if (is_subgroup_leq(c.stabs[s], c.stabs[t])) admissible[s] += per_stab[t];
  BigInt total = 1;
  for (const auto& o : c.orbits) total *= admissible[c.stab_of[o.front()]];
  return total;
}

}  // namespace gequiv
