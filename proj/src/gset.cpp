#include "gequiv/gset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <string>

#include "subgroup_access.hpp"

namespace gequiv {

namespace {

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

void check_point(const GAction& a, Point x) {
  if (x < 0 || x >= a.point_count())
    throw Error(Errc::PointOutOfRange, cat("point ", x, " not in [0, ", a.point_count(), ")"));
}

}  // namespace

GAction GAction::from_table(FiniteGroup group, const std::vector<std::vector<Point>>& act_table) {
  const int n = group.order();
  if (static_cast<int>(act_table.size()) != n)
    throw Error(Errc::DimensionMismatch, cat("action table has ", act_table.size(), " rows for a group of order ", n));
  const int m = static_cast<int>(act_table[0].size());
  std::vector<Point> flat(static_cast<std::size_t>(n) * m);
  for (int g = 0; g < n; ++g) {
    if (static_cast<int>(act_table[g].size()) != m)
      throw Error(Errc::DimensionMismatch, cat("row ", g, " has ", act_table[g].size(), " entries, expected ", m));
    for (int x = 0; x < m; ++x) {
      Point y = act_table[g][x];
      if (y < 0 || y >= m) throw Error(Errc::PointOutOfRange, cat("act[", g, "][", x, "] = ", y));
      flat[static_cast<std::size_t>(g) * m + x] = y;
    }
  }
  GAction a(std::move(group), m, std::move(flat));
  const auto& G = a.group();
  for (Point x = 0; x < m; ++x)
    if (a.act(G.identity(), x) != x)
      throw Error(Errc::IdentityNotFixing, cat("identity sends ", x, " to ", a.act(G.identity(), x)));
  for (Elem g = 0; g < n; ++g)
    for (Elem h = 0; h < n; ++h) {
      const Elem gh = G.mul(g, h);
      for (Point x = 0; x < m; ++x)
        if (a.act(g, a.act(h, x)) != a.act(gh, x))
          throw Error(Errc::NotCompatible, cat("g=", g, " h=", h, " x=", x));
    }
  return a;
}

std::vector<std::vector<Point>> GAction::table() const {
  const int n = group_.order();
  std::vector<std::vector<Point>> t(n);
  for (int g = 0; g < n; ++g)
    t[g].assign(act_.begin() + static_cast<std::ptrdiff_t>(g) * points_,
                act_.begin() + static_cast<std::ptrdiff_t>(g + 1) * points_);
  return t;
}

GAction build_action(const FiniteGroup& g, const std::vector<std::vector<Point>>& act_table) {
  return GAction::from_table(g, act_table);
}

GAction shift_action(const FiniteGroup& g, int alphabet_size, std::uint64_t point_budget) {
  if (alphabet_size < 1) throw Error(Errc::ParseError, cat("alphabet size ", alphabet_size));
  const int n = g.order();
  std::uint64_t m = 1;
  for (int i = 0; i < n; ++i) {
    m *= static_cast<std::uint64_t>(alphabet_size);
    if (m > point_budget)
      throw Error(Errc::BudgetExceeded,
                  cat(alphabet_size, "^", n, " configurations exceed the point budget of ", point_budget));
  }
  const int points = static_cast<int>(m);
  std::vector<std::vector<Point>> t(n, std::vector<Point>(points));
  std::vector<int> digits(n), moved(n);
  std::vector<std::uint64_t> weight(n);
  for (int h = 0; h < n; ++h) weight[h] = h == 0 ? 1 : weight[h - 1] * alphabet_size;
  for (Point x = 0; x < points; ++x) {
    int v = x;
    for (int h = 0; h < n; ++h) {
      digits[h] = v % alphabet_size;
      v /= alphabet_size;
    }
    for (Elem e = 0; e < n; ++e) {
      const Elem ginv = g.inv(e);
      std::uint64_t y = 0;
      for (Elem h = 0; h < n; ++h) y += static_cast<std::uint64_t>(digits[g.mul(ginv, h)]) * weight[h];
      t[e][x] = static_cast<Point>(y);
    }
  }
  return GAction::from_table(g, t);
}

GAction coset_action(const FiniteGroup& g, const Subgroup& h) {
  if (h.group_order() != g.order()) throw Error(Errc::ParentMismatch, "subgroup belongs to a different group");
  const int n = g.order();
  // coset_id[a] = index of aH; cosets numbered by least element.
  std::vector<int> coset_id(n, -1);
  int count = 0;
  for (Elem a = 0; a < n; ++a) {
    if (coset_id[a] >= 0) continue;
    for (Elem s : h.carrier()) coset_id[g.mul(a, s)] = count;
    ++count;
  }
  std::vector<Elem> coset_rep(count);
  for (Elem a = n - 1; a >= 0; --a) coset_rep[coset_id[a]] = a;
  std::vector<std::vector<Point>> t(n, std::vector<Point>(count));
  for (Elem e = 0; e < n; ++e)
    for (int c = 0; c < count; ++c) t[e][c] = coset_id[g.mul(e, coset_rep[c])];
  return GAction::from_table(g, t);
}

GAction regular_action(const FiniteGroup& g) { return coset_action(g, trivial_subgroup(g)); }

GAction disjoint_union(const GAction& a, const GAction& b) {
  if (!(a.group() == b.group())) throw Error(Errc::GroupMismatch, "operands act with different groups");
  const int n = a.group().order();
  const int ma = a.point_count(), mb = b.point_count();
  std::vector<std::vector<Point>> t(n, std::vector<Point>(ma + mb));
  for (Elem e = 0; e < n; ++e) {
    for (Point x = 0; x < ma; ++x) t[e][x] = a.act(e, x);
    for (Point x = 0; x < mb; ++x) t[e][ma + x] = ma + b.act(e, x);
  }
  if (ma + mb == 0) return a;
  return GAction::from_table(a.group(), t);
}

GAction restrict_action(const GAction& a, std::span<const Point> subset) {
  std::vector<Point> pts(subset.begin(), subset.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<int> index(a.point_count(), -1);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    check_point(a, pts[i]);
    index[pts[i]] = static_cast<int>(i);
  }
  const int n = a.group().order();
  std::vector<std::vector<Point>> t(n, std::vector<Point>(pts.size()));
  for (Elem e = 0; e < n; ++e)
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const int j = index[a.act(e, pts[i])];
      if (j < 0) throw Error(Errc::NotInvariant, cat("element ", e, " moves ", pts[i], " out of the subset"));
      t[e][i] = j;
    }
  return GAction::from_table(a.group(), t);
}

std::vector<Point> orbit(const GAction& a, Point x) {
  check_point(a, x);
  std::vector<Point> o;
  o.reserve(a.group().order());
  for (Elem g = 0; g < a.group().order(); ++g) o.push_back(a.act(g, x));
  std::sort(o.begin(), o.end());
  o.erase(std::unique(o.begin(), o.end()), o.end());
  return o;
}

Subgroup stabilizer(const GAction& a, Point x) {
  check_point(a, x);
  std::vector<Elem> s;
  for (Elem g = 0; g < a.group().order(); ++g)
    if (a.act(g, x) == x) s.push_back(g);
  return detail::SubgroupAccess::make(a.group().order(), std::move(s));
}

Classification classify(const GAction& a) {
  const auto& G = a.group();
  const int m = a.point_count();
  Classification c;
  c.stab_of.assign(m, -1);
  c.class_of.assign(m, -1);
  c.orbit_of.assign(m, -1);

  for (Point x = 0; x < m; ++x) {
    if (c.orbit_of[x] >= 0) continue;
    auto o = orbit(a, x);
    for (Point y : o) c.orbit_of[y] = static_cast<int>(c.orbits.size());
    c.orbits.push_back(std::move(o));
  }

  std::map<std::vector<Elem>, int> stab_index;
  std::vector<Subgroup> per_point;
  per_point.reserve(m);
  for (Point x = 0; x < m; ++x) {
    per_point.push_back(stabilizer(a, x));
    stab_index.emplace(per_point.back().carrier(), 0);
  }
  int k = 0;
  for (auto& [carrier, idx] : stab_index) {
    idx = k++;
    c.stabs.push_back(detail::SubgroupAccess::make(G.order(), carrier));
  }
  for (Point x = 0; x < m; ++x) c.stab_of[x] = stab_index.at(per_point[x].carrier());

  // Conjugacy class of each distinct stabilizer, keyed by canonical member.
  const Subgroup all = whole_group(G);
  std::vector<Subgroup> canon;
  canon.reserve(c.stabs.size());
  for (const auto& s : c.stabs) canon.push_back(n_conjugacy_class(G, s, all).canonical());

  std::vector<Subgroup> reps;
  for (const auto& s : canon)
    if (std::find(reps.begin(), reps.end(), s) == reps.end()) reps.push_back(s);
  std::sort(reps.begin(), reps.end(), [](const Subgroup& p, const Subgroup& q) {
    if (p.size() != q.size()) return p.size() > q.size();
    return p < q;
  });

  std::vector<int> class_of_stab(c.stabs.size());
  for (std::size_t s = 0; s < c.stabs.size(); ++s)
    class_of_stab[s] = static_cast<int>(std::find(reps.begin(), reps.end(), canon[s]) - reps.begin());

  for (auto& h : reps) {
    StabilizerClass sc{h, normalizer(G, h), {}, {}, {}, 0};
    c.classes.push_back(std::move(sc));
  }
  for (Point x = 0; x < m; ++x) {
    const int i = class_of_stab[c.stab_of[x]];
    c.class_of[x] = i;
    c.classes[i].block.push_back(x);
  }
  for (const auto& o : c.orbits) {
    auto& sc = c.classes[c.class_of[o.front()]];
    sc.orbits.push_back(o);
    sc.orbit_reps.push_back(o.front());
    ++sc.alpha;
  }
  return c;
}

}  // namespace gequiv
