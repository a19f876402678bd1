#include "gequiv/equivariant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>

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

bool same_orbit(const GAction& a, Point x, Point y) {
  for (Elem g = 0; g < a.group().order(); ++g)
    if (a.act(g, x) == y) return true;
  return false;
}

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

KernelRelation partition_from(DisjointSets& ds, int m) {
  KernelRelation k;
  std::vector<int> slot(m, -1);
  for (Point x = 0; x < m; ++x) {
    const int root = ds.find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(k.classes.size());
      k.classes.emplace_back();
    }
    k.classes[slot[root]].push_back(x);
  }
  for (const auto& cls : k.classes) k.pair_count += cls.size() * cls.size();
  return k;
}

}  // namespace

GMap GMap::identity(int point_count) {
  Image img(point_count);
  std::iota(img.begin(), img.end(), 0);
  return GMap(std::move(img));
}

bool GMap::is_bijective() const {
  std::vector<char> hit(image_.size(), 0);
  for (Point y : image_) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool KernelRelation::refines(const KernelRelation& coarser) const {
  std::size_t m = 0;
  for (const auto& cls : coarser.classes) m += cls.size();
  std::vector<int> owner(m, -1);
  for (std::size_t i = 0; i < coarser.classes.size(); ++i)
    for (Point x : coarser.classes[i]) owner[x] = static_cast<int>(i);
  for (const auto& cls : classes)
    for (Point x : cls)
      if (static_cast<std::size_t>(x) >= m || owner[x] != owner[cls.front()]) return false;
  return true;
}

bool is_equivariant(const GAction& a, std::span<const Point> f) {
  const int m = a.point_count();
  if (static_cast<int>(f.size()) != m)
    throw Error(Errc::LengthMismatch, cat("map has length ", f.size(), ", action has ", m, " points"));
  for (Point y : f)
    if (y < 0 || y >= m) throw Error(Errc::PointOutOfRange, cat("image value ", y));
  for (Elem g = 0; g < a.group().order(); ++g)
    for (Point x = 0; x < m; ++x)
      if (f[a.act(g, x)] != a.act(g, f[x])) return false;
  return true;
}

GMap make_gmap(const GAction& a, Image image) {
  if (!is_equivariant(a, image)) throw Error(Errc::NotEquivariant, "map does not commute with the action");
  return GMap(std::move(image));
}

GMap compose(const GMap& f, const GMap& g) {
  if (f.point_count() != g.point_count())
    throw Error(Errc::BindingMismatch, cat("maps on ", f.point_count(), " and ", g.point_count(), " points"));
  Image out(g.point_count());
  for (Point x = 0; x < g.point_count(); ++x) out[x] = f(g(x));
  return GMap(std::move(out));
}

GMap collapsing(const GAction& a, Point x, Point y) {
  check_point(a, x);
  check_point(a, y);
  if (same_orbit(a, x, y)) throw Error(Errc::SameOrbit, cat(x, " and ", y, " share an orbit"));
  const auto& G = a.group();
  for (Elem g = 0; g < G.order(); ++g)
    if (a.act(g, x) == x && a.act(g, y) != y)
      throw Error(Errc::StabilizerNotContained, cat("element ", g, " fixes ", x, " but not ", y));
  Image img = GMap::identity(a.point_count()).image();
  for (Elem g = 0; g < G.order(); ++g) img[a.act(g, x)] = a.act(g, y);
  return GMap(std::move(img));
}

GMap translation(const GAction& a, Point x, Elem k) {
  check_point(a, x);
  const auto& G = a.group();
  if (k < 0 || k >= G.order()) throw Error(Errc::ElementOutOfRange, cat("element ", k));
  const Subgroup s = stabilizer(a, x);
  for (Elem h : s.carrier())
    if (!s.contains(G.conj(k, h)))
      throw Error(Errc::NotInNormalizer, cat("element ", k, " does not normalize the stabilizer of ", x));
  Image img = GMap::identity(a.point_count()).image();
  for (Elem g = 0; g < G.order(); ++g) img[a.act(g, x)] = a.act(G.mul(g, k), x);
  return GMap(std::move(img));
}

GMap orbit_swap(const GAction& a, Point x, Point y) {
  check_point(a, x);
  check_point(a, y);
  if (!(stabilizer(a, x) == stabilizer(a, y)))
    throw Error(Errc::StabilizerMismatch, cat("stabilizers of ", x, " and ", y, " differ"));
  if (same_orbit(a, x, y)) throw Error(Errc::SameOrbit, cat(x, " and ", y, " share an orbit"));
  Image img = GMap::identity(a.point_count()).image();
  for (Elem g = 0; g < a.group().order(); ++g) {
    img[a.act(g, x)] = a.act(g, y);
    img[a.act(g, y)] = a.act(g, x);
  }
  return GMap(std::move(img));
}

KernelRelation kernel(const GMap& f) {
  const int m = f.point_count();
  DisjointSets ds(m);
  std::vector<int> first(m, -1);
  for (Point x = 0; x < m; ++x) {
    if (first[f(x)] < 0)
      first[f(x)] = x;
    else
      ds.unite(first[f(x)], x);
  }
  return partition_from(ds, m);
}

GMap extend_by_identity(const GAction& a, std::span<const Point> sub_points, std::span<const Point> f_sub) {
  const int m = a.point_count();
  if (sub_points.size() != f_sub.size())
    throw Error(Errc::LengthMismatch, cat(sub_points.size(), " points but ", f_sub.size(), " images"));
  std::vector<char> in(m, 0);
  for (Point x : sub_points) {
    check_point(a, x);
    in[x] = 1;
  }
  for (Point x : sub_points)
    for (Elem g = 0; g < a.group().order(); ++g)
      if (!in[a.act(g, x)])
        throw Error(Errc::NotInvariant, cat("element ", g, " sends ", x, " outside the subset"));
  Image img = GMap::identity(m).image();
  for (std::size_t k = 0; k < sub_points.size(); ++k) {
    check_point(a, f_sub[k]);
    if (!in[f_sub[k]])
      throw Error(Errc::EscapesSubset, cat(sub_points[k], " maps to ", f_sub[k], " outside the subset"));
    img[sub_points[k]] = f_sub[k];
  }
  for (Point x : sub_points)
    for (Elem g = 0; g < a.group().order(); ++g)
      if (img[a.act(g, x)] != a.act(g, img[x]))
        throw Error(Errc::NotEquivariantOnSubset, cat("fails at g=", g, " x=", x));
  return GMap(std::move(img));
}

std::optional<CollapsingType> classify_elementary_collapsing(const GAction& a, const Classification& c,
                                                             const GMap& f) {
  if (!is_equivariant(a, f.image())) throw Error(Errc::NotEquivariant, "map does not commute with the action");
  const auto& G = a.group();
  const int m = a.point_count();
  const KernelRelation ker = kernel(f);

  std::vector<int> touched;
  std::size_t merged_points = 0;
  for (const auto& cls : ker.classes) {
    if (cls.size() < 2) continue;
    merged_points += cls.size();
    for (Point p : cls)
      if (std::find(touched.begin(), touched.end(), c.orbit_of[p]) == touched.end())
        touched.push_back(c.orbit_of[p]);
  }
  if (touched.size() != 2) return std::nullopt;
  if (merged_points != c.orbits[touched[0]].size() + c.orbits[touched[1]].size()) return std::nullopt;

  for (int first = 0; first < 2; ++first) {
    const Point x = c.orbits[touched[first]].front();
    const Subgroup& gx = c.stab(x);
    for (Point y : c.orbits[touched[1 - first]]) {
      if (!is_subgroup_leq(gx, c.stab(y))) continue;
      DisjointSets ds(m);
      for (Elem g = 0; g < G.order(); ++g) ds.unite(a.act(g, x), a.act(g, y));
      if (partition_from(ds, m).classes != ker.classes) continue;

      const std::size_t i = static_cast<std::size_t>(c.class_of[x]);
      const auto& cls = c.classes[i];
      Elem witness = -1;
      for (Elem g = 0; g < G.order() && witness < 0; ++g)
        if (conjugate_subgroup(G, gx, g) == cls.rep) witness = g;
      const Point xn = a.act(witness, x);
      return CollapsingType{i, n_conjugacy_class(G, c.stab(f(xn)), cls.normalizer)};
    }
  }
  return std::nullopt;
}

}  // namespace gequiv
