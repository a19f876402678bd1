#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gequiv/gset.hpp"

namespace gequiv {

using Image = std::vector<Point>;

/// A total self-map of the point set, stored as its image vector.
/// Equivariance is checked where maps enter the library, not on compose.
class GMap {
 public:
  GMap() = default;
  explicit GMap(Image image) : image_(std::move(image)) {}

  static GMap identity(int point_count);

  const Image& image() const noexcept { return image_; }
  int point_count() const noexcept { return static_cast<int>(image_.size()); }
  Point operator()(Point x) const { return image_[x]; }

  bool is_bijective() const;

  friend bool operator==(const GMap&, const GMap&) = default;
  friend auto operator<=>(const GMap&, const GMap&) = default;

 private:
  Image image_;
};

struct KernelRelation {
  std::vector<std::vector<Point>> classes;  // by least point, each ascending
  std::size_t pair_count = 0;               // sum of |class|^2

  /// Every class of `this` lies inside a class of `coarser`.
  bool refines(const KernelRelation& coarser) const;
};

/// Type (i, [K]_{N_i}) of an elementary collapsing.
struct CollapsingType {
  std::size_t class_index = 0;
  SubgroupClass target_class;

  friend bool operator==(const CollapsingType& a, const CollapsingType& b) {
    return a.class_index == b.class_index && a.target_class == b.target_class;
  }
};

bool is_equivariant(const GAction& a, std::span<const Point> f);
GMap make_gmap(const GAction& a, Image image);  // throws NotEquivariant

/// (f o g)(x) = f(g(x)).
GMap compose(const GMap& f, const GMap& g);

/// [x -> y]: g.x -> g.y, identity off the orbit of x.
GMap collapsing(const GAction& a, Point x, Point y);

/// tau_{x,k}: g.x -> gk.x on the orbit of x, identity elsewhere.
GMap translation(const GAction& a, Point x, Elem k);

/// [x, y]: exchanges the orbits of x and y g-compatibly.
GMap orbit_swap(const GAction& a, Point x, Point y);

KernelRelation kernel(const GMap& f);

/// Acts as f_sub on sub_points (f_sub[k] is the image of sub_points[k])
/// and as the identity elsewhere.
GMap extend_by_identity(const GAction& a, std::span<const Point> sub_points, std::span<const Point> f_sub);

/// Type of f if it is an elementary collapsing, i.e. its kernel is the
/// equivalence relation generated by {(g.x, g.y)} for some x, y in distinct
/// orbits with G_x <= G_y.
std::optional<CollapsingType> classify_elementary_collapsing(const GAction& a, const Classification& c,
                                                             const GMap& f);

}  // namespace gequiv
