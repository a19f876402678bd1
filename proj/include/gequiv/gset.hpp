#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gequiv/group.hpp"

namespace gequiv {

using Point = int;

/// A finite G-set: act(g, x) = g . x for every element g and point x.
class GAction {
 public:
  /// Validates the identity and compatibility laws.
  static GAction from_table(FiniteGroup group, const std::vector<std::vector<Point>>& act_table);

  const FiniteGroup& group() const noexcept { return group_; }
  int point_count() const noexcept { return points_; }
  Point act(Elem g, Point x) const noexcept { return act_[static_cast<std::size_t>(g) * points_ + x]; }

  std::vector<std::vector<Point>> table() const;

  friend bool operator==(const GAction& a, const GAction& b) {
    return a.points_ == b.points_ && a.group_ == b.group_ && a.act_ == b.act_;
  }

 private:
  GAction(FiniteGroup g, int points, std::vector<Point> act)
      : group_(std::move(g)), points_(points), act_(std::move(act)) {}

  FiniteGroup group_;
  int points_ = 0;
  std::vector<Point> act_;
};

inline constexpr std::uint64_t kDefaultPointBudget = std::uint64_t{1} << 20;

GAction build_action(const FiniteGroup& g, const std::vector<std::vector<Point>>& act_table);

/// (g . x)(h) = x(g^-1 h) on configurations x : G -> [0, q). A configuration
/// is encoded as the integer sum_h x(h) q^h, with the element id h as the digit
/// position.
GAction shift_action(const FiniteGroup& g, int alphabet_size,
                     std::uint64_t point_budget = kDefaultPointBudget);

/// Left action on the cosets aH, points ordered by the least element of each coset.
GAction coset_action(const FiniteGroup& g, const Subgroup& h);

/// Left multiplication of G on itself (the coset action of the trivial subgroup).
GAction regular_action(const FiniteGroup& g);

GAction disjoint_union(const GAction& a, const GAction& b);

/// Restriction to a G-invariant subset. Points are renumbered in ascending
/// order of `subset`.
GAction restrict_action(const GAction& a, std::span<const Point> subset);

std::vector<Point> orbit(const GAction& a, Point x);
Subgroup stabilizer(const GAction& a, Point x);

/// One entry per conjugacy class [H_i] of point stabilizers.
struct StabilizerClass {
  Subgroup rep;         // H_i, canonical member of the conjugacy class
  Subgroup normalizer;  // N_i = N_G(H_i)
  std::vector<Point> block;                // B_i, ascending
  std::vector<std::vector<Point>> orbits;  // G-orbits inside B_i, by least point
  std::vector<Point> orbit_reps;           // least point of each orbit
  std::size_t alpha = 0;                   // number of orbits
};

struct Classification {
  std::vector<StabilizerClass> classes;  // descending |H_i|, ties by carrier
  std::vector<Subgroup> stabs;           // distinct stabilizers, sorted by carrier

  // Per-point lookups.
  std::vector<int> stab_of;   // index into stabs
  std::vector<int> class_of;  // index into classes
  std::vector<int> orbit_of;  // index into orbits

  std::vector<std::vector<Point>> orbits;  // all G-orbits, by least point

  std::size_t r() const noexcept { return classes.size(); }
  const Subgroup& stab(Point x) const { return stabs[stab_of[x]]; }
  bool same_orbit(Point x, Point y) const { return orbit_of[x] == orbit_of[y]; }
};

Classification classify(const GAction& a);

}  // namespace gequiv
