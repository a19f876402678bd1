#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gequiv/equivariant.hpp"
#include "gequiv/gset.hpp"

namespace gequiv {

using BigInt = boost::multiprecision::cpp_int;

struct ClassRank {
  int stabilizer_order = 0;
  std::size_t alpha = 0;
  std::vector<SubgroupClass> u_classes;  // U(H_i), ordered by canonical carrier
};

struct RankReport {
  std::vector<ClassRank> classes;
  std::size_t kappa = 0;
  std::size_t relative_rank = 0;
  BigInt aut_order;
  BigInt end_order;
};

/// U(H_i): the N_i-classes of stabilizers G_x with H_i <= G_x.
std::vector<SubgroupClass> u_set(const GAction& a, const Classification& c, std::size_t i);

/// Number of stabilizer classes whose block is a single orbit.
std::size_t kappa(const Classification& c);

RankReport relative_rank(const GAction& a);
RankReport relative_rank(const GAction& a, const Classification& c);

/// Every collapsing [x -> y] over ordered pairs in distinct orbits with
/// G_x <= G_y, deduplicated by image, in (x, y) order.
std::vector<GMap> generating_set_W(const GAction& a);

struct AnnotatedMap {
  GMap map;
  Point source = 0;
  Point target = 0;
  CollapsingType type;
};

/// The minimal generating set modulo Aut: one collapsing per strict
/// containment class in U(H_i), plus [x_i -> x_i'] when alpha_i >= 2.
std::vector<AnnotatedMap> generating_set_V(const GAction& a, const Classification& c);

/// prod_i (|N_i| / |H_i|)^alpha_i * alpha_i!
BigInt aut_order(const GAction& a, const Classification& c);

/// prod over orbit representatives x of |{y : G_x <= G_y}|
BigInt end_order(const GAction& a, const Classification& c);

}  // namespace gequiv
