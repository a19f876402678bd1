#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gequiv/equivariant.hpp"
#include "gequiv/gset.hpp"

// Brute-force ground truth. Nothing in here calls the closed formulas of
// rank.hpp except to compare against them.

namespace gequiv {

struct OracleBudget {
  std::uint64_t enumeration = std::uint64_t{1} << 20;  // max maps held in a MapSet
  std::uint64_t search = 10'000'000;                   // max C(|End|, cap) for min_generating_size
};

struct ImageHash {
  std::size_t operator()(const Image& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Point p : v) h = (h ^ static_cast<std::size_t>(p)) * 0x100000001b3ull;
    return h;
  }
};

/// Deduplicated set of image vectors in insertion order.
class MapSet {
 public:
  bool insert(const Image& f);
  bool contains(const Image& f) const { return index_.count(f) != 0; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Image>& members() const noexcept { return members_; }

  bool closed_under_composition = false;

  /// Same members, ignoring order.
  bool same_members(const MapSet& other) const;

 private:
  std::vector<Image> members_;
  std::unordered_map<Image, std::size_t, ImageHash> index_;
};

MapSet enumerate_end(const GAction& a, const OracleBudget& budget = {});
MapSet enumerate_aut(const GAction& a, const OracleBudget& budget = {});

/// Generators of Aut_G(X): translations tau_{x,k} on every orbit and
/// transpositions of orbits inside each block.
std::vector<GMap> aut_generators(const GAction& a, const Classification& c);

/// Least composition-closed set containing `seeds` and the identity.
MapSet monoid_closure(const GAction& a, std::span<const GMap> seeds, const OracleBudget& budget = {});

bool generates_modulo_aut(const GAction& a, std::span<const GMap> w, const OracleBudget& budget = {});

/// Least k <= cap such that some k non-invertible maps generate End modulo
/// Aut; cap + 1 if there is none.
std::size_t min_generating_size(const GAction& a, std::size_t cap, const OracleBudget& budget = {});

/// All types (i, [K]_{N_i}) of elementary collapsings, in class order and
/// then canonical-carrier order.
std::vector<CollapsingType> collapsing_types(const GAction& a, const Classification& c);

struct TypeCoverage {
  CollapsingType type;
  std::optional<std::size_t> witness;  // index into W
};

struct LowerBoundVerdict {
  bool consistent = false;
  std::vector<TypeCoverage> coverage;
};

/// Throws NotGenerating if W does not generate End modulo Aut.
LowerBoundVerdict verify_lower_bound(const GAction& a, std::span<const GMap> w, const OracleBudget& budget = {});

struct CheckResult {
  std::string name;
  bool passed = false;
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  double elapsed_ms = 0.0;
};

struct InvariantReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

InvariantReport check_invariant_suite(const GAction& a, const OracleBudget& budget = {});

}  // namespace gequiv
