#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gequiv/error.hpp"

namespace gequiv {

using Elem = int;

class Subgroup;
namespace detail {
struct SubgroupAccess;
}

/// A finite group given by its full Cayley table. Elements are the ids
/// [0, order); the identity is whatever id the table says it is.
class FiniteGroup {
 public:
  /// Validates `table` (square, Latin, identity, inverses, associativity).
  static FiniteGroup from_table(const std::vector<std::vector<Elem>>& table);

  int order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
  Elem inv(Elem a) const noexcept { return inv_[a]; }
  /// g h g^-1
  Elem conj(Elem g, Elem h) const noexcept { return mul(mul(g, h), inv(g)); }

  std::vector<std::vector<Elem>> table() const;
  std::span<const Elem> inverses() const noexcept { return inv_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.mul_ == b.mul_;
  }

 private:
  FiniteGroup() = default;

  int order_ = 0;
  Elem identity_ = 0;
  std::vector<Elem> mul_;
  std::vector<Elem> inv_;
};

FiniteGroup build_group(const std::vector<std::vector<Elem>>& mul_table);

/// Z/nZ under addition.
FiniteGroup cyclic_group(int n);

/// Sym(k) for k <= 5. Element ids follow the lexicographic order of the
/// permutation words; (p q)(i) = p(q(i)).
FiniteGroup symmetric_group(int k);

/// Permutation word of element `id` of symmetric_group(k).
std::vector<int> symmetric_group_word(int k, Elem id);

/// A subgroup stored as a sorted carrier plus a membership bitmap.
class Subgroup {
 public:
  /// Validates closure, identity, inverses and Lagrange against `g`.
  static Subgroup from_elements(const FiniteGroup& g, std::vector<Elem> elems);

  const std::vector<Elem>& carrier() const noexcept { return carrier_; }
  int size() const noexcept { return static_cast<int>(carrier_.size()); }
  int group_order() const noexcept { return group_order_; }

  bool contains(Elem e) const noexcept {
    return e >= 0 && e < group_order_ && ((bits_[e >> 6] >> (e & 63)) & 1u) != 0;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.group_order_ == b.group_order_ && a.carrier_ == b.carrier_;
  }
  /// Lexicographic order of the sorted carriers.
  friend bool operator<(const Subgroup& a, const Subgroup& b) { return a.carrier_ < b.carrier_; }

 private:
  friend struct detail::SubgroupAccess;
  Subgroup() = default;

  std::vector<Elem> carrier_;
  std::vector<std::uint64_t> bits_;
  int group_order_ = 0;
};

/// Orbit of a subgroup under conjugation by some N.
struct SubgroupClass {
  std::vector<Subgroup> members;            // sorted by carrier
  std::vector<Elem> conjugator_witnesses;   // least g in N with g H g^-1 == members[k]

  const Subgroup& canonical() const { return members.front(); }
  std::size_t size() const noexcept { return members.size(); }

  bool contains(const Subgroup& h) const;

  friend bool operator==(const SubgroupClass& a, const SubgroupClass& b) {
    return a.canonical() == b.canonical();
  }
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup whole_group(const FiniteGroup& g);

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens);
Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Elem by);
Subgroup normalizer(const FiniteGroup& g, const Subgroup& h);
SubgroupClass n_conjugacy_class(const FiniteGroup& g, const Subgroup& h, const Subgroup& n);

/// carrier(h) is a subset of carrier(k).
bool is_subgroup_leq(const Subgroup& h, const Subgroup& k);

}  // namespace gequiv
