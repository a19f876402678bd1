#pragma once

#include <vector>

#include "gequiv/group.hpp"

namespace gequiv::detail {

// Builds subgroups whose closure is already known (stabilizers, normalizers,
// conjugates) without re-running the checks.
struct SubgroupAccess {
  static Subgroup make(int group_order, std::vector<Elem> sorted_carrier) {
    Subgroup s;
    s.group_order_ = group_order;
    s.bits_.assign(static_cast<std::size_t>(group_order + 63) / 64, 0);
    for (Elem e : sorted_carrier) s.bits_[e >> 6] |= std::uint64_t{1} << (e & 63);
    s.carrier_ = std::move(sorted_carrier);
    return s;
  }
};

}  // namespace gequiv::detail
