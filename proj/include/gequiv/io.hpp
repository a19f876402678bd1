#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "gequiv/equivariant.hpp"
#include "gequiv/gset.hpp"
#include "gequiv/oracle.hpp"
#include "gequiv/rank.hpp"

// JSON forms of groups, actions, maps and reports, plus the textual
// group/action specs understood by the command line.
//
//   group:  {"order": n, "mul": [[...], ...]}
//   action: {"group": <group object or builder string>, "points": m, "act": [[...], ...]}
//   map:    [f(0), f(1), ..., f(m-1)]
//
// Malformed input raises Error(Errc::ParseError); well-formed input that
// violates an algebraic law raises the law's own code.

namespace gequiv::io {

using json = nlohmann::json;

json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const json& j);

/// The group named by a "cyclic:n", "symmetric:k" or "file:path" spec.
struct GroupSpec {
  FiniteGroup group;
  std::string kind;  // "cyclic", "symmetric" or "file"
  int parameter = 0;
};
GroupSpec parse_group_spec(std::string_view spec);

json action_to_json(const GAction& a);
GAction action_from_json(const json& j);

/// "shift:q" | "coset:<gens>" | "regular" | "file:path" | "union:<spec>+<spec>[+...]".
/// Coset generators are comma-separated element ids, or one of the names
/// "trivial", "whole", "transposition" (the swap of 0 and 1 in a symmetric group).
GAction parse_action_spec(const GroupSpec& group, std::string_view spec,
                          std::uint64_t point_budget = kDefaultPointBudget);

json map_to_json(const GMap& f);
GMap map_from_json(const json& j);

json subgroup_to_json(const Subgroup& s);
json classification_to_json(const GAction& a, const Classification& c);
json rank_report_to_json(const RankReport& r);
json collapsing_type_to_json(const CollapsingType& t);
json kernel_to_json(const KernelRelation& k);
json check_to_json(const CheckResult& r);

json read_json_file(const std::string& path);
/// Inline JSON text, or "file:path".
json read_json_arg(std::string_view arg);

}  // namespace gequiv::io
