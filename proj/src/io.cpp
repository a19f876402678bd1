#include "gequiv/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gequiv::io {

namespace {

[[noreturn]] void parse_fail(const std::string& what) { throw Error(Errc::ParseError, what); }

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    parse_fail(std::string(what) + ": '" + std::string(s) + "' is not an integer");
  return v;
}

std::vector<std::vector<int>> int_matrix(const json& j, const char* what) {
  if (!j.is_array()) parse_fail(std::string(what) + " must be an array of arrays");
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (const auto& row : j) {
    if (!row.is_array()) parse_fail(std::string(what) + " rows must be arrays");
    auto& r = out.emplace_back();
    r.reserve(row.size());
    for (const auto& v : row) {
      if (!v.is_number_integer()) parse_fail(std::string(what) + " entries must be integers");
      r.push_back(v.get<int>());
    }
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

}  // namespace

json group_to_json(const FiniteGroup& g) { return json{{"order", g.order()}, {"mul", g.table()}}; }

FiniteGroup group_from_json(const json& j) {
  if (j.is_string()) return parse_group_spec(j.get<std::string>()).group;
  if (!j.is_object() || !j.contains("mul")) parse_fail("group must be an object with \"mul\" or a builder string");
  auto table = int_matrix(j.at("mul"), "mul");
  if (j.contains("order")) {
    if (!j.at("order").is_number_integer()) parse_fail("\"order\" must be an integer");
    if (j.at("order").get<long long>() != static_cast<long long>(table.size()))
      throw Error(Errc::DimensionMismatch, "\"order\" disagrees with the table size");
  }
  return build_group(table);
}

GroupSpec parse_group_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) parse_fail("group spec '" + std::string(spec) + "' has no ':'");
  const std::string_view kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "cyclic") {
    const int n = parse_int(arg, "cyclic order");
    return {cyclic_group(n), "cyclic", n};
  }
  if (kind == "symmetric") {
    const int k = parse_int(arg, "symmetric degree");
    return {symmetric_group(k), "symmetric", k};
  }
  if (kind == "file") return {group_from_json(read_json_file(std::string(arg))), "file", 0};
  parse_fail("unknown group kind '" + std::string(kind) + "'");
}

json action_to_json(const GAction& a) {
  return json{{"group", group_to_json(a.group())}, {"points", a.point_count()}, {"act", a.table()}};
}

GAction action_from_json(const json& j) {
  if (!j.is_object() || !j.contains("group") || !j.contains("act"))
    parse_fail("action must be an object with \"group\" and \"act\"");
  FiniteGroup g = group_from_json(j.at("group"));
  auto table = int_matrix(j.at("act"), "act");
  if (j.contains("points")) {
    if (!j.at("points").is_number_integer()) parse_fail("\"points\" must be an integer");
    const long long m = j.at("points").get<long long>();
    for (const auto& row : table)
      if (static_cast<long long>(row.size()) != m)
        throw Error(Errc::DimensionMismatch, "\"points\" disagrees with the table width");
  }
  if (table.empty()) parse_fail("\"act\" has no rows");
  return build_action(g, table);
}

namespace {

Subgroup parse_coset_subgroup(const GroupSpec& gs, std::string_view arg) {
  const FiniteGroup& g = gs.group;
  if (arg.empty() || arg == "trivial") return trivial_subgroup(g);
  if (arg == "whole") return whole_group(g);
  if (arg == "transposition") {
    if (gs.kind != "symmetric" || gs.parameter < 2)
      parse_fail("'transposition' needs a symmetric group on at least 2 symbols");
    std::vector<int> want(gs.parameter);
    for (int i = 0; i < gs.parameter; ++i) want[i] = i;
    std::swap(want[0], want[1]);
    for (Elem e = 0; e < g.order(); ++e)
      if (symmetric_group_word(gs.parameter, e) == want) {
        const Elem gens[] = {e};
        return subgroup_closure(g, gens);
      }
  }
  std::vector<Elem> gens;
  std::size_t start = 0;
  while (start <= arg.size()) {
    const auto comma = arg.find(',', start);
    const auto piece = arg.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    gens.push_back(parse_int(piece, "coset generator"));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return subgroup_closure(g, gens);
}

}  // namespace

GAction parse_action_spec(const GroupSpec& group, std::string_view spec, std::uint64_t point_budget) {
  if (spec == "regular") return regular_action(group.group);
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) parse_fail("action spec '" + std::string(spec) + "' not understood");
  const std::string_view kind = spec.substr(0, colon), arg = spec.substr(colon + 1);
  if (kind == "shift") return shift_action(group.group, parse_int(arg, "alphabet size"), point_budget);
  if (kind == "coset") return coset_action(group.group, parse_coset_subgroup(group, arg));
  if (kind == "file") {
    GAction a = action_from_json(read_json_file(std::string(arg)));
    if (!(a.group() == group.group))
      throw Error(Errc::GroupMismatch, "action file uses a different group than --group");
    return a;
  }
  if (kind == "union") {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
      const auto plus = arg.find('+', start);
      parts.push_back(arg.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start));
      if (plus == std::string_view::npos) break;
      start = plus + 1;
    }
    GAction acc = parse_action_spec(group, parts.front(), point_budget);
    for (std::size_t k = 1; k < parts.size(); ++k)
      acc = disjoint_union(acc, parse_action_spec(group, parts[k], point_budget));
    return acc;
  }
  parse_fail("unknown action kind '" + std::string(kind) + "'");
}

json map_to_json(const GMap& f) { return json(f.image()); }

GMap map_from_json(const json& j) {
  if (!j.is_array()) parse_fail("map must be a JSON array of integers");
  Image img;
  img.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) parse_fail("map entries must be integers");
    img.push_back(v.get<int>());
  }
  return GMap(std::move(img));
}

json subgroup_to_json(const Subgroup& s) { return json(s.carrier()); }

json classification_to_json(const GAction& a, const Classification& c) {
  json classes = json::array();
  json alpha = json::array();
  for (const auto& cls : c.classes) {
    classes.push_back({{"stabilizer", subgroup_to_json(cls.rep)},
                       {"stabilizer_order", cls.rep.size()},
                       {"normalizer", subgroup_to_json(cls.normalizer)},
                       {"alpha", cls.alpha},
                       {"orbit_size", a.group().order() / cls.rep.size()},
                       {"block", cls.block},
                       {"orbits", cls.orbits},
                       {"orbit_reps", cls.orbit_reps}});
    alpha.push_back(cls.alpha);
  }
  json stabs = json::array();
  for (const auto& s : c.stabs) stabs.push_back(subgroup_to_json(s));
  return json{{"group_order", a.group().order()},
              {"points", a.point_count()},
              {"orbit_count", c.orbits.size()},
              {"alpha", alpha},
              {"classes", classes},
              {"stabilizers", stabs}};
}

json rank_report_to_json(const RankReport& r) {
  json classes = json::array();
  for (const auto& cr : r.classes) {
    json u = json::array();
    for (const auto& k : cr.u_classes) u.push_back(subgroup_to_json(k.canonical()));
    classes.push_back({{"stabilizer_order", cr.stabilizer_order},
                       {"alpha", cr.alpha},
                       {"u_size", cr.u_classes.size()},
                       {"u_classes", u}});
  }
  return json{{"classes", classes},
              {"kappa", r.kappa},
              {"relative_rank", r.relative_rank},
              {"aut_order", r.aut_order.str()},
              {"end_order", r.end_order.str()}};
}

json collapsing_type_to_json(const CollapsingType& t) {
  return json{{"class_index", t.class_index}, {"target_class", subgroup_to_json(t.target_class.canonical())}};
}

json kernel_to_json(const KernelRelation& k) { return json{{"classes", k.classes}, {"pair_count", k.pair_count}}; }

json check_to_json(const CheckResult& r) {
  json counts = json::object();
  for (const auto& [name, v] : r.counts) counts[name] = v;
  return json{{"name", r.name}, {"passed", r.passed}, {"counts", counts}, {"elapsed_ms", r.elapsed_ms}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_fail("'" + path + "': " + e.what());
  }
}

json read_json_arg(std::string_view arg) {
  if (starts_with(arg, "file:")) return read_json_file(std::string(arg.substr(5)));
  try {
    return json::parse(arg);
  } catch (const json::exception& e) {
    parse_fail(std::string("inline JSON: ") + e.what());
  }
}

}  // namespace gequiv::io
