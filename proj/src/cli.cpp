#include "gequiv/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "gequiv/io.hpp"
#include "gequiv/oracle.hpp"
#include "gequiv/rank.hpp"

namespace gequiv::cli {

namespace {

using io::json;

struct RunConfig {
  std::string group_spec;
  std::string action_spec;
  std::string output_format = "json";
  std::string out_path;
  OracleBudget budgets;
  std::string set = "V";
  bool exhaustive_min = false;
  int alphabet = 2;
  std::vector<std::string> maps;
};

GAction load_action(const RunConfig& cfg) {
  if (cfg.group_spec.empty()) {
    if (cfg.action_spec.rfind("file:", 0) == 0)
      return io::action_from_json(io::read_json_file(cfg.action_spec.substr(5)));
    throw Error(Errc::ParseError, "--group is required unless --action is a file");
  }
  const io::GroupSpec g = io::parse_group_spec(cfg.group_spec);
  return io::parse_action_spec(g, cfg.action_spec.empty() ? "regular" : cfg.action_spec);
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << "}";
  return os.str();
}

std::string join_image(const Image& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << "]";
  return os.str();
}

void emit(const RunConfig& cfg, const json& j, const std::string& text, std::ostream& out) {
  const std::string body = cfg.output_format == "text" ? text : j.dump(2) + "\n";
  if (cfg.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) throw Error(Errc::ParseError, "cannot write '" + cfg.out_path + "'");
  f << body;
}

// ---- analyze ---------------------------------------------------------------

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const GAction a = load_action(cfg);
  const Classification c = classify(a);
  std::ostringstream t;
  t << "group order  " << a.group().order() << "\n"
    << "points       " << a.point_count() << "\n"
    << "orbits       " << c.orbits.size() << "\n"
    << "classes      " << c.r() << "\n";
  for (std::size_t i = 0; i < c.r(); ++i) {
    const auto& cls = c.classes[i];
    t << "\nclass " << i + 1 << "\n"
      << "  stabilizer  " << join(cls.rep.carrier()) << "  (order " << cls.rep.size() << ")\n"
      << "  normalizer  " << join(cls.normalizer.carrier()) << "\n"
      << "  alpha       " << cls.alpha << "\n"
      << "  block       " << join(cls.block) << "\n";
    for (const auto& o : cls.orbits) t << "  orbit       " << join(o) << "\n";
  }
  emit(cfg, io::classification_to_json(a, c), t.str(), out);
  return kOk;
}

// ---- rank ------------------------------------------------------------------

std::string rank_text(const RankReport& r) {
  std::ostringstream t;
  t << std::left << std::setw(8) << "class" << std::setw(10) << "|H_i|" << std::setw(8) << "alpha"
    << "|U(H_i)|\n";
  for (std::size_t i = 0; i < r.classes.size(); ++i)
    t << std::setw(8) << i + 1 << std::setw(10) << r.classes[i].stabilizer_order << std::setw(8)
      << r.classes[i].alpha << r.classes[i].u_classes.size() << "\n";
  t << "\nkappa          " << r.kappa << "\n"
    << "relative_rank  " << r.relative_rank << "\n"
    << "aut_order      " << r.aut_order << "\n"
    << "end_order      " << r.end_order << "\n";
  return t.str();
}

int cmd_rank(const RunConfig& cfg, std::ostream& out) {
  const GAction a = load_action(cfg);
  const RankReport r = relative_rank(a);
  emit(cfg, io::rank_report_to_json(r), rank_text(r), out);
  return kOk;
}

// ---- gens ------------------------------------------------------------------

int cmd_gens(const RunConfig& cfg, std::ostream& out) {
  const GAction a = load_action(cfg);
  const Classification c = classify(a);
  json maps = json::array();
  std::ostringstream t;
  if (cfg.set == "V") {
    for (const auto& m : generating_set_V(a, c)) {
      maps.push_back({{"image", io::map_to_json(m.map)},
                      {"source", m.source},
                      {"target", m.target},
                      {"type", io::collapsing_type_to_json(m.type)}});
      t << "[" << m.source << " -> " << m.target << "]  type (" << m.type.class_index + 1 << ", "
        << join(m.type.target_class.canonical().carrier()) << ")  " << join_image(m.map.image()) << "\n";
    }
  } else {
    for (const auto& f : generating_set_W(a)) {
      const auto type = classify_elementary_collapsing(a, c, f);
      json entry{{"image", io::map_to_json(f)}, {"type", type ? io::collapsing_type_to_json(*type) : json()}};
      maps.push_back(std::move(entry));
      t << join_image(f.image()) << "\n";
    }
  }
  json j{{"set", cfg.set}, {"count", maps.size()}, {"maps", maps}};
  emit(cfg, j, t.str(), out);
  return kOk;
}

// ---- verify ----------------------------------------------------------------

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const GAction a = load_action(cfg);
  const Classification c = classify(a);
  const RankReport report = relative_rank(a, c);
  json j{{"rank", io::rank_report_to_json(report)}};
  std::vector<CheckResult> checks;
  std::optional<std::string> refusal;
  std::size_t closure_size = 0;

  try {
    for (auto& r : check_invariant_suite(a, cfg.budgets).checks) checks.push_back(std::move(r));

    {
      Timer clock;
      const MapSet aut = enumerate_aut(a, cfg.budgets);
      const auto gens = aut_generators(a, c);
      const MapSet closed = monoid_closure(a, gens, cfg.budgets);
      checks.push_back({"aut_generators_generate_aut", closed.same_members(aut),
                        {{"generators", gens.size()}, {"aut", aut.size()}}, clock.ms()});
    }

    const auto v_annotated = generating_set_V(a, c);
    std::vector<GMap> v;
    for (const auto& m : v_annotated) v.push_back(m.map);
    const std::vector<GMap> w = generating_set_W(a);

    {
      Timer clock;
      std::vector<GMap> seeds = aut_generators(a, c);
      seeds.insert(seeds.end(), v.begin(), v.end());
      closure_size = monoid_closure(a, seeds, cfg.budgets).size();
      const bool ok = BigInt(closure_size) == report.end_order && v.size() == report.relative_rank;
      checks.push_back({"v_generates_modulo_aut", ok,
                        {{"v_size", v.size()}, {"closure_size", closure_size}}, clock.ms()});
    }
    {
      Timer clock;
      std::uint64_t broken = 0;
      for (std::size_t k = 0; k < v.size(); ++k) {
        std::vector<GMap> fewer;
        for (std::size_t t = 0; t < v.size(); ++t)
          if (t != k) fewer.push_back(v[t]);
        broken += generates_modulo_aut(a, fewer, cfg.budgets) ? 0 : 1;
      }
      checks.push_back({"v_minimal", broken == v.size(), {{"removals", v.size()}, {"broken", broken}}, clock.ms()});
    }
    {
      Timer clock;
      const bool ok = generates_modulo_aut(a, w, cfg.budgets);
      checks.push_back({"w_generates_modulo_aut", ok, {{"w_size", w.size()}}, clock.ms()});
    }
    {
      Timer clock;
      const auto types = collapsing_types(a, c);
      const auto lv = verify_lower_bound(a, v, cfg.budgets);
      const auto lw = verify_lower_bound(a, w, cfg.budgets);
      const bool ok = lv.consistent && lw.consistent && types.size() == report.relative_rank;
      checks.push_back({"lower_bound_types_covered", ok,
                        {{"types", types.size()},
                         {"covered_by_v", lv.consistent ? 1u : 0u},
                         {"covered_by_w", lw.consistent ? 1u : 0u}},
                        clock.ms()});
    }
    if (cfg.exhaustive_min) {
      Timer clock;
      const std::size_t found = min_generating_size(a, report.relative_rank, cfg.budgets);
      checks.push_back({"exhaustive_min_generating_size", found == report.relative_rank,
                        {{"min_size", found}, {"formula", report.relative_rank}}, clock.ms()});
    }
  } catch (const Error& e) {
    if (!e.is_budget()) throw;
    refusal = e.what();
  }

  json cj = json::array();
  bool all = true;
  for (const auto& r : checks) {
    cj.push_back(io::check_to_json(r));
    all = all && r.passed;
  }
  j["checks"] = cj;
  j["closure_size"] = closure_size;
  j["budget_exceeded"] = refusal ? json(*refusal) : json();
  j["all_passed"] = all && !refusal;

  std::ostringstream t;
  t << rank_text(report) << "\n";
  for (const auto& r : checks)
    t << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(44) << r.name << std::fixed
      << std::setprecision(1) << r.elapsed_ms << " ms\n";
  if (refusal) t << "BUDGET  " << *refusal << "\n";
  emit(cfg, j, t.str(), out);
  if (refusal) return kBudgetExceeded;
  return all ? kOk : kCheckFailed;
}

// ---- shift -----------------------------------------------------------------

int cmd_shift(const RunConfig& cfg, std::ostream& out) {
  const io::GroupSpec g = io::parse_group_spec(cfg.group_spec);
  const GAction a = shift_action(g.group, cfg.alphabet);
  RunConfig json_only = cfg;
  json_only.output_format = "json";
  emit(json_only, io::action_to_json(a), "", out);
  return kOk;
}

// ---- map -------------------------------------------------------------------

std::vector<GMap> load_maps(const RunConfig& cfg, const GAction& a, std::size_t want) {
  if (cfg.maps.size() != want) {
    std::ostringstream os;
    os << "expected " << want << " --map argument(s), got " << cfg.maps.size();
    throw Error(Errc::ParseError, os.str());
  }
  std::vector<GMap> maps;
  for (const auto& m : cfg.maps) {
    GMap f = io::map_from_json(io::read_json_arg(m));
    if (f.point_count() != a.point_count()) {
      std::ostringstream os;
      os << "map has length " << f.point_count() << ", action has " << a.point_count() << " points";
      throw Error(Errc::LengthMismatch, os.str());
    }
    maps.push_back(std::move(f));
  }
  return maps;
}

int cmd_map_check(const RunConfig& cfg, std::ostream& out) {
  const GAction a = load_action(cfg);
  const GMap f = load_maps(cfg, a, 1).front();
  const bool eq = is_equivariant(a, f.image());
  json j{{"equivariant", eq}, {"bijective", f.is_bijective()}, {"collapsing_type", json()}};
  std::ostringstream t;
  t << "equivariant  " << (eq ? "yes" : "no") << "\nbijective    " << (f.is_bijective() ? "yes" : "no") << "\n";
  if (eq) {
    const auto type = classify_elementary_collapsing(a, classify(a), f);
    if (type) {
      j["collapsing_type"] = io::collapsing_type_to_json(*type);
      t << "collapsing   (" << type->class_index + 1 << ", " << join(type->target_class.canonical().carrier())
        << ")\n";
    }
  }
  emit(cfg, j, t.str(), out);
  return eq ? kOk : kValidationError;
}

int cmd_map_compose(const RunConfig& cfg, std::ostream& out) {
  const GAction a = load_action(cfg);
  const auto maps = load_maps(cfg, a, 2);
  for (const auto& f : maps) make_gmap(a, f.image());
  const GMap h = compose(maps[0], maps[1]);
  emit(cfg, io::map_to_json(h), join_image(h.image()) + "\n", out);
  return kOk;
}

int cmd_map_kernel(const RunConfig& cfg, std::ostream& out) {
  const GAction a = load_action(cfg);
  const GMap f = load_maps(cfg, a, 1).front();
  const KernelRelation k = kernel(f);
  std::ostringstream t;
  for (const auto& cls : k.classes) t << join(cls) << "\n";
  t << "pair_count " << k.pair_count << "\n";
  emit(cfg, io::kernel_to_json(k), t.str(), out);
  return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool with_budgets) {
  sub->add_option("--group", cfg.group_spec, "cyclic:n | symmetric:k | file:path");
  sub->add_option("--action", cfg.action_spec, "shift:q | coset:<gens> | regular | file:path | union:a+b");
  sub->add_option("--format", cfg.output_format, "json or text")->check(CLI::IsMember({"json", "text"}));
  sub->add_option("--out", cfg.out_path, "write the report to this file");
  if (with_budgets) {
    sub->add_option("--budget-enum", cfg.budgets.enumeration, "max maps enumerated or closed");
    sub->add_option("--budget-search", cfg.budgets.search, "max subset tests for --exhaustive-min");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant endomorphisms of finite G-sets", "gequiv"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* analyze = app.add_subcommand("analyze", "orbit/stabilizer classification");
  add_common(analyze, cfg, false);
  auto* rank = app.add_subcommand("rank", "relative rank of End modulo Aut");
  add_common(rank, cfg, false);
  auto* gens = app.add_subcommand("gens", "generating set modulo Aut");
  add_common(gens, cfg, false);
  gens->add_option("--set", cfg.set, "V (minimal) or W (all collapsings)")->check(CLI::IsMember({"V", "W"}));
  auto* verify = app.add_subcommand("verify", "brute-force cross-validation");
  add_common(verify, cfg, true);
  verify->add_flag("--exhaustive-min", cfg.exhaustive_min, "also search for a minimal generating set");
  auto* shift = app.add_subcommand("shift", "write the shift action on A^G as JSON");
  shift->add_option("--group", cfg.group_spec)->required();
  shift->add_option("--alphabet", cfg.alphabet)->required();
  shift->add_option("--out", cfg.out_path);
  auto* map = app.add_subcommand("map", "operations on equivariant maps");
  map->require_subcommand(1);
  auto* check = map->add_subcommand("check", "equivariance and collapsing type");
  auto* comp = map->add_subcommand("compose", "first --map after second --map");
  auto* kern = map->add_subcommand("kernel", "kernel classes");
  for (auto* sub : {check, comp, kern}) {
    add_common(sub, cfg, false);
    sub->add_option("--map", cfg.maps, "JSON array or file:path")->required()->allow_extra_args(false);
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(cfg, out);
    if (rank->parsed()) return cmd_rank(cfg, out);
    if (gens->parsed()) return cmd_gens(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (shift->parsed()) return cmd_shift(cfg, out);
    if (check->parsed()) return cmd_map_check(cfg, out);
    if (comp->parsed()) return cmd_map_compose(cfg, out);
    if (kern->parsed()) return cmd_map_kernel(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == Errc::ParseError) return kParseError;
    if (e.is_budget()) {
      // Formulas still apply when enumeration is refused.
      try {
        const RankReport r = relative_rank(load_action(cfg));
        out << io::rank_report_to_json(r).dump(2) << "\n";
      } catch (const Error&) {
      }
      return kBudgetExceeded;
    }
    return kValidationError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationError;
  }
  return kParseError;
}

}  // namespace gequiv::cli
