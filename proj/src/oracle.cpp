#include "gequiv/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <sstream>

#include "gequiv/rank.hpp"

namespace gequiv {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t binomial_saturating(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // C(n, j) = C(n, j-1) * (n-j+1) / j stays integral at every step.
  boost::multiprecision::cpp_int c = 1;
  for (std::uint64_t j = 1; j <= k; ++j) c = c * (n - j + 1) / j;
  if (c > kSaturated) return kSaturated;
  return static_cast<std::uint64_t>(c);
}

// Orbits found by direct sweeps of the action table, by least point.
std::vector<std::vector<Point>> raw_orbits(const GAction& a) {
  const int m = a.point_count();
  std::vector<char> seen(m, 0);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < m; ++x) {
    if (seen[x]) continue;
    std::vector<Point> o;
    for (Elem g = 0; g < a.group().order(); ++g) {
      Point y = a.act(g, x);
      if (!seen[y]) {
        seen[y] = 1;
        o.push_back(y);
      }
    }
    std::sort(o.begin(), o.end());
    out.push_back(std::move(o));
  }
  return out;
}

// For the orbit of x: every y for which g.x -> g.y is a well-defined map.
std::vector<Point> admissible_targets(const GAction& a, Point x) {
  const int m = a.point_count();
  std::vector<Point> assigned(m, -1);
  std::vector<Point> out;
  for (Point y = 0; y < m; ++y) {
    std::fill(assigned.begin(), assigned.end(), -1);
    bool ok = true;
    for (Elem g = 0; g < a.group().order() && ok; ++g) {
      Point src = a.act(g, x), dst = a.act(g, y);
      if (assigned[src] < 0)
        assigned[src] = dst;
      else
        ok = assigned[src] == dst;
    }
    if (ok) out.push_back(y);
  }
  return out;
}

struct EndStructure {
  std::vector<Point> reps;
  std::vector<std::vector<Point>> targets;
  std::uint64_t count = 1;  // saturating
};

EndStructure end_structure(const GAction& a) {
  EndStructure s;
  for (const auto& o : raw_orbits(a)) {
    s.reps.push_back(o.front());
    s.targets.push_back(admissible_targets(a, o.front()));
    s.count = sat_mul(s.count, s.targets.back().size());
  }
  return s;
}

void require_within(std::uint64_t count, const OracleBudget& budget, const char* what) {
  if (count > budget.enumeration) {
    std::ostringstream os;
    os << what << " needs " << (count == kSaturated ? std::string("more than 2^64") : std::to_string(count))
       << " maps, budget is " << budget.enumeration;
    throw Error(Errc::BudgetExceeded, os.str());
  }
}

bool is_bijection(const Image& f) {
  std::vector<char> hit(f.size(), 0);
  for (Point y : f) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

bool MapSet::insert(const Image& f) {
  auto [it, fresh] = index_.emplace(f, members_.size());
  if (fresh) members_.push_back(f);
  return fresh;
}

bool MapSet::same_members(const MapSet& other) const {
  if (size() != other.size()) return false;
  return std::all_of(members_.begin(), members_.end(), [&](const Image& f) { return other.contains(f); });
}

MapSet enumerate_end(const GAction& a, const OracleBudget& budget) {
  const EndStructure s = end_structure(a);
  require_within(s.count, budget, "End enumeration");
  const std::size_t orbits = s.reps.size();
  std::vector<std::size_t> digit(orbits, 0);
  MapSet out;
  Image img(a.point_count());
  for (std::uint64_t n = 0; n < s.count; ++n) {
    for (std::size_t j = 0; j < orbits; ++j) {
      const Point x = s.reps[j], y = s.targets[j][digit[j]];
      for (Elem g = 0; g < a.group().order(); ++g) img[a.act(g, x)] = a.act(g, y);
    }
    out.insert(img);
    for (std::size_t j = 0; j < orbits; ++j) {  // mixed-radix increment
      if (++digit[j] < s.targets[j].size()) break;
      digit[j] = 0;
    }
  }
  out.closed_under_composition = true;
  return out;
}

MapSet enumerate_aut(const GAction& a, const OracleBudget& budget) {
  const MapSet end = enumerate_end(a, budget);
  MapSet out;
  for (const auto& f : end.members())
    if (is_bijection(f)) out.insert(f);
  out.closed_under_composition = true;
  return out;
}

std::vector<GMap> aut_generators(const GAction& a, const Classification& c) {
  const int m = a.point_count();
  MapSet seen;
  seen.insert(GMap::identity(m).image());
  std::vector<GMap> gens;
  auto add = [&](GMap f) {
    if (seen.insert(f.image())) gens.push_back(std::move(f));
  };
  for (const auto& cls : c.classes) {
    // One point per orbit with stabilizer exactly H_i.
    std::vector<Point> anchors;
    for (const auto& o : cls.orbits)
      for (Point z : o)
        if (c.stab(z) == cls.rep) {
          anchors.push_back(z);
          break;
        }
    for (Point z : anchors)
      for (Elem k : cls.normalizer.carrier()) add(translation(a, z, k));
    for (std::size_t j = 1; j < anchors.size(); ++j) add(orbit_swap(a, anchors[0], anchors[j]));
  }
  return gens;
}

MapSet monoid_closure(const GAction& a, std::span<const GMap> seeds, const OracleBudget& budget) {
  for (const auto& s : seeds)
    if (!is_equivariant(a, s.image())) throw Error(Errc::NotEquivariant, "closure seed is not equivariant");
  MapSet set;
  set.insert(GMap::identity(a.point_count()).image());
  for (const auto& s : seeds) set.insert(s.image());
  const int m = a.point_count();
  Image left(m), right(m);
  for (std::size_t head = 0; head < set.size(); ++head) {
    const Image f = set.members()[head];
    for (const auto& s : seeds) {
      const Image& si = s.image();
      for (int x = 0; x < m; ++x) {
        left[x] = si[f[x]];
        right[x] = f[si[x]];
      }
      set.insert(left);
      set.insert(right);
      if (set.size() > budget.enumeration)
        throw Error(Errc::BudgetExceeded, "closure grew past the enumeration budget");
    }
  }
  set.closed_under_composition = true;
  return set;
}

namespace {

bool generates_with(const GAction& a, std::span<const GMap> w, const std::vector<GMap>& aut_gens,
                    std::uint64_t end_count, const OracleBudget& budget) {
  std::vector<GMap> seeds(aut_gens);
  seeds.insert(seeds.end(), w.begin(), w.end());
  return monoid_closure(a, seeds, budget).size() == end_count;
}

}  // namespace

bool generates_modulo_aut(const GAction& a, std::span<const GMap> w, const OracleBudget& budget) {
  const EndStructure s = end_structure(a);
  require_within(s.count, budget, "closure");
  return generates_with(a, w, aut_generators(a, classify(a)), s.count, budget);
}

std::size_t min_generating_size(const GAction& a, std::size_t cap, const OracleBudget& budget) {
  const EndStructure s = end_structure(a);
  require_within(s.count, budget, "End enumeration");
  const std::uint64_t tests = binomial_saturating(s.count, cap);
  if (tests > budget.search) {
    std::ostringstream os;
    os << "C(" << s.count << ", " << cap << ") subset tests exceed the search budget of " << budget.search;
    throw Error(Errc::SearchBudgetExceeded, os.str());
  }
  const auto gens = aut_generators(a, classify(a));
  const MapSet end = enumerate_end(a, budget);
  std::vector<GMap> candidates;
  for (const auto& f : end.members())
    if (!is_bijection(f)) candidates.emplace_back(f);

  const std::size_t total = candidates.size();
  for (std::size_t k = 0; k <= cap; ++k) {
    if (k > total) break;
    std::vector<std::size_t> pick(k);
    for (std::size_t j = 0; j < k; ++j) pick[j] = j;
    std::vector<GMap> subset(k);
    while (true) {
      for (std::size_t j = 0; j < k; ++j) subset[j] = candidates[pick[j]];
      if (generates_with(a, subset, gens, s.count, budget)) return k;
      // next k-combination in lexicographic order
      std::size_t j = k;
      while (j > 0 && pick[j - 1] == total - k + (j - 1)) --j;
      if (j == 0) break;
      ++pick[j - 1];
      for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
    }
  }
  return cap + 1;
}

std::vector<CollapsingType> collapsing_types(const GAction& a, const Classification& c) {
  std::vector<CollapsingType> types;
  for (std::size_t i = 0; i < c.r(); ++i) {
    const auto& cls = c.classes[i];
    // Stabilizers K >= H_i, grouped into N_i-classes.
    std::vector<SubgroupClass> found;
    for (const auto& k : c.stabs) {
      if (!is_subgroup_leq(cls.rep, k)) continue;
      SubgroupClass nk = n_conjugacy_class(a.group(), k, cls.normalizer);
      if (nk.canonical() == cls.rep && cls.alpha == 1) continue;
      if (std::find(found.begin(), found.end(), nk) == found.end()) found.push_back(std::move(nk));
    }
    std::sort(found.begin(), found.end(),
              [](const SubgroupClass& p, const SubgroupClass& q) { return p.canonical() < q.canonical(); });
    for (auto& nk : found) types.push_back(CollapsingType{i, std::move(nk)});
  }
  return types;
}

LowerBoundVerdict verify_lower_bound(const GAction& a, std::span<const GMap> w, const OracleBudget& budget) {
  if (!generates_modulo_aut(a, w, budget)) {
    std::ostringstream os;
    os << "the given " << w.size() << " maps do not generate End modulo Aut:";
    for (const auto& f : w) {
      os << " [";
      for (std::size_t x = 0; x < f.image().size(); ++x) os << (x ? "," : "") << f.image()[x];
      os << "]";
    }
    throw Error(Errc::NotGenerating, os.str());
  }
  const Classification c = classify(a);
  std::vector<std::optional<CollapsingType>> classified;
  classified.reserve(w.size());
  for (const auto& f : w) classified.push_back(classify_elementary_collapsing(a, c, f));

  LowerBoundVerdict v;
  v.consistent = true;
  for (auto& t : collapsing_types(a, c)) {
    TypeCoverage cov{std::move(t), std::nullopt};
    for (std::size_t j = 0; j < classified.size() && !cov.witness; ++j)
      if (classified[j] && *classified[j] == cov.type) cov.witness = j;
    v.consistent = v.consistent && cov.witness.has_value();
    v.coverage.push_back(std::move(cov));
  }
  return v;
}

bool InvariantReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& r) { return r.passed; });
}

InvariantReport check_invariant_suite(const GAction& a, const OracleBudget& budget) {
  InvariantReport report;
  const int m = a.point_count();
  const Classification c = classify(a);

  Stopwatch enum_clock;
  const MapSet end = enumerate_end(a, budget);
  const MapSet aut = enumerate_aut(a, budget);
  const double enum_ms = enum_clock.ms();

  {
    CheckResult r{"order_formulas", false, {}, enum_ms};
    const BigInt aut_f = aut_order(a, c), end_f = end_order(a, c);
    r.passed = aut_f == aut.size() && end_f == end.size();
    r.counts = {{"aut_enumerated", aut.size()},
                {"aut_formula", aut_f.convert_to<std::uint64_t>()},
                {"end_enumerated", end.size()},
                {"end_formula", end_f.convert_to<std::uint64_t>()}};
    report.checks.push_back(std::move(r));
  }

  // reach[x * m + y]: some map in the set sends x to y.
  auto reach_table = [m](const MapSet& s, bool non_invertible_only) {
    std::vector<char> reach(static_cast<std::size_t>(m) * m, 0);
    for (const auto& f : s.members()) {
      if (non_invertible_only && is_bijection(f)) continue;
      for (Point x = 0; x < m; ++x) reach[static_cast<std::size_t>(x) * m + f[x]] = 1;
    }
    return reach;
  };

  {
    Stopwatch clock;
    const auto reach = reach_table(aut, false);
    std::uint64_t mismatches = 0;
    for (Point x = 0; x < m; ++x)
      for (Point y = 0; y < m; ++y)
        if ((reach[static_cast<std::size_t>(x) * m + y] != 0) != (c.stab(x) == c.stab(y))) ++mismatches;
    report.checks.push_back({"aut_reachability_iff_equal_stabilizers", mismatches == 0,
                             {{"pairs", static_cast<std::uint64_t>(m) * m}, {"mismatches", mismatches}},
                             clock.ms()});
  }

  {
    Stopwatch clock;
    const auto reach = reach_table(end, false);
    const auto reach_ni = reach_table(end, true);
    std::uint64_t mismatches = 0, distinct_pairs = 0;
    for (Point x = 0; x < m; ++x)
      for (Point y = 0; y < m; ++y) {
        const bool leq = is_subgroup_leq(c.stab(x), c.stab(y));
        const std::size_t at = static_cast<std::size_t>(x) * m + y;
        if ((reach[at] != 0) != leq) ++mismatches;
        if (!c.same_orbit(x, y)) {
          ++distinct_pairs;
          if ((reach_ni[at] != 0) != leq) ++mismatches;
        }
      }
    report.checks.push_back({"end_reachability_iff_contained_stabilizers", mismatches == 0,
                             {{"pairs", static_cast<std::uint64_t>(m) * m},
                              {"distinct_orbit_pairs", distinct_pairs},
                              {"mismatches", mismatches}},
                             clock.ms()});
  }

  {
    Stopwatch clock;
    const bool transitive = c.orbits.size() == 1;
    const bool ok = !transitive || end.same_members(aut);
    report.checks.push_back({"transitive_end_equals_aut", ok,
                             {{"transitive", transitive ? 1u : 0u}, {"end", end.size()}, {"aut", aut.size()}},
                             clock.ms()});
  }

  {
    Stopwatch clock;
    bool ok = true;
    std::uint64_t blocks = 0;
    CheckResult wreath{"block_end_wreath_order", true, {}, 0.0};
    double wreath_ms = 0.0;
    for (const auto& cls : c.classes) {
      ++blocks;
      const GAction sub = restrict_action(a, cls.block);
      const MapSet sub_aut = enumerate_aut(sub, budget);
      std::vector<char> in(m, 0);
      for (Point b : cls.block) in[b] = 1;
      std::uint64_t pointwise = 0, setwise = 0;
      for (const auto& f : aut.members()) {
        bool fixes = true, keeps = true;
        for (Point b : cls.block) {
          fixes = fixes && f[b] == b;
          keeps = keeps && in[f[b]];
        }
        pointwise += fixes;
        setwise += keeps;
      }
      ok = ok && setwise == aut.size() && sub_aut.size() * pointwise == setwise;

      Stopwatch sub_clock;
      const std::uint64_t sub_end = enumerate_end(sub, budget).size();
      BigInt expected = boost::multiprecision::pow(BigInt(cls.normalizer.size() / cls.rep.size()),
                                                   static_cast<unsigned>(cls.alpha)) *
                        boost::multiprecision::pow(BigInt(cls.alpha), static_cast<unsigned>(cls.alpha));
      wreath.passed = wreath.passed && expected == sub_end;
      wreath.counts.emplace_back("block_" + std::to_string(blocks - 1) + "_end", sub_end);
      wreath_ms += sub_clock.ms();
    }
    report.checks.push_back(
        {"block_quotient_identity", ok, {{"blocks", blocks}, {"aut", aut.size()}}, clock.ms() - wreath_ms});
    wreath.elapsed_ms = wreath_ms;
    report.checks.push_back(std::move(wreath));
  }
  return report;
}

}  // namespace gequiv
