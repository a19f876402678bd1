#include "gequiv/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <string>

#include "subgroup_access.hpp"

namespace gequiv {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotSquare: return "NotSquare";
    case Errc::EntryOutOfRange: return "EntryOutOfRange";
    case Errc::NotLatinSquare: return "NotLatinSquare";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::MissingInverse: return "MissingInverse";
    case Errc::ZeroOrder: return "ZeroOrder";
    case Errc::TooLarge: return "TooLarge";
    case Errc::ElementOutOfRange: return "ElementOutOfRange";
    case Errc::ParentMismatch: return "ParentMismatch";
    case Errc::NotASubgroup: return "NotASubgroup";
    case Errc::IdentityNotFixing: return "IdentityNotFixing";
    case Errc::NotCompatible: return "NotCompatible";
    case Errc::PointOutOfRange: return "PointOutOfRange";
    case Errc::GroupMismatch: return "GroupMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::BindingMismatch: return "BindingMismatch";
    case Errc::SameOrbit: return "SameOrbit";
    case Errc::StabilizerNotContained: return "StabilizerNotContained";
    case Errc::StabilizerMismatch: return "StabilizerMismatch";
    case Errc::NotInNormalizer: return "NotInNormalizer";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotEquivariantOnSubset: return "NotEquivariantOnSubset";
    case Errc::EscapesSubset: return "EscapesSubset";
    case Errc::NotEquivariant: return "NotEquivariant";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

template <typename... Args>
std::string cat(const Args&... args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<Elem>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(Errc::ZeroOrder, "empty multiplication table");
  for (int r = 0; r < n; ++r) {
    if (static_cast<int>(table[r].size()) != n)
      throw Error(Errc::NotSquare, cat("row ", r, " has ", table[r].size(), " entries, expected ", n));
    for (int c = 0; c < n; ++c)
      if (table[r][c] < 0 || table[r][c] >= n)
        throw Error(Errc::EntryOutOfRange, cat("entry (", r, ",", c, ") = ", table[r][c]));
  }

  FiniteGroup g;
  g.order_ = n;
  g.mul_.resize(static_cast<std::size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    std::copy(table[r].begin(), table[r].end(), g.mul_.begin() + static_cast<std::ptrdiff_t>(r) * n);

  std::vector<int> seen(n);
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int c = 0; c < n; ++c) {
      Elem v = g.mul(r, c);
      if (seen[v] >= 0)
        throw Error(Errc::NotLatinSquare, cat("row ", r, " repeats ", v, " at columns ", seen[v], " and ", c));
      seen[v] = c;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int r = 0; r < n; ++r) {
      Elem v = g.mul(r, c);
      if (seen[v] >= 0)
        throw Error(Errc::NotLatinSquare, cat("column ", c, " repeats ", v, " at rows ", seen[v], " and ", r));
      seen[v] = r;
    }
  }

  g.identity_ = -1;
  for (Elem e = 0; e < n && g.identity_ < 0; ++e) {
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x) ok = g.mul(e, x) == x && g.mul(x, e) == x;
    if (ok) g.identity_ = e;
  }
  if (g.identity_ < 0) throw Error(Errc::NoIdentity, "no element is a two-sided identity");

  g.inv_.assign(n, -1);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (g.mul(a, b) == g.identity_) {
        if (g.mul(b, a) != g.identity_)
          throw Error(Errc::MissingInverse, cat("element ", a, " has right inverse ", b, " which is not a left inverse"));
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] < 0) throw Error(Errc::MissingInverse, cat("element ", a, " has no inverse"));
  }

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c)))
          throw Error(Errc::NotAssociative, cat("(", a, ",", b, ",", c, ")"));
    }
  return g;
}

std::vector<std::vector<Elem>> FiniteGroup::table() const {
  std::vector<std::vector<Elem>> t(order_);
  for (int r = 0; r < order_; ++r)
    t[r].assign(mul_.begin() + static_cast<std::ptrdiff_t>(r) * order_,
                mul_.begin() + static_cast<std::ptrdiff_t>(r + 1) * order_);
  return t;
}

FiniteGroup build_group(const std::vector<std::vector<Elem>>& mul_table) {
  return FiniteGroup::from_table(mul_table);
}

FiniteGroup cyclic_group(int n) {
  if (n < 1) throw Error(Errc::ZeroOrder, cat("cyclic group of order ", n));
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup::from_table(t);
}

namespace {

std::vector<std::vector<int>> permutations_lex(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

FiniteGroup symmetric_group(int k) {
  if (k < 1) throw Error(Errc::ZeroOrder, cat("symmetric group on ", k, " symbols"));
  if (k > 5) throw Error(Errc::TooLarge, cat("symmetric group on ", k, " symbols exceeds the limit of 5"));
  const auto perms = permutations_lex(k);
  const int n = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& p) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<Elem>> t(n, std::vector<Elem>(n));
  std::vector<int> pq(k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i) pq[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(pq);
    }
  return FiniteGroup::from_table(t);
}

std::vector<int> symmetric_group_word(int k, Elem id) {
  const auto perms = permutations_lex(k);
  if (id < 0 || id >= static_cast<Elem>(perms.size()))
    throw Error(Errc::ElementOutOfRange, cat("element ", id, " of Sym(", k, ")"));
  return perms[id];
}

Subgroup Subgroup::from_elements(const FiniteGroup& g, std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  for (Elem e : elems)
    if (e < 0 || e >= g.order()) throw Error(Errc::ElementOutOfRange, cat("element ", e));
  Subgroup s = detail::SubgroupAccess::make(g.order(), std::move(elems));
  if (!s.contains(g.identity())) throw Error(Errc::NotASubgroup, "identity missing");
  for (Elem a : s.carrier()) {
    if (!s.contains(g.inv(a))) throw Error(Errc::NotASubgroup, cat("inverse of ", a, " missing"));
    for (Elem b : s.carrier())
      if (!s.contains(g.mul(a, b))) throw Error(Errc::NotASubgroup, cat("product ", a, "*", b, " missing"));
  }
  if (g.order() % s.size() != 0)
    throw Error(Errc::NotASubgroup, cat("size ", s.size(), " does not divide ", g.order()));
  return s;
}

bool SubgroupClass::contains(const Subgroup& h) const {
  return std::binary_search(members.begin(), members.end(), h);
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return detail::SubgroupAccess::make(g.order(), {g.identity()});
}

Subgroup whole_group(const FiniteGroup& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return detail::SubgroupAccess::make(g.order(), std::move(all));
}

Subgroup subgroup_closure(const FiniteGroup& g, std::span<const Elem> gens) {
  for (Elem e : gens)
    if (e < 0 || e >= g.order()) throw Error(Errc::ElementOutOfRange, cat("generator ", e));
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> elems{g.identity()};
  in[g.identity()] = 1;
  std::deque<Elem> queue{g.identity()};
  // In a finite group, closing under right multiplication by generators
  // already yields inverses.
  while (!queue.empty()) {
    Elem a = queue.front();
    queue.pop_front();
    for (Elem s : gens) {
      Elem b = g.mul(a, s);
      if (!in[b]) {
        in[b] = 1;
        elems.push_back(b);
        queue.push_back(b);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  return detail::SubgroupAccess::make(g.order(), std::move(elems));
}

Subgroup conjugate_subgroup(const FiniteGroup& g, const Subgroup& h, Elem by) {
  if (by < 0 || by >= g.order()) throw Error(Errc::ElementOutOfRange, cat("conjugator ", by));
  if (h.group_order() != g.order()) throw Error(Errc::ParentMismatch, "subgroup belongs to a different group");
  std::vector<Elem> c;
  c.reserve(h.carrier().size());
  for (Elem x : h.carrier()) c.push_back(g.conj(by, x));
  std::sort(c.begin(), c.end());
  return detail::SubgroupAccess::make(g.order(), std::move(c));
}

Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  if (h.group_order() != g.order()) throw Error(Errc::ParentMismatch, "subgroup belongs to a different group");
  std::vector<Elem> n;
  for (Elem x = 0; x < g.order(); ++x) {
    bool keeps = true;
    for (Elem e : h.carrier())
      if (!h.contains(g.conj(x, e))) {
        keeps = false;
        break;
      }
    if (keeps) n.push_back(x);
  }
  return detail::SubgroupAccess::make(g.order(), std::move(n));
}

SubgroupClass n_conjugacy_class(const FiniteGroup& g, const Subgroup& h, const Subgroup& n) {
  if (h.group_order() != g.order() || n.group_order() != g.order())
    throw Error(Errc::ParentMismatch, "subgroup belongs to a different group");
  std::vector<std::pair<Subgroup, Elem>> found;
  for (Elem x : n.carrier()) {  // ascending, so the first hit is the least witness
    Subgroup c = conjugate_subgroup(g, h, x);
    bool known = std::any_of(found.begin(), found.end(), [&](const auto& p) { return p.first == c; });
    if (!known) found.emplace_back(std::move(c), x);
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SubgroupClass cls;
  for (auto& [s, w] : found) {
    cls.members.push_back(std::move(s));
    cls.conjugator_witnesses.push_back(w);
  }
  return cls;
}

bool is_subgroup_leq(const Subgroup& h, const Subgroup& k) {
  if (h.group_order() != k.group_order())
    throw Error(Errc::ParentMismatch, cat("parents of order ", h.group_order(), " and ", k.group_order()));
  if (h.size() > k.size()) return false;
  return std::all_of(h.carrier().begin(), h.carrier().end(), [&](Elem e) { return k.contains(e); });
}

}  // namespace gequiv
