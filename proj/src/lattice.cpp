#include "amalgam/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace amalgam {

namespace {

// Closure of `gens`, then closure under conjugation by `conjugators`.
Subgroup normal_closure_of_set(const GroupPtr& parent, std::vector<elem_t> gens,
                               const std::vector<elem_t>& conjugators) {
  const Group& g = *parent;
  Bits members = detail::close_under_products(g, gens);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (elem_t c : conjugators) {
        elem_t y = g.conj(gens[i], c);
        if (!members.test(y)) {
          gens.push_back(y);
          members = detail::close_under_products(g, gens);
          grew = true;
        }
      }
  }
  return Subgroup::with_generators(parent, std::move(members), std::move(gens));
}

}  // namespace

Subgroup generated_subgroup(GroupPtr g, std::span<const elem_t> s) {
  return Subgroup::generated(std::move(g), s);
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  detail::require_same_parent(a.parent(), b.parent(), "commutator_subgroup");
  const GroupPtr& parent = a.parent();
  const Group& g = *parent;

  std::vector<elem_t> seeds;
  for (elem_t x : a.gens())
    for (elem_t y : b.gens()) {
      elem_t c = g.commutator(x, y);
      if (c != g.identity()) seeds.push_back(c);
    }
  std::vector<elem_t> conjugators = a.gens();
  conjugators.insert(conjugators.end(), b.gens().begin(), b.gens().end());
  return normal_closure_of_set(parent, std::move(seeds), conjugators);
}

Subgroup commutator_subgroup_all_pairs(const Subgroup& a, const Subgroup& b) {
  detail::require_same_parent(a.parent(), b.parent(), "commutator_subgroup");
  const Group& g = *a.parent();
  Bits comm(g.order());
  for (auto x = a.members().find_first(); x != Bits::npos; x = a.members().find_next(x))
    for (auto y = b.members().find_first(); y != Bits::npos; y = b.members().find_next(y))
      comm.set(g.commutator(elem_t(x), elem_t(y)));
  std::vector<elem_t> gens;
  for (auto i = comm.find_first(); i != Bits::npos; i = comm.find_next(i))
    if (elem_t(i) != g.identity()) gens.push_back(elem_t(i));
  return Subgroup::generated(a.parent(), std::span<const elem_t>(gens.data(), gens.size()));
}

Subgroup iterated_commutator(const Subgroup& u, const Subgroup& h, unsigned r) {
  if (r < 1) throw validation_error("iterated_commutator needs r >= 1");
  Subgroup acc = commutator_subgroup(u, h);
  for (unsigned i = 1; i < r; ++i) {
    if (acc.is_trivial()) return acc;  // [1, H] = 1
    acc = commutator_subgroup(acc, h);
  }
  return acc;
}

Subgroup join(const Subgroup& a, const Subgroup& b) {
  detail::require_same_parent(a.parent(), b.parent(), "join");
  std::vector<elem_t> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Subgroup::generated(a.parent(), std::span<const elem_t>(gens.data(), gens.size()));
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  detail::require_same_parent(a.parent(), b.parent(), "intersect");
  return Subgroup::from_members(a.parent(), a.members() & b.members());
}

Subgroup normal_closure(const Subgroup& h, const Subgroup& k) {
  detail::require_same_parent(h.parent(), k.parent(), "normal_closure");
  return join(h, commutator_subgroup(h, k));
}

Bits product_set(const Subgroup& a, const Subgroup& b) {
  detail::require_same_parent(a.parent(), b.parent(), "product_set");
  const Group& g = *a.parent();
  Bits out(g.order());
  for (auto x = a.members().find_first(); x != Bits::npos; x = a.members().find_next(x))
    for (auto y = b.members().find_first(); y != Bits::npos; y = b.members().find_next(y))
      out.set(g.mul(elem_t(x), elem_t(y)));
  return out;
}

DerivedSeries derived_series(GroupPtr g) { return derived_series(Subgroup::full(std::move(g))); }

DerivedSeries derived_series(const Subgroup& h) {
  DerivedSeries out;
  out.terms.push_back(h);
  while (true) {
    const Subgroup& cur = out.terms.back();
    Subgroup next = commutator_subgroup(cur, cur);
    if (next == cur) break;
    out.terms.push_back(std::move(next));
  }
  out.stabilized = true;
  out.solvable = out.terms.back().is_trivial();
  return out;
}

std::vector<Subgroup> all_subgroups(GroupPtr g, const Limits& limits) {
  if (g->order() > limits.max_enum)
    throw budget_error("subgroup enumeration refused: order " + std::to_string(g->order()) +
                       " exceeds the cap of " + std::to_string(limits.max_enum) +
                       " (raise --max-enum to allow)");

  std::map<Bits, std::vector<elem_t>> known;  // members -> generating list
  known.emplace(detail::close_under_products(*g, {}), std::vector<elem_t>{});
  for (std::uint32_t a = 0; a < g->order(); ++a) {
    std::vector<elem_t> gen{elem_t(a)};
    Bits members = detail::close_under_products(*g, gen);
    if (elem_t(a) == g->identity()) gen.clear();
    known.emplace(std::move(members), std::move(gen));
  }

  // Pairwise-join fixed point; every subgroup is a join of cyclic ones.
  std::vector<std::pair<Bits, std::vector<elem_t>>> frontier(known.begin(), known.end());
  while (!frontier.empty()) {
    std::vector<std::pair<Bits, std::vector<elem_t>>> fresh;
    for (const auto& [fm, fg] : frontier)
      for (const auto& [km, kg] : known) {
        if (fm.is_subset_of(km) || km.is_subset_of(fm)) continue;
        std::vector<elem_t> gens = fg;
        gens.insert(gens.end(), kg.begin(), kg.end());
        Bits joined = detail::close_under_products(*g, gens);
        if (!known.count(joined) &&
            std::none_of(fresh.begin(), fresh.end(),
                         [&](const auto& p) { return p.first == joined; }))
          fresh.emplace_back(std::move(joined), std::move(gens));
      }
    for (const auto& [m, gens] : fresh) known.emplace(m, gens);
    frontier = std::move(fresh);
  }

  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const auto& [members, gens] : known) {
    Subgroup h = members.count() == g->order()
                     ? Subgroup::full(g)
                     : Subgroup::from_members(g, members);  // canonical display gens
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return out;
}

}  // namespace amalgam
