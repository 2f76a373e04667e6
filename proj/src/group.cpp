#include "amalgam/group.hpp"

#include <algorithm>
#include <random>

#include "amalgam/words.hpp"

namespace amalgam {

namespace detail {

void require_same_parent(const GroupPtr& a, const GroupPtr& b, const char* what) {
  if (a != b) throw validation_error(std::string(what) + ": operands belong to different groups");
}

Bits close_under_products(const Group& g, std::span<const elem_t> gens) {
  Bits members(g.order());
  members.set(g.identity());
  std::vector<elem_t> queue;
  queue.reserve(g.order());
  for (elem_t s : gens) {
    if (!members.test(s)) {
      members.set(s);
      queue.push_back(s);
    }
  }
  // Right-multiplication closure; inverses come for free in a finite group.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    elem_t x = queue[i];
    for (elem_t s : gens) {
      elem_t y = g.mul(x, s);
      if (!members.test(y)) {
        members.set(y);
        queue.push_back(y);
      }
    }
  }
  return members;
}

Bits conjugate_bits(const Group& g, const Bits& members, elem_t x) {
  Bits out(members.size());
  for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i))
    out.set(g.conj(elem_t(i), x));
  return out;
}

std::vector<elem_t> nice_generators(const Group& g, const Bits& members) {
  if (!members.test(g.identity()))
    throw validation_error("subgroup members must contain the identity");
  std::vector<elem_t> candidates;
  candidates.reserve(members.count());
  for (auto i = members.find_first(); i != Bits::npos; i = members.find_next(i))
    candidates.push_back(elem_t(i));
  std::stable_sort(candidates.begin(), candidates.end(), [&](elem_t a, elem_t b) {
    return g.element_order(a) > g.element_order(b);
  });

  std::vector<elem_t> gens;
  Bits closure(g.order());
  closure.set(g.identity());
  for (elem_t c : candidates) {
    if (closure.test(c)) continue;
    gens.push_back(c);
    closure = close_under_products(g, gens);
    if (closure == members) return gens;
    if (!closure.is_subset_of(members))
      throw validation_error("member set is not closed under the group product");
  }
  if (closure != members)
    throw validation_error("member set is not closed under the group product");
  return gens;  // trivial subgroup: empty list
}

}  // namespace detail

elem_t Group::power(elem_t a, long e) const {
  long m = element_order(a);
  e %= m;
  if (e < 0) e += m;
  elem_t acc = identity_;
  for (long i = 0; i < e; ++i) acc = mul(acc, a);
  return acc;
}

std::uint32_t Group::exponent() const {
  auto lcm = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t g = std::gcd(a, b);
    return a / g * b;
  };
  std::uint64_t e = 1;
  for (elem_t a = 0; a < n_; ++a) e = lcm(e, orders_[a]);
  return std::uint32_t(e);
}

std::vector<elem_t> Group::generator_indices() const {
  std::vector<elem_t> out;
  out.reserve(gens_.size());
  for (const auto& [name, idx] : gens_) out.push_back(idx);
  return out;
}

GroupPtr Group::create(std::string name, std::uint32_t n, std::vector<elem_t> table,
                       std::vector<std::string> labels,
                       std::vector<std::pair<std::string, elem_t>> gens,
                       const Limits& limits) {
  if (n == 0) throw validation_error("group order must be positive");
  if (n > limits.max_order)
    throw budget_error("group of order " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(limits.max_order) + " (raise --max-order to allow)");
  if (table.size() != std::size_t(n) * n)
    throw validation_error("multiplication table has wrong size");
  for (elem_t v : table)
    if (v >= n) throw validation_error("multiplication table entry out of range");

  // Latin square: every row and column is a permutation.
  {
    Bits seen(n);
    for (std::uint32_t a = 0; a < n; ++a) {
      seen.reset();
      for (std::uint32_t b = 0; b < n; ++b) seen.set(table[std::size_t(a) * n + b]);
      if (seen.count() != n) throw validation_error("table row " + std::to_string(a) + " is not a permutation");
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      seen.reset();
      for (std::uint32_t a = 0; a < n; ++a) seen.set(table[std::size_t(a) * n + b]);
      if (seen.count() != n) throw validation_error("table column " + std::to_string(b) + " is not a permutation");
    }
  }

  auto at = [&](std::uint32_t a, std::uint32_t b) { return table[std::size_t(a) * n + b]; };

  // Two-sided identity.
  elem_t identity = 0;
  {
    bool found = false;
    for (std::uint32_t e = 0; e < n && !found; ++e) {
      bool ok = true;
      for (std::uint32_t a = 0; a < n && ok; ++a)
        ok = at(e, a) == a && at(a, e) == a;
      if (ok) {
        identity = elem_t(e);
        found = true;
      }
    }
    if (!found) throw validation_error("table has no two-sided identity");
  }

  std::vector<elem_t> inv(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::uint32_t b = 0; b < n; ++b) {
      if (at(a, b) == identity) {
        if (at(b, a) != identity)
          throw validation_error("element " + std::to_string(a) + " has no two-sided inverse");
        inv[a] = elem_t(b);
        found = true;
        break;
      }
    }
    if (!found) throw validation_error("element " + std::to_string(a) + " has no inverse");
  }

  // Associativity: exhaustive up to the cap, random triples above it.
  if (n <= limits.exhaustive_cap) {
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        elem_t ab = at(a, b);
        for (std::uint32_t c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            throw validation_error("associativity fails at (" + std::to_string(a) + "," +
                                   std::to_string(b) + "," + std::to_string(c) + ")");
      }
  } else {
    std::mt19937_64 rng(0x5eedc0defull);
    std::uniform_int_distribution<std::uint32_t> pick(0, n - 1);
    for (int i = 0; i < 200000; ++i) {
      std::uint32_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw validation_error("associativity fails at (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
    }
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->n_ = n;
  g->identity_ = identity;
  g->table_ = std::move(table);
  g->inv_ = std::move(inv);
  g->name_ = std::move(name);

  g->orders_.resize(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    std::uint16_t ord = 1;
    elem_t x = elem_t(a);
    while (x != identity) {
      x = g->mul(x, elem_t(a));
      ++ord;
    }
    g->orders_[a] = ord;
  }

  g->abelian_ = true;
  for (std::uint32_t a = 0; a < n && g->abelian_; ++a)
    for (std::uint32_t b = a + 1; b < n; ++b)
      if (g->mul(elem_t(a), elem_t(b)) != g->mul(elem_t(b), elem_t(a))) {
        g->abelian_ = false;
        break;
      }

  if (labels.empty()) {
    labels.resize(n);
    for (std::uint32_t a = 0; a < n; ++a)
      labels[a] = a == identity ? "1" : "g" + std::to_string(a);
  }
  if (labels.size() != n) throw validation_error("label list has wrong size");
  g->labels_ = std::move(labels);

  for (const auto& [gname, idx] : gens)
    if (idx >= n) throw validation_error("generator index out of range");
  {
    std::vector<elem_t> idxs;
    for (const auto& [gname, idx] : gens) idxs.push_back(idx);
    Bits closure = detail::close_under_products(*g, idxs);
    if (closure.count() != n)
      throw validation_error("declared generators generate only " +
                             std::to_string(closure.count()) + " of " + std::to_string(n) +
                             " elements");
  }
  g->gens_ = std::move(gens);
  return g;
}

Element multiply(const Element& a, const Element& b) {
  detail::require_same_parent(a.group, b.group, "multiply");
  return {a.group, a.group->mul(a.index, b.index)};
}

Element inverse(const Element& a) { return {a.group, a.group->inv(a.index)}; }

Element conjugate(const Element& h, const Element& g) {
  detail::require_same_parent(h.group, g.group, "conjugate");
  return {h.group, h.group->conj(h.index, g.index)};
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const elem_t> gens) {
  for (elem_t s : gens)
    if (s >= parent->order()) throw validation_error("generator index out of range");
  Bits members = detail::close_under_products(*parent, gens);
  std::vector<elem_t> kept;
  for (elem_t s : gens)
    if (s != parent->identity() && std::find(kept.begin(), kept.end(), s) == kept.end())
      kept.push_back(s);
  return Subgroup(std::move(parent), std::move(members), std::move(kept));
}

Subgroup Subgroup::generated(GroupPtr parent, std::initializer_list<elem_t> gens) {
  return generated(std::move(parent), std::span<const elem_t>(gens.begin(), gens.size()));
}

Subgroup Subgroup::from_members(GroupPtr parent, Bits members) {
  if (members.size() != parent->order()) throw validation_error("member bitset has wrong size");
  auto gens = detail::nice_generators(*parent, members);  // validates closure
  if (parent->order() % std::max<std::size_t>(members.count(), 1) != 0)
    throw internal_error("subgroup order does not divide the group order");
  return Subgroup(std::move(parent), std::move(members), std::move(gens));
}

Subgroup Subgroup::with_generators(GroupPtr parent, Bits members, std::vector<elem_t> gens) {
  if (members.size() != parent->order()) throw validation_error("member bitset has wrong size");
  if (detail::close_under_products(*parent, gens) != members)
    throw internal_error("generators do not generate the claimed member set");
  return Subgroup(std::move(parent), std::move(members), std::move(gens));
}

Subgroup Subgroup::trivial(GroupPtr parent) { return generated(std::move(parent), {}); }

Subgroup Subgroup::full(GroupPtr parent) {
  auto gens = parent->generator_indices();
  return generated(std::move(parent), std::span<const elem_t>(gens.data(), gens.size()));
}

bool Subgroup::contains(const Subgroup& other) const {
  detail::require_same_parent(parent_, other.parent_, "contains");
  return other.members_.is_subset_of(members_);
}

bool Subgroup::is_trivial() const { return members_.count() == 1; }

std::vector<elem_t> Subgroup::elements() const {
  std::vector<elem_t> out;
  out.reserve(order());
  for (auto i = members_.find_first(); i != Bits::npos; i = members_.find_next(i))
    out.push_back(elem_t(i));
  return out;
}

std::vector<std::string> Subgroup::generator_words() const {
  std::vector<std::string> out;
  out.reserve(gens_.size());
  for (elem_t s : gens_) out.push_back(parent_->label(s));
  return out;
}

std::string Subgroup::word() const {
  if (gens_.empty()) return "⟨1⟩";
  std::string out = "⟨";
  bool first = true;
  for (elem_t s : gens_) {
    if (!first) out += ", ";
    out += parent_->label(s);
    first = false;
  }
  out += "⟩";
  return out;
}

Subgroup center(GroupPtr g) {
  // Commuting with a generating set commutes with everything.
  const auto gens = g->generator_indices();
  Bits z(g->order());
  for (std::uint32_t a = 0; a < g->order(); ++a) {
    bool central = true;
    for (elem_t s : gens)
      if (g->mul(elem_t(a), s) != g->mul(s, elem_t(a))) {
        central = false;
        break;
      }
    if (central) z.set(a);
  }
  return Subgroup::from_members(std::move(g), std::move(z));
}

Subgroup centralizer(GroupPtr g, const Subgroup& h) {
  detail::require_same_parent(g, h.parent(), "centralizer");
  Bits c(g->order());
  for (std::uint32_t a = 0; a < g->order(); ++a) {
    bool commutes = true;
    for (elem_t s : h.gens())
      if (g->mul(elem_t(a), s) != g->mul(s, elem_t(a))) {
        commutes = false;
        break;
      }
    if (commutes) c.set(a);
  }
  return Subgroup::from_members(std::move(g), std::move(c));
}

Subgroup normalizer(GroupPtr g, const Subgroup& h) {
  detail::require_same_parent(g, h.parent(), "normalizer");
  const auto members = h.elements();
  Bits n(g->order());
  for (std::uint32_t a = 0; a < g->order(); ++a) {
    bool fixes = true;
    for (elem_t m : members)
      if (!h.contains(g->conj(m, elem_t(a)))) {
        fixes = false;
        break;
      }
    if (fixes) n.set(a);
  }
  return Subgroup::from_members(std::move(g), std::move(n));
}

Subgroup conjugate_subgroup(const Subgroup& h, elem_t g) {
  const Group& grp = *h.parent();
  if (g >= grp.order()) throw validation_error("conjugating element out of range");
  Bits out = detail::conjugate_bits(grp, h.members(), g);
  std::vector<elem_t> gens;
  gens.reserve(h.gens().size());
  for (elem_t s : h.gens()) gens.push_back(grp.conj(s, g));
  return Subgroup::with_generators(h.parent(), std::move(out), std::move(gens));
}

ExtractedGroup subgroup_as_group(const Subgroup& h, std::string name) {
  const Group& parent = *h.parent();
  std::vector<elem_t> to_parent = h.elements();
  std::vector<std::uint32_t> to_local(parent.order(), 0);
  for (std::size_t i = 0; i < to_parent.size(); ++i) to_local[to_parent[i]] = std::uint32_t(i);

  const std::uint32_t m = std::uint32_t(to_parent.size());
  std::vector<elem_t> table(std::size_t(m) * m);
  std::vector<std::string> labels(m);
  for (std::uint32_t a = 0; a < m; ++a) {
    labels[a] = parent.label(to_parent[a]);
    for (std::uint32_t b = 0; b < m; ++b)
      table[std::size_t(a) * m + b] = elem_t(to_local[parent.mul(to_parent[a], to_parent[b])]);
  }

  std::vector<std::pair<std::string, elem_t>> gens;
  if (h.gens().empty()) {
    // trivial subgroup
  } else {
    for (elem_t s : h.gens()) gens.emplace_back(parent.label(s), elem_t(to_local[s]));
  }
  if (name.empty()) name = parent.name() + "|" + h.word();
  return {Group::create(std::move(name), m, std::move(table), std::move(labels),
                        std::move(gens)),
          std::move(to_parent)};
}

}  // namespace amalgam
