#include "amalgam/products.hpp"

#include <algorithm>
#include <array>

#include "amalgam/isoid.hpp"
#include "amalgam/lattice.hpp"
#include "amalgam/words.hpp"

namespace amalgam {

namespace {

bool word_like(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '^' || c == '-';
  });
}

// Factor generator names must stay distinct inside the product; colliding
// names get a side suffix.
std::pair<std::vector<std::string>, std::vector<std::string>> resolve_generator_names(
    const std::vector<std::string>& left, const std::vector<std::string>& right) {
  static const std::array<std::pair<const char*, const char*>, 4> suffixes{
      {{"1", "2"}, {"_1", "_2"}, {"~1", "~2"}, {"~~1", "~~2"}}};
  auto collides = [&](const std::string& n) {
    return std::find(right.begin(), right.end(), n) != right.end() &&
           std::find(left.begin(), left.end(), n) != left.end();
  };
  bool any = std::any_of(left.begin(), left.end(), collides);
  if (!any) return {left, right};
  for (const auto& [s1, s2] : suffixes) {
    std::vector<std::string> l = left, r = right;
    for (auto& n : l)
      if (collides(n)) n += s1;
    for (auto& n : r)
      if (collides(n)) n += s2;
    std::vector<std::string> all = l;
    all.insert(all.end(), r.begin(), r.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) == all.end()) return {l, r};
  }
  throw internal_error("could not disambiguate generator names");
}

std::vector<std::string> factor_names(const Group& g) {
  std::vector<std::string> out;
  for (const auto& [n, i] : g.generators()) out.push_back(n);
  return out;
}

// Re-renders a factor label under renamed generators; labels that are not
// plain words pass through untouched.
std::string relabel(const std::string& label, const std::vector<std::string>& old_names,
                    const std::vector<std::string>& new_names) {
  if (old_names == new_names) return label;
  std::vector<std::pair<std::string, long>> runs;
  if (!tokenize_word(old_names, label, runs)) return label;
  std::string out;
  for (const auto& [name, e] : runs) {
    auto it = std::find(old_names.begin(), old_names.end(), name);
    out += power_word(new_names[it - old_names.begin()], e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

DirectProduct direct_product(GroupPtr v1, GroupPtr v2, const Limits& limits) {
  const std::uint64_t total = std::uint64_t(v1->order()) * v2->order();
  if (total > limits.max_order)
    throw budget_error("direct product of order " + std::to_string(total) +
                       " exceeds the cap of " + std::to_string(limits.max_order));
  const std::uint32_t n1 = v1->order(), n2 = v2->order();
  const std::uint32_t n = n1 * n2;
  auto idx = [n2](std::uint32_t a, std::uint32_t b) { return elem_t(a * n2 + b); };

  std::vector<elem_t> table(std::size_t(n) * n);
  std::vector<std::string> labels(n);
  for (std::uint32_t a = 0; a < n1; ++a)
    for (std::uint32_t b = 0; b < n2; ++b) {
      labels[idx(a, b)] = "(" + v1->label(elem_t(a)) + "," + v2->label(elem_t(b)) + ")";
      for (std::uint32_t c = 0; c < n1; ++c)
        for (std::uint32_t d = 0; d < n2; ++d)
          table[std::size_t(idx(a, b)) * n + idx(c, d)] =
              idx(v1->mul(elem_t(a), elem_t(c)), v2->mul(elem_t(b), elem_t(d)));
    }

  auto [lnames, rnames] = resolve_generator_names(factor_names(*v1), factor_names(*v2));
  std::vector<std::pair<std::string, elem_t>> gens;  // V1's generators first
  for (std::size_t i = 0; i < v1->generators().size(); ++i)
    gens.emplace_back(lnames[i], idx(v1->generators()[i].second, v2->identity()));
  for (std::size_t i = 0; i < v2->generators().size(); ++i)
    gens.emplace_back(rnames[i], idx(v1->identity(), v2->generators()[i].second));

  GroupPtr d = Group::create(v1->name() + "×" + v2->name(), n, std::move(table),
                             std::move(labels), std::move(gens), limits);

  std::vector<elem_t> m1(n), m2(n);
  for (std::uint32_t a = 0; a < n1; ++a)
    for (std::uint32_t b = 0; b < n2; ++b) {
      m1[idx(a, b)] = elem_t(a);
      m2[idx(a, b)] = elem_t(b);
    }
  Homomorphism pi1 = Homomorphism::from_map(d, v1, std::move(m1), limits);
  Homomorphism pi2 = Homomorphism::from_map(d, v2, std::move(m2), limits);

  Bits b1(n), b2(n);
  for (std::uint32_t a = 0; a < n1; ++a) b1.set(idx(a, v2->identity()));
  for (std::uint32_t b = 0; b < n2; ++b) b2.set(idx(v1->identity(), b));
  std::vector<elem_t> g1, g2;
  for (std::size_t i = 0; i < v1->generators().size(); ++i) g1.push_back(d->generators()[i].second);
  for (std::size_t i = 0; i < v2->generators().size(); ++i)
    g2.push_back(d->generators()[v1->generators().size() + i].second);
  Subgroup v1bar = Subgroup::with_generators(d, std::move(b1), std::move(g1));
  Subgroup v2bar = Subgroup::with_generators(d, std::move(b2), std::move(g2));
  return {std::move(d), std::move(pi1), std::move(pi2), std::move(v1bar), std::move(v2bar)};
}

std::string InternalCpCheck::describe(const Group& g) const {
  if (holds) return "internal central product";
  if (noncommuting)
    return "[" + g.label(noncommuting->first) + ", " + g.label(noncommuting->second) + "] ≠ 1";
  if (uncovered) return g.label(*uncovered) + " is not covered by U1·U2";
  return "not an internal central product";
}

InternalCpCheck is_internal_central_product(const GroupPtr& g, const Subgroup& u1,
                                            const Subgroup& u2) {
  detail::require_same_parent(g, u1.parent(), "is_internal_central_product");
  detail::require_same_parent(g, u2.parent(), "is_internal_central_product");
  InternalCpCheck out;
  // [U1,U2] = 1 iff every generator pair commutes.
  for (elem_t x : u1.gens())
    for (elem_t y : u2.gens())
      if (g->mul(x, y) != g->mul(y, x)) {
        out.noncommuting = {x, y};
        return out;
      }
  Bits covered(g->order());
  for (auto x = u1.members().find_first(); x != Bits::npos; x = u1.members().find_next(x))
    for (auto y = u2.members().find_first(); y != Bits::npos; y = u2.members().find_next(y))
      covered.set(g->mul(elem_t(x), elem_t(y)));
  if (covered.count() != g->order()) {
    Bits missing = ~covered;
    out.uncovered = elem_t(missing.find_first());
    return out;
  }
  out.holds = true;
  return out;
}

Homomorphism canonical_epimorphism(const GroupPtr& g, const Subgroup& u1, const Subgroup& u2,
                                   const Limits& limits) {
  auto chk = is_internal_central_product(g, u1, u2);
  if (!chk.holds)
    throw validation_error("canonical epimorphism needs an internal central product: " +
                           chk.describe(*g));
  auto e1 = subgroup_as_group(u1, g->name() + "|U1");
  auto e2 = subgroup_as_group(u2, g->name() + "|U2");
  auto dp = direct_product(e1.group, e2.group, limits);

  const std::uint32_t n = dp.group->order();
  std::vector<elem_t> map(n);
  for (std::uint32_t x = 0; x < n; ++x)
    map[x] = g->mul(e1.to_parent[dp.pi1(elem_t(x))], e2.to_parent[dp.pi2(elem_t(x))]);
  Homomorphism eps = Homomorphism::from_map(dp.group, g, std::move(map), limits);

  // ker ε = {(z, z^{-1}) : z ∈ U1 ∩ U2}
  Bits inter = u1.members() & u2.members();
  if (eps.kernel().order() != inter.count())
    throw internal_error("canonical epimorphism kernel has unexpected order");
  for (elem_t k : eps.kernel().elements()) {
    elem_t z = e1.to_parent[dp.pi1(k)];
    if (!inter.test(z) || e2.to_parent[dp.pi2(k)] != g->inv(z))
      throw internal_error("canonical epimorphism kernel is not {(z, z^-1)}");
  }
  if (!eps.surjective()) throw internal_error("canonical epimorphism is not surjective");
  return eps;
}

CentralProduct external_central_product(const CentralProductSpec& spec, const Limits& limits) {
  const GroupPtr& v1 = spec.v1;
  const GroupPtr& v2 = spec.v2;

  // μ images must be central.
  Subgroup z1 = center(v1);
  Subgroup z2 = center(v2);
  for (const auto& [a, b] : spec.amalgam) {
    if (a >= v1->order() || b >= v2->order())
      throw validation_error("amalgam pair element out of range");
    if (!z1.contains(a))
      throw validation_error("amalgam image " + v1->label(a) + " is not central in " +
                             v1->name());
    if (!z2.contains(b))
      throw validation_error("amalgam image " + v2->label(b) + " is not central in " +
                             v2->name());
  }

  DirectProduct dp = direct_product(v1, v2, limits);
  const Group& d = *dp.group;

  // N = <(μ1(a), μ2(a)^{-1})>, added pair by pair so a failure names its
  // generator pair. The pairing is a well-defined isomorphism between the
  // two generated central subgroups iff |N| = |A1| = |A2| at every step.
  std::vector<elem_t> ngens, a1gens, a2gens;
  Bits nbits = detail::close_under_products(d, ngens);
  for (const auto& [a, b] : spec.amalgam) {
    elem_t pair_idx = 0;
    {
      // (a, b^{-1}) = (a,1)·(1,b^{-1}); the embedded copies are the unique
      // elements of V̄i with the right projection
      elem_t ea = 0, eb = 0;
      for (elem_t x : dp.v1bar.elements())
        if (dp.pi1(x) == a) ea = x;
      for (elem_t x : dp.v2bar.elements())
        if (dp.pi2(x) == v2->inv(b)) eb = x;
      pair_idx = d.mul(ea, eb);
    }
    ngens.push_back(pair_idx);
    a1gens.push_back(a);
    a2gens.push_back(b);
    nbits = detail::close_under_products(d, ngens);
    std::size_t na = detail::close_under_products(*v1, a1gens).count();
    std::size_t nb = detail::close_under_products(*v2, a2gens).count();
    if (nbits.count() != na || nbits.count() != nb)
      throw validation_error("amalgam pair (" + v1->label(a) + ", " + v2->label(b) +
                             ") does not extend to an isomorphism between the amalgamated "
                             "central subgroups");
  }
  const std::uint32_t amalgam_order = std::uint32_t(nbits.count());
  Subgroup n_sub = Subgroup::with_generators(dp.group, nbits, ngens);

  for (elem_t x : d.generator_indices())
    if (detail::conjugate_bits(d, nbits, x) != nbits)
      throw internal_error("N is not normal in D");
  if ((dp.v1bar.members() & nbits).count() != 1 || (dp.v2bar.members() & nbits).count() != 1)
    throw internal_error("V̄i ∩ N ≠ 1");

  QuotientResult q = quotient(dp.group, n_sub, limits);
  const Group& g0 = *q.group;
  const std::uint32_t qn = g0.order();

  // Rebuild the quotient with product-word labels. Each coset is u1·u2 with
  // u1, u2 the factor images; the label picks the representative with
  // minimal second factor, then minimal first.
  std::vector<elem_t> u1_of_factor(v1->order()), u2_of_factor(v2->order());
  for (elem_t x : dp.v1bar.elements()) u1_of_factor[dp.pi1(x)] = q.projection(x);
  for (elem_t x : dp.v2bar.elements()) u2_of_factor[dp.pi2(x)] = q.projection(x);
  std::vector<std::int32_t> factor1_of(qn, -1), factor2_of(qn, -1);
  for (std::uint32_t a = 0; a < v1->order(); ++a) factor1_of[u1_of_factor[a]] = std::int32_t(a);
  for (std::uint32_t b = 0; b < v2->order(); ++b) factor2_of[u2_of_factor[b]] = std::int32_t(b);

  const auto names1 = factor_names(*v1);
  const auto names2 = factor_names(*v2);
  std::vector<std::string> new1(names1.size()), new2(names2.size());
  for (std::size_t i = 0; i < names1.size(); ++i) new1[i] = d.generators()[i].first;
  for (std::size_t i = 0; i < names2.size(); ++i)
    new2[i] = d.generators()[names1.size() + i].first;

  std::vector<std::string> labels(qn);
  for (std::uint32_t gidx = 0; gidx < qn; ++gidx) {
    std::int32_t best_a = -1, best_b = -1;
    for (std::uint32_t a = 0; a < v1->order(); ++a) {
      elem_t rest = g0.mul(g0.inv(u1_of_factor[a]), elem_t(gidx));
      std::int32_t b = factor2_of[rest];
      if (b < 0) continue;
      if (best_b < 0 || b < best_b || (b == best_b && std::int32_t(a) < best_a)) {
        best_a = std::int32_t(a);
        best_b = b;
      }
    }
    if (best_a < 0) throw internal_error("quotient element is not covered by U1·U2");
    std::string p1 = relabel(v1->label(elem_t(best_a)), names1, new1);
    std::string p2 = relabel(v2->label(elem_t(best_b)), names2, new2);
    if (p1 == "1")
      labels[gidx] = p2;
    else if (p2 == "1")
      labels[gidx] = p1;
    else
      labels[gidx] = word_like(p1) && word_like(p2) ? p1 + p2 : p1 + "·" + p2;
  }

  std::vector<elem_t> table(std::size_t(qn) * qn);
  for (std::uint32_t a = 0; a < qn; ++a)
    for (std::uint32_t b = 0; b < qn; ++b)
      table[std::size_t(a) * qn + b] = g0.mul(elem_t(a), elem_t(b));
  std::vector<std::pair<std::string, elem_t>> gens;
  for (const auto& [name, idx] : d.generators()) gens.emplace_back(name, q.projection(idx));

  std::string cp_name =
      spec.amalgam.empty() && v2->order() == 1 ? v1->name() : v1->name() + "∘" + v2->name();
  GroupPtr g = Group::create(std::move(cp_name), qn, std::move(table), std::move(labels),
                             std::move(gens), limits);

  Homomorphism eps = Homomorphism::from_map(dp.group, g, q.projection.map(), limits);

  Bits u1bits(qn), u2bits(qn);
  for (std::uint32_t a = 0; a < v1->order(); ++a) u1bits.set(u1_of_factor[a]);
  for (std::uint32_t b = 0; b < v2->order(); ++b) u2bits.set(u2_of_factor[b]);
  std::vector<elem_t> u1gens, u2gens;
  for (std::size_t i = 0; i < names1.size(); ++i) u1gens.push_back(g->generators()[i].second);
  for (std::size_t i = 0; i < names2.size(); ++i)
    u2gens.push_back(g->generators()[names1.size() + i].second);
  Subgroup u1 = Subgroup::with_generators(g, std::move(u1bits), std::move(u1gens));
  Subgroup u2 = Subgroup::with_generators(g, std::move(u2bits), std::move(u2gens));

  CentralProduct cp{g,
                    dp.group,
                    std::move(eps),
                    std::move(dp.pi1),
                    std::move(dp.pi2),
                    std::move(u1),
                    std::move(u2),
                    std::move(dp.v1bar),
                    std::move(dp.v2bar),
                    std::move(n_sub),
                    amalgam_order};

  // Construction invariants.
  if (std::uint64_t(qn) * amalgam_order != std::uint64_t(v1->order()) * v2->order())
    throw internal_error("|G| ≠ |V1||V2|/|A|");
  auto chk = is_internal_central_product(g, cp.u1, cp.u2);
  if (!chk.holds) throw internal_error("result is not an internal central product: " + chk.describe(*g));
  if (cp.epsilon.kernel().members() != cp.n.members())
    throw internal_error("ε kernel differs from N");
  Bits inter = cp.u1.members() & cp.u2.members();
  if (inter.count() != amalgam_order) throw internal_error("|U1 ∩ U2| ≠ |A|");
  if (amalgam_order > 1 && amalgam_order <= limits.max_iso) {
    Subgroup a1 = Subgroup::with_generators(v1, detail::close_under_products(*v1, a1gens),
                                            a1gens);
    if (!are_isomorphic(subgroup_as_group(Subgroup::from_members(g, inter)).group,
                        subgroup_as_group(a1).group, limits))
      throw internal_error("U1 ∩ U2 is not isomorphic to A");
  }
  for (int i = 0; i < 2; ++i) {
    const Subgroup& u = i == 0 ? cp.u1 : cp.u2;
    const GroupPtr& v = i == 0 ? v1 : v2;
    if (u.order() != v->order()) throw internal_error("|Ui| ≠ |Vi|");
    if (v->order() <= limits.max_iso &&
        !are_isomorphic(subgroup_as_group(u).group, v, limits))
      throw internal_error("Ui is not isomorphic to Vi");
  }
  return cp;
}

bool internal_external_iso_check(const CentralProduct& cp) {
  const Group& d = *cp.direct;
  const Group& g = *cp.group;
  // embeddings factor index -> element of V̄i
  std::vector<elem_t> emb1(cp.pi1.cod()->order()), emb2(cp.pi2.cod()->order());
  for (elem_t x : cp.v1bar.elements()) emb1[cp.pi1(x)] = x;
  for (elem_t x : cp.v2bar.elements()) emb2[cp.pi2(x)] = x;

  // φ((a,b)N) = ε(ā)·ε(b̄) must agree with ε on every representative; this
  // is exactly well-definedness plus bijectivity of the identification.
  for (std::uint32_t x = 0; x < d.order(); ++x) {
    elem_t lhs = cp.epsilon(elem_t(x));
    elem_t rhs = g.mul(cp.epsilon(emb1[cp.pi1(elem_t(x))]), cp.epsilon(emb2[cp.pi2(elem_t(x))]));
    if (lhs != rhs) return false;
  }
  if (!cp.epsilon.surjective()) return false;
  if (cp.epsilon.kernel().members() != cp.n.members()) return false;
  return std::uint64_t(g.order()) * cp.n.order() == d.order();
}

}  // namespace amalgam
