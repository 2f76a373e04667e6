#include "amalgam/morphisms.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "amalgam/embedding.hpp"
#include "amalgam/lattice.hpp"

namespace amalgam {

namespace {

void validate_hom(const Group& dom, const Group& cod, const std::vector<elem_t>& map,
                  const Limits& limits) {
  if (map.size() != dom.order()) throw validation_error("homomorphism map has wrong size");
  for (elem_t v : map)
    if (v >= cod.order()) throw validation_error("homomorphism image out of range");
  auto check = [&](std::uint32_t a, std::uint32_t b) {
    if (map[dom.mul(elem_t(a), elem_t(b))] != cod.mul(map[a], map[b]))
      throw validation_error("not a homomorphism: f(" + dom.label(elem_t(a)) + " · " +
                             dom.label(elem_t(b)) + ") ≠ f(" + dom.label(elem_t(a)) + ")f(" +
                             dom.label(elem_t(b)) + ")");
  };
  if (dom.order() <= limits.exhaustive_cap) {
    for (std::uint32_t a = 0; a < dom.order(); ++a)
      for (std::uint32_t b = 0; b < dom.order(); ++b) check(a, b);
  } else {
    std::mt19937_64 rng(0x40ac0ffeeull);
    std::uniform_int_distribution<std::uint32_t> pick(0, dom.order() - 1);
    for (int i = 0; i < 500000; ++i) check(pick(rng), pick(rng));
  }
}

}  // namespace

Homomorphism Homomorphism::from_map(GroupPtr dom, GroupPtr cod, std::vector<elem_t> map,
                                    const Limits& limits) {
  validate_hom(*dom, *cod, map, limits);
  Homomorphism f;
  Bits ker(dom->order());
  Bits img(cod->order());
  for (std::uint32_t a = 0; a < dom->order(); ++a) {
    if (map[a] == cod->identity()) ker.set(a);
    img.set(map[a]);
  }
  f.surjective_ = img.count() == cod->order();
  f.injective_ = ker.count() == 1;
  f.kernel_ = Subgroup::from_members(dom, std::move(ker));
  f.image_ = Subgroup::from_members(cod, std::move(img));
  f.dom_ = std::move(dom);
  f.cod_ = std::move(cod);
  f.map_ = std::move(map);
  return f;
}

Homomorphism Homomorphism::on_generators(GroupPtr dom, GroupPtr cod,
                                         const std::vector<elem_t>& gen_images,
                                         const Limits& limits) {
  const auto gens = dom->generator_indices();
  if (gen_images.size() != gens.size())
    throw validation_error("need one image per domain generator");
  for (elem_t v : gen_images)
    if (v >= cod->order()) throw validation_error("generator image out of range");

  constexpr elem_t kUnset = 0xffff;
  std::vector<elem_t> map(dom->order(), kUnset);
  map[dom->identity()] = cod->identity();
  std::vector<elem_t> queue{dom->identity()};
  // Breadth-first extension along right multiplication by generators. A
  // revisit with a different image is a violated relation.
  for (std::size_t i = 0; i < queue.size(); ++i) {
    elem_t x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      elem_t y = dom->mul(x, gens[k]);
      elem_t fy = cod->mul(map[x], gen_images[k]);
      if (map[y] == kUnset) {
        map[y] = fy;
        queue.push_back(y);
      } else if (map[y] != fy) {
        throw validation_error("inconsistent generator images: relation violated at " +
                               dom->label(x) + " · " + dom->label(gens[k]) + " (images " +
                               cod->label(map[y]) + " vs " + cod->label(fy) + ")");
      }
    }
  }
  for (elem_t v : map)
    if (v == kUnset) throw internal_error("generator extension did not reach every element");
  return from_map(std::move(dom), std::move(cod), std::move(map), limits);
}

Homomorphism Homomorphism::identity(GroupPtr g, const Limits& limits) {
  std::vector<elem_t> map(g->order());
  for (std::uint32_t a = 0; a < g->order(); ++a) map[a] = elem_t(a);
  return from_map(g, g, std::move(map), limits);
}

Subgroup Homomorphism::image_of(const Subgroup& h) const {
  detail::require_same_parent(dom_, h.parent(), "image_of");
  Bits img(cod_->order());
  for (auto i = h.members().find_first(); i != Bits::npos; i = h.members().find_next(i))
    img.set(map_[i]);
  std::vector<elem_t> gens;
  gens.reserve(h.gens().size());
  for (elem_t s : h.gens()) gens.push_back(map_[s]);
  return Subgroup::generated(cod_, std::span<const elem_t>(gens.data(), gens.size()));
}

Subgroup Homomorphism::preimage(const Subgroup& w) const {
  detail::require_same_parent(cod_, w.parent(), "preimage");
  Bits pre(dom_->order());
  for (std::uint32_t a = 0; a < dom_->order(); ++a)
    if (w.contains(map_[a])) pre.set(a);
  return Subgroup::from_members(dom_, std::move(pre));
}

QuotientResult quotient(GroupPtr g, const Subgroup& n, const Limits& limits) {
  detail::require_same_parent(g, n.parent(), "quotient");
  {
    auto verdict = is_normal_definition(n);
    if (verdict.state != VerdictState::holds)
      throw validation_error("quotient by a non-normal subgroup: conjugation by " +
                             *verdict.witness + " moves " + n.word());
  }

  const std::uint32_t order = g->order();
  const std::uint32_t q = order / n.order();
  std::vector<elem_t> rep_of(order);  // element -> least coset representative
  {
    std::vector<bool> seen(order, false);
    for (std::uint32_t a = 0; a < order; ++a) {
      if (seen[a]) continue;
      // a is the least member of its coset aN because smaller ones are seen.
      for (auto i = n.members().find_first(); i != Bits::npos; i = n.members().find_next(i)) {
        elem_t x = g->mul(elem_t(a), elem_t(i));
        seen[x] = true;
        rep_of[x] = elem_t(a);
      }
    }
  }
  std::vector<elem_t> reps;
  reps.reserve(q);
  for (std::uint32_t a = 0; a < order; ++a)
    if (rep_of[a] == a) reps.push_back(elem_t(a));
  std::vector<elem_t> coset_of(order);
  for (std::size_t c = 0; c < reps.size(); ++c)
    for (std::uint32_t a = 0; a < order; ++a)
      if (rep_of[a] == reps[c]) coset_of[a] = elem_t(c);

  std::vector<elem_t> table(std::size_t(q) * q);
  std::vector<std::string> labels(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    labels[a] = reps[a] == g->identity() ? "N" : g->label(reps[a]) + "N";
    for (std::uint32_t b = 0; b < q; ++b)
      table[std::size_t(a) * q + b] = coset_of[g->mul(reps[a], reps[b])];
  }
  std::vector<std::pair<std::string, elem_t>> gens;
  for (const auto& [name, idx] : g->generators()) gens.emplace_back(name, coset_of[idx]);

  auto qg = Group::create(g->name() + "/N", q, std::move(table), std::move(labels),
                          std::move(gens), limits);
  std::vector<elem_t> proj(order);
  for (std::uint32_t a = 0; a < order; ++a) proj[a] = coset_of[a];
  auto pr = Homomorphism::from_map(std::move(g), qg, std::move(proj), limits);
  return {std::move(qg), std::move(pr)};
}

const char* property_name(SubgroupProperty p) noexcept {
  switch (p) {
    case SubgroupProperty::normal: return "normal";
    case SubgroupProperty::subnormal: return "subnormal";
    case SubgroupProperty::abnormal: return "abnormal";
  }
  return "?";
}

CorrespondenceReport correspondence_check(const Homomorphism& f, SubgroupProperty property,
                                          const Limits& limits) {
  if (!f.surjective()) throw validation_error("correspondence_check needs an epimorphism");

  CorrespondenceReport report;
  auto note = [&](std::string v) { report.violations.push_back(std::move(v)); };

  const auto dom_subs = all_subgroups(f.dom(), limits);
  const auto cod_subs = all_subgroups(f.cod(), limits);

  std::vector<const Subgroup*> over_kernel;
  for (const auto& k : dom_subs)
    if (k.contains(f.kernel())) over_kernel.push_back(&k);

  // Bijectivity of K -> f(K) between {K >= ker f} and S(codomain).
  std::map<Bits, const Subgroup*> images;
  for (const Subgroup* k : over_kernel) {
    Subgroup img = f.image_of(*k);
    auto [it, fresh] = images.emplace(img.members(), k);
    if (!fresh)
      note("images of " + k->word() + " and " + it->second->word() + " coincide");
    if (f.preimage(img).members() != k->members())
      note("preimage of f(" + k->word() + ") differs from " + k->word());
  }
  if (images.size() != cod_subs.size())
    note("image set has " + std::to_string(images.size()) + " subgroups, codomain has " +
         std::to_string(cod_subs.size()));
  for (const auto& w : cod_subs)
    if (!images.count(w.members())) note(w.word() + " is not the image of any K >= ker");

  // Property transfer, both directions.
  for (const Subgroup* k : over_kernel) {
    Subgroup img = f.image_of(*k);
    ++report.pairs_checked;
    switch (property) {
      case SubgroupProperty::normal: {
        bool up = is_normal_definition(*k).state == VerdictState::holds;
        bool down = is_normal_definition(img).state == VerdictState::holds;
        if (up != down)
          note("normality differs across f for " + k->word());
        break;
      }
      case SubgroupProperty::subnormal: {
        auto up = subnormal_defect_oracle(*k);
        auto down = subnormal_defect_oracle(img);
        bool uh = up.state == VerdictState::holds;
        bool dh = down.state == VerdictState::holds;
        if (uh != dh)
          note("subnormality differs across f for " + k->word());
        else if (uh && up.defect != down.defect)
          note("subnormal defect differs across f for " + k->word() + ": " +
               std::to_string(*up.defect) + " vs " + std::to_string(*down.defect));
        break;
      }
      case SubgroupProperty::abnormal: {
        bool up = is_abnormal_definition(*k).state == VerdictState::holds;
        bool down = is_abnormal_definition(img).state == VerdictState::holds;
        if (up != down)
          note("abnormality differs across f for " + k->word());
        break;
      }
    }
  }

  report.ok = report.violations.empty();
  return report;
}

}  // namespace amalgam
