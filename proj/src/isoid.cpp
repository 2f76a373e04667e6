#include "amalgam/isoid.hpp"

#include <algorithm>
#include <map>

#include "amalgam/catalog.hpp"
#include "amalgam/lattice.hpp"
#include "amalgam/products.hpp"
#include "amalgam/words.hpp"

namespace amalgam {

GroupFingerprint fingerprint(const GroupPtr& g) {
  GroupFingerprint fp;
  fp.order = g->order();
  fp.abelian = g->is_abelian();
  fp.center_order = center(g).order();
  fp.exponent = g->exponent();

  std::map<std::uint16_t, std::uint32_t> hist;
  for (std::uint32_t a = 0; a < g->order(); ++a) ++hist[g->element_order(elem_t(a))];
  fp.order_histogram.assign(hist.begin(), hist.end());

  auto series = derived_series(g);
  fp.derived_length = series.solvable ? int(series.terms.size()) - 1 : -1;
  return fp;
}

std::string fingerprint_label(const GroupFingerprint& fp) {
  std::string out = "grp[o=" + std::to_string(fp.order) + ",exp=" + std::to_string(fp.exponent) +
                    ",z=" + std::to_string(fp.center_order) +
                    ",dl=" + std::to_string(fp.derived_length) + (fp.abelian ? ",ab" : "") +
                    ",ord:";
  bool first = true;
  for (const auto& [o, c] : fp.order_histogram) {
    if (!first) out += " ";
    out += std::to_string(o) + "^" + std::to_string(c);
    first = false;
  }
  return out + "]";
}

namespace {

// Extends the partial generator assignment to a map over <gens[0..k]> by
// right-multiplication; fails on a violated relation or a collision.
bool consistent_partial_map(const Group& g, const Group& h, std::span<const elem_t> gens,
                            std::span<const elem_t> images) {
  constexpr elem_t kUnset = 0xffff;
  std::vector<elem_t> map(g.order(), kUnset);
  Bits hit(h.order());
  map[g.identity()] = h.identity();
  hit.set(h.identity());
  std::vector<elem_t> queue{g.identity()};
  std::size_t reached = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    elem_t x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      elem_t y = g.mul(x, gens[k]);
      elem_t fy = h.mul(map[x], images[k]);
      if (map[y] == kUnset) {
        if (hit.test(fy)) return false;  // not injective
        map[y] = fy;
        hit.set(fy);
        queue.push_back(y);
        ++reached;
      } else if (map[y] != fy) {
        return false;
      }
    }
  }
  (void)reached;
  return true;
}

bool extend_iso(const Group& g, const Group& h, const std::vector<elem_t>& gens,
                std::vector<elem_t>& images, std::size_t k) {
  if (k == gens.size()) return true;
  for (std::uint32_t c = 0; c < h.order(); ++c) {
    if (h.element_order(elem_t(c)) != g.element_order(gens[k])) continue;
    images.push_back(elem_t(c));
    if (consistent_partial_map(g, h, std::span(gens.data(), k + 1),
                               std::span(images.data(), k + 1)) &&
        extend_iso(g, h, gens, images, k + 1))
      return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

bool are_isomorphic(const GroupPtr& g, const GroupPtr& h, const Limits& limits) {
  if (g->order() > limits.max_iso || h->order() > limits.max_iso)
    throw budget_error("isomorphism test refused above order " + std::to_string(limits.max_iso));
  if (g->order() != h->order()) return false;
  if (fingerprint(g) != fingerprint(h)) return false;

  Bits all(g->order());
  all.set();
  std::vector<elem_t> gens = detail::nice_generators(*g, all);
  if (gens.empty()) return true;  // both trivial

  std::vector<elem_t> images;
  images.reserve(gens.size());
  return extend_iso(*g, *h, gens, images, 0);
}

namespace {

struct CatalogEntry {
  std::string label;
  GroupPtr group;
  GroupFingerprint fp;
};

std::vector<CatalogEntry> build_label_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string label, GroupPtr g) {
    for (const auto& e : out)
      if (e.group->order() == g->order() && are_isomorphic(e.group, g)) return;  // keep first name
    GroupFingerprint fp = fingerprint(g);
    out.push_back({std::move(label), std::move(g), std::move(fp)});
  };
  auto direct = [&](std::initializer_list<unsigned> ns) {
    GroupPtr g;
    for (unsigned n : ns) {
      GroupPtr c = cyclic_group(n);
      g = g ? direct_product(std::move(g), std::move(c)).group : std::move(c);
    }
    return g;
  };

  add("1", trivial_group());
  for (unsigned n = 2; n <= 16; ++n) add("C" + std::to_string(n), cyclic_group(n));
  add("V4", direct({2, 2}));
  add("C4×C2", direct({4, 2}));
  add("C2×C2×C2", direct({2, 2, 2}));
  add("C6×C2", direct({6, 2}));
  add("C3×C3", direct({3, 3}));
  add("C8×C2", direct({8, 2}));
  add("C4×C4", direct({4, 4}));
  add("C4×C2×C2", direct({4, 2, 2}));
  add("C2×C2×C2×C2", direct({2, 2, 2, 2}));
  add("S3", symmetric_group(3));
  add("D8", dihedral_group(8));
  add("D10", dihedral_group(10));
  add("D12", dihedral_group(12));
  add("D14", dihedral_group(14));
  add("D16", dihedral_group(16));
  add("Q8", quaternion_group());
  add("Dic3", dicyclic_group(3));
  add("Q16", dicyclic_group(4));
  add("A4", alternating_group(4));
  {
    GroupPtr d8 = dihedral_group(8);
    GroupPtr c4 = cyclic_group(4);
    CentralProductSpec spec{d8, c4, {{parse_word(*d8, "r^2"), parse_word(*c4, "x^2")}}};
    add("D8∘C4", external_central_product(spec).group);
  }
  add("D8×C2", direct_product(dihedral_group(8), cyclic_group(2)).group);
  add("Q8×C2", direct_product(quaternion_group(), cyclic_group(2)).group);
  return out;
}

}  // namespace

std::string identify(const GroupPtr& g, const Limits& limits) {
  static const std::vector<CatalogEntry> catalog = build_label_catalog();
  GroupFingerprint fp = fingerprint(g);
  if (g->order() <= limits.max_iso)
    for (const auto& e : catalog)
      if (e.fp == fp && are_isomorphic(e.group, g, limits)) return e.label;
  return fingerprint_label(fp);
}

}  // namespace amalgam
