#include "amalgam/embedding.hpp"

#include <algorithm>

#include "amalgam/isoid.hpp"
#include "amalgam/lattice.hpp"

namespace amalgam {

const char* verdict_state_name(VerdictState s) noexcept {
  switch (s) {
    case VerdictState::holds: return "holds";
    case VerdictState::fails: return "fails";
    case VerdictState::hypothesis_not_met: return "hypothesis not met";
  }
  return "?";
}

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::definition: return "definition";
    case Method::characterization: return "characterization";
    case Method::preimage: return "preimage";
  }
  return "?";
}

std::string EmbeddingVerdict::describe() const {
  std::string out = std::string(property_name(property)) + " [" + method_name(method) +
                    "]: " + verdict_state_name(state);
  if (defect) out += " (defect " + std::to_string(*defect) + ")";
  if (witness) out += " (witness: " + *witness + ")";
  return out;
}

namespace {

EmbeddingVerdict make(SubgroupProperty p, Method m) {
  EmbeddingVerdict v;
  v.property = p;
  v.method = m;
  return v;
}

// First element of `sub` outside `super`, as a witness.
std::optional<elem_t> first_excess(const Bits& sub, const Bits& super) {
  Bits excess = sub - super;
  auto i = excess.find_first();
  if (i == Bits::npos) return std::nullopt;
  return elem_t(i);
}

}  // namespace

EmbeddingVerdict is_normal_definition(const Subgroup& h) {
  auto v = make(SubgroupProperty::normal, Method::definition);
  const Group& g = *h.parent();
  for (elem_t x : h.parent()->generator_indices()) {
    if (detail::conjugate_bits(g, h.members(), x) != h.members()) {
      v.state = VerdictState::fails;
      v.witness = "conjugation by " + g.label(x);
      v.witness_element = x;
      return v;
    }
  }
  v.state = VerdictState::holds;
  return v;
}

namespace {

EmbeddingVerdict commutator_containment(SubgroupProperty p, const Subgroup& u1,
                                        const Subgroup& u2, const Subgroup& h, unsigned r,
                                        Method m) {
  auto v = make(p, m);
  const Group& g = *h.parent();
  for (const Subgroup* u : {&u1, &u2}) {
    Subgroup comm = r == 0 ? *u : iterated_commutator(*u, h, r);
    Bits bound = u->members() & h.members();
    if (auto excess = first_excess(comm.members(), bound)) {
      v.state = VerdictState::fails;
      v.witness = "commutator subgroup contains " + g.label(*excess) + " outside " +
                  u->word() + " ∩ " + h.word();
      v.witness_element = *excess;
      return v;
    }
  }
  v.state = VerdictState::holds;
  return v;
}

}  // namespace

EmbeddingVerdict is_normal_characterization(const CentralProduct& cp, const Subgroup& h) {
  detail::require_same_parent(cp.group, h.parent(), "is_normal_characterization");
  return commutator_containment(SubgroupProperty::normal, cp.u1, cp.u2, h, 1,
                                Method::characterization);
}

EmbeddingVerdict is_normal_preimage(const CentralProduct& cp, const Subgroup& h) {
  detail::require_same_parent(cp.group, h.parent(), "is_normal_preimage");
  Subgroup k = cp.epsilon.preimage(h);
  auto v = commutator_containment(SubgroupProperty::normal, cp.v1bar, cp.v2bar, k, 1,
                                  Method::preimage);
  v.method = Method::preimage;
  if (v.witness) v.witness = "in D: " + *v.witness;
  return v;
}

EmbeddingVerdict subnormal_defect_oracle(const Subgroup& h) {
  auto v = make(SubgroupProperty::subnormal, Method::definition);
  Subgroup x = Subgroup::full(h.parent());
  int steps = 0;
  while (true) {
    if (x == h) {
      v.state = VerdictState::holds;
      v.defect = steps;
      return v;
    }
    Subgroup next = normal_closure(h, x);
    if (next == x) {
      v.state = VerdictState::fails;
      v.witness = "normal-closure chain stabilizes at a subgroup of order " +
                  std::to_string(x.order());
      return v;
    }
    x = std::move(next);
    ++steps;
  }
}

EmbeddingVerdict is_subnormal_characterization(const CentralProduct& cp, const Subgroup& h,
                                               unsigned r) {
  detail::require_same_parent(cp.group, h.parent(), "is_subnormal_characterization");
  if (r < 1) throw validation_error("subnormal characterization needs r >= 1");
  auto v = commutator_containment(SubgroupProperty::subnormal, cp.u1, cp.u2, h, r,
                                  Method::characterization);
  if (v.holds()) v.defect = int(r);
  return v;
}

EmbeddingVerdict subnormal_characterization_scan(const CentralProduct& cp, const Subgroup& h) {
  detail::require_same_parent(cp.group, h.parent(), "subnormal_characterization_scan");
  auto v = make(SubgroupProperty::subnormal, Method::characterization);
  if (h.is_full()) {
    v.state = VerdictState::holds;
    v.defect = 0;
    return v;
  }
  Subgroup c1 = cp.u1;
  Subgroup c2 = cp.u2;
  Bits bound1 = cp.u1.members() & h.members();
  Bits bound2 = cp.u2.members() & h.members();
  for (int r = 1;; ++r) {
    Subgroup n1 = commutator_subgroup(c1, h);
    Subgroup n2 = commutator_subgroup(c2, h);
    if (n1.members().is_subset_of(bound1) && n2.members().is_subset_of(bound2)) {
      v.state = VerdictState::holds;
      v.defect = r;
      return v;
    }
    if (n1 == c1 && n2 == c2) {
      v.state = VerdictState::fails;
      v.witness = "iterated commutators stabilize outside Ui ∩ H at r = " + std::to_string(r);
      return v;
    }
    c1 = std::move(n1);
    c2 = std::move(n2);
  }
}

EmbeddingVerdict is_subnormal_preimage(const CentralProduct& cp, const Subgroup& h) {
  detail::require_same_parent(cp.group, h.parent(), "is_subnormal_preimage");
  auto v = subnormal_defect_oracle(cp.epsilon.preimage(h));
  v.method = Method::preimage;
  if (v.witness) v.witness = "in D: " + *v.witness;
  return v;
}

EmbeddingVerdict is_abnormal_definition(const Subgroup& h) {
  auto v = make(SubgroupProperty::abnormal, Method::definition);
  const Group& g = *h.parent();
  std::vector<elem_t> gens(h.gens());
  const std::size_t base = gens.size();
  gens.resize(base * 2);
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    if (h.contains(elem_t(x))) continue;  // x ∈ H ⊆ <H, H^x>
    for (std::size_t i = 0; i < base; ++i) gens[base + i] = g.conj(gens[i], elem_t(x));
    Bits joined = detail::close_under_products(g, gens);
    if (!joined.test(x)) {
      v.state = VerdictState::fails;
      v.witness = g.label(elem_t(x)) + " ∉ ⟨H, H^" + g.label(elem_t(x)) + "⟩";
      v.witness_element = elem_t(x);
      return v;
    }
  }
  v.state = VerdictState::holds;
  return v;
}

EmbeddingVerdict is_abnormal_central(const CentralProduct& cp, const Subgroup& h) {
  detail::require_same_parent(cp.group, h.parent(), "is_abnormal_central");
  auto v = make(SubgroupProperty::abnormal, Method::characterization);

  const GroupPtr& v1 = cp.pi1.cod();
  const GroupPtr& v2 = cp.pi2.cod();
  if (!derived_series(v1).solvable && !derived_series(v2).solvable) {
    v.state = VerdictState::hypothesis_not_met;
    v.witness = "neither factor is solvable";
    return v;
  }

  Subgroup k = cp.epsilon.preimage(h);
  Subgroup p1 = cp.pi1.image_of(k);
  Subgroup p2 = cp.pi2.image_of(k);
  // K ⊆ π1(K) × π2(K) always; equality is a size check.
  if (k.order() != std::uint64_t(p1.order()) * p2.order()) {
    v.state = VerdictState::fails;
    v.witness = "ε^{-1}(H) of order " + std::to_string(k.order()) +
                " does not decompose as π1 × π2 (orders " + std::to_string(p1.order()) + "·" +
                std::to_string(p2.order()) + ")";
    return v;
  }
  for (const Subgroup* p : {&p1, &p2}) {
    auto sub = is_abnormal_definition(*p);
    if (!sub.holds()) {
      v.state = VerdictState::fails;
      v.witness = "π-projection " + p->word() + " is not abnormal in " + p->parent()->name();
      return v;
    }
  }
  v.state = VerdictState::holds;
  return v;
}

EmbeddingVerdict is_abnormal_preimage(const CentralProduct& cp, const Subgroup& h) {
  detail::require_same_parent(cp.group, h.parent(), "is_abnormal_preimage");
  auto v = is_abnormal_definition(cp.epsilon.preimage(h));
  v.method = Method::preimage;
  if (v.witness) v.witness = "in D: " + *v.witness;
  return v;
}

namespace {

void require_agreement(const Subgroup& h, const EmbeddingVerdict& a, const EmbeddingVerdict& b) {
  if (b.state == VerdictState::hypothesis_not_met) return;
  bool same = a.state == b.state;
  if (same && a.property == SubgroupProperty::subnormal && a.holds())
    same = a.defect == b.defect;
  if (!same)
    throw disagreement_error("methods disagree on " + h.word() + ": " + a.describe() +
                             " vs " + b.describe());
}

}  // namespace

ClassificationReport classify_subgroups(const CentralProduct& cp, const Limits& limits) {
  ClassificationReport report;
  report.group_order = cp.group->order();
  report.group_type = identify(cp.group, limits);

  auto subs = all_subgroups(cp.group, limits);
  report.total = std::uint32_t(subs.size());

  for (const Subgroup& h : subs) {
    auto nd = is_normal_definition(h);
    require_agreement(h, nd, is_normal_characterization(cp, h));
    require_agreement(h, nd, is_normal_preimage(cp, h));

    auto sd = subnormal_defect_oracle(h);
    require_agreement(h, sd, subnormal_characterization_scan(cp, h));
    require_agreement(h, sd, is_subnormal_preimage(cp, h));

    auto ad = is_abnormal_definition(h);
    require_agreement(h, ad, is_abnormal_central(cp, h));
    require_agreement(h, ad, is_abnormal_preimage(cp, h));

    ClassificationRow row;
    row.order = h.order();
    row.generators = h.is_trivial() ? std::vector<std::string>{"1"} : h.generator_words();
    row.type = identify(subgroup_as_group(h).group, limits);
    row.normal = nd.holds();
    row.defect = sd.holds() ? *sd.defect : -1;
    row.abnormal = ad.holds();
    row.methods_agree = true;
    if (row.normal) ++report.total_normal;
    report.rows.push_back(std::move(row));
  }

  for (const auto& row : report.rows) {
    auto it = std::find_if(report.totals_by_type.begin(), report.totals_by_type.end(),
                           [&](const auto& p) { return p.first == row.type; });
    if (it == report.totals_by_type.end())
      report.totals_by_type.emplace_back(row.type, 1);
    else
      ++it->second;
  }
  return report;
}

}  // namespace amalgam
