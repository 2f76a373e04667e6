#pragma once

#include <vector>

#include "amalgam/group.hpp"

namespace amalgam {

/// G = G^(0) >= G^(1) >= ... computed to stabilization; solvable iff the
/// stable term is trivial.
struct DerivedSeries {
  std::vector<Subgroup> terms;
  bool stabilized = false;
  bool solvable = false;
};

/// Smallest subgroup containing S (worklist closure). Empty S gives the
/// trivial subgroup.
Subgroup generated_subgroup(GroupPtr g, std::span<const elem_t> s);

/// [A,B]: generated by all commutators [a,b]. Seeds with generator-pair
/// commutators and closes under conjugation by <A,B>, which equals the
/// all-pairs subgroup.
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);
/// Exhaustive all-pairs variant; differential oracle for the seeded one.
Subgroup commutator_subgroup_all_pairs(const Subgroup& a, const Subgroup& b);

/// Left-nested [U, H, ..., H] with r >= 1 copies of H.
Subgroup iterated_commutator(const Subgroup& u, const Subgroup& h, unsigned r);

Subgroup join(const Subgroup& a, const Subgroup& b);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

/// <H^K> = H [H,K].
Subgroup normal_closure(const Subgroup& h, const Subgroup& k);

/// Setwise product {ab : a in A, b in B}; not a subgroup in general.
Bits product_set(const Subgroup& a, const Subgroup& b);

DerivedSeries derived_series(GroupPtr g);
DerivedSeries derived_series(const Subgroup& h);

/// Complete subgroup list: cyclic seeds closed under pairwise join, returned
/// in canonical order (order, then membership bitset). Refuses groups above
/// limits.max_enum.
std::vector<Subgroup> all_subgroups(GroupPtr g, const Limits& limits = {});

}  // namespace amalgam
