#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amalgam/group.hpp"
#include "amalgam/morphisms.hpp"

namespace amalgam {

/// V1 × V2 with projections and the embedded copies of the factors.
struct DirectProduct {
  GroupPtr group;
  Homomorphism pi1, pi2;
  Subgroup v1bar, v2bar;
};
DirectProduct direct_product(GroupPtr v1, GroupPtr v2, const Limits& limits = {});

/// Input for the external construction: the two factors plus the amalgam
/// given as generator image pairs (mu1(a), mu2(a)), one per generator of A.
/// Both components must be central; the pairing must extend to an
/// isomorphism between the two generated central subgroups.
struct CentralProductSpec {
  GroupPtr v1, v2;
  std::vector<std::pair<elem_t, elem_t>> amalgam;
};

/// Result of the external construction G = D/N with the standard gadgets
/// attached. All construction invariants are verified before this is
/// returned: N normal in D, V̄i ∩ N = 1, Ui ≅ Vi, G = U1·U2 with
/// [U1,U2] = 1, U1 ∩ U2 ≅ A and |G| = |V1||V2|/|A|.
struct CentralProduct {
  GroupPtr group;       ///< G
  GroupPtr direct;      ///< D = V1 × V2
  Homomorphism epsilon; ///< D -> G
  Homomorphism pi1, pi2;
  Subgroup u1, u2;      ///< images of the factors inside G
  Subgroup v1bar, v2bar, n;  ///< inside D
  std::uint32_t amalgam_order = 1;
};
CentralProduct external_central_product(const CentralProductSpec& spec,
                                        const Limits& limits = {});

/// G = U1·U2 setwise with [U1,U2] = 1, plus a witness when it fails.
struct InternalCpCheck {
  bool holds = false;
  std::optional<elem_t> uncovered;                 ///< element outside U1·U2
  std::optional<std::pair<elem_t, elem_t>> noncommuting;
  std::string describe(const Group& g) const;
};
InternalCpCheck is_internal_central_product(const GroupPtr& g, const Subgroup& u1,
                                            const Subgroup& u2);

/// ε : U1 × U2 -> G, (u1,u2) -> u1·u2. Requires the internal central
/// product conditions; kernel is {(z, z^-1) : z in U1 ∩ U2}.
Homomorphism canonical_epimorphism(const GroupPtr& g, const Subgroup& u1, const Subgroup& u2,
                                   const Limits& limits = {});

/// Verifies that (a,b)N -> ε(a)·ε(b) is well defined and bijective, i.e.
/// that the quotient form and the internal product form agree on every
/// representative pair.
bool internal_external_iso_check(const CentralProduct& cp);

}  // namespace amalgam
