#pragma once

#include <string>
#include <vector>

#include "amalgam/group.hpp"

namespace amalgam {

/// Iso-invariant summary; equal fingerprints are necessary but not
/// sufficient for isomorphism.
struct GroupFingerprint {
  std::uint32_t order = 0;
  bool abelian = false;
  std::uint32_t center_order = 0;
  int derived_length = -1;  ///< -1 when the derived series stabilizes above 1
  std::uint32_t exponent = 0;
  std::vector<std::pair<std::uint16_t, std::uint32_t>> order_histogram;
  bool operator==(const GroupFingerprint&) const = default;
};

GroupFingerprint fingerprint(const GroupPtr& g);
std::string fingerprint_label(const GroupFingerprint& fp);

/// Fingerprint prefilter, then backtracking over generator images with
/// partial-closure consistency pruning. Refuses orders above limits.max_iso.
bool are_isomorphic(const GroupPtr& g, const GroupPtr& h, const Limits& limits = {});

/// Small-group label ("C2", "V4", "Q8", "D8∘C4", ...) via a generated
/// candidate catalog; guaranteed for orders <= 16, fingerprint string
/// otherwise.
std::string identify(const GroupPtr& g, const Limits& limits = {});

}  // namespace amalgam
