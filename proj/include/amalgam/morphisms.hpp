#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam/group.hpp"

namespace amalgam {

/// Total map between two concrete groups, recorded element-by-element.
/// Validated at construction (exhaustively up to limits.exhaustive_cap,
/// sampled above); kernel and image are cached.
class Homomorphism {
 public:
  /// From an explicit element map.
  static Homomorphism from_map(GroupPtr dom, GroupPtr cod, std::vector<elem_t> map,
                               const Limits& limits = {});
  /// Extends generator images to all elements by word evaluation. Rejects
  /// inconsistent images, naming the violating pair.
  static Homomorphism on_generators(GroupPtr dom, GroupPtr cod,
                                    const std::vector<elem_t>& gen_images,
                                    const Limits& limits = {});
  static Homomorphism identity(GroupPtr g, const Limits& limits = {});

  const GroupPtr& dom() const { return dom_; }
  const GroupPtr& cod() const { return cod_; }
  elem_t operator()(elem_t a) const { return map_[a]; }
  const std::vector<elem_t>& map() const { return map_; }
  const Subgroup& kernel() const { return *kernel_; }
  const Subgroup& image() const { return *image_; }
  bool surjective() const { return surjective_; }
  bool injective() const { return injective_; }

  Subgroup image_of(const Subgroup& h) const;
  /// {a : f(a) in W}; always contains the kernel.
  Subgroup preimage(const Subgroup& w) const;

 private:
  Homomorphism() = default;
  GroupPtr dom_, cod_;
  std::vector<elem_t> map_;
  std::optional<Subgroup> kernel_, image_;
  bool surjective_ = false;
  bool injective_ = false;
};

/// Coset group G/N plus the projection. Coset representatives are least
/// member indices; quotient labels are "wN".
struct QuotientResult {
  GroupPtr group;
  Homomorphism projection;
};
QuotientResult quotient(GroupPtr g, const Subgroup& n, const Limits& limits = {});

enum class SubgroupProperty { normal, subnormal, abnormal };
const char* property_name(SubgroupProperty p) noexcept;

/// Checks that K -> f(K) is a bijection from {K >= ker f} onto the subgroups
/// of the codomain and that `property` transfers both ways (with equal
/// subnormal defect). Expected to come back clean.
struct CorrespondenceReport {
  bool ok = false;
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
};
CorrespondenceReport correspondence_check(const Homomorphism& f, SubgroupProperty property,
                                          const Limits& limits = {});

}  // namespace amalgam
