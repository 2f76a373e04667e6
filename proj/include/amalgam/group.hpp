#pragma once

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "amalgam/errors.hpp"

namespace amalgam {

using elem_t = std::uint16_t;
using Bits = boost::dynamic_bitset<>;

/// Size caps for constructions and searches. Refusal beyond a cap is always
/// an explicit budget error, never silent truncation.
struct Limits {
  std::uint32_t max_order = 4096;      ///< largest constructible group order
  std::uint32_t exhaustive_cap = 512;  ///< exhaustive associativity / homomorphism
                                       ///< verification up to this order, sampled above
  std::uint32_t max_enum = 128;        ///< subgroup enumeration cap
  std::uint32_t max_iso = 64;          ///< isomorphism search cap
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// A finite group as a full multiplication table over element indices
/// 0..n-1. Immutable after construction and safe to share across threads;
/// every operation is a table lookup.
class Group {
 public:
  std::uint32_t order() const { return n_; }
  elem_t identity() const { return identity_; }
  elem_t mul(elem_t a, elem_t b) const { return table_[std::size_t(a) * n_ + b]; }
  elem_t inv(elem_t a) const { return inv_[a]; }
  /// b^{-1} a b
  elem_t conj(elem_t a, elem_t b) const { return mul(mul(inv(b), a), b); }
  /// [a,b] = a^{-1} a^b
  elem_t commutator(elem_t a, elem_t b) const { return mul(inv(a), conj(a, b)); }
  elem_t power(elem_t a, long e) const;

  std::uint16_t element_order(elem_t a) const { return orders_[a]; }
  std::uint32_t exponent() const;
  bool is_abelian() const { return abelian_; }

  const std::string& label(elem_t a) const { return labels_[a]; }
  const std::string& name() const { return name_; }
  const std::vector<std::pair<std::string, elem_t>>& generators() const { return gens_; }
  std::vector<elem_t> generator_indices() const;

  /// Builds a group from a raw table. Validates the Latin-square property,
  /// identity and inverses, associativity (exhaustive up to
  /// limits.exhaustive_cap, random triples above) and that `gens` generate
  /// the whole group. Empty `labels` get synthesized placeholders.
  static GroupPtr create(std::string name, std::uint32_t n, std::vector<elem_t> table,
                         std::vector<std::string> labels,
                         std::vector<std::pair<std::string, elem_t>> gens,
                         const Limits& limits = {});

 private:
  Group() = default;

  std::uint32_t n_ = 0;
  elem_t identity_ = 0;
  bool abelian_ = false;
  std::vector<elem_t> table_;
  std::vector<elem_t> inv_;
  std::vector<std::uint16_t> orders_;
  std::vector<std::string> labels_;
  std::vector<std::pair<std::string, elem_t>> gens_;
  std::string name_;
};

/// Element paired with its parent group; the checked, user-facing handle.
/// Algorithms work on raw indices internally.
struct Element {
  GroupPtr group;
  elem_t index = 0;
  bool operator==(const Element& o) const { return group == o.group && index == o.index; }
};

Element multiply(const Element& a, const Element& b);
Element inverse(const Element& a);
/// g^{-1} h g
Element conjugate(const Element& h, const Element& g);

/// Subgroup of a fixed parent: a membership bitset plus a generating list.
class Subgroup {
 public:
  static Subgroup generated(GroupPtr parent, std::span<const elem_t> gens);
  static Subgroup generated(GroupPtr parent, std::initializer_list<elem_t> gens);
  /// Validates that `members` is closed (identity, products, inverses) and
  /// derives a small generating list.
  static Subgroup from_members(GroupPtr parent, Bits members);
  /// Trusts `members` to be a subgroup; verifies only that `gens` generate it.
  static Subgroup with_generators(GroupPtr parent, Bits members, std::vector<elem_t> gens);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup full(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  const Bits& members() const { return members_; }
  const std::vector<elem_t>& gens() const { return gens_; }
  std::uint32_t order() const { return std::uint32_t(members_.count()); }
  bool contains(elem_t a) const { return members_.test(a); }
  bool contains(const Subgroup& other) const;
  bool is_trivial() const;
  bool is_full() const { return order() == parent_->order(); }
  std::vector<elem_t> elements() const;

  std::vector<std::string> generator_words() const;
  /// "⟨r^2, s⟩"; the trivial subgroup renders as "⟨1⟩".
  std::string word() const;

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && members_ == o.members_;
  }

 private:
  Subgroup(GroupPtr parent, Bits members, std::vector<elem_t> gens)
      : parent_(std::move(parent)), members_(std::move(members)), gens_(std::move(gens)) {}

  GroupPtr parent_;
  Bits members_;
  std::vector<elem_t> gens_;
};

Subgroup center(GroupPtr g);
Subgroup centralizer(GroupPtr g, const Subgroup& h);
/// N_G(H) = {g : H^g = H}; always contains H.
Subgroup normalizer(GroupPtr g, const Subgroup& h);
Subgroup conjugate_subgroup(const Subgroup& h, elem_t g);

/// Stand-alone copy of a subgroup with elements reindexed to 0..|H|-1;
/// `to_parent` maps new indices back to parent indices.
struct ExtractedGroup {
  GroupPtr group;
  std::vector<elem_t> to_parent;
};
ExtractedGroup subgroup_as_group(const Subgroup& h, std::string name = {});

namespace detail {

Bits close_under_products(const Group& g, std::span<const elem_t> gens);
Bits conjugate_bits(const Group& g, const Bits& members, elem_t x);
/// Small generating list: greedy over members by (element order desc, index
/// asc). Throws if `members` is not closed.
std::vector<elem_t> nice_generators(const Group& g, const Bits& members);
void require_same_parent(const GroupPtr& a, const GroupPtr& b, const char* what);

}  // namespace detail

}  // namespace amalgam
