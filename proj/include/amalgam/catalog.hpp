#pragma once

#include <string_view>

#include "amalgam/group.hpp"

namespace amalgam {

GroupPtr trivial_group(const Limits& limits = {});
/// C(n), generator x.
GroupPtr cyclic_group(unsigned n, const Limits& limits = {});
/// D(n) of order n (n even, >= 4): r^(n/2) = s^2 = 1, rsr = s.
GroupPtr dihedral_group(unsigned order, const Limits& limits = {});
/// Dic(n) of order 4n: a^(2n) = 1, b^2 = a^n, b^-1 a b = a^-1.
GroupPtr dicyclic_group(unsigned n, const Limits& limits = {});
/// Q8 = Dic(2) with generators named i, j.
GroupPtr quaternion_group(const Limits& limits = {});
/// S(n), n <= 6, adjacent transpositions s1..s(n-1).
GroupPtr symmetric_group(unsigned n, const Limits& limits = {});
/// A(n), n <= 6, generators t = (123) and an n- or (n-1)-cycle c.
GroupPtr alternating_group(unsigned n, const Limits& limits = {});

/// Looks up a catalog name such as "D(8)", "C(4)", "Q8", "Dic(3)", "S(5)",
/// "A(5)", "Triv". Unknown names and out-of-range parameters are errors.
GroupPtr catalog_group(std::string_view name, const Limits& limits = {});
GroupPtr catalog_group(std::string_view family, unsigned param, const Limits& limits = {});

}  // namespace amalgam
