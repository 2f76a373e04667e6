#pragma once

#include <string>
#include <vector>

#include "amalgam/catalog.hpp"
#include "amalgam/lattice.hpp"
#include "amalgam/products.hpp"
#include "amalgam/specdsl.hpp"
#include "amalgam/words.hpp"

namespace amalgam::testing {

inline EvaluatedSpec eval(const std::string& text, const Limits& limits = {}) {
  return evaluate_spec(parse_spec(text), limits);
}

inline CentralProduct d8c4() { return eval("central(D(8), C(4); r^2 = y^2)").cp; }
inline CentralProduct dic3c4() { return eval("central(Dic(3), C(4); a^3 = y^2)").cp; }

inline Subgroup span_of(const GroupPtr& g, const std::string& words) {
  auto gens = parse_word_list(*g, words);
  return Subgroup::generated(g, std::span<const elem_t>(gens.data(), gens.size()));
}

/// Catalog groups of order <= cap, for exhaustive identity suites.
inline std::vector<GroupPtr> small_catalog(unsigned cap = 24) {
  std::vector<GroupPtr> out;
  out.push_back(trivial_group());
  for (unsigned n = 2; n <= cap; ++n) out.push_back(cyclic_group(n));
  for (unsigned n = 4; n <= cap; n += 2) out.push_back(dihedral_group(n));
  out.push_back(quaternion_group());
  for (unsigned n = 3; 4 * n <= cap; ++n) out.push_back(dicyclic_group(n));
  for (unsigned n = 3; n <= 6; ++n) {
    auto s = symmetric_group(n);
    if (s->order() <= cap) out.push_back(std::move(s));
    auto a = alternating_group(n);
    if (a->order() <= cap) out.push_back(std::move(a));
  }
  return out;
}

/// Every central product the differential acceptance suite runs on:
/// catalog factor pairs amalgamated over their canonical central involution,
/// capped at |G| <= 64.
inline std::vector<std::string> differential_pool_specs() {
  struct Factor {
    const char* spec;
    const char* involution;  // generator word for the central involution
    unsigned order;
  };
  const std::vector<Factor> factors = {
      {"C(4)", "x^2", 4},    {"C(8)", "x^4", 8},    {"D(8)", "r^2", 8},
      {"Q8", "i^2", 8},      {"D(16)", "r^4", 16},  {"Dic(3)", "a^3", 12},
      {"Dic(4)", "a^4", 16}, {"Dic(6)", "a^6", 24},
  };
  std::vector<std::string> specs;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i; j < factors.size(); ++j) {
      if (std::uint64_t(factors[i].order) * factors[j].order / 2 > 64) continue;
      specs.push_back(std::string("central(") + factors[i].spec + ", " + factors[j].spec +
                      "; " + factors[i].involution + " = " + factors[j].involution + ")");
    }
  return specs;
}

}  // namespace amalgam::testing
