#include <doctest.h>

#include "amalgam/catalog.hpp"
#include "amalgam/lattice.hpp"
#include "amalgam/words.hpp"
#include "test_helpers.hpp"

using namespace amalgam;
using amalgam::testing::small_catalog;
using amalgam::testing::span_of;

TEST_CASE("generated_subgroup") {
  auto d8 = dihedral_group(8);
  CHECK(generated_subgroup(d8, {}).order() == 1);
  CHECK(span_of(d8, "r, s").order() == 8);

  auto cp = amalgam::testing::d8c4();
  Subgroup h = span_of(cp.group, "rsy");
  CHECK(h.order() == 4);
  // (rsy)^2 = r^2 by word evaluation in the constructed table
  elem_t rsy = parse_word(*cp.group, "rsy");
  CHECK(cp.group->mul(rsy, rsy) == parse_word(*cp.group, "r^2"));
}

TEST_CASE("commutator subgroups") {
  auto cp = amalgam::testing::d8c4();
  const GroupPtr& g = cp.group;

  SUBCASE("[A, 1] = 1") {
    Subgroup a = span_of(g, "r");
    CHECK(commutator_subgroup(a, Subgroup::trivial(g)).is_trivial());
  }
  SUBCASE("[<rsy>, D8-factor] = <r^2>") {
    Subgroup lhs = commutator_subgroup(span_of(g, "rsy"), cp.u1);
    CHECK(lhs == span_of(g, "r^2"));
  }
  SUBCASE("[U1, U2] = 1 in any constructed central product") {
    CHECK(commutator_subgroup(cp.u1, cp.u2).is_trivial());
    auto dic = amalgam::testing::dic3c4();
    CHECK(commutator_subgroup(dic.u1, dic.u2).is_trivial());
  }
  SUBCASE("seeded computation agrees with the all-pairs oracle") {
    auto subs = all_subgroups(g);
    for (const auto& a : subs)
      for (const auto& b : subs)
        CHECK(commutator_subgroup(a, b) == commutator_subgroup_all_pairs(a, b));
  }
}

TEST_CASE("iterated commutators") {
  auto cp = amalgam::testing::d8c4();
  const GroupPtr& g = cp.group;
  Subgroup s = span_of(g, "s");

  CHECK(iterated_commutator(cp.u1, s, 1) == commutator_subgroup(cp.u1, s));
  CHECK(iterated_commutator(cp.u1, s, 2).is_trivial());  // [r,s,s] = 1
  // descending-stable once trivial
  CHECK(iterated_commutator(cp.u1, s, 3).is_trivial());
  CHECK(iterated_commutator(cp.u1, s, 7).is_trivial());
  CHECK_THROWS_AS((void)iterated_commutator(cp.u1, s, 0), error);
}

TEST_CASE("join and intersect") {
  auto cp = amalgam::testing::d8c4();
  const GroupPtr& g = cp.group;
  Subgroup a = span_of(g, "rsy");

  CHECK(join(a, a) == a);
  CHECK(intersect(a, a) == a);
  CHECK(intersect(a, cp.u2) == span_of(g, "r^2"));  // <rsy> ∩ C4-factor
  CHECK(join(span_of(g, "s"), span_of(g, "r^2")) == span_of(g, "r^2, s"));

  auto c4 = cyclic_group(4);
  CHECK_THROWS_AS((void)join(Subgroup::full(c4), Subgroup::full(g)), error);
}

TEST_CASE("derived series") {
  SUBCASE("abelian groups stop immediately") {
    auto c6 = cyclic_group(6);
    auto ds = derived_series(c6);
    REQUIRE(ds.terms.size() == 2);
    CHECK(ds.terms[0].is_full());
    CHECK(ds.terms[1].is_trivial());
    CHECK(ds.solvable);
  }
  SUBCASE("A5 is perfect, hence not solvable") {
    auto ds = derived_series(alternating_group(5));
    CHECK(ds.terms.size() == 1);
    CHECK(ds.stabilized);
    CHECK_FALSE(ds.solvable);
  }
  SUBCASE("D8 has derived series D8 > <r^2> > 1") {
    auto d8 = dihedral_group(8);
    auto ds = derived_series(d8);
    REQUIRE(ds.terms.size() == 3);
    CHECK(ds.terms[1] == span_of(d8, "r^2"));
    CHECK(ds.terms[2].is_trivial());
    CHECK(ds.solvable);
  }
  SUBCASE("terms are normal in G across the catalog") {
    for (const auto& g : small_catalog(24)) {
      for (const auto& term : derived_series(g).terms)
        for (elem_t x : g->generator_indices())
          CHECK(detail::conjugate_bits(*g, term.members(), x) == term.members());
    }
  }
}

TEST_CASE("all_subgroups") {
  SUBCASE("trivial group has exactly one subgroup") {
    CHECK(all_subgroups(trivial_group()).size() == 1);
  }
  SUBCASE("C4 has the divisor lattice 1 < <x^2> < C4") {
    auto c4 = cyclic_group(4);
    auto subs = all_subgroups(c4);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].is_trivial());
    CHECK(subs[1] == span_of(c4, "x^2"));
    CHECK(subs[2].is_full());
  }
  SUBCASE("D8∘C4 has 23 subgroups") {
    auto cp = amalgam::testing::d8c4();
    CHECK(all_subgroups(cp.group).size() == 23);
  }
  SUBCASE("enumeration cap is an explicit budget error") {
    auto s6 = symmetric_group(6);  // order 720 > default cap 128
    CHECK_THROWS_AS((void)all_subgroups(s6), error);
    try {
      (void)all_subgroups(s6);
    } catch (const error& e) {
      CHECK(e.kind() == errc::budget);
    }
    // raising the cap makes it legal
    Limits wide;
    wide.max_enum = 200;
    CHECK(all_subgroups(symmetric_group(4), wide).size() == 30);
  }
  SUBCASE("output is duplicate-free, valid and closed under conjugation") {
    auto cp = amalgam::testing::d8c4();
    auto subs = all_subgroups(cp.group);
    for (std::size_t i = 0; i < subs.size(); ++i) {
      for (std::size_t j = i + 1; j < subs.size(); ++j)
        CHECK_FALSE(subs[i] == subs[j]);
      // Subgroup invariants: generators generate, Lagrange
      CHECK(detail::close_under_products(*cp.group, subs[i].gens()) == subs[i].members());
      CHECK(cp.group->order() % subs[i].order() == 0);
      // conjugates of a listed subgroup are listed
      for (elem_t x : cp.group->generator_indices()) {
        Subgroup conj = conjugate_subgroup(subs[i], x);
        CHECK(std::any_of(subs.begin(), subs.end(),
                          [&](const Subgroup& s) { return s == conj; }));
      }
    }
  }
}

// Five classical commutator identities, exhaustively over all
// subgroup pairs of every catalog group of order <= 24.
TEST_CASE("commutator identities hold across small catalog lattices") {
  for (const auto& g : small_catalog(24)) {
    auto subs = all_subgroups(g, Limits{.max_enum = 200});
    for (const auto& a : subs)
      for (const auto& b : subs) {
        Subgroup ab = commutator_subgroup(a, b);
        Subgroup joined = join(a, b);

        // (1) [A,B] = [B,A] is normal in <A,B>
        CHECK(ab == commutator_subgroup(b, a));
        for (elem_t x : joined.gens())
          CHECK(detail::conjugate_bits(*g, ab.members(), x) == ab.members());

        // (2) [A,B] <= A iff B <= N_G(A)
        CHECK(a.contains(ab) == normalizer(g, a).contains(b));

        // (4) A, B normal in G implies [A,B] normal in G
        auto is_normal = [&](const Subgroup& h) {
          for (elem_t x : g->generator_indices())
            if (detail::conjugate_bits(*g, h.members(), x) != h.members()) return false;
          return true;
        };
        if (is_normal(a) && is_normal(b)) CHECK(is_normal(ab));

        // (5) <A^B> = A·[A,B]
        std::vector<elem_t> conj_gens;
        for (elem_t x : b.elements())
          for (elem_t s : a.gens()) conj_gens.push_back(g->conj(s, x));
        Subgroup closure = Subgroup::generated(
            g, std::span<const elem_t>(conj_gens.data(), conj_gens.size()));
        CHECK(closure.members() == product_set(a, ab));
      }
  }
}

TEST_CASE("iterated commutators stay inside the normal closure") {
  auto cp = amalgam::testing::d8c4();
  auto subs = all_subgroups(cp.group);
  for (const auto& x : subs)
    for (const auto& h : subs) {
      Subgroup lhs = commutator_subgroup(x, h);
      Subgroup closure = normal_closure(x, h);
      CHECK(closure.contains(lhs));
    }
}
