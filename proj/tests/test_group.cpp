#include <doctest.h>

#include <random>

#include "amalgam/catalog.hpp"
#include "amalgam/lattice.hpp"
#include "amalgam/words.hpp"
#include "test_helpers.hpp"

using namespace amalgam;
using amalgam::testing::small_catalog;
using amalgam::testing::span_of;

TEST_CASE("catalog groups have the advertised orders and presentations") {
  auto d8 = dihedral_group(8);
  CHECK(d8->order() == 8);
  elem_t r = parse_word(*d8, "r");
  elem_t s = parse_word(*d8, "s");
  CHECK(d8->power(r, 4) == d8->identity());
  CHECK(d8->mul(s, s) == d8->identity());
  // rsr = s
  CHECK(d8->mul(d8->mul(r, s), r) == s);

  CHECK(cyclic_group(1)->order() == 1);
  CHECK(trivial_group()->order() == 1);
  CHECK(quaternion_group()->order() == 8);
  CHECK(dicyclic_group(3)->order() == 12);
  CHECK(symmetric_group(6)->order() == 720);
  CHECK(alternating_group(6)->order() == 360);

  auto a5 = alternating_group(5);
  CHECK(a5->order() == 60);
  // simple: only trivial proper normal subgroups
  for (const auto& h : all_subgroups(a5)) {
    if (h.order() == 1 || h.order() == 60) continue;
    bool normal = true;
    for (elem_t g : a5->generator_indices())
      if (detail::conjugate_bits(*a5, h.members(), g) != h.members()) normal = false;
    CHECK_FALSE(normal);
  }
}

TEST_CASE("catalog rejects unknown names and out-of-range parameters") {
  CHECK_THROWS_AS((void)catalog_group("E(8)"), error);
  CHECK_THROWS_AS((void)symmetric_group(7), error);
  CHECK_THROWS_AS((void)alternating_group(9), error);
  CHECK_THROWS_AS((void)dihedral_group(7), error);
  CHECK_THROWS_AS((void)dihedral_group(2), error);
  CHECK_THROWS_AS((void)cyclic_group(0), error);
  CHECK(catalog_group("Dic(3)")->order() == 12);
  CHECK_THROWS_AS((void)catalog_group("C(5000)"), error);  // order cap
  try {
    (void)catalog_group("C(5000)");
  } catch (const error& e) {
    CHECK(e.kind() == errc::budget);
  }
}

TEST_CASE("element arithmetic and conjugation in D8") {
  auto d8 = dihedral_group(8);
  elem_t r = parse_word(*d8, "r");
  elem_t s = parse_word(*d8, "s");

  // independent table evaluation of r^-1 s r
  elem_t expected = d8->mul(d8->mul(d8->inv(r), s), r);
  CHECK(expected == parse_word(*d8, "r^2s"));
  CHECK(d8->conj(s, r) == expected);

  Element es{d8, s}, er{d8, r};
  CHECK(conjugate(es, Element{d8, d8->identity()}) == es);
  CHECK(inverse(Element{d8, d8->identity()}).index == d8->identity());
  CHECK(multiply(er, es).index == parse_word(*d8, "rs"));

  auto c4 = cyclic_group(4);
  CHECK_THROWS_AS((void)multiply(er, Element{c4, 1}), error);
  CHECK_THROWS_AS((void)conjugate(er, Element{c4, 1}), error);
}

TEST_CASE("conjugation round-trips on catalog groups up to order 64") {
  auto groups = small_catalog(24);
  groups.push_back(alternating_group(5));   // order 60
  groups.push_back(dicyclic_group(16));     // order 64
  for (const auto& g : groups) {
    bool ok = true;
    for (std::uint32_t h = 0; h < g->order() && ok; ++h)
      for (std::uint32_t x = 0; x < g->order(); ++x)
        if (g->conj(g->conj(elem_t(h), elem_t(x)), g->inv(elem_t(x))) != elem_t(h)) {
          ok = false;
          break;
        }
    CHECK(ok);
  }
}

TEST_CASE("center is a normal abelian subgroup of dividing order") {
  SUBCASE("Z(D8) = {1, r^2}") {
    auto d8 = dihedral_group(8);
    Subgroup z = center(d8);
    CHECK(z.order() == 2);
    CHECK(z.contains(parse_word(*d8, "r^2")));
  }
  SUBCASE("abelian groups are their own center") {
    auto c4 = cyclic_group(4);
    CHECK(center(c4).order() == 4);
  }
  SUBCASE("Z(A5) is trivial, by full scan") {
    auto a5 = alternating_group(5);
    // oracle: scan all pairs rather than generator commutation
    Bits z(a5->order());
    for (std::uint32_t g = 0; g < a5->order(); ++g) {
      bool central = true;
      for (std::uint32_t x = 0; x < a5->order() && central; ++x)
        central = a5->mul(elem_t(g), elem_t(x)) == a5->mul(elem_t(x), elem_t(g));
      if (central) z.set(g);
    }
    CHECK(z.count() == 1);
    CHECK(center(a5).members() == z);
  }
  SUBCASE("invariants across the catalog") {
    for (const auto& g : small_catalog(16)) {
      Subgroup z = center(g);
      CHECK(g->order() % z.order() == 0);
      for (elem_t x : g->generator_indices())
        CHECK(detail::conjugate_bits(*g, z.members(), x) == z.members());
      for (elem_t a : z.elements())
        for (elem_t b : z.elements()) CHECK(g->mul(a, b) == g->mul(b, a));
    }
  }
}

TEST_CASE("normalizer contains the subgroup and fixes it") {
  auto d8c4 = amalgam::testing::d8c4();
  const GroupPtr& g = d8c4.group;

  SUBCASE("N_G(G) = G") {
    CHECK(normalizer(g, Subgroup::full(g)).order() == g->order());
  }
  SUBCASE("N_{D8C4}(<s>) by full scan") {
    Subgroup h = span_of(g, "s");
    // oracle: scan all 16 elements (y is central here, so <s, y> normalizes)
    Bits expected(g->order());
    for (std::uint32_t x = 0; x < g->order(); ++x) {
      bool fixes = true;
      for (elem_t m : h.elements())
        if (!h.contains(g->conj(m, elem_t(x)))) fixes = false;
      if (fixes) expected.set(x);
    }
    Subgroup n = normalizer(g, h);
    CHECK(n.members() == expected);
    CHECK(n.order() == 8);
    CHECK(n == span_of(g, "s, y"));
    CHECK(n.contains(span_of(g, "r^2, s")));
  }
  SUBCASE("general containment and stability") {
    for (const auto& h : all_subgroups(g)) {
      Subgroup n = normalizer(g, h);
      CHECK(n.contains(h));
      for (elem_t x : n.elements()) CHECK(conjugate_subgroup(h, x) == h);
    }
  }
  SUBCASE("centralizer of the center is everything") {
    CHECK(centralizer(g, center(g)).order() == g->order());
  }
}

TEST_CASE("conjugate_subgroup") {
  auto d8 = dihedral_group(8);
  Subgroup h = span_of(d8, "s");
  elem_t r = parse_word(*d8, "r");

  CHECK(conjugate_subgroup(h, d8->identity()) == h);
  CHECK(conjugate_subgroup(h, r) == span_of(d8, "r^2s"));
  CHECK(conjugate_subgroup(h, r).order() == h.order());

  Subgroup z = center(d8);
  for (std::uint32_t x = 0; x < d8->order(); ++x)
    CHECK(conjugate_subgroup(z, elem_t(x)) == z);
}

TEST_CASE("group construction validates its invariants") {
  SUBCASE("non-Latin table is rejected") {
    // table[1][1] duplicates 1 in a row
    std::vector<elem_t> table = {0, 1, 1, 1};
    CHECK_THROWS_AS((void)Group::create("bad", 2, std::move(table), {}, {{"g", 1}}), error);
  }
  SUBCASE("Latin square that is not a group is rejected") {
    // order-5 quasigroup with an involution; the only group of order 5 is C5
    std::vector<elem_t> table = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 3, 4, 0, 1,
                                 3, 4, 1, 2, 0, 4, 2, 0, 1, 3};
    CHECK_THROWS_AS((void)Group::create("bad", 5, std::move(table), {}, {{"g", 1}}), error);
  }
  SUBCASE("generators must generate") {
    auto c4 = cyclic_group(4);
    std::vector<elem_t> table;
    for (std::uint32_t a = 0; a < 4; ++a)
      for (std::uint32_t b = 0; b < 4; ++b) table.push_back(c4->mul(elem_t(a), elem_t(b)));
    CHECK_THROWS_AS(
        (void)Group::create("bad", 4, std::move(table), {}, {{"x", 2}}),  // <x^2> is proper
        error);
  }
  SUBCASE("subgroup factories reject non-closed member sets") {
    auto c4 = cyclic_group(4);
    Bits members(4);
    members.set(0);
    members.set(1);  // {1, x} is not closed
    CHECK_THROWS_AS((void)Subgroup::from_members(c4, members), error);
  }
}

TEST_CASE("words parse and render") {
  auto d8 = dihedral_group(8);
  CHECK(parse_word(*d8, "1") == d8->identity());
  CHECK(parse_word(*d8, "r^-1") == d8->inv(parse_word(*d8, "r")));
  CHECK(parse_word(*d8, "r^2 * s") == parse_word(*d8, "r^2s"));
  CHECK(parse_word(*d8, " r s ") == parse_word(*d8, "rs"));
  CHECK_THROWS_AS((void)parse_word(*d8, "q"), error);
  CHECK_THROWS_AS((void)parse_word(*d8, "r^"), error);
  CHECK(d8->label(parse_word(*d8, "r^3s")) == "r^3s");

  auto s4 = symmetric_group(4);
  CHECK(parse_word(*s4, "s1s2s3") != s4->identity());
  CHECK(s4->label(parse_word(*s4, "s1")) == "(1 2)");
}
