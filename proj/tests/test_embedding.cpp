#include <doctest.h>

#include <deque>
#include <map>

#include "amalgam/catalog.hpp"
#include "amalgam/embedding.hpp"
#include "amalgam/lattice.hpp"
#include "amalgam/words.hpp"
#include "test_helpers.hpp"

using namespace amalgam;
using amalgam::testing::span_of;

namespace {

bool normal_in(const Subgroup& a, const Subgroup& b) {
  if (!b.contains(a)) return false;
  const Group& g = *a.parent();
  for (elem_t x : b.gens())
    if (detail::conjugate_bits(g, a.members(), x) != a.members()) return false;
  return true;
}

// Independent defect oracle: shortest chain H = H_0 ⊴ H_1 ⊴ ... ⊴ H_r = G
// through the full subgroup lattice. -1 when G is unreachable.
int bfs_min_defect(const std::vector<Subgroup>& lattice, const Subgroup& h) {
  std::map<Bits, int> dist;
  std::deque<const Subgroup*> queue;
  dist[h.members()] = 0;
  queue.push_back(&h);
  while (!queue.empty()) {
    const Subgroup* cur = queue.front();
    queue.pop_front();
    int d = dist[cur->members()];
    if (cur->is_full()) return d;
    for (const Subgroup& next : lattice) {
      if (dist.count(next.members())) continue;
      if (normal_in(*cur, next)) {
        dist[next.members()] = d + 1;
        queue.push_back(&next);
      }
    }
  }
  return -1;
}

// H inside the stand-alone copy of L.
Subgroup restrict_to(const Subgroup& h, const ExtractedGroup& l) {
  Bits members(l.group->order());
  for (std::uint32_t i = 0; i < l.group->order(); ++i)
    if (h.contains(l.to_parent[i])) members.set(i);
  return Subgroup::from_members(l.group, members);
}

}  // namespace

TEST_CASE("normality by definition") {
  auto cp = amalgam::testing::d8c4();
  const GroupPtr& g = cp.group;

  CHECK(is_normal_definition(Subgroup::full(g)).holds());
  CHECK(is_normal_definition(center(g)).holds());

  auto v = is_normal_definition(span_of(g, "s"));
  CHECK_FALSE(v.holds());
  REQUIRE(v.witness_element.has_value());
  CHECK(g->label(*v.witness_element) == "r");  // conjugation by r moves <s>
}

TEST_CASE("normality by commutator characterization") {
  auto cp = amalgam::testing::d8c4();
  const GroupPtr& g = cp.group;

  SUBCASE("<rsy> is normal: [<rsy>, D8] = <r^2> lands inside") {
    CHECK(is_normal_characterization(cp, span_of(g, "rsy")).holds());
  }
  SUBCASE("<s> is not, with the commutator witness in <r^2> \\ <s>") {
    auto v = is_normal_characterization(cp, span_of(g, "s"));
    CHECK_FALSE(v.holds());
    REQUIRE(v.witness_element.has_value());
    CHECK(span_of(g, "r^2").contains(*v.witness_element));
    CHECK_FALSE(span_of(g, "s").contains(*v.witness_element));
  }
  SUBCASE("the trivial subgroup is normal") {
    CHECK(is_normal_characterization(cp, Subgroup::trivial(g)).holds());
  }
}

TEST_CASE("normality through the preimage") {
  auto cp = amalgam::testing::d8c4();
  const GroupPtr& g = cp.group;

  CHECK(is_normal_preimage(cp, Subgroup::full(g)).holds());

  Subgroup k_rsy = cp.epsilon.preimage(span_of(g, "rsy"));
  CHECK(k_rsy.order() == 8);
  CHECK(is_normal_preimage(cp, span_of(g, "rsy")).holds());

  Subgroup k_s = cp.epsilon.preimage(span_of(g, "s"));
  CHECK(k_s.order() == 4);
  CHECK_FALSE(is_normal_preimage(cp, span_of(g, "s")).holds());
}

TEST_CASE("three normality routes agree everywhere") {
  for (const char* text : {"central(D(8), C(4); r^2 = y^2)", "central(Dic(3), C(4); a^3 = y^2)"}) {
    auto cp = amalgam::testing::eval(text).cp;
    for (const auto& h : all_subgroups(cp.group)) {
      bool def = is_normal_definition(h).holds();
      CHECK(def == is_normal_characterization(cp, h).holds());
      CHECK(def == is_normal_preimage(cp, h).holds());
    }
  }
}

TEST_CASE("subnormal defect oracle") {
  auto cp = amalgam::testing::d8c4();
  const GroupPtr& g = cp.group;

  SUBCASE("H = G has defect 0") {
    auto v = subnormal_defect_oracle(Subgroup::full(g));
    CHECK(v.holds());
    CHECK(*v.defect == 0);
  }
  SUBCASE("<s> has defect exactly 2") {
    auto v = subnormal_defect_oracle(span_of(g, "s"));
    CHECK(v.holds());
    CHECK(*v.defect == 2);
  }
  SUBCASE("a transposition subgroup of S3 is not subnormal") {
    auto s3 = symmetric_group(3);
    auto v = subnormal_defect_oracle(span_of(s3, "s1"));
    CHECK_FALSE(v.holds());
    CHECK(v.witness.has_value());
  }
  SUBCASE("closure chain matches the lattice shortest-chain oracle") {
    for (const char* spec : {"D(8)", "Dic(3)", "S(4)", "A(4)", "D(12)"}) {
      auto grp = catalog_group(spec);
      auto lattice = all_subgroups(grp, Limits{.max_enum = 200});
      for (const auto& h : lattice) {
        int expected = bfs_min_defect(lattice, h);
        auto v = subnormal_defect_oracle(h);
        if (expected < 0) {
          CHECK_FALSE(v.holds());
        } else {
          REQUIRE(v.holds());
          CHECK(*v.defect == expected);
        }
      }
    }
  }
}

TEST_CASE("subnormality by iterated commutators") {
  auto cp = amalgam::testing::d8c4();
  const GroupPtr& g = cp.group;
  Subgroup s = span_of(g, "s");

  CHECK_FALSE(is_subnormal_characterization(cp, s, 1).holds());
  CHECK(is_subnormal_characterization(cp, s, 2).holds());
  CHECK_THROWS_AS((void)is_subnormal_characterization(cp, s, 0), error);

  // normal subgroups satisfy r = 1 (the base case is the normality test)
  CHECK(is_subnormal_characterization(cp, span_of(g, "rsy"), 1).holds());

  // every subgroup of D8∘C4 is subnormal with r <= 4
  for (const auto& h : all_subgroups(g)) {
    bool some_r = false;
    for (unsigned r = 1; r <= 4 && !some_r; ++r)
      some_r = is_subnormal_characterization(cp, h, r).holds();
    CHECK(some_r);
  }
}

TEST_CASE("oracle defect equals the minimal characterization r") {
  for (const char* text : {"central(D(8), C(4); r^2 = y^2)", "central(Dic(3), C(4); a^3 = y^2)"}) {
    auto cp = amalgam::testing::eval(text).cp;
    for (const auto& h : all_subgroups(cp.group)) {
      auto oracle = subnormal_defect_oracle(h);
      auto scan = subnormal_characterization_scan(cp, h);
      auto pre = is_subnormal_preimage(cp, h);
      REQUIRE(oracle.holds() == scan.holds());
      REQUIRE(oracle.holds() == pre.holds());
      if (oracle.holds()) {
        CHECK(*oracle.defect == *scan.defect);
        CHECK(*oracle.defect == *pre.defect);
      }
    }
  }
}

TEST_CASE("abnormality by definition") {
  auto cp = amalgam::testing::d8c4();
  const GroupPtr& g = cp.group;

  CHECK(is_abnormal_definition(Subgroup::full(g)).holds());

  SUBCASE("no proper subgroup of a nilpotent group is abnormal") {
    for (const auto& h : all_subgroups(g)) {
      if (h.is_full()) continue;
      auto v = is_abnormal_definition(h);
      CHECK_FALSE(v.holds());
      CHECK(v.witness.has_value());
    }
  }
  SUBCASE("abnormal subgroups are self-normalizing") {
    for (const char* spec : {"S(3)", "S(4)", "Dic(3)", "D(12)"}) {
      auto grp = catalog_group(spec);
      for (const auto& h : all_subgroups(grp, Limits{.max_enum = 200}))
        if (is_abnormal_definition(h).holds()) CHECK(normalizer(grp, h) == h);
    }
  }
}

TEST_CASE("abnormality properties on solvable catalog groups") {
  for (const char* spec : {"S(3)", "S(4)", "Dic(3)", "D(8)", "D(12)", "Dic(6)"}) {
    CAPTURE(spec);
    auto g = catalog_group(spec);
    auto lattice = all_subgroups(g, Limits{.max_enum = 200});

    std::vector<bool> abnormal(lattice.size());
    std::vector<bool> normal(lattice.size());
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      abnormal[i] = is_abnormal_definition(lattice[i]).holds();
      normal[i] = is_normal_definition(lattice[i]).holds();
    }

    for (std::size_t i = 0; i < lattice.size(); ++i) {
      const Subgroup& h = lattice[i];

      // maximal subgroups are abnormal iff not normal
      bool maximal = !h.is_full() && std::none_of(lattice.begin(), lattice.end(),
                                                  [&](const Subgroup& l) {
                                                    return !l.is_full() && l.contains(h) &&
                                                           !(l == h);
                                                  });
      if (maximal) CHECK(abnormal[i] == !normal[i]);

      // normal ∧ abnormal forces H = G
      if (normal[i] && abnormal[i]) CHECK(h.is_full());

      // persistence: H abn G and H <= L <= G gives H abn L and L abn G
      if (abnormal[i] && !h.is_full()) {
        for (std::size_t j = 0; j < lattice.size(); ++j) {
          if (!lattice[j].contains(h)) continue;
          CHECK(abnormal[j]);
          auto l = subgroup_as_group(lattice[j]);
          CHECK(is_abnormal_definition(restrict_to(h, l)).holds());
        }
      }
    }

    // homomorphic images of abnormal subgroups stay abnormal
    for (const auto& n : lattice) {
      if (!is_normal_definition(n).holds()) continue;
      auto q = quotient(g, n, Limits{.max_enum = 200});
      for (std::size_t i = 0; i < lattice.size(); ++i)
        if (abnormal[i]) CHECK(is_abnormal_definition(q.projection.image_of(lattice[i])).holds());
    }
  }
}

TEST_CASE("abnormality through the central-product factorization") {
  SUBCASE("H = G decomposes and both projections are the full factors") {
    auto cp = amalgam::testing::d8c4();
    CHECK(is_abnormal_central(cp, Subgroup::full(cp.group)).holds());
  }
  SUBCASE("Dic(3)∘C4: the Sylow-2 image is abnormal both ways") {
    auto cp = amalgam::testing::dic3c4();
    // H = ε(<b> × C4): join the images of b and y
    Subgroup h = span_of(cp.group, "b, y");
    CHECK(h.order() == 8);
    auto def = is_abnormal_definition(h);
    auto fast = is_abnormal_central(cp, h);
    CHECK(def.holds());
    CHECK(fast.holds());
    // ... iff <b> is abnormal in Dic(3): its normalizer is itself
    auto dic3 = dicyclic_group(3);
    CHECK(normalizer(dic3, span_of(dic3, "b")) == span_of(dic3, "b"));
  }
  SUBCASE("agreement with the definition across two lattices") {
    for (const char* text :
         {"central(D(8), C(4); r^2 = y^2)", "central(Dic(3), C(4); a^3 = y^2)"}) {
      auto cp = amalgam::testing::eval(text).cp;
      for (const auto& h : all_subgroups(cp.group)) {
        auto fast = is_abnormal_central(cp, h);
        REQUIRE(fast.state != VerdictState::hypothesis_not_met);  // solvable factors here
        CHECK(fast.holds() == is_abnormal_definition(h).holds());
        CHECK(is_abnormal_preimage(cp, h).holds() == fast.holds());
      }
    }
  }
}

TEST_CASE("the non-solvable hypothesis is refused, not coerced" * doctest::timeout(120)) {
  auto ev = amalgam::testing::eval("direct(A(5), A(5))");
  Subgroup delta = diagonal_subgroup(ev);
  auto v = is_abnormal_central(ev.cp, delta);
  CHECK(v.state == VerdictState::hypothesis_not_met);
  CHECK_FALSE(derived_series(alternating_group(5)).solvable);
}

TEST_CASE("classify_subgroups") {
  SUBCASE("D8∘C4 report") {
    auto cp = amalgam::testing::d8c4();
    auto report = classify_subgroups(cp);
    CHECK(report.total == 23);
    CHECK(report.total_normal == 17);
    CHECK(report.rows.size() == 23);
    CHECK(report.group_type == "D8∘C4");
    for (const auto& row : report.rows) {
      CHECK(row.methods_agree);
      CHECK(row.defect >= 0);  // every subgroup is subnormal here
      CHECK(row.abnormal == (row.order == 16));
    }
  }
  SUBCASE("trivial group classifies as one self row") {
    auto ev = amalgam::testing::eval("Triv");
    auto report = classify_subgroups(ev.cp);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].normal);
    CHECK(report.rows[0].defect == 0);
    CHECK(report.rows[0].abnormal);
    CHECK(report.rows[0].type == "1");
  }
  SUBCASE("enumeration refusal propagates as a budget error") {
    auto ev = amalgam::testing::eval("direct(A(5), A(5))");
    CHECK_THROWS_AS((void)classify_subgroups(ev.cp), error);
  }
}
