#include "doctest.h"
#include "hforge/grp.hpp"

using namespace hforge;

TEST_CASE("standard tables are valid groups") {
  // construction itself runs the group-axiom checks
  for (const FiniteGroup& g :
       {cyclic_table(7), dihedral_table(4), dihedral_table(6),
        quaternion_table(), symmetric3_table(), klein_table()})
    CHECK(g.n > 0);
  CHECK(cyclic_table(5).is_abelian());
  CHECK(!dihedral_table(4).is_abelian());
  CHECK(!quaternion_table().is_abelian());
}

TEST_CASE("center, commutators, class two") {
  FiniteGroup d4 = dihedral_table(4);
  GrpSubgroup z = center(d4);
  CHECK(z.size() == 2);
  CHECK(z.contains(2));  // t^2
  GrpSubgroup comm = commutator_subgroup(d4);
  CHECK(comm == z);
  CHECK(is_nilquadratic(d4));
  CHECK(is_nilquadratic(quaternion_table()));
  CHECK(!is_nilquadratic(symmetric3_table()));
  CHECK(center(quaternion_table()).size() == 2);
  CHECK(center(symmetric3_table()).size() == 1);
}

TEST_CASE("subgroup enumeration and quotients") {
  FiniteGroup d4 = dihedral_table(4);
  auto subs = enumerate_grp_subgroups(d4);
  CHECK(subs.size() == 10);
  int normal = 0, abelian = 0;
  for (const auto& s : subs) {
    if (is_normal(d4, s)) ++normal;
    if (is_abelian_subgroup(d4, s)) ++abelian;
  }
  CHECK(normal == 6);   // 1, center, three of index 2, whole group
  CHECK(abelian == 9);  // all but D4 itself
  QuotientResult q = quotient(d4, center(d4));
  CHECK(q.group.n == 4);
  CHECK(q.group.is_abelian());
  for (int u = 0; u < q.group.n; ++u) CHECK(q.group.mul(u, u) == q.group.id);
}

TEST_CASE("abelian decomposition recovers cyclic factors") {
  for (const FinAbGroup& g :
       {FinAbGroup({8}), FinAbGroup({2, 4}), FinAbGroup({2, 2, 2}),
        FinAbGroup({3, 3}), FinAbGroup({12})}) {
    AbDecomposition d = abelian_decomposition(realize_ab(g));
    CHECK(d.group.size() == g.size());
    CHECK(d.group.exponent() == g.exponent());
    // to_index / to_id invert each other and respect the operation
    FiniteGroup tbl = realize_ab(g);
    for (int u = 0; u < tbl.n; ++u) {
      CHECK(d.to_id[d.to_index[u]] == u);
      for (int v = 0; v < tbl.n; ++v) {
        Coord s = d.group.index_of(d.group.add(
            d.group.element_at(d.to_index[u]), d.group.element_at(d.to_index[v])));
        CHECK(d.to_id[s] == tbl.mul(u, v));
      }
    }
  }
  CHECK_THROWS_AS(abelian_decomposition(dihedral_table(4)), std::exception);
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(realize_ab(FinAbGroup({2, 2})), klein_table()));
  CHECK(find_isomorphism(dihedral_table(3), symmetric3_table()));
  CHECK(!find_isomorphism(dihedral_table(4), quaternion_table()));
  CHECK(!find_isomorphism(realize_ab(FinAbGroup({4})),
                          realize_ab(FinAbGroup({2, 2}))));
  auto iso = find_isomorphism(realize_ab(FinAbGroup({6})),
                              realize_ab(FinAbGroup({2, 3})));
  REQUIRE(iso.has_value());
}

TEST_CASE("homomorphism enumeration counts") {
  CHECK(all_homomorphisms(realize_ab(FinAbGroup({2})),
                          realize_ab(FinAbGroup({2})))
            .size() == 2);
  CHECK(all_homomorphisms(realize_ab(FinAbGroup({4})),
                          realize_ab(FinAbGroup({2})))
            .size() == 2);
  CHECK(all_homomorphisms(realize_ab(FinAbGroup({2})),
                          realize_ab(FinAbGroup({3})))
            .size() == 1);
  // Hom(S3, Z2) ~ sign map: 2 homomorphisms
  CHECK(all_homomorphisms(symmetric3_table(), realize_ab(FinAbGroup({2})))
            .size() == 2);
}

TEST_CASE("splittings of the dihedral group") {
  FiniteGroup d4 = dihedral_table(4);
  auto splits = find_splittings(d4);
  CHECK(!splits.empty());
  bool found_abelian = false;
  for (const auto& s : splits) {
    CHECK(is_normal(d4, s.k));
    CHECK(is_normal(d4, s.n));
    CHECK(product_is_whole(d4, s.k, s.n));
    if (s.kind == SplittingKind::Abelian) {
      found_abelian = true;
      CHECK(s.k.size() == 4);
      CHECK(s.n.size() == 4);
      CHECK(subgroup_intersection(s.k, s.n).size() == 2);
    }
  }
  CHECK(found_abelian);
}

TEST_CASE("quaternion group has no abelian splitting") {
  for (const auto& s : find_splittings(quaternion_table()))
    CHECK(s.kind != SplittingKind::Abelian);
}
