#include "doctest.h"
#include "hforge/cohom.hpp"
#include "hforge/examples.hpp"

using namespace hforge;

TEST_CASE("differential basics") {
  FinAbGroup z2({2});
  // a 1-cochain that is a homomorphism has zero differential
  Cochain hom(1, z2, z2, {AbElement{0}, AbElement{1}});
  CHECK(is_zero_cochain(differential(hom)));
  // degree-0 cochains die under the trivial action
  Cochain h0(0, z2, z2, {AbElement{1}});
  CHECK(is_zero_cochain(differential(h0)));
  // a non-homomorphism has the expected coboundary table
  FinAbGroup z4({4});
  Cochain h(1, z4, z4, {AbElement{0}, AbElement{1}, AbElement{3}, AbElement{0}});
  Cochain dh = differential(h);
  CHECK(dh.at2(1, 1) == AbElement{3});   // h(1)+h(1)-h(2) = 1+1-3
  CHECK(dh.at2(1, 3) == AbElement{1});   // 1+0-0
  CHECK(dh.at2(2, 2) == AbElement{2});   // 3+3-0
  CHECK(is_zero_cochain(differential(dh)));
  CHECK_THROWS_AS(differential(Cochain(3, z2, z2,
                                       std::vector<AbElement>(8, AbElement{0}))),
                  std::invalid_argument);
}

TEST_CASE("bilinear tables are cocycles; the literal sum is not") {
  for (Coord n : {2, 3, 4}) {
    CHECK_NOTHROW(examples::heis_cocycle(n));   // ctor runs the d2 check
    CHECK_NOTHROW(examples::carry_cocycle(n));
    Cochain lit = examples::literal_sum_cochain(n);
    CHECK(!is_zero_cochain(differential(lit)));
    CHECK_THROWS_AS(Cocycle{lit}, std::invalid_argument);
  }
}

TEST_CASE("normalization shifts by the constant") {
  FinAbGroup z2({2});
  Cocycle g0 = examples::heis_cocycle(2);
  std::vector<AbElement> tbl = g0.c2.table;
  for (auto& v : tbl) v = g0.torus().add(v, AbElement{1});
  Cocycle shifted(Cochain(2, g0.p(), g0.torus(), tbl));
  CHECK(shifted.normalization_adjusted);
  CHECK(shifted == g0);
}

TEST_CASE("coboundary membership") {
  Cocycle g0 = examples::heis_cocycle(2);
  CHECK(!is_coboundary(g0));
  CHECK(!is_coboundary(examples::carry_cocycle(2)));
  // an actual coboundary is recognized and the witness verified
  FinAbGroup p = g0.p();
  std::vector<AbElement> h(p.size(), AbElement{0});
  h[1] = AbElement{1};
  h[3] = AbElement{1};
  Cochain dh = differential(Cochain(1, p, g0.torus(), h));
  auto back = is_coboundary(Cocycle(dh));
  REQUIRE(back.has_value());
  CHECK(differential(*back).table == dh.table);
  // zero cocycle
  Cocycle zero(Cochain(2, p, g0.torus(),
                       std::vector<AbElement>(p.size() * p.size(), AbElement{0})));
  CHECK(is_coboundary(zero).has_value());
}

TEST_CASE("q sends the standard cocycle to the phase form") {
  for (Coord n : {2, 3}) {
    BilinearForm b = examples::heis_form(n);
    CHECK(q_map(standard_cocycle(b)) == phase_form(b));
  }
  // symmetric cocycles die under q
  CHECK(q_map(examples::carry_cocycle(3)).is_trivial());
  CHECK(ext1_member(examples::carry_cocycle(3)));
  CHECK(!ext1_member(examples::heis_cocycle(3)));
}

TEST_CASE("extensions from cocycles") {
  // the d4 cocycle gives a group isomorphic to the dihedral table
  CentralExtension e =
      extension_from_cocycle(standard_cocycle(examples::d4_form()));
  CHECK(find_isomorphism(dihedral_table(4), e.total).has_value());
  // the zero cocycle gives the direct product
  FinAbGroup z2({2}), z4({4});
  Cocycle zero(Cochain(2, z4, z2, std::vector<AbElement>(16, AbElement{0})));
  CentralExtension triv = extension_from_cocycle(zero);
  CHECK(triv.total.is_abelian());
  CHECK(find_isomorphism(triv.total, realize_ab(FinAbGroup({2, 4}))).has_value());
  // round trip through the standard section
  CHECK(cocycle_of_extension(e) == standard_cocycle(examples::d4_form()));
}

TEST_CASE("equivalence of extensions") {
  Cocycle g0 = examples::heis_cocycle(2);
  CentralExtension e = extension_from_cocycle(g0);
  CHECK(are_equivalent(e, e).has_value());
  // shifted by a coboundary: equivalent through the shifted middle map
  std::vector<AbElement> h(g0.p().size(), AbElement{0});
  h[2] = AbElement{1};
  Cochain dh = differential(Cochain(1, g0.p(), g0.torus(), h));
  CentralExtension e2 = extension_from_cocycle(Cocycle(cochain_add(g0.c2, dh)));
  CHECK(are_equivalent(e, e2).has_value());
  // the perturbed extension is not equivalent
  CentralExtension ep = extension_from_cocycle(examples::perturbed_cocycle(2));
  CHECK(!are_equivalent(e, ep).has_value());
  // but both are strictly central with the same commutator form
  CHECK(commutator_form(ep) == commutator_form(e));
  CHECK(center(ep.total) == ep.torus_subgroup());
}

TEST_CASE("inequivalent extensions can still be isomorphic groups") {
  // both Z2 extensions are dihedral of order 8, yet no isomorphism
  // commutes with the torus and phase maps
  CentralExtension e0 = extension_from_cocycle(examples::heis_cocycle(2));
  CentralExtension e1 = extension_from_cocycle(examples::perturbed_cocycle(2));
  CHECK(find_isomorphism(dihedral_table(4), e0.total).has_value());
  CHECK(find_isomorphism(e0.total, e1.total).has_value());
  CHECK(!are_equivalent(e0, e1).has_value());
}

TEST_CASE("bilinear class counting") {
  FinAbGroup z2({2}), z4({4}), z22({2, 2}), z3({3});
  BilinearH2Report r = bilinear_h2(z2, z2, z2);
  CHECK(r.form_count == 2);
  CHECK(r.expected_count == 2);
  CHECK(r.injective);
  CHECK(r.meets_b2_trivially);
  r = bilinear_h2(z22, z4, z4);
  CHECK(r.form_count == 4);  // two slots, each gcd(2,4,4) = 2 choices
  CHECK(r.expected_count == 4);
  r = bilinear_h2(z2, z3, z4);
  CHECK(r.form_count == 1);  // only the zero form
}

TEST_CASE("h2 orders") {
  FinAbGroup z2({2}), z22({2, 2}), z4({4});
  CHECK(h2_order(z2, z2) == 2);
  CHECK(h2_order(z22, z2) == 8);
  CHECK(h2_order(z4, z2) == 2);
  CHECK(h2_order(z2, z4) == 2);
  CHECK(h2_order(FinAbGroup({3}), FinAbGroup({3})) == 3);
  CHECK(h2_order(FinAbGroup({2}), FinAbGroup({3})) == 1);
  CHECK_THROWS_AS(h2_order(FinAbGroup({16}), z2), std::invalid_argument);
}

TEST_CASE("square-root sections over an odd torus") {
  FinAbGroup z3({3}), p({3, 3});
  std::vector<std::vector<AbElement>> m(2, std::vector<AbElement>(2, z3.zero()));
  m[0][1] = AbElement{1};
  m[1][0] = AbElement{2};
  AlternatingForm w = alternating_from_matrix(p, z3, m);
  Cocycle g = sqrt_section(w);
  CHECK(q_map(g) == w);
  // even torus is rejected
  FinAbGroup z2({2});
  AlternatingForm we = phase_form(examples::d4_form());
  CHECK_THROWS_AS(sqrt_section(we), std::invalid_argument);
}

TEST_CASE("partial square roots") {
  CHECK(make_partial_sqrt(FinAbGroup({3})).has_value());
  CHECK(make_partial_sqrt(FinAbGroup({2, 3})).has_value());
  CHECK(!make_partial_sqrt(FinAbGroup({4})).has_value());
  CHECK(!make_partial_sqrt(FinAbGroup({2, 4})).has_value());
  auto r = make_partial_sqrt(FinAbGroup({2}));
  REQUIRE(r.has_value());  // squares are trivial, r = 0
  CHECK(r->squares.size() == 1);
}

TEST_CASE("skewing through a quotient of an odd group") {
  FinAbGroup z9({9}), z3({3}), p({3, 3});
  AbHom chi(z9, z3, {AbElement{1}});
  std::vector<std::vector<AbElement>> m(2, std::vector<AbElement>(2, z3.zero()));
  m[0][1] = AbElement{2};
  m[1][0] = AbElement{1};
  AlternatingForm w = alternating_from_matrix(p, z3, m);
  auto g = skewing_section(chi, w);
  REQUIRE(g.has_value());
  CHECK(q_map(*g) == w);
  // zero map: only the trivial form lifts
  AbHom zero_chi(z3, FinAbGroup({2}), {AbElement{0}});
  // |A| must be odd, and the target of chi must be the torus of w
  CHECK_THROWS_AS(skewing_section(AbHom(FinAbGroup({2}), z3, {AbElement{0}}), w),
                  std::invalid_argument);
  AbHom zmap(z9, z3, {AbElement{0}});
  CHECK(!skewing_section(zmap, w).has_value());
}

TEST_CASE("morphism check on extensions") {
  BilinearForm b = examples::heis_form(2);
  CentralExtension e = extension_from_cocycle(standard_cocycle(b));
  AbHom t = identity_hom(e.torus);
  AbHom p = identity_hom(e.phase);
  Coord n = e.phase.size();
  std::vector<AbElement> zeros(n, e.torus.zero());
  auto m = morphism_check(e, e, t, p, Cochain(1, e.phase, e.torus, zeros));
  REQUIRE(m.has_value());
  for (int u = 0; u < e.total.n; ++u) CHECK((*m)[u] == u);
  // a non-homomorphism psi violates the condition
  std::vector<AbElement> bad(n, e.torus.zero());
  bad[1] = AbElement{1};
  Cochain psi(1, e.phase, e.torus, bad);
  CHECK(morphism_check(e, e, t, p, psi).has_value() ==
        is_zero_cochain(differential(psi)));
}
