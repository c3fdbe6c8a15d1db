#include "doctest.h"
#include "hforge/examples.hpp"
#include "hforge/heis.hpp"

using namespace hforge;

TEST_CASE("the order-8 instance is dihedral with the expected dictionary") {
  HeisGroup h(examples::d4_form());
  const FiniteGroup& big = h.realize();
  CHECK(big.n == 8);
  FiniteGroup d4 = dihedral_table(4);
  REQUIRE(find_isomorphism(d4, big).has_value());

  // dictionary: 1 -> +00, t -> -11, t2 -> -00, t3 -> +11,
  //             r -> +10, tr -> +01, t2r -> -10, t3r -> -01
  auto idx = [&](Coord c, int x, int xi) {
    return static_cast<int>(h.index_of({AbElement{c}, x, xi}));
  };
  std::vector<int> phi(8);
  phi[0] = idx(0, 0, 0);  // 1
  phi[1] = idx(1, 1, 1);  // t
  phi[2] = idx(1, 0, 0);  // t2
  phi[3] = idx(0, 1, 1);  // t3
  phi[4] = idx(0, 1, 0);  // r
  phi[5] = idx(0, 0, 1);  // tr
  phi[6] = idx(1, 1, 0);  // t2r
  phi[7] = idx(1, 0, 1);  // t3r
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v)
      CHECK(phi[d4.mul(u, v)] == big.mul(phi[u], phi[v]));

  // element labels render the torus multiplicatively
  CHECK(h.label(h.element_at(phi[4])) == "+10");
  CHECK(h.label(h.element_at(phi[2])) == "-00");
}

TEST_CASE("cyclic duality gives the discrete Heisenberg group") {
  for (Coord n : {2, 3, 4}) {
    HeisGroup h(examples::heis_form(n));
    CHECK(h.size() == n * n * n);
    const FiniteGroup& big = h.realize();
    CHECK(center(big).size() == n);
    CHECK(commutator_subgroup(big).size() == n);
    CHECK(is_nilquadratic(big));
  }
}

TEST_CASE("commutator and center formulas against brute force") {
  CHECK_NOTHROW(heis_comm_center(HeisGroup(examples::d4_form())));
  CHECK_NOTHROW(heis_comm_center(HeisGroup(examples::heis_form(3))));
  // degenerate pairing: center grows by the kernels
  FinAbGroup z2({2});
  BilinearForm zf = zero_form(z2, z2, z2);
  CommCenterReport rep = heis_comm_center(HeisGroup(zf));
  CHECK(rep.commutator_formula_ok);
  CHECK(rep.center_ids.size() == 8);
}

TEST_CASE("unique factorization through a section") {
  HeisGroup h(examples::heis_form(3));
  HeisSection s = standard_section(h);
  for (Coord i = 0; i < h.size(); ++i) {
    Factorization f = unique_factorization(h, h.element_at(i), s);
    HeisElement back = h.mul({f.c, h.pairing.g.id, h.pairing.gamma.id},
                             h.mul(f.xpart, f.xipart));
    CHECK(back == h.element_at(i));
  }
}

TEST_CASE("twist is an isomorphism onto the transposed instance") {
  for (Coord n : {2, 3, 4}) {
    HeisGroup h(examples::heis_form(n));
    HeisTwist j = twist(h);  // verifies the isomorphism internally
    HeisTwist j2 = twist(j.twisted);
    for (Coord i = 0; i < h.size(); ++i)
      twist_squared(h, j, j2, h.element_at(i));
  }
}

TEST_CASE("twist inverse differs from the transposed twist beyond order 2") {
  const BilinearForm bf = examples::heis_form(4);
  HeisGroup h(bf);
  HeisTwist j = twist(h);
  HeisTwist j2 = twist(j.twisted);
  bool differs = false;
  for (Coord i = 0; i < h.size(); ++i) {
    HeisElement a = h.element_at(i);
    HeisElement im = j.apply(a);
    // explicit inverse formula
    AbElement c = bf.torus.sub(
        im.c, bf.eval(bf.gamma.element_at(im.x), bf.g.element_at(im.xi)));
    HeisElement back{c, im.xi, h.pairing.gamma.inv(im.x)};
    CHECK(back == a);
    if (!(j2.apply(im) == back)) differs = true;
  }
  CHECK(differs);

  // over Z2 every element is its own inverse, so the two maps agree
  HeisGroup h2(examples::heis_form(2));
  HeisTwist k = twist(h2);
  HeisTwist k2 = twist(k.twisted);
  for (Coord i = 0; i < h2.size(); ++i) {
    HeisElement a = h2.element_at(i);
    CHECK(k2.apply(k.apply(a)) == a);
  }
}

TEST_CASE("reconstruction from the canonical splitting") {
  BilinearForm bf = examples::d4_form();
  HeisObject o = heis_extension(HeisGroup(bf));
  Reconstruction r = reconstruct(o.ext.total, o.gt, o.gammat);
  REQUIRE(r.form.has_value());
  CHECK(is_duality(*r.form));
  CHECK(r.heis->size() == 8);
}

TEST_CASE("reconstruction of the dihedral table itself") {
  FiniteGroup d4 = dihedral_table(4);
  // K = <r, t^2>, N = <tr, t^2>: ids r=4, t2=2, tr=5
  GrpSubgroup k = closure(d4, {4, 2});
  GrpSubgroup n = closure(d4, {5, 2});
  Reconstruction r = reconstruct(d4, k, n);
  REQUIRE(r.form.has_value());
  CHECK(r.form->torus.orders == std::vector<Coord>{2});
  CHECK(r.form->g.size() == 2);
  CHECK(r.form->gamma.size() == 2);
  CHECK(r.form->values[0][0] == AbElement{1});
}

TEST_CASE("expanded construction fixes degenerate pairings") {
  FinAbGroup z2({2});
  ExpandedHeis x = heis_from_form_expanded(zero_form(z2, z2, z2));
  CHECK(is_nondegenerate(x.omega));
  CHECK(x.ext.torus.size() == 8);  // T x G0 x Gamma0 = Z2^3
  CHECK(x.ext.phase.size() == 1);
}

TEST_CASE("pushforward along a torus map") {
  HeisObject o = heis_extension(HeisGroup(examples::d4_form()));
  AbHom dbl(FinAbGroup({2}), FinAbGroup({4}), {AbElement{2}});
  PushforwardResult pf = pushforward(o.ext, dbl, &o.gt, &o.gammat);
  CHECK(pf.ext.total.n == 16);
  CHECK(pf.ext.torus.size() == 4);
  CHECK(pf.ext.phase == o.ext.phase);
  CHECK(product_is_whole(pf.ext.total, pf.gt, pf.gammat));
}
