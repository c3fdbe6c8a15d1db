#include "doctest.h"
#include "hforge/forms.hpp"

using namespace hforge;

TEST_CASE("evaluation is bilinear") {
  FinAbGroup gamma({4, 2}), g({4}), t({4});
  BilinearForm b(gamma, g, t, {{AbElement{1}}, {AbElement{2}}});
  for (Coord i = 0; i < gamma.size(); ++i)
    for (Coord j = 0; j < gamma.size(); ++j)
      for (Coord x = 0; x < g.size(); ++x) {
        AbElement xi = gamma.element_at(i), eta = gamma.element_at(j);
        AbElement y = g.element_at(x);
        CHECK(b.eval(gamma.add(xi, eta), y) ==
              t.add(b.eval(xi, y), b.eval(eta, y)));
      }
  for (Coord i = 0; i < gamma.size(); ++i)
    for (Coord x = 0; x < g.size(); ++x)
      for (Coord y = 0; y < g.size(); ++y) {
        AbElement xi = gamma.element_at(i);
        CHECK(b.eval(xi, g.add(g.element_at(x), g.element_at(y))) ==
              t.add(b.eval(xi, g.element_at(x)), b.eval(xi, g.element_at(y))));
      }
}

TEST_CASE("constructor enforces order relations") {
  FinAbGroup z2({2}), z4({4});
  CHECK_THROWS_AS(BilinearForm(z2, z4, z4, {{AbElement{1}}}),
                  std::invalid_argument);
  CHECK_NOTHROW(BilinearForm(z2, z4, z4, {{AbElement{2}}}));
}

TEST_CASE("kernels and duality") {
  FinAbGroup z4({4}), z2({2});
  BilinearForm dual(z4, z4, z4, {{AbElement{1}}});
  CHECK(is_duality(dual));
  CHECK(left_kernel(dual).size() == 1);
  CHECK(right_kernel(dual).size() == 1);

  BilinearForm degen(z4, z4, z4, {{AbElement{2}}});
  CHECK(!is_duality(degen));
  CHECK(left_kernel(degen).size() == 2);
  CHECK(right_kernel(degen).size() == 2);

  BilinearForm onesided(z2, FinAbGroup({2, 2}), FinAbGroup({2, 2}),
                        {{AbElement{1, 0}, AbElement{0, 1}}});
  CHECK(is_duality(onesided));
}

TEST_CASE("transpose swaps the arguments") {
  FinAbGroup gamma({2, 2}), g({4}), t({4});
  BilinearForm b(gamma, g, t, {{AbElement{2}}, {AbElement{0}}});
  BilinearForm bt = transpose(b);
  for (Coord i = 0; i < gamma.size(); ++i)
    for (Coord x = 0; x < g.size(); ++x)
      CHECK(bt.eval(g.element_at(x), gamma.element_at(i)) ==
            b.eval(gamma.element_at(i), g.element_at(x)));
  CHECK(transpose(bt) == b);
}

TEST_CASE("pairing orthogonals reverse inclusion") {
  FinAbGroup z4({4});
  BilinearForm b(z4, z4, z4, {{AbElement{1}}});
  AbSubgroup two = subgroup_from_generators(z4, {{2}});
  AbSubgroup perp = pairing_orthogonal(b, PairingSide::Right, two);
  // elements of Gamma pairing trivially with {0,2}: even residues
  CHECK(perp.size() == 2);
  CHECK(perp.contains({2}));
  AbSubgroup all = pairing_orthogonal(b, PairingSide::Right, full_subgroup(z4));
  CHECK(all.size() == 1);
}
