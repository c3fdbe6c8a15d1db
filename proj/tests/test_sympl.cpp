#include "doctest.h"
#include "hforge/examples.hpp"
#include "hforge/sympl.hpp"

using namespace hforge;

namespace {

AlternatingForm d4_phase_form() { return phase_form(examples::d4_form()); }

}  // namespace

TEST_CASE("phase form of a pairing is the commutator form") {
  BilinearForm b = examples::d4_form();
  AlternatingForm f = d4_phase_form();
  // omega((x,xi),(y,eta)) = beta(xi,y) - beta(eta,x)
  const FinAbGroup& p = f.p;
  for (Coord i = 0; i < p.size(); ++i)
    for (Coord j = 0; j < p.size(); ++j) {
      AbElement z = p.element_at(i), w = p.element_at(j);
      AbElement want = b.torus.sub(b.eval({z[1]}, {w[0]}), b.eval({w[1]}, {z[0]}));
      CHECK(f.at(i, j) == want);
    }
  HeisObject o = heis_extension(HeisGroup(b));
  CHECK(commutator_form(o.ext) == f);
}

TEST_CASE("classification of the order-4 phase space") {
  AlternatingForm f = d4_phase_form();
  CHECK(is_nondegenerate(f));
  auto subs = enumerate_subgroups(f.p);
  REQUIRE(subs.size() == 5);
  int lagrangian = 0;
  for (const auto& s : subs) {
    SubgroupClass c = classify(f, s);
    CHECK(c.closed);  // every subgroup of this instance is closed
    if (s.size() == 1) {
      CHECK(c.isotropic);
      CHECK(!c.coisotropic);
    }
    if (s.size() == 4) {
      CHECK(c.coisotropic);
      CHECK(!c.isotropic);
    }
    if (c.lagrangian) ++lagrangian;
  }
  CHECK(lagrangian == 3);
}

TEST_CASE("orthogonal sizes multiply in the nondegenerate case") {
  AlternatingForm f = phase_form(examples::heis_form(4));
  for (const auto& s : enumerate_subgroups(f.p)) {
    AbSubgroup perp = orthogonal(f, s);
    CHECK(s.size() * perp.size() == f.p.size());
    CHECK(biorthogonal_closure(f, s).elems == s.elems);
  }
}

TEST_CASE("a degenerate form has non-closed subgroups") {
  FinAbGroup z2({2});
  AlternatingForm f = phase_form(zero_form(z2, z2, z2));
  CHECK(f.is_trivial());
  AbSubgroup triv = trivial_subgroup(f.p);
  CHECK(biorthogonal_closure(f, triv).size() == f.p.size());
  CHECK(!classify(f, triv).closed);
}

TEST_CASE("closed lattice of the dihedral instance") {
  AlternatingForm f = d4_phase_form();
  ClosedLattice lat = closed_lattice(f);
  CHECK(lat.nodes.size() == 5);
  // perp is an involution exchanging bottom and top
  for (size_t i = 0; i < lat.nodes.size(); ++i)
    CHECK(lat.perp[lat.perp[i]] == static_cast<int>(i));
  std::string dot = lattice_to_dot(lat);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("doubleoctagon") != std::string::npos);  // Lagrangian shape
}

TEST_CASE("Lagrangian bisections") {
  CHECK(lagrangian_bisections(d4_phase_form()).size() == 6);
  CHECK(lagrangian_bisections(examples::freenil3_form()).empty());
}

TEST_CASE("freenil3 has Lagrangians but none are transversal") {
  AlternatingForm f = examples::freenil3_form();
  CHECK(is_nondegenerate(f));
  int lagrangian = 0;
  for (const auto& s : enumerate_subgroups(f.p))
    if (classify(f, s).lagrangian) ++lagrangian;
  CHECK(lagrangian > 0);
}

TEST_CASE("subgroup correspondence on the dihedral extension") {
  HeisObject o = heis_extension(HeisGroup(examples::d4_form()));
  CHECK(enumerate_grp_subgroups(o.ext.total).size() == 10);
  CHECK(enumerate_subgroups(o.ext.phase).size() == 5);
  CorrespondenceReport rep = correspondence_check(o.ext);
  for (const auto& [name, ok] : rep.items) {
    INFO(name);
    CHECK(ok);
  }
}

TEST_CASE("trivial extension: everything abelian, everything isotropic") {
  FinAbGroup z2({2});
  HeisObject o = heis_extension(HeisGroup(zero_form(z2, z2, z2)));
  CHECK(o.ext.total.is_abelian());
  AlternatingForm f = commutator_form(o.ext);
  CHECK(f.is_trivial());
  for (const auto& s : enumerate_subgroups(o.ext.phase))
    CHECK(classify(f, s).isotropic);
  CHECK(correspondence_check(o.ext).all());
}
