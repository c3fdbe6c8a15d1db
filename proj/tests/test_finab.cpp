#include "doctest.h"
#include "hforge/finab.hpp"

using namespace hforge;

TEST_CASE("element indexing is a lexicographic bijection") {
  FinAbGroup g({2, 3, 4});
  CHECK(g.size() == 24);
  for (Coord i = 0; i < g.size(); ++i)
    CHECK(g.index_of(g.element_at(i)) == i);
  CHECK(g.element_at(0) == AbElement{0, 0, 0});
  CHECK(g.element_at(1) == AbElement{0, 0, 1});  // last coordinate fastest
  CHECK(g.element_at(23) == AbElement{1, 2, 3});
}

TEST_CASE("arithmetic and orders") {
  FinAbGroup g({4, 6});
  CHECK(g.add({3, 5}, {2, 2}) == AbElement{1, 1});
  CHECK(g.neg({1, 4}) == AbElement{3, 2});
  CHECK(g.scale(5, {1, 1}) == AbElement{1, 5});
  CHECK(g.order_of({2, 3}) == 2);
  CHECK(g.order_of({1, 0}) == 4);
  CHECK(g.order_of({0, 0}) == 1);
  CHECK(g.order_of({1, 1}) == 12);
  CHECK(g.exponent() == 12);
}

TEST_CASE("subgroup closure, intersection and sum") {
  FinAbGroup g({4, 4});
  AbSubgroup a = subgroup_from_generators(g, {{2, 0}, {0, 2}});
  CHECK(a.size() == 4);
  AbSubgroup b = subgroup_from_generators(g, {{1, 1}});
  CHECK(b.size() == 4);
  AbSubgroup meet = subgroup_intersection(a, b);
  CHECK(meet.size() == 2);  // {(0,0),(2,2)}
  CHECK(meet.contains({2, 2}));
  AbSubgroup sum = subgroup_sum(a, b);
  CHECK(sum.size() == 8);
  CHECK(is_subgroup_of(a, sum));
  CHECK(is_subgroup_of(b, sum));
  // the sum set is closed: it equals the closure of the joined generators
  std::vector<AbElement> gens = {{2, 0}, {0, 2}, {1, 1}};
  CHECK(subgroup_from_generators(g, gens).elems == sum.elems);
}

TEST_CASE("subgroup enumeration matches known counts") {
  CHECK(enumerate_subgroups(FinAbGroup({4})).size() == 3);
  CHECK(enumerate_subgroups(FinAbGroup({2, 2})).size() == 5);
  CHECK(enumerate_subgroups(FinAbGroup({2, 2, 2})).size() == 16);
  CHECK(enumerate_subgroups(FinAbGroup({6})).size() == 4);
  CHECK(enumerate_subgroups(FinAbGroup({2, 4})).size() == 8);
  // every cyclic subgroup appears
  FinAbGroup g({3, 3});
  auto subs = enumerate_subgroups(g);
  CHECK(subs.size() == 6);
  for (Coord i = 0; i < g.size(); ++i) {
    AbSubgroup cyc = subgroup_from_generators(g, {g.element_at(i)});
    bool found = false;
    for (const auto& s : subs) found = found || s.elems == cyc.elems;
    CHECK(found);
  }
}

TEST_CASE("hom_solve agrees with exhaustive search on small instances") {
  FinAbGroup g({4, 2}), t({2, 4});
  // enumerate all homomorphisms by brute force over generator images
  auto brute = [&](const std::vector<std::pair<AbElement, AbElement>>& cons) {
    for (Coord i = 0; i < t.size(); ++i)
      for (Coord j = 0; j < t.size(); ++j) {
        AbElement u = t.element_at(i), v = t.element_at(j);
        if (t.scale(4, u) != t.zero() || t.scale(2, v) != t.zero()) continue;
        AbHom h(g, t, {u, v});
        bool ok = true;
        for (const auto& [x, y] : cons) ok = ok && h.apply(x) == y;
        if (ok) return true;
      }
    return false;
  };
  std::vector<std::vector<std::pair<AbElement, AbElement>>> cases = {
      {},
      {{{1, 0}, {1, 2}}},
      {{{1, 0}, {0, 1}}},
      {{{2, 0}, {0, 1}}},
      {{{1, 1}, {1, 0}}, {{0, 1}, {0, 2}}},
      {{{1, 1}, {0, 3}}, {{2, 0}, {1, 0}}},
  };
  for (const auto& cons : cases) {
    auto h = hom_solve(g, t, cons);
    CHECK(h.has_value() == brute(cons));
    if (h)
      for (const auto& [x, y] : cons) CHECK(h->apply(x) == y);
  }
}

TEST_CASE("hom constructor rejects relation violations") {
  FinAbGroup g({2}), t({4});
  CHECK_THROWS_AS(AbHom(g, t, {AbElement{1}}), std::invalid_argument);
  CHECK_NOTHROW(AbHom(g, t, {AbElement{2}}));
}
