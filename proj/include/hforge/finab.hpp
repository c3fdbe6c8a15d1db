#pragma once

// Finite abelian groups as explicit products of cyclic groups.
//
// A group is a list of cyclic orders [n1,...,nk]; an element is a residue
// tuple. Element enumeration is lexicographic on the tuple (first
// coordinate most significant), which fixes a stable index <-> element
// bijection used everywhere downstream (Cayley tables, subgroup sets,
// cocycle tables).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hforge/intlin.hpp"

namespace hforge {

using AbElement = std::vector<Coord>;

struct FinAbGroup {
  std::vector<Coord> orders;

  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<Coord> o) : orders(std::move(o)) {
    for (Coord n : orders)
      if (n < 1) throw std::invalid_argument("cyclic order must be >= 1");
  }

  size_t rank() const { return orders.size(); }

  Coord size() const {
    Coord n = 1;
    for (Coord o : orders) n *= o;
    return n;
  }

  AbElement zero() const { return AbElement(orders.size(), 0); }

  bool valid(const AbElement& a) const {
    if (a.size() != orders.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i] < 0 || a[i] >= orders[i]) return false;
    return true;
  }

  AbElement reduce(AbElement a) const {
    if (a.size() != orders.size()) throw std::invalid_argument("rank mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] = mod_reduce(a[i], orders[i]);
    return a;
  }

  AbElement add(const AbElement& a, const AbElement& b) const {
    AbElement c(orders.size());
    for (size_t i = 0; i < orders.size(); ++i)
      c[i] = mod_reduce(a[i] + b[i], orders[i]);
    return c;
  }

  AbElement sub(const AbElement& a, const AbElement& b) const {
    AbElement c(orders.size());
    for (size_t i = 0; i < orders.size(); ++i)
      c[i] = mod_reduce(a[i] - b[i], orders[i]);
    return c;
  }

  AbElement neg(const AbElement& a) const { return sub(zero(), a); }

  AbElement scale(Coord k, const AbElement& a) const {
    AbElement c(orders.size());
    for (size_t i = 0; i < orders.size(); ++i)
      c[i] = mod_reduce(k * a[i], orders[i]);
    return c;
  }

  Coord order_of(const AbElement& a) const {
    Coord n = 1;
    for (size_t i = 0; i < orders.size(); ++i) {
      Coord o = orders[i] / std::gcd(orders[i], a[i] == 0 ? orders[i] : a[i]);
      n = std::lcm(n, o);
    }
    return n;
  }

  Coord exponent() const {
    Coord n = 1;
    for (Coord o : orders) n = std::lcm(n, o);
    return n;
  }

  Coord index_of(const AbElement& a) const {
    if (!valid(a)) throw std::invalid_argument("element out of range");
    Coord idx = 0;
    for (size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + a[i];
    return idx;
  }

  AbElement element_at(Coord idx) const {
    AbElement a(orders.size());
    for (size_t i = orders.size(); i-- > 0;) {
      a[i] = idx % orders[i];
      idx /= orders[i];
    }
    if (idx != 0) throw std::invalid_argument("index out of range");
    return a;
  }

  std::string render(const AbElement& a) const {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(a[i]);
    }
    return s + ")";
  }

  bool operator==(const FinAbGroup&) const = default;
};

inline FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  std::vector<Coord> o = a.orders;
  o.insert(o.end(), b.orders.begin(), b.orders.end());
  return FinAbGroup(o);
}

// Homomorphism between finite abelian groups, stored as the images of the
// canonical generators e_1,...,e_k of the domain.
struct AbHom {
  FinAbGroup domain;
  FinAbGroup codomain;
  std::vector<AbElement> gen_images;

  AbHom() = default;
  AbHom(FinAbGroup d, FinAbGroup c, std::vector<AbElement> imgs)
      : domain(std::move(d)), codomain(std::move(c)), gen_images(std::move(imgs)) {
    if (gen_images.size() != domain.rank())
      throw std::invalid_argument("one image per domain generator required");
    for (size_t i = 0; i < gen_images.size(); ++i) {
      if (!codomain.valid(gen_images[i]))
        throw std::invalid_argument("generator image out of range");
      if (codomain.scale(domain.orders[i], gen_images[i]) != codomain.zero())
        throw std::invalid_argument("generator image violates relation");
    }
  }

  AbElement apply(const AbElement& a) const {
    AbElement out = codomain.zero();
    for (size_t i = 0; i < gen_images.size(); ++i)
      out = codomain.add(out, codomain.scale(a[i], gen_images[i]));
    return out;
  }
};

inline AbHom identity_hom(const FinAbGroup& g) {
  std::vector<AbElement> imgs;
  for (size_t i = 0; i < g.rank(); ++i) {
    AbElement e = g.zero();
    e[i] = g.orders[i] > 1 ? 1 : 0;
    imgs.push_back(e);
  }
  return AbHom(g, g, imgs);
}

// Subgroup of a FinAbGroup: the full (sorted) list of element indices plus
// a generating list. Ambient sizes stay small (<= a few hundred), so the
// explicit element set is the cheapest representation that makes
// membership, intersection and closure trivial.
struct AbSubgroup {
  FinAbGroup ambient;
  std::vector<Coord> elems;  // sorted element indices, always contains 0
  std::vector<AbElement> generators;

  Coord size() const { return static_cast<Coord>(elems.size()); }

  bool contains_index(Coord idx) const {
    return std::binary_search(elems.begin(), elems.end(), idx);
  }
  bool contains(const AbElement& a) const {
    return contains_index(ambient.index_of(a));
  }
};

inline AbSubgroup subgroup_from_generators(const FinAbGroup& g,
                                           const std::vector<AbElement>& gens) {
  std::set<Coord> seen{0};
  std::vector<AbElement> frontier{g.zero()};
  while (!frontier.empty()) {
    std::vector<AbElement> next;
    for (const auto& a : frontier)
      for (const auto& x : gens) {
        AbElement b = g.add(a, g.reduce(x));
        Coord idx = g.index_of(b);
        if (seen.insert(idx).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  AbSubgroup s;
  s.ambient = g;
  s.elems.assign(seen.begin(), seen.end());
  s.generators = gens;
  return s;
}

inline AbSubgroup trivial_subgroup(const FinAbGroup& g) {
  return subgroup_from_generators(g, {});
}

inline AbSubgroup full_subgroup(const FinAbGroup& g) {
  AbSubgroup s;
  s.ambient = g;
  for (Coord i = 0; i < g.size(); ++i) s.elems.push_back(i);
  for (size_t i = 0; i < g.rank(); ++i) {
    AbElement e = g.zero();
    if (g.orders[i] > 1) {
      e[i] = 1;
      s.generators.push_back(e);
    }
  }
  return s;
}

inline bool is_subgroup_of(const AbSubgroup& a, const AbSubgroup& b) {
  return std::includes(b.elems.begin(), b.elems.end(), a.elems.begin(),
                       a.elems.end());
}

inline AbSubgroup subgroup_intersection(const AbSubgroup& a, const AbSubgroup& b) {
  AbSubgroup s;
  s.ambient = a.ambient;
  std::set_intersection(a.elems.begin(), a.elems.end(), b.elems.begin(),
                        b.elems.end(), std::back_inserter(s.elems));
  for (Coord idx : s.elems) {
    AbElement e = s.ambient.element_at(idx);
    if (idx != 0) s.generators.push_back(e);  // crude but correct
  }
  return s;
}

// In an abelian group the subgroup generated by A u B is the sum set.
inline AbSubgroup subgroup_sum(const AbSubgroup& a, const AbSubgroup& b) {
  const FinAbGroup& g = a.ambient;
  std::vector<char> mark(g.size(), 0);
  for (Coord ia : a.elems) {
    AbElement ea = g.element_at(ia);
    for (Coord ib : b.elems) mark[g.index_of(g.add(ea, g.element_at(ib)))] = 1;
  }
  AbSubgroup s;
  s.ambient = g;
  for (Coord i = 0; i < g.size(); ++i)
    if (mark[i]) s.elems.push_back(i);
  s.generators = a.generators;
  s.generators.insert(s.generators.end(), b.generators.begin(), b.generators.end());
  return s;
}

// Reduce a subgroup's generating list to a short one (greedy by order).
inline void shrink_generators(AbSubgroup& s) {
  std::vector<AbElement> cands;
  for (Coord idx : s.elems) cands.push_back(s.ambient.element_at(idx));
  std::stable_sort(cands.begin(), cands.end(),
                   [&](const AbElement& a, const AbElement& b) {
                     return s.ambient.order_of(a) > s.ambient.order_of(b);
                   });
  std::vector<AbElement> gens;
  AbSubgroup cur = trivial_subgroup(s.ambient);
  for (const auto& c : cands) {
    if (cur.size() == s.size()) break;
    if (!cur.contains(c)) {
      gens.push_back(c);
      cur = subgroup_from_generators(s.ambient, gens);
    }
  }
  s.generators = gens;
}

// All subgroups of g, by breadth-first closure. Deterministic order:
// sorted by (size, element set).
inline std::vector<AbSubgroup> enumerate_subgroups(const FinAbGroup& g,
                                                   Coord bound = 256) {
  if (g.size() > bound)
    throw std::invalid_argument("group too large for subgroup enumeration");
  std::map<std::vector<Coord>, AbSubgroup> found;
  AbSubgroup triv = trivial_subgroup(g);
  found[triv.elems] = triv;
  std::vector<AbSubgroup> frontier{triv};
  while (!frontier.empty()) {
    std::vector<AbSubgroup> next;
    for (const auto& s : frontier)
      for (Coord idx = 1; idx < g.size(); ++idx) {
        if (s.contains_index(idx)) continue;
        std::vector<AbElement> gens = s.generators;
        gens.push_back(g.element_at(idx));
        AbSubgroup t = subgroup_from_generators(g, gens);
        if (found.emplace(t.elems, t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<AbSubgroup> out;
  for (auto& [_, s] : found) {
    shrink_generators(s);
    out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const AbSubgroup& a, const AbSubgroup& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a.elems < b.elems;
                   });
  return out;
}

// Finds a homomorphism f: g -> t with f(a_i) = b_i for the given
// constraints, if one exists. Linear congruence system per codomain
// coordinate, solved by Smith reduction (no enumeration of Hom(g,t)).
inline std::optional<AbHom> hom_solve(
    const FinAbGroup& g, const FinAbGroup& t,
    const std::vector<std::pair<AbElement, AbElement>>& constraints) {
  const size_t k = g.rank();
  std::vector<std::vector<Coord>> images(k, AbElement(t.rank(), 0));
  for (size_t l = 0; l < t.rank(); ++l) {
    Coord m = t.orders[l];
    IntMat a;
    std::vector<Coord> rhs;
    for (const auto& [x, y] : constraints) {
      if (!g.valid(g.reduce(x)) || !t.valid(t.reduce(y)))
        throw std::invalid_argument("constraint element of wrong rank");
      a.push_back(std::vector<Coord>(x.begin(), x.end()));
      rhs.push_back(y[l]);
    }
    // well-definedness: order(e_j) * f(e_j) = 0 in each coordinate
    for (size_t j = 0; j < k; ++j) {
      std::vector<Coord> row(k, 0);
      row[j] = g.orders[j];
      a.push_back(row);
      rhs.push_back(0);
    }
    auto sol = solve_congruences(a, rhs, m);
    if (!sol) return std::nullopt;
    for (size_t j = 0; j < k; ++j) images[j][l] = (*sol)[j];
  }
  AbHom h(g, t, images);
  for (const auto& [x, y] : constraints)
    if (h.apply(g.reduce(x)) != t.reduce(y))
      throw std::logic_error("hom_solve produced an invalid solution");
  return h;
}

}  // namespace hforge
