#pragma once

// Torus-valued alternating forms on a finite abelian phase group, the
// orthogonality Galois connection, the lattice of biorthogonally closed
// subgroups, and the dictionary between subgroups of the phase group and
// subgroups of a central extension containing the torus.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hforge/extension.hpp"
#include "hforge/forms.hpp"

namespace hforge {

struct AlternatingForm {
  FinAbGroup p;
  FinAbGroup torus;
  std::vector<AbElement> table;  // |P| x |P|, row-major on element indices

  AlternatingForm() = default;
  AlternatingForm(FinAbGroup pp, FinAbGroup t, std::vector<AbElement> tbl)
      : p(std::move(pp)), torus(std::move(t)), table(std::move(tbl)) {
    Coord n = p.size();
    if (static_cast<Coord>(table.size()) != n * n)
      throw std::invalid_argument("table must be |P| x |P|");
    for (const auto& v : table)
      if (!torus.valid(v)) throw std::invalid_argument("value out of range");
    for (Coord z = 0; z < n; ++z)
      if (at(z, z) != torus.zero())
        throw std::invalid_argument("form is not alternating");
    for (Coord z = 0; z < n; ++z)
      for (Coord w = 0; w < n; ++w)
        for (Coord v = 0; v < n; ++v) {
          Coord zw = p.index_of(p.add(p.element_at(z), p.element_at(w)));
          if (at(zw, v) != torus.add(at(z, v), at(w, v)))
            throw std::invalid_argument("form is not bilinear");
        }
  }

  const AbElement& at(Coord z, Coord w) const { return table[z * p.size() + w]; }

  AbElement eval(const AbElement& z, const AbElement& w) const {
    return at(p.index_of(p.reduce(z)), p.index_of(p.reduce(w)));
  }

  bool is_trivial() const {
    for (const auto& v : table)
      if (v != torus.zero()) return false;
    return true;
  }

  bool operator==(const AlternatingForm&) const = default;
};

// build the full table from values on generator pairs; the matrix must
// have zero diagonal and m[j][i] = -m[i][j]
inline AlternatingForm alternating_from_matrix(
    const FinAbGroup& p, const FinAbGroup& t,
    const std::vector<std::vector<AbElement>>& m) {
  size_t k = p.rank();
  if (m.size() != k) throw std::invalid_argument("matrix rank mismatch");
  for (size_t i = 0; i < k; ++i) {
    if (m[i].size() != k) throw std::invalid_argument("matrix rank mismatch");
    if (m[i][i] != t.zero()) throw std::invalid_argument("diagonal must vanish");
    for (size_t j = 0; j < k; ++j) {
      if (t.reduce(m[i][j]) != t.neg(t.reduce(m[j][i])))
        throw std::invalid_argument("matrix must be antisymmetric");
      if (t.scale(p.orders[i], t.reduce(m[i][j])) != t.zero() ||
          t.scale(p.orders[j], t.reduce(m[i][j])) != t.zero())
        throw std::invalid_argument("matrix entry violates a relation");
    }
  }
  Coord n = p.size();
  std::vector<AbElement> tbl(n * n);
  for (Coord zi = 0; zi < n; ++zi) {
    AbElement z = p.element_at(zi);
    for (Coord wi = 0; wi < n; ++wi) {
      AbElement w = p.element_at(wi);
      AbElement acc = t.zero();
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < k; ++j)
          acc = t.add(acc, t.scale(z[i] * w[j], t.reduce(m[i][j])));
      tbl[zi * n + wi] = acc;
    }
  }
  return AlternatingForm(p, t, tbl);
}

// standard phase form of a pairing: on P = G + Gamma,
// omega((x,xi),(y,eta)) = beta(xi,y) - beta(eta,x)
inline AlternatingForm phase_form(const BilinearForm& b) {
  FinAbGroup p = direct_sum(b.g, b.gamma);
  size_t gr = b.g.rank(), mr = b.gamma.rank();
  std::vector<std::vector<AbElement>> m(
      gr + mr, std::vector<AbElement>(gr + mr, b.torus.zero()));
  for (size_t i = 0; i < mr; ++i)
    for (size_t j = 0; j < gr; ++j) {
      m[gr + i][j] = b.values[i][j];                 // beta(xi, y)
      m[j][gr + i] = b.torus.neg(b.values[i][j]);    // -beta(eta, x)
    }
  return alternating_from_matrix(p, b.torus, m);
}

// commutator pairing of a central extension; requires [E,E] inside the
// torus (class <= 2 with strictly central torus candidates), otherwise
// the commutators do not land in T and no form exists.
inline AlternatingForm commutator_form(const CentralExtension& e) {
  GrpSubgroup t = e.torus_subgroup();
  for (int u = 0; u < e.total.n; ++u)
    for (int v = 0; v < e.total.n; ++v)
      if (!t.contains(e.total.comm(u, v)))
        throw std::invalid_argument("commutators do not land in the torus");
  std::vector<int> s = e.standard_section();
  Coord n = e.phase.size();
  std::vector<AbElement> tbl(n * n);
  for (Coord z = 0; z < n; ++z)
    for (Coord w = 0; w < n; ++w) tbl[z * n + w] = commutator_value(e, s, z, w);
  return AlternatingForm(e.phase, e.torus, tbl);
}

inline AbSubgroup orthogonal(const AlternatingForm& f, const AbSubgroup& s) {
  if (s.ambient != f.p) throw std::invalid_argument("subgroup not in the phase group");
  std::vector<AbElement> gens;
  for (Coord z = 0; z < f.p.size(); ++z) {
    bool ok = true;
    for (Coord w : s.elems)
      if (f.at(z, w) != f.torus.zero()) { ok = false; break; }
    if (ok) gens.push_back(f.p.element_at(z));
  }
  return subgroup_from_generators(f.p, gens);
}

inline AbSubgroup biorthogonal_closure(const AlternatingForm& f,
                                       const AbSubgroup& s) {
  return orthogonal(f, orthogonal(f, s));
}

inline bool is_nondegenerate(const AlternatingForm& f) {
  return orthogonal(f, full_subgroup(f.p)).size() == 1;
}

struct SubgroupClass {
  bool symplectic = false;   // s n s-perp = 0
  bool isotropic = false;    // s inside s-perp
  bool coisotropic = false;  // s-perp inside s
  bool lagrangian = false;   // s = s-perp
  bool closed = false;       // s = s-perp-perp
};

inline SubgroupClass classify(const AlternatingForm& f, const AbSubgroup& s) {
  AbSubgroup perp = orthogonal(f, s);
  SubgroupClass c;
  c.symplectic = subgroup_intersection(s, perp).size() == 1;
  c.isotropic = is_subgroup_of(s, perp);
  c.coisotropic = is_subgroup_of(perp, s);
  c.lagrangian = c.isotropic && c.coisotropic;
  c.closed = biorthogonal_closure(f, s).elems == s.elems;
  if (c.lagrangian && !c.closed)
    throw std::logic_error("a Lagrangian subgroup must be closed");
  return c;
}

// ---- lattice of closed subgroups --------------------------------------

struct ClosedLattice {
  AlternatingForm form;
  std::vector<AbSubgroup> nodes;            // sorted by (size, elems)
  std::vector<std::pair<int, int>> covers;  // (lower, upper) Hasse edges
  std::vector<int> perp;                    // node index of the orthogonal

  int index_of(const AbSubgroup& s) const {
    for (size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].elems == s.elems) return static_cast<int>(i);
    return -1;
  }
};

inline ClosedLattice closed_lattice(const AlternatingForm& f, Coord bound = 256) {
  ClosedLattice lat;
  lat.form = f;
  for (const auto& s : enumerate_subgroups(f.p, bound))
    if (biorthogonal_closure(f, s).elems == s.elems) lat.nodes.push_back(s);
  // orthogonal is a node-to-node map (it is always closed)
  for (const auto& s : lat.nodes) {
    int j = lat.index_of(orthogonal(f, s));
    if (j < 0) throw std::logic_error("orthogonal escaped the closed family");
    lat.perp.push_back(j);
  }
  // meet = intersection and join = closure of the sum must stay closed
  for (size_t i = 0; i < lat.nodes.size(); ++i)
    for (size_t j = 0; j < lat.nodes.size(); ++j) {
      AbSubgroup meet = subgroup_intersection(lat.nodes[i], lat.nodes[j]);
      if (lat.index_of(meet) < 0)
        throw std::logic_error("intersection of closed subgroups not closed");
      AbSubgroup join = biorthogonal_closure(f, subgroup_sum(lat.nodes[i], lat.nodes[j]));
      if (lat.index_of(join) < 0)
        throw std::logic_error("join escaped the closed family");
    }
  for (size_t i = 0; i < lat.nodes.size(); ++i)
    for (size_t j = 0; j < lat.nodes.size(); ++j) {
      if (i == j || !is_subgroup_of(lat.nodes[i], lat.nodes[j])) continue;
      bool cover = true;
      for (size_t k = 0; k < lat.nodes.size() && cover; ++k)
        if (k != i && k != j && is_subgroup_of(lat.nodes[i], lat.nodes[k]) &&
            is_subgroup_of(lat.nodes[k], lat.nodes[j]))
          cover = false;
      if (cover) lat.covers.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  return lat;
}

inline std::string subgroup_label(const AbSubgroup& s) {
  if (s.size() == 1) return "0";
  std::string out = "<";
  for (size_t i = 0; i < s.generators.size(); ++i) {
    if (i) out += ",";
    out += s.ambient.render(s.generators[i]);
  }
  return out + ">";
}

inline std::string lattice_to_dot(const ClosedLattice& lat) {
  std::ostringstream os;
  os << "digraph closed_subgroups {\n  rankdir=BT;\n";
  for (size_t i = 0; i < lat.nodes.size(); ++i) {
    SubgroupClass c = classify(lat.form, lat.nodes[i]);
    std::string shape = c.lagrangian ? "doubleoctagon"
                        : c.isotropic ? "ellipse"
                        : c.coisotropic ? "box" : "plaintext";
    os << "  n" << i << " [label=\"" << subgroup_label(lat.nodes[i]) << " ("
       << lat.nodes[i].size() << ")\", shape=" << shape << "];\n";
  }
  for (auto [lo, hi] : lat.covers) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

// ---- Lagrangian bisections --------------------------------------------

// pairs (L1, L2) of Lagrangians with L1 n L2 = 0 and L1 + L2 = P; the
// transversality conditions are re-checked explicitly on each result
inline std::vector<std::pair<AbSubgroup, AbSubgroup>> lagrangian_bisections(
    const AlternatingForm& f, Coord bound = 256) {
  std::vector<AbSubgroup> lag;
  for (const auto& s : enumerate_subgroups(f.p, bound))
    if (classify(f, s).lagrangian) lag.push_back(s);
  bool nondeg = is_nondegenerate(f);
  std::vector<std::pair<AbSubgroup, AbSubgroup>> out;
  for (const auto& a : lag)
    for (const auto& b : lag) {
      bool spans = subgroup_sum(a, b).size() == f.p.size();
      bool disjoint = subgroup_intersection(a, b).size() == 1;
      // in the nondegenerate case, Lagrangians that span are automatically
      // transversal; verify rather than assume
      if (nondeg && spans && !disjoint)
        throw std::logic_error("spanning Lagrangians failed transversality");
      if (spans && disjoint) out.emplace_back(a, b);
    }
  return out;
}

// ---- correspondence with central extensions ----------------------------

struct CorrespondenceReport {
  std::vector<std::pair<std::string, bool>> items;
  bool all() const {
    for (const auto& [_, ok] : items)
      if (!ok) return false;
    return true;
  }
};

// For every subgroup G of the phase group (and every pair), compare the
// symplectic notion on G with the group-theoretic notion on the lift
// G-tilde = proj^{-1}(G) inside the extension.
inline CorrespondenceReport correspondence_check(const CentralExtension& e,
                                                 Coord bound = 256) {
  AlternatingForm f = commutator_form(e);
  std::vector<AbSubgroup> subs = enumerate_subgroups(e.phase, bound);
  std::vector<GrpSubgroup> lifts;
  std::vector<SubgroupClass> cls;
  std::vector<bool> ab, maxab, swallows_cent;
  std::vector<GrpSubgroup> cents;
  std::vector<AbSubgroup> perps;
  for (const auto& s : subs) {
    GrpSubgroup lift = e.lift(s);
    lifts.push_back(lift);
    cls.push_back(classify(f, s));
    ab.push_back(is_abelian_subgroup(e.total, lift));
    GrpSubgroup c = centralizer(e.total, lift);
    cents.push_back(c);
    // centralizer(lift(G)) = lift(G-perp), so "contains its centralizer"
    // is the group-side reading of coisotropy
    swallows_cent.push_back(std::includes(lift.ids.begin(), lift.ids.end(),
                                          c.ids.begin(), c.ids.end()));
    maxab.push_back(ab.back() && c == lift);
    perps.push_back(orthogonal(f, s));
  }
  GrpSubgroup that = e.torus_subgroup();

  CorrespondenceReport rep;
  auto add = [&](const std::string& name, bool ok) { rep.items.emplace_back(name, ok); };

  bool ok1 = e.total.is_abelian() == f.is_trivial();
  add("whole group abelian iff form trivial", ok1);

  bool strictly_central = center(e.total) == that;
  add("torus is the full center iff form nondegenerate",
      strictly_central == is_nondegenerate(f));

  bool ok3 = true, ok4 = true, ok5 = true, ok8 = true;
  for (size_t i = 0; i < subs.size(); ++i) {
    ok3 = ok3 && (ab[i] == cls[i].isotropic);
    ok4 = ok4 && (swallows_cent[i] == cls[i].coisotropic);
    ok5 = ok5 && (maxab[i] == cls[i].lagrangian);
    ok8 = ok8 && (cents[i] == e.lift(perps[i]));
  }
  add("lift abelian iff subgroup isotropic", ok3);
  add("lift contains its centralizer iff subgroup coisotropic", ok4);
  add("lift maximal abelian iff subgroup Lagrangian", ok5);
  add("centralizer of lift is the lift of the orthogonal", ok8);

  bool ok6 = true, ok7 = true, ok9 = true;
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = 0; j < subs.size(); ++j) {
      // |AB| = |A||B|/|A n B| decides whether the set product is everything
      Coord inter = subgroup_intersection(lifts[i], lifts[j]).size();
      bool lift_span = static_cast<Coord>(lifts[i].size()) * lifts[j].size() ==
                       inter * e.total.n;
      bool phase_span =
          subgroup_sum(subs[i], subs[j]).size() == e.phase.size();
      ok6 = ok6 && (lift_span == phase_span);
      bool lift_meet_torus = inter == that.size() &&
                             subgroup_intersection(lifts[i], lifts[j]) == that;
      bool phase_meet_zero = subgroup_intersection(subs[i], subs[j]).size() == 1;
      ok7 = ok7 && (lift_meet_torus == phase_meet_zero);
      bool ab_bisection = ab[i] && ab[j] && maxab[i] && maxab[j] && lift_span &&
                          lift_meet_torus;
      bool lag_bisection = cls[i].lagrangian && cls[j].lagrangian &&
                           phase_span && phase_meet_zero;
      ok9 = ok9 && (ab_bisection == lag_bisection);
    }
  add("lifts generate iff subgroups span the phase group", ok6);
  add("lifts meet in the torus iff subgroups meet trivially", ok7);
  add("abelian bisections match Lagrangian bisections", ok9);

  return rep;
}

}  // namespace hforge
