#pragma once

// Generic finite groups given by Cayley tables, plus the subgroup,
// quotient, commutator and splitting machinery built on them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hforge/finab.hpp"

namespace hforge {

struct FiniteGroup {
  int n = 0;
  std::vector<int> table;  // row-major: table[a*n+b] = a*b
  int id = 0;
  std::vector<std::string> labels;
  std::vector<int> invs;

  FiniteGroup() = default;
  FiniteGroup(int size, std::vector<int> tbl, std::vector<std::string> lbls = {})
      : n(size), table(std::move(tbl)), labels(std::move(lbls)) {
    if (static_cast<int>(table.size()) != n * n)
      throw std::invalid_argument("table must be n x n");
    if (labels.empty())
      for (int i = 0; i < n; ++i) labels.push_back("g" + std::to_string(i));
    if (static_cast<int>(labels.size()) != n)
      throw std::invalid_argument("one label per element required");
    validate();
  }

  int mul(int a, int b) const { return table[a * n + b]; }
  int inv(int a) const { return invs[a]; }

  int conj(int a, int b) const {  // b a b^{-1}
    return mul(mul(b, a), inv(b));
  }
  int comm(int a, int b) const {  // [a,b] = a b a^{-1} b^{-1}
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }

  bool is_abelian() const {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  Coord order_of(int a) const {
    Coord o = 1;
    int x = a;
    while (x != id) {
      x = mul(x, a);
      ++o;
    }
    return o;
  }

 private:
  void validate() {
    for (int v : table)
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
    // identity: find the (unique) two-sided identity
    id = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) { id = e; break; }
    }
    if (id < 0) throw std::invalid_argument("table has no identity");
    // Latin square
    for (int a = 0; a < n; ++a) {
      std::vector<bool> row(n, false), col(n, false);
      for (int b = 0; b < n; ++b) {
        if (row[mul(a, b)] || col[mul(b, a)])
          throw std::invalid_argument("table is not a Latin square");
        row[mul(a, b)] = col[mul(b, a)] = true;
      }
    }
    // inverses
    invs.assign(n, -1);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (mul(a, b) == id && mul(b, a) == id) invs[a] = b;
    for (int a = 0; a < n; ++a)
      if (invs[a] < 0) throw std::invalid_argument("element has no inverse");
    // associativity: exhaustive up to 64 elements, randomized beyond
    if (n <= 64) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw std::invalid_argument("table is not associative");
    } else {
      std::mt19937_64 rng(0x48464f524745ull);  // fixed seed, reproducible
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int k = 0; k < 10000; ++k) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("table is not associative");
      }
    }
  }
};

struct GrpSubgroup {
  std::vector<int> ids;  // sorted, contains the identity

  int size() const { return static_cast<int>(ids.size()); }
  bool contains(int a) const {
    return std::binary_search(ids.begin(), ids.end(), a);
  }
  bool operator==(const GrpSubgroup&) const = default;
  bool operator<(const GrpSubgroup& o) const { return ids < o.ids; }
};

inline GrpSubgroup closure(const FiniteGroup& g, std::vector<int> gens) {
  std::set<int> seen{g.id};
  std::vector<int> frontier{g.id};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int x : gens) {
        int b = g.mul(a, x);
        if (seen.insert(b).second) next.push_back(b);
        b = g.mul(a, g.inv(x));
        if (seen.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  GrpSubgroup s;
  s.ids.assign(seen.begin(), seen.end());
  return s;
}

inline GrpSubgroup trivial_grp_subgroup(const FiniteGroup& g) {
  return GrpSubgroup{{g.id}};
}

inline GrpSubgroup full_grp_subgroup(const FiniteGroup& g) {
  GrpSubgroup s;
  for (int i = 0; i < g.n; ++i) s.ids.push_back(i);
  return s;
}

inline bool is_subgroup(const FiniteGroup& g, const GrpSubgroup& s) {
  if (!s.contains(g.id)) return false;
  for (int a : s.ids)
    for (int b : s.ids)
      if (!s.contains(g.mul(a, b))) return false;
  for (int a : s.ids)
    if (!s.contains(g.inv(a))) return false;
  return true;
}

inline bool is_normal(const FiniteGroup& g, const GrpSubgroup& s) {
  for (int a : s.ids)
    for (int b = 0; b < g.n; ++b)
      if (!s.contains(g.conj(a, b))) return false;
  return true;
}

inline bool is_abelian_subgroup(const FiniteGroup& g, const GrpSubgroup& s) {
  for (int a : s.ids)
    for (int b : s.ids)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

inline GrpSubgroup subgroup_intersection(const GrpSubgroup& a,
                                         const GrpSubgroup& b) {
  GrpSubgroup s;
  std::set_intersection(a.ids.begin(), a.ids.end(), b.ids.begin(), b.ids.end(),
                        std::back_inserter(s.ids));
  return s;
}

inline GrpSubgroup subgroup_join(const FiniteGroup& g, const GrpSubgroup& a,
                                 const GrpSubgroup& b) {
  std::vector<int> gens = a.ids;
  gens.insert(gens.end(), b.ids.begin(), b.ids.end());
  return closure(g, gens);
}

// |AB| = |A||B| / |A n B| as a set product of subgroups.
inline bool product_is_whole(const FiniteGroup& g, const GrpSubgroup& a,
                             const GrpSubgroup& b) {
  Coord inter = subgroup_intersection(a, b).size();
  return static_cast<Coord>(a.size()) * b.size() == inter * g.n;
}

inline bool is_subgroup_of_ids(const std::vector<int>& a,
                               const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline GrpSubgroup center(const FiniteGroup& g) {
  GrpSubgroup s;
  for (int a = 0; a < g.n; ++a) {
    bool central = true;
    for (int b = 0; b < g.n && central; ++b) central = g.mul(a, b) == g.mul(b, a);
    if (central) s.ids.push_back(a);
  }
  return s;
}

inline GrpSubgroup centralizer(const FiniteGroup& g, const GrpSubgroup& s) {
  GrpSubgroup c;
  for (int a = 0; a < g.n; ++a) {
    bool ok = true;
    for (int b : s.ids)
      if (g.mul(a, b) != g.mul(b, a)) { ok = false; break; }
    if (ok) c.ids.push_back(a);
  }
  return c;
}

inline GrpSubgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> gens;
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) gens.push_back(g.comm(a, b));
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return closure(g, gens);
}

// A group is nilpotent of class <= 2 exactly when [G,G] is central, which
// happens exactly when the commutator map is bilinear, which happens
// exactly when it is linear in either slot alone. All four conditions are
// evaluated and cross-checked; disagreement means a bug, not an answer.
inline bool is_nilquadratic(const FiniteGroup& g) {
  GrpSubgroup z = center(g);
  GrpSubgroup d = commutator_subgroup(g);
  bool central = is_subgroup_of_ids(d.ids, z.ids);
  bool left = true, right = true, bilinear = true;
  for (int a = 0; a < g.n && left; ++a)
    for (int b = 0; b < g.n && left; ++b)
      for (int c = 0; c < g.n && left; ++c)
        left = g.comm(g.mul(a, b), c) == g.mul(g.comm(a, c), g.comm(b, c));
  for (int a = 0; a < g.n && right; ++a)
    for (int b = 0; b < g.n && right; ++b)
      for (int c = 0; c < g.n && right; ++c)
        right = g.comm(a, g.mul(b, c)) == g.mul(g.comm(a, b), g.comm(a, c));
  bilinear = left && right;
  if (central != left || left != right || right != bilinear)
    throw std::logic_error("class-2 criteria disagree");
  return central;
}

// All subgroups, breadth-first closure, sorted by (size, ids).
inline std::vector<GrpSubgroup> enumerate_grp_subgroups(const FiniteGroup& g,
                                                        int bound = 64) {
  if (g.n > bound)
    throw std::invalid_argument("group too large for subgroup enumeration");
  std::set<GrpSubgroup> found;
  GrpSubgroup triv = trivial_grp_subgroup(g);
  found.insert(triv);
  std::vector<GrpSubgroup> frontier{triv};
  while (!frontier.empty()) {
    std::vector<GrpSubgroup> next;
    for (const auto& s : frontier)
      for (int x = 0; x < g.n; ++x) {
        if (s.contains(x)) continue;
        std::vector<int> gens = s.ids;
        gens.push_back(x);
        GrpSubgroup t = closure(g, gens);
        if (found.insert(t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<GrpSubgroup> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const GrpSubgroup& a, const GrpSubgroup& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a.ids < b.ids;
                   });
  return out;
}

// Quotient by a normal subgroup. Cosets are named by their minimal
// element id; proj maps an ambient id to the quotient id of its coset.
struct QuotientResult {
  FiniteGroup group;
  std::vector<int> proj;
};

inline QuotientResult quotient(const FiniteGroup& g, const GrpSubgroup& nrm) {
  if (!is_subgroup(g, nrm) || !is_normal(g, nrm))
    throw std::invalid_argument("quotient requires a normal subgroup");
  std::vector<int> rep(g.n, -1);
  std::vector<int> reps;
  for (int a = 0; a < g.n; ++a) {
    if (rep[a] >= 0) continue;
    int r = a;  // minimal id in the coset since we scan in order
    for (int h : nrm.ids) rep[g.mul(a, h)] = r;
    reps.push_back(r);
  }
  std::map<int, int> idx;
  for (size_t i = 0; i < reps.size(); ++i) idx[reps[i]] = static_cast<int>(i);
  int q = static_cast<int>(reps.size());
  std::vector<int> tbl(q * q);
  std::vector<std::string> lbls(q);
  for (int i = 0; i < q; ++i) {
    lbls[i] = g.labels[reps[i]] + "N";
    for (int j = 0; j < q; ++j)
      tbl[i * q + j] = idx[rep[g.mul(reps[i], reps[j])]];
  }
  QuotientResult out{FiniteGroup(q, tbl, lbls), std::vector<int>(g.n)};
  for (int a = 0; a < g.n; ++a) out.proj[a] = idx[rep[a]];
  return out;
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  int n = a.n * b.n;
  std::vector<int> tbl(n * n);
  std::vector<std::string> lbls(n);
  for (int i = 0; i < n; ++i) {
    int ai = i / b.n, bi = i % b.n;
    lbls[i] = "(" + a.labels[ai] + "," + b.labels[bi] + ")";
    for (int j = 0; j < n; ++j) {
      int aj = j / b.n, bj = j % b.n;
      tbl[i * n + j] = a.mul(ai, aj) * b.n + b.mul(bi, bj);
    }
  }
  return FiniteGroup(n, tbl, lbls);
}

// Cayley realization of a FinAbGroup; element id == lexicographic index.
inline FiniteGroup realize_ab(const FinAbGroup& g) {
  int n = static_cast<int>(g.size());
  std::vector<int> tbl(static_cast<size_t>(n) * n);
  std::vector<std::string> lbls(n);
  for (int i = 0; i < n; ++i) {
    AbElement a = g.element_at(i);
    lbls[i] = g.render(a);
    for (int j = 0; j < n; ++j)
      tbl[static_cast<size_t>(i) * n + j] =
          static_cast<int>(g.index_of(g.add(a, g.element_at(j))));
  }
  return FiniteGroup(n, tbl, lbls);
}

// Restriction of the ambient table to a subgroup, with the id map back.
struct SubgroupTable {
  FiniteGroup group;
  std::vector<int> to_ambient;           // subgroup id -> ambient id
  std::map<int, int> from_ambient;       // ambient id -> subgroup id
};

inline SubgroupTable subgroup_table(const FiniteGroup& g, const GrpSubgroup& s) {
  SubgroupTable out;
  out.to_ambient = s.ids;
  for (size_t i = 0; i < s.ids.size(); ++i)
    out.from_ambient[s.ids[i]] = static_cast<int>(i);
  int n = s.size();
  std::vector<int> tbl(static_cast<size_t>(n) * n);
  std::vector<std::string> lbls(n);
  for (int i = 0; i < n; ++i) {
    lbls[i] = g.labels[s.ids[i]];
    for (int j = 0; j < n; ++j)
      tbl[static_cast<size_t>(i) * n + j] =
          out.from_ambient.at(g.mul(s.ids[i], s.ids[j]));
  }
  out.group = FiniteGroup(n, tbl, lbls);
  return out;
}

// Cyclic decomposition of an abelian Cayley table: a FinAbGroup and an
// isomorphism (ambient id -> element index, both directions). Peels off a
// maximal-order cyclic factor and a direct complement, recursively; a
// complement always exists because a maximal-order cyclic subgroup of a
// finite abelian group is a direct summand.
struct AbDecomposition {
  FinAbGroup group;
  std::vector<Coord> to_index;  // table id -> FinAbGroup element index
  std::vector<int> to_id;       // element index -> table id
};

namespace detail {
// search for a subgroup K with K n C = 1 and |K| * |C| = |G|
inline bool grow_complement(const FiniteGroup& g, const GrpSubgroup& c,
                            GrpSubgroup& k, Coord target,
                            std::set<GrpSubgroup>& seen) {
  if (k.size() == target) return true;
  if (!seen.insert(k).second) return false;
  for (int x = 0; x < g.n; ++x) {
    if (k.contains(x)) continue;
    std::vector<int> gens = k.ids;
    gens.push_back(x);
    GrpSubgroup t = closure(g, gens);
    if (t.size() > target) continue;
    if (subgroup_intersection(t, c).size() != 1) continue;
    GrpSubgroup saved = k;
    k = t;
    if (grow_complement(g, c, k, target, seen)) return true;
    k = saved;
  }
  return false;
}
}  // namespace detail

inline AbDecomposition abelian_decomposition(const FiniteGroup& g) {
  if (!g.is_abelian())
    throw std::invalid_argument("cyclic decomposition needs an abelian table");
  std::vector<Coord> orders;
  std::vector<int> gens;  // ambient ids of the cyclic generators
  // decompose recursively on subgroup tables; track ids in the original g
  std::vector<int> amb(g.n);
  for (int i = 0; i < g.n; ++i) amb[i] = i;
  FiniteGroup cur = g;
  std::vector<int> cur_amb = amb;
  while (cur.n > 1) {
    int best = cur.id;
    Coord besto = 1;
    for (int x = 0; x < cur.n; ++x)
      if (cur.order_of(x) > besto) { besto = cur.order_of(x); best = x; }
    GrpSubgroup c = closure(cur, {best});
    GrpSubgroup k = trivial_grp_subgroup(cur);
    std::set<GrpSubgroup> seen;
    if (!detail::grow_complement(cur, c, k, cur.n / besto, seen))
      throw std::logic_error("no complement for maximal cyclic subgroup");
    orders.push_back(besto);
    gens.push_back(cur_amb[best]);
    SubgroupTable st = subgroup_table(cur, k);
    std::vector<int> next_amb(st.group.n);
    for (int i = 0; i < st.group.n; ++i) next_amb[i] = cur_amb[st.to_ambient[i]];
    cur = st.group;
    cur_amb = next_amb;
  }
  if (orders.empty()) orders.push_back(1);
  while (gens.size() < orders.size()) gens.push_back(g.id);

  AbDecomposition out;
  out.group = FinAbGroup(orders);
  out.to_index.assign(g.n, -1);
  out.to_id.assign(g.n, -1);
  // enumerate all coordinate tuples and multiply out the generators
  Coord total = out.group.size();
  if (total != g.n) throw std::logic_error("decomposition size mismatch");
  for (Coord idx = 0; idx < total; ++idx) {
    AbElement e = out.group.element_at(idx);
    int prod = g.id;
    for (size_t i = 0; i < gens.size(); ++i)
      for (Coord k = 0; k < e[i]; ++k) prod = g.mul(prod, gens[i]);
    if (out.to_index[prod] != -1) throw std::logic_error("decomposition not a bijection");
    out.to_index[prod] = idx;
    out.to_id[idx] = prod;
  }
  return out;
}

// Group isomorphism search by backtracking on generator images; intended
// for small groups (|g| <= 16 or so). Returns the image map id -> id.
inline std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g,
                                                        const FiniteGroup& h) {
  if (g.n != h.n) return std::nullopt;
  // generating sequence for g, greedy by order
  std::vector<int> gens;
  GrpSubgroup cur = trivial_grp_subgroup(g);
  std::vector<int> byorder(g.n);
  for (int i = 0; i < g.n; ++i) byorder[i] = i;
  std::stable_sort(byorder.begin(), byorder.end(), [&](int a, int b) {
    return g.order_of(a) > g.order_of(b);
  });
  for (int x : byorder) {
    if (cur.size() == g.n) break;
    if (!cur.contains(x)) {
      gens.push_back(x);
      std::vector<int> cg = cur.ids;
      cg.push_back(x);
      cur = closure(g, cg);
    }
  }
  std::vector<int> img(g.n, -1);

  // extend a partial map on generators to the whole group, or fail
  auto try_extend = [&](const std::vector<int>& gen_imgs) -> std::optional<std::vector<int>> {
    std::vector<int> phi(g.n, -1);
    phi[g.id] = h.id;
    std::vector<int> frontier{g.id};
    std::vector<bool> used(h.n, false);
    used[h.id] = true;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int a : frontier)
        for (size_t i = 0; i < gens.size(); ++i) {
          int b = g.mul(a, gens[i]);
          int fb = h.mul(phi[a], gen_imgs[i]);
          if (phi[b] == -1) {
            if (used[fb]) return std::nullopt;
            phi[b] = fb;
            used[fb] = true;
            next.push_back(b);
          } else if (phi[b] != fb) {
            return std::nullopt;
          }
        }
      frontier = std::move(next);
    }
    for (int a = 0; a < g.n; ++a)
      if (phi[a] == -1) return std::nullopt;
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b)
        if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return std::nullopt;
    return phi;
  };

  std::vector<int> gen_imgs(gens.size(), -1);
  std::optional<std::vector<int>> result;
  auto rec = [&](auto&& self, size_t i) -> bool {
    if (i == gens.size()) {
      result = try_extend(gen_imgs);
      return result.has_value();
    }
    for (int y = 0; y < h.n; ++y) {
      if (h.order_of(y) != g.order_of(gens[i])) continue;
      gen_imgs[i] = y;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return result;
}

// All homomorphisms g -> h (not just isomorphisms), enumerated by
// backtracking over generator images; intended for tiny groups.
inline std::vector<std::vector<int>> all_homomorphisms(const FiniteGroup& g,
                                                       const FiniteGroup& h) {
  std::vector<int> gens;
  GrpSubgroup cur = trivial_grp_subgroup(g);
  for (int x = 0; x < g.n; ++x) {
    if (cur.size() == g.n) break;
    if (!cur.contains(x)) {
      gens.push_back(x);
      std::vector<int> cg = cur.ids;
      cg.push_back(x);
      cur = closure(g, cg);
    }
  }
  auto try_extend = [&](const std::vector<int>& gen_imgs)
      -> std::optional<std::vector<int>> {
    std::vector<int> phi(g.n, -1);
    phi[g.id] = h.id;
    std::vector<int> frontier{g.id};
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int a : frontier)
        for (size_t i = 0; i < gens.size(); ++i) {
          int b = g.mul(a, gens[i]);
          int fb = h.mul(phi[a], gen_imgs[i]);
          if (phi[b] == -1) {
            phi[b] = fb;
            next.push_back(b);
          } else if (phi[b] != fb) {
            return std::nullopt;
          }
        }
      frontier = std::move(next);
    }
    for (int a = 0; a < g.n; ++a)
      for (int b = 0; b < g.n; ++b)
        if (phi[g.mul(a, b)] != h.mul(phi[a], phi[b])) return std::nullopt;
    return phi;
  };
  std::vector<std::vector<int>> out;
  std::vector<int> gen_imgs(gens.size(), 0);
  auto rec = [&](auto&& self, size_t i) -> void {
    if (i == gens.size()) {
      if (auto phi = try_extend(gen_imgs)) out.push_back(*phi);
      return;
    }
    for (int y = 0; y < h.n; ++y) {
      // the image order must divide the generator order
      if (g.order_of(gens[i]) % h.order_of(y) != 0) continue;
      gen_imgs[i] = y;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

// ---- splittings ------------------------------------------------------

enum class SplittingKind { Normal, Abelian };

// A pair (K, N) of normal subgroups with K N = E, K n N central, and
// internal complements K = (K n N) x X, N = (K n N) x Y.
struct Splitting {
  GrpSubgroup k, n;
  GrpSubgroup x, y;  // complements of K n N inside K resp. N
  SplittingKind kind = SplittingKind::Normal;
};

namespace detail {
inline std::optional<GrpSubgroup> central_complement(
    const FiniteGroup& g, const std::vector<GrpSubgroup>& all,
    const GrpSubgroup& inside, const GrpSubgroup& t) {
  for (const auto& x : all) {
    if (!is_subgroup_of_ids(x.ids, inside.ids)) continue;
    if (subgroup_intersection(x, t).size() != 1) continue;
    if (static_cast<Coord>(x.size()) * t.size() != inside.size()) continue;
    return x;  // central T means X T = K is automatic once sizes match
  }
  return std::nullopt;
}
}  // namespace detail

inline std::vector<Splitting> find_splittings(const FiniteGroup& g,
                                              int bound = 64) {
  std::vector<GrpSubgroup> all = enumerate_grp_subgroups(g, bound);
  GrpSubgroup z = center(g);
  std::vector<Splitting> out;
  for (const auto& k : all) {
    if (!is_normal(g, k)) continue;
    for (const auto& n : all) {
      if (!is_normal(g, n)) continue;
      GrpSubgroup t = subgroup_intersection(k, n);
      if (!is_subgroup_of_ids(t.ids, z.ids)) continue;
      if (!product_is_whole(g, k, n)) continue;
      auto x = detail::central_complement(g, all, k, t);
      if (!x) continue;
      auto y = detail::central_complement(g, all, n, t);
      if (!y) continue;
      Splitting s{k, n, *x, *y, SplittingKind::Normal};
      bool kmax = is_abelian_subgroup(g, k) && centralizer(g, k) == k;
      bool nmax = is_abelian_subgroup(g, n) && centralizer(g, n) == n;
      if (kmax && nmax) s.kind = SplittingKind::Abelian;
      out.push_back(s);
    }
  }
  return out;
}

// ---- standard tables -------------------------------------------------

inline FiniteGroup cyclic_table(int n) {
  std::vector<int> tbl(n * n);
  std::vector<std::string> lbls(n);
  for (int i = 0; i < n; ++i) {
    lbls[i] = "c" + std::to_string(i);
    for (int j = 0; j < n; ++j) tbl[i * n + j] = (i + j) % n;
  }
  return FiniteGroup(n, tbl, lbls);
}

// Dihedral group of order 2n; elements t^i (ids 0..n-1) and t^i r
// (ids n..2n-1), with r t r^{-1} = t^{-1}.
inline FiniteGroup dihedral_table(int n) {
  int m = 2 * n;
  auto enc = [&](int i, int f) { return f ? n + i : i; };
  std::vector<int> tbl(m * m);
  std::vector<std::string> lbls(m);
  for (int i = 0; i < n; ++i) {
    std::string p = i == 0 ? "" : (i == 1 ? "t" : "t" + std::to_string(i));
    lbls[i] = i == 0 ? "1" : p;
    lbls[n + i] = p + "r";
  }
  for (int i = 0; i < n; ++i)
    for (int fi = 0; fi < 2; ++fi)
      for (int j = 0; j < n; ++j)
        for (int fj = 0; fj < 2; ++fj) {
          // (t^i r^fi)(t^j r^fj) = t^{i + (-1)^fi j} r^{fi+fj}
          int k = ((i + (fi ? n - j : j)) % n + n) % n;
          tbl[enc(i, fi) * m + enc(j, fj)] = enc(k, fi ^ fj);
        }
  return FiniteGroup(m, tbl, lbls);
}

// Quaternion group {+-1, +-i, +-j, +-k}: ids 1,-1,i,-i,j,-j,k,-k.
inline FiniteGroup quaternion_table() {
  const int n = 8;
  std::vector<std::string> lbls = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  auto neg = [](int a) { return a ^ 1; };
  std::vector<int> tbl(n * n, -1);
  auto set = [&](int a, int b, int c) {
    // fill all sign variants of a*b=c at once
    tbl[a * n + b] = c;
    tbl[neg(a) * n + b] = neg(c);
    tbl[a * n + neg(b)] = neg(c);
    tbl[neg(a) * n + neg(b)] = c;
  };
  int one = 0, i = 2, j = 4, k = 6;
  for (int a = 0; a < n; a += 2) { set(one, a, a); if (a != one) set(a, one, a); }
  set(i, i, neg(one));
  set(j, j, neg(one));
  set(k, k, neg(one));
  set(i, j, k);
  set(j, i, neg(k));
  set(j, k, i);
  set(k, j, neg(i));
  set(k, i, j);
  set(i, k, neg(j));
  return FiniteGroup(n, tbl, lbls);
}

inline FiniteGroup symmetric3_table() { return dihedral_table(3); }

inline FiniteGroup klein_table() {
  return realize_ab(FinAbGroup({2, 2}));
}

}  // namespace hforge
