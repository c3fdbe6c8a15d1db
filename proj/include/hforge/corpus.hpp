#pragma once

// Deterministic test corpus: every duality Gamma x G -> T with Gamma, G, T
// drawn from a fixed list of small abelian groups and |H(beta)| within a
// cap, plus a handful of nonabelian multiplication tables.

#include "hforge/examples.hpp"
#include "hforge/heis.hpp"

namespace hforge {

struct CorpusEntry {
  std::string name;
  BilinearForm form;
};

inline std::string group_tag(const FinAbGroup& g) {
  std::string s;
  for (size_t i = 0; i < g.orders.size(); ++i) {
    if (i) s += "x";
    s += "Z" + std::to_string(g.orders[i]);
  }
  return s.empty() ? "Z1" : s;
}

// all dualities between the listed groups, |T| * |G| * |Gamma| <= max_order
inline std::vector<CorpusEntry> duality_corpus(Coord max_order = 256) {
  std::vector<FinAbGroup> pool = {FinAbGroup({2}), FinAbGroup({3}),
                                  FinAbGroup({4}), FinAbGroup({2, 2})};
  std::vector<CorpusEntry> out;
  for (const auto& gamma : pool)
    for (const auto& g : pool)
      for (const auto& t : pool) {
        if (t.size() * g.size() * gamma.size() > max_order) continue;
        int idx = 0;
        for (const auto& b : all_bilinear_forms(gamma, g, t)) {
          ++idx;
          if (!is_duality(b)) continue;
          out.push_back({"duality:" + group_tag(gamma) + ":" + group_tag(g) +
                             ":" + group_tag(t) + ":#" + std::to_string(idx),
                         b});
        }
      }
  return out;
}

struct TableEntry {
  std::string name;
  FiniteGroup group;
};

inline std::vector<TableEntry> table_corpus() {
  return {{"dihedral8", dihedral_table(4)},
          {"quaternion8", quaternion_table()},
          {"symmetric3", symmetric3_table()},
          {"dihedral12", dihedral_table(6)}};
}

}  // namespace hforge
