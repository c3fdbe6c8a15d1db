#pragma once

// Central extensions 1 -> T -> E -> P -> 1 of a finite abelian phase
// group P by a torus T, with E given as a Cayley table. inj and proj are
// stored as index maps against the canonical element enumerations of T
// and P.

#include <optional>
#include <stdexcept>
#include <vector>

#include "hforge/grp.hpp"

namespace hforge {

struct CentralExtension {
  FiniteGroup total;
  FinAbGroup torus;
  FinAbGroup phase;
  std::vector<int> inj;   // torus index -> total id
  std::vector<int> proj;  // total id -> phase index

  void validate() const {
    if (static_cast<Coord>(inj.size()) != torus.size())
      throw std::invalid_argument("inj must cover the torus");
    if (static_cast<int>(proj.size()) != total.n)
      throw std::invalid_argument("proj must cover the total group");
    if (torus.size() * phase.size() != total.n)
      throw std::invalid_argument("sizes are not exact");
    // inj: injective homomorphism with central image
    std::vector<bool> hit(total.n, false);
    for (Coord a = 0; a < torus.size(); ++a) {
      if (hit[inj[a]]) throw std::invalid_argument("inj is not injective");
      hit[inj[a]] = true;
      for (Coord b = 0; b < torus.size(); ++b) {
        Coord c = torus.index_of(torus.add(torus.element_at(a), torus.element_at(b)));
        if (total.mul(inj[a], inj[b]) != inj[c])
          throw std::invalid_argument("inj is not a homomorphism");
      }
      for (int u = 0; u < total.n; ++u)
        if (total.mul(inj[a], u) != total.mul(u, inj[a]))
          throw std::invalid_argument("inj image is not central");
    }
    // proj: surjective homomorphism with kernel = image of inj
    std::vector<bool> phit(phase.size(), false);
    for (int u = 0; u < total.n; ++u) phit[proj[u]] = true;
    for (Coord z = 0; z < phase.size(); ++z)
      if (!phit[z]) throw std::invalid_argument("proj is not surjective");
    for (int u = 0; u < total.n; ++u)
      for (int v = 0; v < total.n; ++v) {
        Coord w = phase.index_of(phase.add(phase.element_at(proj[u]),
                                           phase.element_at(proj[v])));
        if (proj[total.mul(u, v)] != static_cast<int>(w))
          throw std::invalid_argument("proj is not a homomorphism");
      }
    for (int u = 0; u < total.n; ++u) {
      bool in_t = hit[u];
      if ((proj[u] == proj[total.id]) != in_t)
        throw std::invalid_argument("kernel of proj differs from the torus");
    }
  }

  // minimal-id set section s: P -> E, normalized (s(0) = identity)
  std::vector<int> standard_section() const {
    std::vector<int> s(phase.size(), -1);
    for (int u = 0; u < total.n; ++u)
      if (s[proj[u]] == -1) s[proj[u]] = u;
    s[proj[total.id]] = total.id;
    return s;
  }

  // inverse of inj on its image
  Coord torus_index_of(int u) const {
    for (Coord a = 0; a < torus.size(); ++a)
      if (inj[a] == u) return a;
    throw std::invalid_argument("element is not in the torus");
  }

  // the central subgroup T-hat as an id set
  GrpSubgroup torus_subgroup() const {
    GrpSubgroup s;
    s.ids = inj;
    std::sort(s.ids.begin(), s.ids.end());
    return s;
  }

  // preimage of a phase subgroup
  GrpSubgroup lift(const AbSubgroup& s) const {
    GrpSubgroup out;
    for (int u = 0; u < total.n; ++u)
      if (s.contains_index(proj[u])) out.ids.push_back(u);
    return out;
  }
};

// germ of the 2-cocycle classified by the extension, relative to a
// section: gamma(z, w) = inj^{-1}( s(z) s(w) s(z+w)^{-1} )
inline AbElement extension_cocycle_value(const CentralExtension& e,
                                         const std::vector<int>& s, Coord z,
                                         Coord w) {
  Coord zw = e.phase.index_of(
      e.phase.add(e.phase.element_at(z), e.phase.element_at(w)));
  int u = e.total.mul(e.total.mul(s[z], s[w]), e.total.inv(s[zw]));
  return e.torus.element_at(e.torus_index_of(u));
}

// commutator pairing omega(z, w) = inj^{-1}[s(z), s(w)]; independent of
// the chosen section because the extension is central.
inline AbElement commutator_value(const CentralExtension& e,
                                  const std::vector<int>& s, Coord z, Coord w) {
  int u = e.total.comm(s[z], s[w]);
  return e.torus.element_at(e.torus_index_of(u));
}

}  // namespace hforge
