#pragma once

// Torus-valued bilinear pairings beta: Gamma x G -> T between finite
// abelian groups, stored as a generator matrix: values[i][j] is the image
// of the (i-th generator of Gamma, j-th generator of G) pair. Torus
// values are residue tuples internally; rendering is multiplicative.

#include <optional>
#include <stdexcept>
#include <vector>

#include "hforge/finab.hpp"

namespace hforge {

struct BilinearForm {
  FinAbGroup gamma;  // left (momentum) group
  FinAbGroup g;      // right (position) group
  FinAbGroup torus;
  std::vector<std::vector<AbElement>> values;  // gamma.rank() x g.rank()

  BilinearForm() = default;
  BilinearForm(FinAbGroup gm, FinAbGroup gg, FinAbGroup t,
               std::vector<std::vector<AbElement>> vals)
      : gamma(std::move(gm)), g(std::move(gg)), torus(std::move(t)),
        values(std::move(vals)) {
    if (values.size() != gamma.rank())
      throw std::invalid_argument("one value row per generator of gamma");
    for (size_t i = 0; i < values.size(); ++i) {
      if (values[i].size() != g.rank())
        throw std::invalid_argument("one value per generator of g");
      for (size_t j = 0; j < values[i].size(); ++j) {
        const AbElement& v = values[i][j];
        if (!torus.valid(v))
          throw std::invalid_argument("form value out of range");
        // well-definedness: killing either generator's order kills the value
        if (torus.scale(gamma.orders[i], v) != torus.zero() ||
            torus.scale(g.orders[j], v) != torus.zero())
          throw std::invalid_argument("form value violates a relation");
      }
    }
  }

  AbElement eval(const AbElement& xi, const AbElement& x) const {
    AbElement out = torus.zero();
    for (size_t i = 0; i < gamma.rank(); ++i)
      for (size_t j = 0; j < g.rank(); ++j)
        out = torus.add(out, torus.scale(xi[i] * x[j], values[i][j]));
    return out;
  }

  bool operator==(const BilinearForm&) const = default;
};

inline BilinearForm zero_form(const FinAbGroup& gamma, const FinAbGroup& g,
                              const FinAbGroup& t) {
  std::vector<std::vector<AbElement>> vals(
      gamma.rank(), std::vector<AbElement>(g.rank(), t.zero()));
  return BilinearForm(gamma, g, t, vals);
}

// Right kernel G0 = { x : beta(xi, x) = 0 for all xi }.
inline AbSubgroup right_kernel(const BilinearForm& b) {
  std::vector<AbElement> gens;
  for (Coord i = 0; i < b.g.size(); ++i) {
    AbElement x = b.g.element_at(i);
    bool ok = true;
    for (Coord j = 0; j < b.gamma.size() && ok; ++j)
      ok = b.eval(b.gamma.element_at(j), x) == b.torus.zero();
    if (ok) gens.push_back(x);
  }
  return subgroup_from_generators(b.g, gens);
}

// Left kernel Gamma0 = { xi : beta(xi, x) = 0 for all x }.
inline AbSubgroup left_kernel(const BilinearForm& b) {
  std::vector<AbElement> gens;
  for (Coord i = 0; i < b.gamma.size(); ++i) {
    AbElement xi = b.gamma.element_at(i);
    bool ok = true;
    for (Coord j = 0; j < b.g.size() && ok; ++j)
      ok = b.eval(xi, b.g.element_at(j)) == b.torus.zero();
    if (ok) gens.push_back(xi);
  }
  return subgroup_from_generators(b.gamma, gens);
}

inline bool is_duality(const BilinearForm& b) {
  return left_kernel(b).size() == 1 && right_kernel(b).size() == 1;
}

// Transposed pairing beta^T: G x Gamma -> T, beta^T(x, xi) = beta(xi, x).
inline BilinearForm transpose(const BilinearForm& b) {
  std::vector<std::vector<AbElement>> vals(
      b.g.rank(), std::vector<AbElement>(b.gamma.rank()));
  for (size_t i = 0; i < b.g.rank(); ++i)
    for (size_t j = 0; j < b.gamma.rank(); ++j) vals[i][j] = b.values[j][i];
  return BilinearForm(b.g, b.gamma, b.torus, vals);
}

// Orthogonal of a subgroup under the pairing. side == Left: the input is
// a subgroup of Gamma and the result lives in G; side == Right: input in
// G, result in Gamma.
enum class PairingSide { Left, Right };

inline AbSubgroup pairing_orthogonal(const BilinearForm& b, PairingSide side,
                                     const AbSubgroup& s) {
  std::vector<AbElement> gens;
  if (side == PairingSide::Left) {
    if (s.ambient != b.gamma)
      throw std::invalid_argument("subgroup must live in gamma");
    for (Coord i = 0; i < b.g.size(); ++i) {
      AbElement x = b.g.element_at(i);
      bool ok = true;
      for (Coord idx : s.elems)
        if (b.eval(b.gamma.element_at(idx), x) != b.torus.zero()) { ok = false; break; }
      if (ok) gens.push_back(x);
    }
    return subgroup_from_generators(b.g, gens);
  }
  if (s.ambient != b.g)
    throw std::invalid_argument("subgroup must live in g");
  for (Coord i = 0; i < b.gamma.size(); ++i) {
    AbElement xi = b.gamma.element_at(i);
    bool ok = true;
    for (Coord idx : s.elems)
      if (b.eval(xi, b.g.element_at(idx)) != b.torus.zero()) { ok = false; break; }
    if (ok) gens.push_back(xi);
  }
  return subgroup_from_generators(b.gamma, gens);
}

}  // namespace hforge
