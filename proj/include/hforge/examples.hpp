#pragma once

// Named example instances: the dihedral group of order 8 with its
// splitting and form, the discrete Heisenberg family over Z_N, the
// carry-bit perturbation of its cocycle, and the rank-3 demonstration
// form with no Lagrangian bisections.

#include "hforge/cohom.hpp"
#include "hforge/heis.hpp"

namespace hforge {
namespace examples {

// beta: Z2 x Z2 -> Z2 with generator value 1; H(beta) is dihedral of
// order 8
inline BilinearForm d4_form() {
  FinAbGroup z2({2});
  return BilinearForm(z2, z2, z2, {{AbElement{1}}});
}

// the finite duality Z_N x Z_N -> Z_N, beta(xi, y) = xi * y
inline BilinearForm heis_form(Coord n) {
  if (n < 1) throw std::invalid_argument("N must be positive");
  FinAbGroup zn({n});
  std::vector<std::vector<AbElement>> m{{AbElement{n > 1 ? 1 : 0}}};
  return BilinearForm(zn, zn, zn, m);
}

// standard cocycle of heis_form(N) on P = Z_N + Z_N (coordinates (x, xi))
inline Cocycle heis_cocycle(Coord n) { return standard_cocycle(heis_form(n)); }

// carry bit of addition in the first coordinate:
// alpha((x,xi),(x',xi')) = 1 in Z_N when x + x' >= N, else 0
inline Cocycle carry_cocycle(Coord n) {
  FinAbGroup p({n, n});
  FinAbGroup t({n});
  Coord sz = p.size();
  std::vector<AbElement> tbl(sz * sz, t.zero());
  for (Coord i = 0; i < sz; ++i)
    for (Coord j = 0; j < sz; ++j)
      if (p.element_at(i)[0] + p.element_at(j)[0] >= n)
        tbl[i * sz + j] = AbElement{n > 1 ? 1 : 0};
  return Cocycle(Cochain(2, p, t, tbl));
}

// gamma0 + alpha: same commutator form as gamma0, inequivalent extension
inline Cocycle perturbed_cocycle(Coord n) {
  return Cocycle(cochain_add(heis_cocycle(n).c2, carry_cocycle(n).c2));
}

// the literal reading "gamma((x,xi),(y,eta)) = xi + y" as a raw degree-2
// cochain; it fails the cocycle identity and exists only as a negative
// control for the verifier
inline Cochain literal_sum_cochain(Coord n) {
  FinAbGroup p({n, n});
  FinAbGroup t({n});
  Coord sz = p.size();
  std::vector<AbElement> tbl(sz * sz, t.zero());
  for (Coord i = 0; i < sz; ++i)
    for (Coord j = 0; j < sz; ++j)
      tbl[i * sz + j] =
          AbElement{mod_reduce(p.element_at(i)[1] + p.element_at(j)[0], n)};
  return Cochain(2, p, t, tbl);
}

// alternating form on (Z2)^3 with values in (Z2)^3:
// omega(e_i, e_j) = e_k for {i,j,k} = {0,1,2}; it has no Lagrangian
// bisection
inline AlternatingForm freenil3_form() {
  FinAbGroup p({2, 2, 2});
  FinAbGroup t({2, 2, 2});
  std::vector<std::vector<AbElement>> m(3, std::vector<AbElement>(3, t.zero()));
  auto e = [&](int k) {
    AbElement v = t.zero();
    v[k] = 1;
    return v;
  };
  m[0][1] = e(2);
  m[1][0] = e(2);
  m[0][2] = e(1);
  m[2][0] = e(1);
  m[1][2] = e(0);
  m[2][1] = e(0);
  return alternating_from_matrix(p, t, m);
}

}  // namespace examples
}  // namespace hforge
