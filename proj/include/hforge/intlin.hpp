#pragma once

// Integer linear algebra over Z/m: Smith-style diagonalization used to
// solve congruence systems A y = b (mod m) without enumerating T^P.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace hforge {

using Coord = long long;
using IntMat = std::vector<std::vector<Coord>>;

inline Coord mod_reduce(Coord a, Coord m) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  Coord r = a % m;
  return r < 0 ? r + m : r;
}

// gcd with Bezout coefficients: g = a*x + b*y
inline Coord ext_gcd(Coord a, Coord b, Coord& x, Coord& y) {
  if (b == 0) { x = 1; y = 0; return a; }
  Coord x1, y1;
  Coord g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

inline Coord mod_inverse(Coord a, Coord m) {
  Coord x, y;
  Coord g = ext_gcd(mod_reduce(a, m), m, x, y);
  if (g != 1) throw std::invalid_argument("not invertible");
  return mod_reduce(x, m);
}

namespace detail {

// Diagonalize a (entries taken mod m) in place by unimodular row/column
// operations, carrying b along row operations and accumulating column
// operations into v (so y = v z maps solutions back). Reducing entries
// mod m never changes the solution set of A y = b (mod m), so all
// arithmetic stays small.
inline void diagonalize_mod(IntMat& a, std::vector<Coord>& b, IntMat& v,
                            Coord m) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& e : row) e = mod_reduce(e, m);
  for (auto& e : b) e = mod_reduce(e, m);
  v.assign(cols, std::vector<Coord>(cols, 0));
  for (size_t i = 0; i < cols; ++i) v[i][i] = 1;

  auto row_sub = [&](size_t dst, size_t src, Coord q) {
    for (size_t j = 0; j < cols; ++j)
      a[dst][j] = mod_reduce(a[dst][j] - q * a[src][j], m);
    b[dst] = mod_reduce(b[dst] - q * b[src], m);
  };
  auto col_sub = [&](size_t dst, size_t src, Coord q) {
    for (size_t i = 0; i < rows; ++i)
      a[i][dst] = mod_reduce(a[i][dst] - q * a[i][src], m);
    for (size_t i = 0; i < cols; ++i)
      v[i][dst] = mod_reduce(v[i][dst] - q * v[i][src], m);
  };
  auto col_swap = [&](size_t x, size_t y) {
    for (size_t i = 0; i < rows; ++i) std::swap(a[i][x], a[i][y]);
    for (size_t i = 0; i < cols; ++i) std::swap(v[i][x], v[i][y]);
  };

  const size_t steps = std::min(rows, cols);
  for (size_t t = 0; t < steps; ++t) {
    // smallest nonzero residue of the trailing block becomes the pivot
    size_t pr = rows, pc = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (a[i][j] != 0 && (pr == rows || a[i][j] < a[pr][pc])) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;  // trailing block is zero

    // Reduce the pivot's row and column; any nonzero remainder is a
    // strictly smaller residue, so re-pivoting on it terminates.
    for (;;) {
      if (pr != t) { std::swap(a[t], a[pr]); std::swap(b[t], b[pr]); }
      if (pc != t) col_swap(t, pc);
      const Coord p = a[t][t];
      for (size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0) row_sub(i, t, a[i][t] / p);
      for (size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0) col_sub(j, t, a[t][j] / p);
      pr = t;
      pc = t;
      Coord best = 0;
      for (size_t i = t + 1; i < rows; ++i)
        if (a[i][t] != 0 && (best == 0 || a[i][t] < best)) {
          best = a[i][t];
          pr = i;
          pc = t;
        }
      for (size_t j = t + 1; j < cols; ++j)
        if (a[t][j] != 0 && (best == 0 || a[t][j] < best)) {
          best = a[t][j];
          pr = t;
          pc = j;
        }
      if (best == 0) break;
    }
  }
}

}  // namespace detail

// Solves A y = b (mod m) for y in [0,m)^cols, returning one solution or
// nullopt. Only residues of A and b matter.
inline std::optional<std::vector<Coord>> solve_congruences(IntMat a,
                                                           std::vector<Coord> b,
                                                           Coord m) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  if (b.size() != rows) throw std::invalid_argument("rhs size mismatch");
  if (m == 1) return std::vector<Coord>(cols, 0);
  IntMat v;
  detail::diagonalize_mod(a, b, v, m);

  std::vector<Coord> z(cols, 0);
  for (size_t i = 0; i < rows; ++i) {
    Coord d = (i < cols) ? a[i][i] : 0;
    Coord rhs = b[i];
    if (d == 0) {
      if (rhs != 0) return std::nullopt;
      continue;
    }
    Coord g = std::gcd(d, m);
    if (rhs % g != 0) return std::nullopt;
    Coord mm = m / g;
    z[i] = mm == 1 ? 0 : mod_reduce((rhs / g) * mod_inverse(d / g, mm), mm);
  }
  std::vector<Coord> y(cols, 0);
  for (size_t i = 0; i < cols; ++i) {
    Coord acc = 0;
    for (size_t j = 0; j < cols; ++j) acc = mod_reduce(acc + v[i][j] * z[j], m);
    y[i] = acc;
  }
  return y;
}

// Number of solutions of A y = 0 (mod m): each diagonal pivot d
// contributes gcd(d, m) solutions, each free variable contributes m.
inline Coord count_nullspace_mod(IntMat a, Coord m) {
  const size_t cols = a.empty() ? 0 : a[0].size();
  if (m == 1) return 1;
  std::vector<Coord> b(a.size(), 0);
  IntMat v;
  detail::diagonalize_mod(a, b, v, m);
  Coord count = 1;
  for (size_t j = 0; j < cols; ++j) {
    Coord d = (j < a.size()) ? a[j][j] : 0;
    count *= std::gcd(d == 0 ? m : d, m);
  }
  return count;
}

}  // namespace hforge
