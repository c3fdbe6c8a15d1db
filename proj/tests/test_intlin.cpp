#include <cstdlib>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hforge/intlin.hpp"

using namespace hforge;

namespace {

// brute-force oracle: does a*z = rhs (mod m) have a solution, and how many
// vectors lie in the nullspace?
struct BruteResult {
  bool solvable = false;
  Coord nullspace = 0;
};

BruteResult brute(const IntMat& a, const std::vector<Coord>& rhs, Coord m) {
  size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
  BruteResult out;
  std::vector<Coord> z(cols, 0);
  for (;;) {
    bool ok = true, null_ok = true;
    for (size_t r = 0; r < rows && (ok || null_ok); ++r) {
      Coord acc = 0;
      for (size_t c = 0; c < cols; ++c) acc += a[r][c] * z[c];
      if (mod_reduce(acc, m) != mod_reduce(rhs[r], m)) ok = false;
      if (mod_reduce(acc, m) != 0) null_ok = false;
    }
    if (ok) out.solvable = true;
    if (null_ok) ++out.nullspace;
    size_t k = 0;
    while (k < cols && ++z[k] == m) z[k++] = 0;
    if (k == cols) break;
  }
  if (cols == 0) {
    out.nullspace = 1;
    out.solvable = true;
    for (size_t r = 0; r < rows; ++r)
      if (mod_reduce(rhs[r], m) != 0) out.solvable = false;
  }
  return out;
}

}  // namespace

TEST_CASE("extended gcd and modular inverse") {
  for (Coord a = -30; a <= 30; ++a)
    for (Coord b = -30; b <= 30; ++b) {
      Coord x = 0, y = 0;
      Coord g = ext_gcd(a, b, x, y);
      CHECK(a * x + b * y == g);
      CHECK(std::abs(g) == std::gcd(a, b));
    }
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(2, 9) == 5);
  CHECK_THROWS_AS(mod_inverse(2, 4), std::invalid_argument);
}

TEST_CASE("congruence solver agrees with exhaustive search") {
  std::mt19937_64 rng(20260826);
  for (Coord m : {2, 3, 4, 5, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 60; ++trial) {
      size_t rows = 1 + rng() % 4, cols = 1 + rng() % 3;
      IntMat a(rows, std::vector<Coord>(cols));
      std::vector<Coord> rhs(rows);
      for (auto& row : a)
        for (auto& v : row) v = static_cast<Coord>(rng() % (2 * m)) - m;
      for (auto& v : rhs) v = static_cast<Coord>(rng() % m);
      BruteResult oracle = brute(a, rhs, m);
      auto sol = solve_congruences(a, rhs, m);
      CHECK(sol.has_value() == oracle.solvable);
      if (sol) {
        for (size_t r = 0; r < rows; ++r) {
          Coord acc = 0;
          for (size_t c = 0; c < cols; ++c) acc += a[r][c] * (*sol)[c];
          CHECK(mod_reduce(acc - rhs[r], m) == 0);
        }
      }
      CHECK(count_nullspace_mod(a, m) == oracle.nullspace);
    }
  }
}

TEST_CASE("solver handles structured systems") {
  // x + y = 1, x - y = 1 (mod 2): x = 1, y = 0 works
  auto s = solve_congruences({{1, 1}, {1, -1}}, {1, 1}, 2);
  REQUIRE(s.has_value());
  // 2x = 1 (mod 4): no solution
  CHECK_FALSE(solve_congruences({{2}}, {1}, 4).has_value());
  // 2x = 2 (mod 4): solvable
  CHECK(solve_congruences({{2}}, {2}, 4).has_value());
  // nullspace of (2) mod 4 is {0, 2}
  CHECK(count_nullspace_mod({{2}}, 4) == 2);
}
