#pragma once

// Brute-force reference implementations. None of these call into the library's
// arithmetic beyond reading element coordinates, so they can referee it.

#include "z4dna/code.hpp"
#include "z4dna/ring.hpp"

#include <array>
#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<int>; // entries in 0..3

inline Vec to_ints(std::span<const z4dna::Z4> v) {
  Vec out;
  for (auto x : v) out.push_back(x.value());
  return out;
}

inline z4dna::Z4Vector to_z4(const Vec& v) {
  z4dna::Z4Vector out;
  for (int x : v) out.emplace_back(x);
  return out;
}

/// Every Z4-combination of the generators, by breadth-first closure under adding a generator.
inline std::set<Vec> span(const std::vector<Vec>& gens, std::size_t width) {
  std::set<Vec> seen{Vec(width, 0)};
  std::deque<Vec> todo{Vec(width, 0)};
  while (!todo.empty()) {
    const Vec x = todo.front();
    todo.pop_front();
    for (const Vec& g : gens) {
      Vec y(width);
      for (std::size_t i = 0; i < width; ++i) y[i] = (x[i] + g[i]) % 4;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

/// R through its regular representation: a + wb acts on the basis (1, w) as [[a, 2b], [b, a]].
inline std::array<int, 2> r_mul(std::array<int, 2> x, std::array<int, 2> y) {
  const int m[2][2] = {{x[0], 2 * x[1]}, {x[1], x[0]}};
  return {(m[0][0] * y[0] + m[0][1] * y[1]) % 4, (m[1][0] * y[0] + m[1][1] * y[1]) % 4};
}

/// S as Z4-combinations of monomials w^i v^j (i, j ∈ {0,1}), reduced by w² = 2 and v² = v.
/// Coordinate order (1, w, v, wv).
inline std::array<int, 4> s_mul(std::array<int, 4> x, std::array<int, 4> y) {
  std::array<int, 4> out{};
  for (int p = 0; p < 4; ++p)
    for (int q = 0; q < 4; ++q) {
      const int wi = (p & 1) + (q & 1);
      const int vj = ((p >> 1) | (q >> 1)) & 1;
      int coeff = x[p] * y[q];
      if (wi == 2) coeff *= 2;
      const int mono = (wi % 2) | (vj << 1);
      out[mono] = (out[mono] + coeff) % 4;
    }
  return out;
}

/// Monic f divides x^n − 1 over Z4 iff x^n ≡ 1 mod f; residues by repeated multiplication by x.
inline bool divides_xn_minus_1(const std::vector<int>& f, std::size_t n) {
  const std::size_t d = f.size() - 1;
  if (d == 0) return true;
  std::vector<int> r(d, 0);
  r[0] = 1; // x^0
  for (std::size_t k = 0; k < n; ++k) {
    const int top = r[d - 1];
    for (std::size_t i = d - 1; i > 0; --i) r[i] = r[i - 1];
    r[0] = 0;
    for (std::size_t i = 0; i < d; ++i) r[i] = ((r[i] - top * f[i]) % 4 + 4) % 4;
  }
  if (r[0] != 1) return false;
  for (std::size_t i = 1; i < d; ++i)
    if (r[i] != 0) return false;
  return true;
}

/// All monic divisors of x^n − 1 over Z4 with degree ≤ max_deg (degree 0 included), ascending coefficients.
inline std::vector<std::vector<int>> z4_divisors(std::size_t n, std::size_t max_deg) {
  std::vector<std::vector<int>> out{{1}};
  for (std::size_t d = 1; d <= max_deg; ++d) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<int> f(d + 1, 1);
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= 4) f[i] = static_cast<int>(c % 4);
      if (divides_xn_minus_1(f, n)) out.push_back(f);
    }
  }
  return out;
}

/// Monic g = q·a over Z4 for some q, by brute force over monic quotients.
inline bool z4_divides(const std::vector<int>& a, const std::vector<int>& g) {
  if (a.size() > g.size()) return false;
  const std::size_t qd = g.size() - a.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < qd; ++i) total *= 4;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<int> q(qd + 1, 1);
    std::size_t c = code;
    for (std::size_t i = 0; i < qd; ++i, c /= 4) q[i] = static_cast<int>(c % 4);
    std::vector<int> prod(g.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < a.size(); ++j) prod[i + j] = (prod[i + j] + q[i] * a[j]) % 4;
    if (prod == g) return true;
  }
  return false;
}

/// Random Z4 generator rows.
inline std::vector<Vec> random_rows(std::mt19937_64& rng, std::size_t count, std::size_t width) {
  std::uniform_int_distribution<int> digit(0, 3);
  std::vector<Vec> rows(count, Vec(width));
  for (auto& r : rows)
    for (auto& x : r) x = digit(rng);
  return rows;
}

inline z4dna::Z4Matrix matrix(const std::vector<Vec>& rows, std::size_t width) {
  z4dna::Z4Matrix m(width);
  for (const auto& r : rows) m.push_row(to_z4(r));
  return m;
}

} // namespace oracle
