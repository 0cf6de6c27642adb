#pragma once

// Independent reference computations for the tests. Nothing here calls the
// engine's combinatorics: characters come from brute-force tableau counts and
// projective-space cohomology from the classical binomial formulas.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Monomial = std::vector<int>;            // exponent of x_1..x_m
using Character = std::map<Monomial, std::int64_t>;

inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Formal character of Sigma^lambda(k^m) for a partition with at most m parts,
// by enumerating semistandard tableaux with entries 1..m.
inline Character schur_character(const std::vector<int>& lambda, int m) {
  std::vector<int> shape;
  for (int x : lambda) {
    if (x > 0) shape.push_back(x);
  }
  Character out;
  if (static_cast<int>(shape.size()) > m) return out;
  std::vector<std::vector<int>> t(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) t[r].assign(shape[r], 0);
  std::function<void(std::size_t, int)> fill = [&](std::size_t r, int c) {
    if (r == shape.size()) {
      Monomial mono(m, 0);
      for (const auto& row : t) {
        for (int v : row) ++mono[v - 1];
      }
      ++out[mono];
      return;
    }
    if (c == shape[r]) {
      fill(r + 1, 0);
      return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= m; ++v) {
      t[r][c] = v;
      fill(r, c + 1);
    }
  };
  fill(0, 0);
  return out;
}

inline Character multiply(const Character& a, const Character& b) {
  Character out;
  for (const auto& [ma, ka] : a) {
    for (const auto& [mb, kb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ka * kb;
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

inline void accumulate(Character& into, const Character& c, std::int64_t k) {
  for (const auto& [m, v] : c) into[m] += k * v;
  std::erase_if(into, [](const auto& e) { return e.second == 0; });
}

inline std::int64_t total(const Character& c) {
  std::int64_t s = 0;
  for (const auto& [m, v] : c) s += v;
  return s;
}

// Partitions of size k with at most `parts` parts, padded to `parts` entries.
inline std::vector<std::vector<int>> partitions(int k, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int cap) {
    if (left == 0) {
      std::vector<int> p(cur);
      p.resize(parts, 0);
      out.push_back(p);
      return;
    }
    if (static_cast<int>(cur.size()) == parts) return;
    for (int v = std::min(left, cap); v >= 1; --v) {
      cur.push_back(v);
      rec(left - v, v);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

// h^i(P^n, O(d)) by the classical formulas.
inline std::map<int, std::int64_t> projective_space(int n, int d) {
  if (d >= 0) return {{0, choose(n + d, n)}};
  if (d <= -n - 1) return {{n, choose(-d - 1, n)}};
  return {};
}

// Hirzebruch surface F_e = P(O + O(e)) over P^1, line bundle a f + b h with
// f the fibre class and h the relative O(1): Riemann-Roch.
inline std::int64_t hirzebruch_euler(int e, int a, int b) {
  return 1 + (2 * a * b + b * b * e + 2 * a + b * e + 2 * b) / 2;
}

inline std::mt19937& rng() {
  static std::mt19937 gen(20240611u);
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

}  // namespace oracle
