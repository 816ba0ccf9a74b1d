#pragma once

// Test-only reference computations. Nothing here calls into the library's
// elimination code.

#include <gmpxx.h>

#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using IntMatrix = std::vector<std::vector<mpz_class>>;

// Laplace expansion along the first row.
inline mpz_class cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpz_class det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    IntMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[i][c]);
      minor.push_back(row);
    }
    mpz_class term = a[0][j] * cofactor_det(minor);
    det += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return det;
}

inline void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  choose(n, k, 0, cur, out);
  return out;
}

// gcd of all k x k minors.
inline mpz_class minor_gcd(const IntMatrix& a, std::size_t k) {
  if (k == 0) return 1;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  mpz_class g = 0;
  for (const auto& rs : subsets(rows, k))
    for (const auto& cs : subsets(cols, k)) {
      IntMatrix sub;
      for (auto r : rs) {
        std::vector<mpz_class> row;
        for (auto c : cs) row.push_back(a[r][c]);
        sub.push_back(row);
      }
      mpz_class d = cofactor_det(sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

// Rank via largest nonvanishing minor.
inline std::size_t minor_rank(const IntMatrix& a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t k = std::min(rows, cols); k > 0; --k)
    if (minor_gcd(a, k) != 0) return k;
  return 0;
}

inline IntMatrix random_int_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix a(rows, std::vector<mpz_class>(cols));
  for (auto& row : a)
    for (auto& x : row) x = dist(rng);
  return a;
}

}  // namespace oracle
