#pragma once

#include "liereps/exactmat.hpp"

#include <functional>
#include <random>

namespace testing {

using liereps::Integer;
using liereps::IntMatrix;
using liereps::IntVector;

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long bound = 9) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
  return m;
}

/// Random unimodular matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 12) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> factor(-2, 2);
  for (int s = 0; s < steps; ++s) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    u.add_row_multiple(a, b, factor(rng));
  }
  return u;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      f(pick);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
}

/// Determinantal divisors: gcd of all k x k minors, k = 1..min(rows, cols).
inline IntVector minor_gcds(const IntMatrix& m) {
  IntVector out;
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        g = gcd(g, liereps::determinant(sub));
      });
    });
    out.push_back(g);
  }
  return out;
}

/// Smith diagonal from the determinantal divisors d_k / d_{k-1}.
inline IntVector smith_by_minors(const IntMatrix& m) {
  IntVector g = minor_gcds(m), out;
  Integer prev = 1;
  for (const auto& d : g) {
    if (d == 0 || prev == 0) {
      out.push_back(0);
      prev = 0;
      continue;
    }
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

}  // namespace testing
