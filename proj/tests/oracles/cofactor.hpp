#pragma once

// Reference determinants by Laplace expansion and integer determinantal
// divisors; deliberately naive.

#include <gmpxx.h>

#include <functional>
#include <vector>

#include "spinetorsion/matrix.hpp"

namespace oracle {

template <class F>
F cofactor_det(const spinetorsion::Matrix<F>& m) {
  const int n = m.rows();
  if (n == 0) return F(1);
  if (n == 1) return m(0, 0);
  F total(0);
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    spinetorsion::Matrix<F> minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    F term = m(0, j) * cofactor_det(minor);
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

inline mpz_class int_det(const std::vector<std::vector<mpz_class>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  mpz_class total = 0;
  for (int j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<mpz_class>> minor(n - 1);
    for (int i = 1; i < n; ++i)
      for (int k = 0; k < n; ++k)
        if (k != j) minor[i - 1].push_back(m[i][k]);
    mpz_class term = m[0][j] * int_det(minor);
    total += (j % 2) ? mpz_class(-term) : term;
  }
  return total;
}

inline void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == k) {
      fn(pick);
      return;
    }
    for (int i = start; i < n; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

/// gcd of all k x k minors, k = 1..min(rows, cols).
inline std::vector<mpz_class> determinantal_divisors(const std::vector<std::vector<mpz_class>>& a,
                                                     int rows, int cols) {
  std::vector<mpz_class> out;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    mpz_class g = 0;
    for_each_subset(rows, k, [&](const std::vector<int>& r) {
      for_each_subset(cols, k, [&](const std::vector<int>& c) {
        std::vector<std::vector<mpz_class>> sub(k, std::vector<mpz_class>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = a[r[i]][c[j]];
        g = gcd(g, int_det(sub));
      });
    });
    out.push_back(g);
  }
  return out;
}

}  // namespace oracle
