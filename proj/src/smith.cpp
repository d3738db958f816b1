#include "spinetorsion/smith.hpp"

#include <utility>

namespace spinetorsion {

IntMatrix int_zero(int rows, int cols) {
  return IntMatrix(rows, std::vector<mpz_class>(cols, 0));
}

IntMatrix int_identity(int n) {
  IntMatrix m = int_zero(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b, int inner) {
  const int rows = static_cast<int>(a.size());
  const int cols = b.empty() ? 0 : static_cast<int>(b[0].size());
  IntMatrix r = int_zero(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (int j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

namespace {

struct Work {
  IntMatrix a, u, v;
  int rows, cols;

  void swap_rows(int i, int j) {
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(int i, int j) {
    for (auto& r : a) std::swap(r[i], r[j]);
    for (auto& r : v) std::swap(r[i], r[j]);
  }
  // row_i += f * row_j
  void add_row(int i, int j, const mpz_class& f) {
    for (int c = 0; c < cols; ++c) a[i][c] += f * a[j][c];
    for (int c = 0; c < rows; ++c) u[i][c] += f * u[j][c];
  }
  // col_i += f * col_j
  void add_col(int i, int j, const mpz_class& f) {
    for (int r = 0; r < rows; ++r) a[r][i] += f * a[r][j];
    for (int r = 0; r < cols; ++r) v[r][i] += f * v[r][j];
  }
  void negate_row(int i) {
    for (auto& x : a[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input, int rows, int cols) {
  Work w{input, int_identity(rows), int_identity(cols), rows, cols};
  const int n = std::min(rows, cols);
  for (int k = 0; k < n; ++k) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    while (true) {
      int pi = -1, pj = -1;
      for (int i = k; i < rows; ++i)
        for (int j = k; j < cols; ++j)
          if (w.a[i][j] != 0 && (pi < 0 || abs(w.a[i][j]) < abs(w.a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      w.swap_rows(k, pi);
      w.swap_cols(k, pj);
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (w.a[i][k] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.a[i][k].get_mpz_t(), w.a[k][k].get_mpz_t());
        w.add_row(i, k, -q);
        if (w.a[i][k] != 0) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (w.a[k][j] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), w.a[k][j].get_mpz_t(), w.a[k][k].get_mpz_t());
        w.add_col(j, k, -q);
        if (w.a[k][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the rest of the block by the pivot.
      int bad_i = -1;
      for (int i = k + 1; i < rows && bad_i < 0; ++i)
        for (int j = k + 1; j < cols; ++j)
          if (!mpz_divisible_p(w.a[i][j].get_mpz_t(), w.a[k][k].get_mpz_t())) {
            bad_i = i;
            break;
          }
      if (bad_i < 0) break;
      w.add_row(k, bad_i, 1);
    }
    if (w.a[k][k] < 0) w.negate_row(k);
  }
  SmithForm out;
  out.u = std::move(w.u);
  out.v = std::move(w.v);
  for (int k = 0; k < n; ++k) {
    out.diagonal.push_back(w.a[k][k]);
    if (w.a[k][k] != 0) ++out.rank;
  }
  return out;
}

AbelianGroup cokernel(const IntMatrix& a, int rows, int cols) {
  SmithForm s = smith_normal_form(a, rows, cols);
  AbelianGroup g;
  for (const auto& d : s.diagonal)
    if (d > 1) g.torsion.push_back(d);
  g.free_rank = rows - s.rank;
  return g;
}

}  // namespace spinetorsion
