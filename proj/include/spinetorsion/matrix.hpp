#pragma once

// Dense matrices over an exact field F (Rational, Cyclotomic, RatFunc).
// F must be constructible from long and provide +, -, *, /, ==, is_zero().

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "spinetorsion/errors.hpp"

namespace spinetorsion {

template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, F(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  F& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const F& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<F> col(int j) const {
    std::vector<F> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_col(int j, const std::vector<F>& v) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  bool is_zero() const {
    for (const F& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix columns(const std::vector<int>& idx) const {
    Matrix m(rows_, static_cast<int>(idx.size()));
    for (int j = 0; j < m.cols(); ++j)
      for (int i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
    return m;
  }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols_ != y.rows_) throw SpineError(ErrorCode::InvalidArgument, "matrix shape mismatch");
    Matrix r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const F& xik = x(i, k);
        if (xik.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j)
          if (!y(k, j).is_zero()) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    std::vector<F> r(rows_, F(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  bool operator==(const Matrix& o) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<F> a_;
};

/// Concatenates column blocks with equal row counts.
template <class F>
Matrix<F> hstack(const std::vector<Matrix<F>>& blocks, int rows) {
  int cols = 0;
  for (const auto& b : blocks) cols += b.cols();
  Matrix<F> m(rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < b.cols(); ++j) m(i, off + j) = b(i, j);
    off += b.cols();
  }
  return m;
}

/// Reduced row echelon form; `pivots` receives pivot columns.
template <class F>
Matrix<F> rref(Matrix<F> m, std::vector<int>* pivots = nullptr) {
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    F inv = F(1) / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      F f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  return m;
}

template <class F>
int rank(const Matrix<F>& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

/// Basis of {x : m x = 0} as columns, one per free variable, in echelon form.
template <class F>
Matrix<F> nullspace(const Matrix<F>& m) {
  std::vector<int> piv;
  Matrix<F> r = rref(m, &piv);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<int> free;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<F> n(m.cols(), static_cast<int>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    n(free[k], static_cast<int>(k)) = F(1);
    for (std::size_t i = 0; i < piv.size(); ++i)
      n(piv[i], static_cast<int>(k)) = -r(static_cast<int>(i), free[k]);
  }
  return n;
}

/// Some x with a x = b, or nothing when the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  std::vector<int> piv;
  Matrix<F> r = rref(aug, &piv);
  if (!piv.empty() && piv.back() == a.cols()) return std::nullopt;
  std::vector<F> x(a.cols(), F(0));
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(static_cast<int>(i), a.cols());
  return x;
}

/// Determinant by fraction-free (Bareiss) elimination. With a nonzero seed
/// the pivot row is drawn at random among admissible rows.
template <class F>
F det(Matrix<F> m, std::uint64_t seed = 0) {
  const int n = m.rows();
  if (n != m.cols()) throw SpineError(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return F(1);
  std::mt19937_64 rng(seed);
  F prev(1);
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    std::vector<int> cand;
    for (int i = k; i < n; ++i)
      if (!m(i, k).is_zero()) cand.push_back(i);
    if (cand.empty()) return F(0);
    int p = seed ? cand[rng() % cand.size()] : cand.front();
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / prev;
      m(i, k) = F(0);
    }
    prev = m(k, k);
  }
  F d = m(n - 1, n - 1);
  return sign > 0 ? d : -d;
}

/// Greedy choice of columns (visited in `order`) that raise the rank,
/// using fraction-free reduction against the columns kept so far.
template <class F>
std::vector<int> independent_columns(const Matrix<F>& m, const std::vector<int>& order) {
  struct Kept {
    std::vector<F> v;
    int pivot;
  };
  std::vector<Kept> kept;
  std::vector<int> out;
  for (int c : order) {
    std::vector<F> v = m.col(c);
    for (const Kept& k : kept) {
      if (v[k.pivot].is_zero()) continue;
      F a = k.v[k.pivot], b = v[k.pivot];
      for (int i = 0; i < m.rows(); ++i) v[i] = a * v[i] - b * k.v[i];
    }
    int p = 0;
    while (p < m.rows() && v[p].is_zero()) ++p;
    if (p == m.rows()) continue;
    kept.push_back({std::move(v), p});
    out.push_back(c);
  }
  return out;
}

}  // namespace spinetorsion
