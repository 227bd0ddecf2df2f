// Minimal dense matrix over an arbitrary field scalar (exact cyclotomic,
// complex double, or rational function). Sized for link-pattern spaces
// (dim 2^L, L <= 6), so no attempt at sparsity or blocking.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace tbloop {

template <class S>
class Matrix {
 public:
  int rows = 0, cols = 0;
  std::vector<S> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, S(0)) {}

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  S& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const S& operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  friend Matrix operator+(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
  }
  friend Matrix operator-(const Matrix& x, const Matrix& y) {
    Matrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
    return r;
  }
  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Matrix: shape mismatch");
    Matrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const S& xik = x(i, k);
        if (xik == S(0)) continue;
        for (int j = 0; j < y.cols; ++j) r(i, j) = r(i, j) + xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator*(const S& c, const Matrix& x) {
    Matrix r = x;
    for (auto& v : r.a) v = c * v;
    return r;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (static_cast<int>(v.size()) != cols) throw std::invalid_argument("Matrix: vector size");
    std::vector<S> r(rows, S(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }

  Matrix transpose() const {
    Matrix r(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (auto& v : a)
      if (!(v == S(0))) return false;
    return true;
  }
  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  S trace() const {
    S t(0);
    for (int i = 0; i < rows && i < cols; ++i) t = t + (*this)(i, i);
    return t;
  }
};

inline double abs_value(const std::complex<double>& z) { return std::abs(z); }

inline double max_abs(const Matrix<std::complex<double>>& m) {
  double r = 0;
  for (auto& v : m.a) r = std::max(r, std::abs(v));
  return r;
}

// Exact null space of a square matrix over a field (Gaussian elimination).
template <class S>
std::vector<std::vector<S>> null_space(Matrix<S> m) {
  int n = m.cols;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (!(m(r, col) == S(0))) { piv = r; break; }
    if (piv < 0) continue;
    for (int c = 0; c < n; ++c) std::swap(m(row, c), m(piv, c));
    S d = m(row, col);
    for (int c = 0; c < n; ++c) m(row, c) = m(row, c) / d;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row) continue;
      S f = m(r, col);
      if (f == S(0)) continue;
      for (int c = 0; c < n; ++c) m(r, c) = m(r, c) - f * m(row, c);
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<std::vector<S>> basis;
  std::vector<bool> is_pivot(n, false);
  for (int c : pivot_col) is_pivot[c] = true;
  for (int free_col = 0; free_col < n; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<S> v(n, S(0));
    v[free_col] = S(1);
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = S(0) - m(static_cast<int>(r), free_col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tbloop
