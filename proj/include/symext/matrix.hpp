#pragma once

#include <initializer_list>
#include <vector>

#include "symext/bigint.hpp"
#include "symext/error.hpp"

namespace symext {

// Dense row-major integer matrix. Desk-scale sizes; no sparsity tricks.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> data;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c) {}
  IntMatrix(int r, int c, std::initializer_list<Int> vals) : rows(r), cols(c), data(vals) {
    if (static_cast<int>(data.size()) != r * c) fail("matrix literal has wrong entry count");
  }

  Int& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  const Int& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix diagonal(const std::vector<Int>& d) {
    IntMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows; ++i) m.at(i, i) = d[i];
    return m;
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }

  std::vector<Int> col(int j) const {
    std::vector<Int> v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  std::vector<Int> row(int i) const {
    std::vector<Int> v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
  }

  bool is_zero() const {
    for (const Int& x : data)
      if (x != 0) return false;
    return true;
  }
};

inline IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols != b.rows) fail("matrix product dimension mismatch");
  IntMatrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols; ++j) c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

inline std::vector<Int> mat_vec(const IntMatrix& a, const std::vector<Int>& x) {
  if (a.cols != static_cast<int>(x.size())) fail("matrix-vector dimension mismatch");
  std::vector<Int> y(a.rows);
  for (int i = 0; i < a.rows; ++i) {
    Int s = 0;
    for (int j = 0; j < a.cols; ++j)
      if (a.at(i, j) != 0) s += a.at(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

// [a | b] side by side.
inline IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows != b.rows) fail("hstack row mismatch");
  IntMatrix c(a.rows, a.cols + b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int j = 0; j < a.cols; ++j) c.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols; ++j) c.at(i, a.cols + j) = b.at(i, j);
  }
  return c;
}

// Exact determinant by fraction-free (Bareiss) elimination.
inline Int determinant(const IntMatrix& m) {
  if (m.rows != m.cols) fail("determinant of non-square matrix");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix b = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (b.at(k, k) == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (b.at(i, k) != 0) { r = i; break; }
      if (r < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(b.at(k, j), b.at(r, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        b.at(i, j) = (b.at(i, j) * b.at(k, k) - b.at(i, k) * b.at(k, j)) / prev;
    prev = b.at(k, k);
  }
  return sign > 0 ? b.at(n - 1, n - 1) : -b.at(n - 1, n - 1);
}

}  // namespace symext
