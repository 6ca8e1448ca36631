#pragma once

#include <optional>
#include <vector>

#include "symext/matrix.hpp"

namespace symext {

// u * m * v = d with u, v unimodular and d diagonal with d1 | d2 | ... (zeros trailing).
struct SnfResult {
  IntMatrix u;  // rows x rows
  IntMatrix d;  // rows x cols
  IntMatrix v;  // cols x cols

  int diag_len() const { return d.rows < d.cols ? d.rows : d.cols; }
  Int diag(int i) const { return i < diag_len() ? d.at(i, i) : Int(0); }
  int rank() const {
    int r = 0;
    while (r < diag_len() && d.at(r, r) != 0) ++r;
    return r;
  }
};

namespace detail {

struct SnfOptions {
  bool track_u = true;
  bool track_v = true;
};

inline void snf_swap_rows(IntMatrix& m, IntMatrix& u, bool track, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
  if (track)
    for (int j = 0; j < u.cols; ++j) std::swap(u.at(a, j), u.at(b, j));
}

inline void snf_swap_cols(IntMatrix& m, IntMatrix& v, bool track, int a, int b) {
  if (a == b) return;
  for (int i = 0; i < m.rows; ++i) std::swap(m.at(i, a), m.at(i, b));
  if (track)
    for (int i = 0; i < v.rows; ++i) std::swap(v.at(i, a), v.at(i, b));
}

// row[a] += q * row[b]
inline void snf_add_row(IntMatrix& m, IntMatrix& u, bool track, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j)
    if (m.at(b, j) != 0) m.at(a, j) += q * m.at(b, j);
  if (track)
    for (int j = 0; j < u.cols; ++j)
      if (u.at(b, j) != 0) u.at(a, j) += q * u.at(b, j);
}

// col[a] += q * col[b]
inline void snf_add_col(IntMatrix& m, IntMatrix& v, bool track, int a, int b, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i)
    if (m.at(i, b) != 0) m.at(i, a) += q * m.at(i, b);
  if (track)
    for (int i = 0; i < v.rows; ++i)
      if (v.at(i, b) != 0) v.at(i, a) += q * v.at(i, b);
}

inline void snf_negate_row(IntMatrix& m, IntMatrix& u, bool track, int a) {
  for (int j = 0; j < m.cols; ++j) m.at(a, j) = -m.at(a, j);
  if (track)
    for (int j = 0; j < u.cols; ++j) u.at(a, j) = -u.at(a, j);
}

// Pivot rule: smallest nonzero absolute value in the trailing submatrix,
// ties broken by lowest (row, col). Fixed so that u, d, v are reproducible.
inline bool snf_find_pivot(const IntMatrix& m, int t, int& pr, int& pc) {
  bool found = false;
  Int best;
  for (int i = t; i < m.rows; ++i)
    for (int j = t; j < m.cols; ++j) {
      const Int& x = m.at(i, j);
      if (x == 0) continue;
      Int a = int_abs(x);
      if (a == 1) {  // nothing beats 1, and scan order matches the tie rule
        pr = i;
        pc = j;
        return true;
      }
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
      }
    }
  return found;
}

inline SnfResult snf_core(IntMatrix m, const SnfOptions& opt) {
  SnfResult r;
  if (opt.track_u) r.u = IntMatrix::identity(m.rows);
  if (opt.track_v) r.v = IntMatrix::identity(m.cols);
  int nmin = m.rows < m.cols ? m.rows : m.cols;

  for (int t = 0; t < nmin; ++t) {
    int pr = 0, pc = 0;
    if (!snf_find_pivot(m, t, pr, pc)) break;
    snf_swap_rows(m, r.u, opt.track_u, t, pr);
    snf_swap_cols(m, r.v, opt.track_v, t, pc);

    for (;;) {
      // Clear column t below the pivot, then row t right of it. Remainders can
      // reintroduce entries, so iterate until both are clean.
      bool dirty = false;
      for (int i = t + 1; i < m.rows; ++i) {
        if (m.at(i, t) == 0) continue;
        Int q = m.at(i, t) / m.at(t, t);
        snf_add_row(m, r.u, opt.track_u, i, t, -q);
        if (m.at(i, t) != 0) dirty = true;
      }
      for (int j = t + 1; j < m.cols; ++j) {
        if (m.at(t, j) == 0) continue;
        Int q = m.at(t, j) / m.at(t, t);
        snf_add_col(m, r.v, opt.track_v, j, t, -q);
        if (m.at(t, j) != 0) dirty = true;
      }
      if (dirty) {
        int nr = 0, nc = 0;
        snf_find_pivot(m, t, nr, nc);
        snf_swap_rows(m, r.u, opt.track_u, t, nr);
        snf_swap_cols(m, r.v, opt.track_v, t, nc);
        continue;
      }
      // Pivot row/col clean: enforce that the pivot divides the rest of the
      // submatrix, else fold the offending row in and keep reducing.
      int br = -1;
      for (int i = t + 1; i < m.rows && br < 0; ++i)
        for (int j = t + 1; j < m.cols; ++j)
          if (m.at(i, j) % m.at(t, t) != 0) {
            br = i;
            break;
          }
      if (br < 0) break;
      snf_add_row(m, r.u, opt.track_u, t, br, Int(1));
    }
    if (m.at(t, t) < 0) snf_negate_row(m, r.u, opt.track_u, t);
  }
  r.d = std::move(m);
  return r;
}

}  // namespace detail

inline SnfResult smith_normal_form(const IntMatrix& m) {
  return detail::snf_core(m, detail::SnfOptions{});
}

// d and v only; the row transform is not accumulated.
inline SnfResult smith_normal_form_dv(const IntMatrix& m) {
  return detail::snf_core(m, detail::SnfOptions{false, true});
}

// d and u only.
inline SnfResult smith_normal_form_ud(const IntMatrix& m) {
  return detail::snf_core(m, detail::SnfOptions{true, false});
}

inline bool is_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) return false;
  Int det = determinant(m);
  return det == 1 || det == -1;
}

// Inverse of a unimodular matrix: u*m*v = 1 gives m^-1 = v*u.
inline IntMatrix invert_unimodular(const IntMatrix& m) {
  if (m.rows != m.cols) fail("cannot invert non-square matrix");
  SnfResult s = smith_normal_form(m);
  for (int i = 0; i < m.rows; ++i)
    if (s.d.at(i, i) != 1) fail("matrix is not unimodular");
  return mat_mul(s.v, s.u);
}

}  // namespace symext
