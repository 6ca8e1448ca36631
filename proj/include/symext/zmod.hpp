#pragma once

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "symext/bigint.hpp"
#include "symext/error.hpp"
#include "symext/matrix.hpp"
#include "symext/snf.hpp"

namespace symext {

// Column-style Hermite reduction: a deterministic square-free basis of the
// lattice spanned by the columns of g.  Pivots are made positive and entries
// above each pivot row in earlier columns are reduced into [0, pivot).
inline IntMatrix column_lattice_basis(IntMatrix g) {
    const int n = g.rows;
    int c = 0;
    auto swap_cols = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < n; ++i) std::swap(g.at(i, a), g.at(i, b));
    };
    auto add_col = [&](int dst, int src, const Int& q) {
        if (q == 0) return;
        for (int i = 0; i < n; ++i) g.at(i, dst) += q * g.at(i, src);
    };
    for (int i = 0; i < n && c < g.cols; ++i) {
        for (;;) {
            int p = -1;
            Int best;
            for (int j = c; j < g.cols; ++j) {
                if (g.at(i, j) == 0) continue;
                Int a = int_abs(g.at(i, j));
                if (p < 0 || a < best) {
                    p = j;
                    best = a;
                }
            }
            if (p < 0) break;
            swap_cols(c, p);
            bool clean = true;
            for (int j = c + 1; j < g.cols; ++j) {
                if (g.at(i, j) == 0) continue;
                add_col(j, c, -(g.at(i, j) / g.at(i, c)));
                if (g.at(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (g.at(i, c) != 0) {
            if (g.at(i, c) < 0)
                for (int r = 0; r < n; ++r) g.at(r, c) = -g.at(r, c);
            const Int piv = g.at(i, c);
            for (int j = 0; j < c; ++j) {
                Int fq = (g.at(i, j) - mod_floor(g.at(i, j), piv)) / piv;
                add_col(j, c, -fq);
            }
            ++c;
        }
    }
    IntMatrix basis(n, c);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < c; ++j) basis.at(i, j) = g.at(i, j);
    return basis;
}

// Diagonalize m in place by unimodular row and column moves, tracking only
// the column transform and reducing every entry mod l as it changes.  This is
// not a true Smith form — row moves are discarded and mod-l reduction breaks
// the factorization — but it keeps the one invariant a kernel extraction
// needs: {x : (original m)x == 0 mod l} = {v*z : (current m)z == 0 mod l}.
// Row moves are invertible mod l, column moves are absorbed into v, and
// changing an entry by a multiple of l cannot change the congruence.
inline void kernel_diagonalize_mod(IntMatrix& m, IntMatrix& v, const Int& l) {
    const int r = m.rows, n = m.cols;
    auto reduce_row = [&](int i) {
        for (int j = 0; j < n; ++j) m.at(i, j) = mod_floor(m.at(i, j), l);
    };
    for (int t = 0; t < r && t < n; ++t) {
        for (;;) {
            int pr = -1, pc = -1;
            Int best = 0;
            for (int i = t; i < r && best != 1; ++i)
                for (int j = t; j < n; ++j) {
                    const Int& a = m.at(i, j);
                    if (a == 0) continue;
                    if (pr < 0 || a < best) {
                        pr = i;
                        pc = j;
                        best = a;
                        if (best == 1) break;
                    }
                }
            if (pr < 0) return;  // submatrix is all zero; remaining columns are free
            if (pr != t)
                for (int j = 0; j < n; ++j) std::swap(m.at(t, j), m.at(pr, j));
            if (pc != t) {
                for (int i = 0; i < r; ++i) std::swap(m.at(i, t), m.at(i, pc));
                for (int i = 0; i < n; ++i) std::swap(v.at(i, t), v.at(i, pc));
            }
            const Int piv = m.at(t, t);
            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (m.at(i, t) == 0) continue;
                Int q = m.at(i, t) / piv;
                for (int j = 0; j < n; ++j) m.at(i, j) -= q * m.at(t, j);
                reduce_row(i);
                if (m.at(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < n; ++j) {
                if (m.at(t, j) == 0) continue;
                Int q = m.at(t, j) / piv;
                for (int i = 0; i < r; ++i) m.at(i, j) = mod_floor(m.at(i, j) - q * m.at(i, t), l);
                for (int i = 0; i < n; ++i) v.at(i, j) -= q * v.at(i, t);
                if (m.at(t, j) != 0) clean = false;
            }
            if (clean) break;  // entries in [0, piv) remain; next pass pivots on them
        }
    }
}

// Solutions x of m*x == 0 (mod moduli[row], per row), returned as a square
// basis of the solution lattice in Z^cols.  Mixed moduli are scaled up to the
// common lcm first, which makes mod-l entry reduction sound and keeps every
// number small; the slow path through an integer lift with slack columns is
// never needed.
inline IntMatrix kernel_mod(const IntMatrix& m, const std::vector<Int>& moduli) {
    if (static_cast<int>(moduli.size()) != m.rows) fail("kernel_mod: moduli count does not match rows");
    for (const Int& t : moduli)
        if (t <= 0) fail("kernel_mod: moduli must be positive");
    const int n = m.cols;
    if (n == 0) return IntMatrix(0, 0);
    Int l = 1;
    for (const Int& t : moduli) l = int_lcm(l, t);
    if (l == 1) return IntMatrix::identity(n);

    // (m_i)x == 0 mod d_i is (l/d_i * m_i)x == 0 mod l; after scaling, zero
    // and duplicate rows add nothing.
    std::vector<std::vector<Int>> rows;
    rows.reserve(m.rows);
    for (int i = 0; i < m.rows; ++i) {
        if (moduli[i] == 1) continue;
        const Int s = l / moduli[i];
        std::vector<Int> row(n);
        bool zero = true;
        for (int j = 0; j < n; ++j) {
            row[j] = mod_floor(m.at(i, j) * s, l);
            if (row[j] != 0) zero = false;
        }
        if (zero) continue;
        rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    const int r = static_cast<int>(rows.size());
    if (r == 0) return IntMatrix::identity(n);

    IntMatrix a(r, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    IntMatrix v = IntMatrix::identity(n);
    kernel_diagonalize_mod(a, v, l);

    // d*z == 0 mod l frees z in steps of l/gcd(d, l); columns past the
    // diagonal are unconstrained.
    IntMatrix gens(n, n);
    for (int t = 0; t < n; ++t) {
        Int d = t < r ? a.at(t, t) : Int(0);
        Int scale = d == 0 ? Int(1) : l / int_gcd(d, l);
        for (int i = 0; i < n; ++i) gens.at(i, t) = scale * v.at(i, t);
    }
    IntMatrix basis = column_lattice_basis(gens);
    if (basis.cols != n) fail("kernel_mod: solution lattice is not full rank");
    return basis;
}

// Structure of ambient/<gens> where ambient = prod Z_ambient[i]: the invariant
// factors > 1 together with a projection onto the surviving coordinates.
struct CokernelResult {
    std::vector<Int> factors;
    IntMatrix u;
    std::vector<int> keep;

    Int order() const {
        Int n = 1;
        for (const Int& f : factors) n *= f;
        return n;
    }
    std::vector<Int> class_of(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != u.cols) fail("cokernel class_of: wrong vector length");
        std::vector<Int> y = mat_vec(u, x);
        std::vector<Int> out(keep.size());
        for (size_t t = 0; t < keep.size(); ++t) out[t] = mod_floor(y[keep[t]], factors[t]);
        return out;
    }
};

inline CokernelResult cokernel_invariants(const IntMatrix& gens, const std::vector<Int>& ambient) {
    const int r = static_cast<int>(ambient.size());
    if (gens.cols > 0 && gens.rows != r) fail("cokernel_invariants: generator length does not match ambient rank");
    for (const Int& t : ambient)
        if (t <= 0) fail("cokernel_invariants: ambient orders must be positive");
    IntMatrix rel = IntMatrix::diagonal(ambient);
    IntMatrix p = gens.cols > 0 ? hstack(gens, rel) : rel;
    SnfResult snf = smith_normal_form_ud(p);
    CokernelResult out;
    out.u = snf.u;
    for (int i = 0; i < r; ++i) {
        Int d = snf.d.at(i, i);
        if (d == 0) fail("cokernel_invariants: presentation is not full rank");
        if (d > 1) {
            out.factors.push_back(d);
            out.keep.push_back(i);
        }
    }
    return out;
}

// One solution of a*x == b (mod moduli[row]) over the integers, if any.
inline std::optional<std::vector<Int>> solve_mod(const IntMatrix& a, const std::vector<Int>& b,
                                                 const std::vector<Int>& moduli) {
    if (static_cast<int>(b.size()) != a.rows || static_cast<int>(moduli.size()) != a.rows)
        fail("solve_mod: dimension mismatch");
    for (const Int& t : moduli)
        if (t <= 0) fail("solve_mod: moduli must be positive");
    const int n = a.cols;
    const int r = a.rows;
    IntMatrix lifted(r, n + r);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) lifted.at(i, j) = a.at(i, j);
        lifted.at(i, n + i) = moduli[i];
    }
    SnfResult snf = smith_normal_form(lifted);
    std::vector<Int> c = mat_vec(snf.u, b);
    std::vector<Int> y(lifted.cols, Int(0));
    for (int i = 0; i < r; ++i) {
        Int d = i < snf.diag_len() ? snf.d.at(i, i) : Int(0);
        if (d == 0) {
            if (c[i] != 0) return std::nullopt;
        } else {
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
    }
    std::vector<Int> full = mat_vec(snf.v, y);
    full.resize(n);
    return full;
}

// A square nonsingular basis with cached SNF for exact membership tests.
struct LatticeBasis {
    IntMatrix b;
    SnfResult snf;

    explicit LatticeBasis(IntMatrix basis) : b(std::move(basis)), snf(smith_normal_form(b)) {
        if (b.rows != b.cols) fail("LatticeBasis: basis must be square");
        for (int i = 0; i < b.rows; ++i)
            if (snf.d.at(i, i) == 0) fail("LatticeBasis: basis is singular");
    }

    int dim() const { return b.rows; }

    Int det_abs() const {
        Int d = 1;
        for (int i = 0; i < b.rows; ++i) d *= snf.d.at(i, i);
        return d;
    }

    // Integer coordinates y with b*y = x, or nullopt when x is outside the lattice.
    std::optional<std::vector<Int>> coords(const std::vector<Int>& x) const {
        if (static_cast<int>(x.size()) != b.rows) fail("LatticeBasis coords: wrong vector length");
        std::vector<Int> c = mat_vec(snf.u, x);
        std::vector<Int> y(b.rows);
        for (int i = 0; i < b.rows; ++i) {
            Int d = snf.d.at(i, i);
            if (c[i] % d != 0) return std::nullopt;
            y[i] = c[i] / d;
        }
        return mat_vec(snf.v, y);
    }
};

// The finite quotient l1/<l2 generators>, presented by invariant factors with
// exact class coordinates and canonical class representatives.
struct LatticeQuotient {
    LatticeBasis l1;
    std::vector<Int> factors;
    std::vector<int> keep;
    IntMatrix ux;
    IntMatrix ux_inv;

    Int order() const {
        Int n = 1;
        for (const Int& f : factors) n *= f;
        return n;
    }

    std::optional<std::vector<Int>> try_coords(const std::vector<Int>& x) const {
        auto y = l1.coords(x);
        if (!y) return std::nullopt;
        std::vector<Int> z = mat_vec(ux, *y);
        std::vector<Int> out(keep.size());
        for (size_t t = 0; t < keep.size(); ++t) out[t] = mod_floor(z[keep[t]], factors[t]);
        return out;
    }

    std::vector<Int> coords(const std::vector<Int>& x) const {
        auto c = try_coords(x);
        if (!c) fail("lattice quotient: vector is outside the ambient lattice");
        return *c;
    }

    // Ambient-space representative of the t-th invariant-factor generator.
    std::vector<Int> rep(int t) const {
        std::vector<Int> e = ux_inv.col(keep[t]);
        return mat_vec(l1.b, e);
    }
};

inline LatticeQuotient make_lattice_quotient(IntMatrix l1_basis, const IntMatrix& l2_gens) {
    LatticeBasis l1(std::move(l1_basis));
    const int n = l1.dim();
    if (l2_gens.cols > 0 && l2_gens.rows != n) fail("lattice quotient: generator length mismatch");
    IntMatrix x(n, l2_gens.cols);
    for (int j = 0; j < l2_gens.cols; ++j) {
        auto c = l1.coords(l2_gens.col(j));
        if (!c) fail("lattice quotient: sublattice generator is outside the lattice");
        for (int i = 0; i < n; ++i) x.at(i, j) = (*c)[i];
    }
    SnfResult snf = smith_normal_form(x);
    LatticeQuotient q{std::move(l1), {}, {}, snf.u, invert_unimodular(snf.u)};
    for (int i = 0; i < n; ++i) {
        Int d = i < snf.diag_len() ? snf.d.at(i, i) : Int(0);
        if (d == 0) fail("lattice quotient: quotient is infinite");
        if (d > 1) {
            q.factors.push_back(d);
            q.keep.push_back(i);
        }
    }
    return q;
}

}  // namespace symext
