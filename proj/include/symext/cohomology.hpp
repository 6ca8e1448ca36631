#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symext/action.hpp"
#include "symext/cochain.hpp"
#include "symext/group.hpp"
#include "symext/matrix.hpp"
#include "symext/zmod.hpp"

namespace symext {

struct CocycleSystemStats {
    long long h_valued_unknowns = 0;   // all of G x G
    long long scalar_unknowns = 0;     // h_valued_unknowns * k
    long long free_scalar_unknowns = 0;  // after pinning the identity row/column to zero
    long long rows = 0;                // congruence rows handed to the solver
};

namespace detail {

// Free unknowns are the pairs (x,y) with x,y != identity; normalization pins
// the rest to zero, and cocycle rows with an identity argument follow from
// that pinning, so only identity-free triples generate rows.
inline int free_pair(int n, int x, int y) { return (x - 1) * (n - 1) + (y - 1); }

inline int free_cols(int n, int k) { return (n - 1) * (n - 1) * k; }

// Per-column moduli of the free coordinate space.
inline std::vector<Int> free_moduli(int n, const AbelianGroup& h) {
    std::vector<Int> m(static_cast<size_t>(free_cols(n, h.k())));
    for (size_t j = 0; j < m.size(); ++j) m[j] = h.factors[j % h.k()];
    return m;
}

struct CocycleRows {
    IntMatrix m;
    std::vector<Int> moduli;
    CocycleSystemStats stats;
};

inline CocycleRows cocycle_rows(const FiniteGroup& g, const GroupAction& action, bool with_symmetry) {
    const AbelianGroup& h = action.coeffs;
    const int n = g.order;
    const int k = h.k();
    const int cols = free_cols(n, k);

    long long triple_rows = static_cast<long long>(n - 1) * (n - 1) * (n - 1) * k;
    long long sym_rows = with_symmetry ? static_cast<long long>(n - 1) * (n - 2) / 2 * k : 0;
    IntMatrix m(static_cast<int>(triple_rows + sym_rows), cols);
    std::vector<Int> moduli(m.rows);

    int row = 0;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) {
            int xy = g.mul(x, y);
            for (int z = 1; z < n; ++z) {
                int yz = g.mul(y, z);
                const IntMatrix& ax = action.mats[x];
                for (int r = 0; r < k; ++r) {
                    // x.c(y,z) - c(xy,z) + c(x,yz) - c(x,y) == 0 (mod d_r)
                    for (int c = 0; c < k; ++c)
                        if (ax.at(r, c) != 0) m.at(row, free_pair(n, y, z) * k + c) += ax.at(r, c);
                    if (xy != 0) m.at(row, free_pair(n, xy, z) * k + r) -= 1;
                    if (yz != 0) m.at(row, free_pair(n, x, yz) * k + r) += 1;
                    m.at(row, free_pair(n, x, y) * k + r) -= 1;
                    moduli[row] = h.factors[r];
                    ++row;
                }
            }
        }
    if (with_symmetry)
        for (int x = 1; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                for (int r = 0; r < k; ++r) {
                    m.at(row, free_pair(n, x, y) * k + r) += 1;
                    m.at(row, free_pair(n, y, x) * k + r) -= 1;
                    moduli[row] = h.factors[r];
                    ++row;
                }

    CocycleRows out{std::move(m), std::move(moduli), {}};
    out.stats.h_valued_unknowns = static_cast<long long>(n) * n;
    out.stats.scalar_unknowns = static_cast<long long>(n) * n * k;
    out.stats.free_scalar_unknowns = cols;
    out.stats.rows = row;
    return out;
}

inline std::vector<Int> cochain_to_free(const Cochain2& c) {
    const int n = c.n, k = c.k();
    std::vector<Int> v(static_cast<size_t>(free_cols(n, k)));
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y)
            for (int comp = 0; comp < k; ++comp) v[free_pair(n, x, y) * k + comp] = c.at(x, y, comp);
    return v;
}

inline Cochain2 free_to_cochain(const FiniteGroup& g, const AbelianGroup& h, const std::vector<Int>& v) {
    Cochain2 c = zero_cochain2(g, h);
    const int n = g.order, k = h.k();
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y)
            for (int comp = 0; comp < k; ++comp) c.at(x, y, comp) = v[free_pair(n, x, y) * k + comp];
    c.reduce();
    return c;
}

// Columns: the coboundaries of the unit 1-cochains (one per non-identity
// element and coefficient component), written in free coordinates.
inline IntMatrix coboundary_generators(const FiniteGroup& g, const GroupAction& action) {
    const AbelianGroup& h = action.coeffs;
    const int n = g.order, k = h.k();
    IntMatrix b(free_cols(n, k), (n - 1) * k);
    std::vector<Int> f(static_cast<size_t>(n) * k, Int(0));
    for (int z = 1; z < n; ++z)
        for (int comp = 0; comp < k; ++comp) {
            f[static_cast<size_t>(z) * k + comp] = 1;
            Cochain2 df = coboundary(g, action, f);
            std::vector<Int> col = cochain_to_free(df);
            int j = (z - 1) * k + comp;
            for (int i = 0; i < b.rows; ++i) b.at(i, j) = col[i];
            f[static_cast<size_t>(z) * k + comp] = 0;
        }
    return b;
}

inline void check_pair(const FiniteGroup& g, const AbelianGroup& h, const GroupAction& action,
                       Int size_guard) {
    if (g.order > size_guard)
        fail("size guard: group order " + std::to_string(g.order) + " exceeds " + size_guard.str());
    if (action.group_order() != g.order) fail("action does not match the group order");
    if (!(action.coeffs == h)) fail("action does not match the coefficient group");
}

}  // namespace detail

// Second cohomology of (G, H, action) on normalized cocycle tables, with
// exact class arithmetic: invariant factors, canonical generators, and
// coordinates of arbitrary cocycles.
struct CohomologyGroup {
    FiniteGroup g;
    AbelianGroup h;
    GroupAction action;

    std::vector<Int> factors;
    std::vector<Cochain2> generators;
    Int z2_order = 1;
    Int b2_order = 1;
    Int order = 1;
    CocycleSystemStats stats;
    LatticeQuotient quo;

    int rank() const { return static_cast<int>(factors.size()); }

    void check_carrier(const Cochain2& c) const {
        if (c.n != g.order || !(c.coeffs == h)) fail("cochain lives on a different pair");
        if (!is_normalized(c)) fail("cochain is not normalized");
    }

    std::vector<Int> class_of(const Cochain2& c) const {
        check_carrier(c);
        if (auto bad = first_cocycle_violation(g, action, c))
            fail("not a cocycle: condition fails at (" + std::to_string((*bad)[0]) + "," +
                 std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");
        return quo.coords(detail::cochain_to_free(c));
    }

    bool same_class(const Cochain2& a, const Cochain2& b) const { return class_of(a) == class_of(b); }

    Cochain2 rep_from_coords(const std::vector<Int>& coords) const {
        if (coords.size() != factors.size()) fail("class coordinate tuple has wrong length");
        Cochain2 c = zero_cochain2(g, h);
        for (size_t t = 0; t < coords.size(); ++t)
            if (coords[t] != 0) c = cochain_add(c, cochain_scale(coords[t], generators[t]));
        return c;
    }
};

inline CohomologyGroup compute_h2(const FiniteGroup& g, const AbelianGroup& h, const GroupAction& action,
                                  Int size_guard = 24) {
    detail::check_pair(g, h, action, size_guard);
    detail::CocycleRows rows = detail::cocycle_rows(g, action, false);
    std::vector<Int> source = detail::free_moduli(g.order, h);

    IntMatrix kernel = kernel_mod(rows.m, rows.moduli);
    IntMatrix b_gens = detail::coboundary_generators(g, action);
    IntMatrix sub = hstack(b_gens, IntMatrix::diagonal(source));

    CohomologyGroup H{g, h, action, {}, {}, 1, 1, 1, rows.stats,
                      make_lattice_quotient(kernel, sub)};
    Int full = 1;
    for (const Int& m : source) full *= m;
    H.z2_order = full / H.quo.l1.det_abs();
    H.b2_order = full / LatticeBasis(column_lattice_basis(sub)).det_abs();
    H.order = H.quo.order();
    if (H.z2_order != H.b2_order * H.order)
        fail("internal consistency: |Z2| != |B2| * |H2|");
    H.factors = H.quo.factors;
    for (int t = 0; t < H.rank(); ++t)
        H.generators.push_back(detail::free_to_cochain(g, h, H.quo.rep(t)));
    return H;
}

// Finds f with (c + df) symmetric, i.e. a symmetric representative in the
// class of c, if the class admits one.
inline std::optional<Cochain2> symmetrize_in_class(const FiniteGroup& g, const GroupAction& action,
                                                   const Cochain2& c) {
    const AbelianGroup& h = action.coeffs;
    if (c.n != g.order || !(c.coeffs == h)) fail("cochain lives on a different pair");
    if (auto bad = first_cocycle_violation(g, action, c))
        fail("not a cocycle: condition fails at (" + std::to_string((*bad)[0]) + "," +
             std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");
    const int n = g.order, k = h.k();
    const int unknowns = (n - 1) * k;
    auto fcol = [&](int z, int comp) { return (z - 1) * k + comp; };

    long long pair_count = static_cast<long long>(n - 1) * (n - 2) / 2;
    IntMatrix a(static_cast<int>(pair_count * k), unknowns);
    std::vector<Int> rhs(a.rows), moduli(a.rows);
    int row = 0;
    for (int x = 1; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            int xy = g.mul(x, y), yx = g.mul(y, x);
            const IntMatrix& ax = action.mats[x];
            const IntMatrix& ay = action.mats[y];
            for (int r = 0; r < k; ++r) {
                // df(x,y) - df(y,x) == c(y,x) - c(x,y), expanded over f-blocks
                for (int comp = 0; comp < k; ++comp) {
                    a.at(row, fcol(y, comp)) += ax.at(r, comp);
                    a.at(row, fcol(x, comp)) -= ay.at(r, comp);
                }
                a.at(row, fcol(y, r)) -= 1;
                a.at(row, fcol(x, r)) += 1;
                if (xy != 0) a.at(row, fcol(xy, r)) -= 1;
                if (yx != 0) a.at(row, fcol(yx, r)) += 1;
                rhs[row] = c.at(y, x, r) - c.at(x, y, r);
                moduli[row] = h.factors[r];
                ++row;
            }
        }
    auto f_free = solve_mod(a, rhs, moduli);
    if (!f_free) return std::nullopt;
    std::vector<Int> f(static_cast<size_t>(n) * k, Int(0));
    for (int z = 1; z < n; ++z)
        for (int comp = 0; comp < k; ++comp) f[static_cast<size_t>(z) * k + comp] = (*f_free)[fcol(z, comp)];
    Cochain2 out = cochain_add(c, coboundary(g, action, f));
    if (!is_symmetric(out)) fail("internal consistency: symmetrization produced an asymmetric table");
    return out;
}

// Finds f with df = a - b, i.e. an explicit witness that a and b are
// cohomologous, without computing the full cohomology group.
inline std::optional<std::vector<Int>> cobounding_cochain(const FiniteGroup& g, const GroupAction& action,
                                                          const Cochain2& a, const Cochain2& b) {
    const AbelianGroup& h = action.coeffs;
    check_same_carrier(a, b);
    if (a.n != g.order) fail("cochain lives on a different pair");
    // identity-pair rows are dropped below, which is only sound for
    // normalized tables
    if (!is_normalized(a) || !is_normalized(b)) fail("cobounding requires normalized tables");
    const int n = g.order, k = h.k();
    const int unknowns = (n - 1) * k;
    auto fcol = [&](int z, int comp) { return (z - 1) * k + comp; };
    Cochain2 diff = cochain_sub(a, b);

    IntMatrix m(static_cast<int>(static_cast<long long>(n - 1) * (n - 1) * k), unknowns);
    std::vector<Int> rhs(m.rows), moduli(m.rows);
    int row = 0;
    for (int x = 1; x < n; ++x)
        for (int y = 1; y < n; ++y) {
            int xy = g.mul(x, y);
            const IntMatrix& ax = action.mats[x];
            for (int r = 0; r < k; ++r) {
                for (int comp = 0; comp < k; ++comp) m.at(row, fcol(y, comp)) += ax.at(r, comp);
                m.at(row, fcol(x, r)) += 1;
                if (xy != 0) m.at(row, fcol(xy, r)) -= 1;
                rhs[row] = diff.at(x, y, r);
                moduli[row] = h.factors[r];
                ++row;
            }
        }
    auto f_free = solve_mod(m, rhs, moduli);
    if (!f_free) return std::nullopt;
    std::vector<Int> f(static_cast<size_t>(n) * k, Int(0));
    for (int z = 1; z < n; ++z)
        for (int comp = 0; comp < k; ++comp) f[static_cast<size_t>(z) * k + comp] = (*f_free)[fcol(z, comp)];
    return f;
}

// The subgroup of classes admitting symmetric representatives, with its own
// invariant factors, symmetric generators, and the embedding into the full
// cohomology coordinates.
struct SymmetricCohomology {
    CohomologyGroup h2;
    std::vector<Int> factors;
    std::vector<Cochain2> generators;   // symmetric tables
    IntMatrix embedding;                // column t: h2-coordinates of generator t
    Int order = 1;
    LatticeQuotient sub;                // structure of the subgroup inside prod Z_h2.factors

    int rank() const { return static_cast<int>(factors.size()); }

    std::optional<std::vector<Int>> class_of(const Cochain2& c) const {
        std::vector<Int> y = h2.class_of(c);
        return sub.try_coords(y);
    }

    bool contains_class(const std::vector<Int>& h2_coords) const {
        return sub.try_coords(h2_coords).has_value();
    }

    Cochain2 rep_from_coords(const std::vector<Int>& coords) const {
        if (coords.size() != factors.size()) fail("class coordinate tuple has wrong length");
        Cochain2 c = zero_cochain2(h2.g, h2.h);
        for (size_t t = 0; t < coords.size(); ++t)
            if (coords[t] != 0) c = cochain_add(c, cochain_scale(coords[t], generators[t]));
        return c;
    }
};

inline SymmetricCohomology compute_h2_ts(const FiniteGroup& g, const AbelianGroup& h,
                                         const GroupAction& action, Int size_guard = 24) {
    CohomologyGroup h2 = compute_h2(g, h, action, size_guard);
    const int r = h2.rank();

    detail::CocycleRows rows = detail::cocycle_rows(g, action, true);
    IntMatrix kernel_ts = kernel_mod(rows.m, rows.moduli);

    // classes of the symmetric-cocycle lattice generators, in h2 coordinates
    IntMatrix cls(r, kernel_ts.cols);
    for (int j = 0; j < kernel_ts.cols; ++j) {
        auto y = h2.quo.try_coords(kernel_ts.col(j));
        if (!y) fail("internal consistency: symmetric cocycle outside the cocycle lattice");
        for (int i = 0; i < r; ++i) cls.at(i, j) = (*y)[i];
    }
    IntMatrix rel = IntMatrix::diagonal(h2.factors);
    IntMatrix span = column_lattice_basis(hstack(cls, rel));
    SymmetricCohomology S{std::move(h2), {}, {}, IntMatrix(r, 0), 1,
                          make_lattice_quotient(span, rel)};
    S.factors = S.sub.factors;
    S.order = S.sub.order();

    S.embedding = IntMatrix(r, S.rank());
    for (int t = 0; t < S.rank(); ++t) {
        std::vector<Int> w = S.sub.rep(t);
        for (int i = 0; i < r; ++i) {
            w[i] = mod_floor(w[i], S.h2.factors[i]);
            S.embedding.at(i, t) = w[i];
        }
        Cochain2 rep = S.h2.rep_from_coords(w);
        auto sym = symmetrize_in_class(g, action, rep);
        if (!sym) fail("internal consistency: class in the symmetric subgroup admits no symmetric table");
        S.generators.push_back(std::move(*sym));
    }
    return S;
}

// Pullback along a surjection q: big -> small, (q*c)(x,y) = c(q(x), q(y)).
// Symmetric tables pull back to symmetric tables.
inline Cochain2 inflate_cochain(const FiniteGroup& big, const GroupHom& q, const Cochain2& c_small) {
    if (static_cast<int>(q.map.size()) != big.order) fail("inflation map does not match the source group");
    for (int v : q.map)
        if (v < 0 || v >= c_small.n) fail("inflation map hits elements outside the target group");
    Cochain2 out = zero_cochain2(big, c_small.coeffs);
    out.coeffs = c_small.coeffs;
    for (int x = 0; x < big.order; ++x)
        for (int y = 0; y < big.order; ++y)
            for (int comp = 0; comp < c_small.k(); ++comp)
                out.at(x, y, comp) = c_small.at(q(x), q(y), comp);
    return out;
}

}  // namespace symext
