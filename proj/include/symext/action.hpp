#pragma once

#include <vector>

#include "symext/abelian.hpp"
#include "symext/bigint.hpp"
#include "symext/error.hpp"
#include "symext/group.hpp"
#include "symext/matrix.hpp"

namespace symext {

// G acting on the coefficient group by automorphisms: one k x k matrix per
// group element (entries canonical mod the row factor), plus the induced
// permutation of element indices for fast application.
struct GroupAction {
    AbelianGroup coeffs;
    std::vector<IntMatrix> mats;
    std::vector<std::vector<int>> perms;

    int group_order() const { return static_cast<int>(mats.size()); }

    bool is_trivial() const {
        for (const IntMatrix& m : mats)
            if (!(m == IntMatrix::identity(coeffs.k()))) return false;
        return true;
    }

    std::vector<Int> apply(int g, const std::vector<Int>& t) const {
        const IntMatrix& m = mats[g];
        std::vector<Int> out(coeffs.k());
        for (int r = 0; r < coeffs.k(); ++r) {
            Int s = 0;
            for (int c = 0; c < coeffs.k(); ++c) s += m.at(r, c) * t[c];
            out[r] = mod_floor(s, coeffs.factors[r]);
        }
        return out;
    }

    int apply_idx(int g, int h_idx) const { return perms[g][h_idx]; }

    bool operator==(const GroupAction& o) const { return coeffs == o.coeffs && mats == o.mats; }
};

namespace detail {

inline IntMatrix canonical_action_matrix(const AbelianGroup& h, IntMatrix m) {
    if (m.rows != h.k() || m.cols != h.k()) fail("action matrix has wrong shape");
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) m.at(r, c) = mod_floor(m.at(r, c), h.factors[r]);
    return m;
}

inline std::vector<int> action_permutation(const AbelianGroup& h, const IntMatrix& m) {
    // well-definedness: the matrix must kill factors[c] * e_c in every row
    for (int c = 0; c < h.k(); ++c)
        for (int r = 0; r < h.k(); ++r)
            if (mod_floor(m.at(r, c) * h.factors[c], h.factors[r]) != 0)
                fail("action matrix does not respect the coefficient relations");
    int n = static_cast<int>(to_i64(h.order));
    std::vector<int> perm(n);
    std::vector<char> hit(n, 0);
    for (int i = 0; i < n; ++i) {
        std::vector<Int> t = h.tuple_of(i);
        std::vector<Int> img(h.k());
        for (int r = 0; r < h.k(); ++r) {
            Int s = 0;
            for (int c = 0; c < h.k(); ++c) s += m.at(r, c) * t[c];
            img[r] = mod_floor(s, h.factors[r]);
        }
        int j = static_cast<int>(to_i64(h.index_of(img)));
        perm[i] = j;
        hit[j] = 1;
    }
    for (int j = 0; j < n; ++j)
        if (!hit[j]) fail("action matrix is not invertible on the coefficient group");
    return perm;
}

}  // namespace detail

// Validates matrices into an action: every matrix an automorphism, the
// identity element acting as the identity, and compatibility with the group
// law checked on all pairs (as induced maps, since distinct matrices can
// induce the same map).
inline GroupAction make_action(const FiniteGroup& g, const AbelianGroup& h, std::vector<IntMatrix> mats) {
    if (static_cast<int>(mats.size()) != g.order) fail("need exactly one action matrix per group element");
    GroupAction a;
    a.coeffs = h;
    a.mats.reserve(mats.size());
    a.perms.reserve(mats.size());
    for (IntMatrix& m : mats) {
        IntMatrix cm = detail::canonical_action_matrix(h, std::move(m));
        a.perms.push_back(detail::action_permutation(h, cm));
        a.mats.push_back(std::move(cm));
    }
    int n = static_cast<int>(to_i64(h.order));
    for (int i = 0; i < n; ++i)
        if (a.perms[g.identity()][i] != i) fail("identity element must act as the identity map");
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            for (int i = 0; i < n; ++i)
                if (a.perms[g.mul(x, y)][i] != a.perms[x][a.perms[y][i]])
                    fail("action is not compatible with the group law at pair (" + std::to_string(x) + "," +
                         std::to_string(y) + ")");
    return a;
}

inline GroupAction trivial_action(const FiniteGroup& g, const AbelianGroup& h) {
    return make_action(g, h, std::vector<IntMatrix>(g.order, IntMatrix::identity(h.k())));
}

}  // namespace symext
