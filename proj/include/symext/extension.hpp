#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symext/abelian.hpp"
#include "symext/action.hpp"
#include "symext/cochain.hpp"
#include "symext/cohomology.hpp"
#include "symext/error.hpp"
#include "symext/group.hpp"

namespace symext {

// Concrete extension on the carrier H x G (lexicographic: index = h*|G| + g),
// with multiplication (h,g)*(h',g') = (h + g.h' + c(g,g'), gg').
struct ExtensionGroup {
    FiniteGroup base;
    FiniteGroup g;
    AbelianGroup h;
    GroupAction action;
    Cochain2 cocycle;
    bool symmetric_table = false;  // topo-symmetric annotation of the chosen cocycle

    int h_order() const { return static_cast<int>(to_i64(h.order)); }
    int g_order() const { return g.order; }

    int index_of(int h_idx, int g_idx) const { return h_idx * g.order + g_idx; }
    std::pair<int, int> parts(int e_idx) const { return {e_idx / g.order, e_idx % g.order}; }

    int include_h(int h_idx) const { return index_of(h_idx, 0); }
    int project(int e_idx) const { return e_idx % g.order; }
    int section(int g_idx) const { return index_of(0, g_idx); }
};

inline ExtensionGroup build_extension(const FiniteGroup& g, const AbelianGroup& h,
                                      const GroupAction& action, const Cochain2& c) {
    if (c.n != g.order || !(c.coeffs == h)) fail("cocycle lives on a different pair");
    if (!is_normalized(c)) fail("cocycle table is not normalized");
    if (auto bad = first_cocycle_violation(g, action, c))
        fail("not a cocycle: condition fails at (" + std::to_string((*bad)[0]) + "," +
             std::to_string((*bad)[1]) + "," + std::to_string((*bad)[2]) + ")");

    const int nh = static_cast<int>(to_i64(h.order));
    const int ng = g.order;
    const int ne = nh * ng;

    // index tables for the coefficient group and the cocycle values
    std::vector<int> h_add(static_cast<size_t>(nh) * nh);
    {
        std::vector<std::vector<Int>> tuples(nh);
        for (int i = 0; i < nh; ++i) tuples[i] = h.tuple_of(i);
        for (int a = 0; a < nh; ++a)
            for (int b = 0; b < nh; ++b)
                h_add[static_cast<size_t>(a) * nh + b] = static_cast<int>(to_i64(h.index_of(h.add(tuples[a], tuples[b]))));
    }
    std::vector<int> c_idx(static_cast<size_t>(ng) * ng);
    for (int x = 0; x < ng; ++x)
        for (int y = 0; y < ng; ++y)
            c_idx[static_cast<size_t>(x) * ng + y] = static_cast<int>(to_i64(h.index_of(c.tuple_at(x, y))));

    std::vector<int> table(static_cast<size_t>(ne) * ne);
    for (int h1 = 0; h1 < nh; ++h1)
        for (int g1 = 0; g1 < ng; ++g1) {
            int e1 = h1 * ng + g1;
            for (int h2 = 0; h2 < nh; ++h2)
                for (int g2 = 0; g2 < ng; ++g2) {
                    int e2 = h2 * ng + g2;
                    int moved = action.apply_idx(g1, h2);
                    int hp = h_add[static_cast<size_t>(h_add[static_cast<size_t>(h1) * nh + moved]) * nh +
                                   c_idx[static_cast<size_t>(g1) * ng + g2]];
                    table[static_cast<size_t>(e1) * ne + e2] = hp * ng + g.mul(g1, g2);
                }
        }

    ExtensionGroup e{make_finite_group(ne, std::move(table), "Ext(" + g.name + "," + h.name + ")", ne <= 128),
                     g, h, action, c, is_symmetric(c)};

    // exactness of 1 -> H -> E -> G -> 1 on the nose
    for (int a = 0; a < nh; ++a)
        for (int b = 0; b < nh; ++b)
            if (e.base.mul(e.include_h(a), e.include_h(b)) != e.include_h(h_add[static_cast<size_t>(a) * nh + b]))
                fail("internal consistency: inclusion is not a homomorphism");
    for (int x = 0; x < ne; ++x)
        for (int y = 0; y < ne; ++y)
            if (e.project(e.base.mul(x, y)) != g.mul(e.project(x), e.project(y)))
                fail("internal consistency: projection is not a homomorphism");
    for (int gi = 0; gi < ng; ++gi)
        if (e.project(e.section(gi)) != gi) fail("internal consistency: section is not a right inverse");
    return e;
}

inline int max_element_order(const FiniteGroup& g) {
    int best = 1;
    for (int x = 0; x < g.order; ++x) best = std::max(best, element_order(g, x));
    return best;
}

inline int max_element_order(const ExtensionGroup& e) { return max_element_order(e.base); }

// Invariant factors of an abelian table, reconstructed from element-order
// statistics per prime. Returns nullopt on nonabelian input.
inline std::optional<std::vector<Int>> abelian_invariants(const FiniteGroup& e) {
    if (!is_abelian(e)) return std::nullopt;
    std::vector<int> orders(e.order);
    for (int x = 0; x < e.order; ++x) orders[x] = element_order(e, x);

    // prime factorization of the group order by trial division
    std::vector<std::pair<long long, int>> primes;
    long long n = e.order;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            int a = 0;
            while (n % p == 0) {
                n /= p;
                ++a;
            }
            primes.emplace_back(p, a);
        }
    if (n > 1) primes.emplace_back(n, 1);

    // per prime: exponents of the cyclic p-power factors, largest first
    std::map<long long, std::vector<int>> exps;
    for (auto [p, a] : primes) {
        std::vector<long long> count(a + 1, 0);  // count[j] = #{x : order(x) divides p^j}
        for (int j = 0; j <= a; ++j) {
            long long pj = 1;
            for (int t = 0; t < j; ++t) pj *= p;
            for (int x = 0; x < e.order; ++x)
                if (pj % orders[x] == 0) ++count[j];
        }
        std::vector<int> lambda(a + 2, 0);  // lambda[j] = #cyclic p-factors with exponent >= j
        for (int j = 1; j <= a; ++j) {
            long long ratio = count[j] / count[j - 1];
            if (count[j] % count[j - 1] != 0) fail("internal consistency: abelian order statistics");
            int lg = 0;
            long long r = ratio;
            while (r > 1) {
                if (r % p != 0) fail("internal consistency: abelian order statistics");
                r /= p;
                ++lg;
            }
            lambda[j] = lg;
        }
        std::vector<int> es;
        for (int j = 1; j <= a; ++j)
            for (int t = 0; t < lambda[j] - lambda[j + 1]; ++t) es.push_back(j);
        std::sort(es.rbegin(), es.rend());
        exps[p] = es;
    }

    size_t max_parts = 0;
    for (auto& [p, es] : exps) max_parts = std::max(max_parts, es.size());
    std::vector<Int> factors;
    for (size_t t = 0; t < max_parts; ++t) {
        Int d = 1;
        for (auto& [p, es] : exps)
            if (t < es.size()) {
                Int pe = 1;
                for (int j = 0; j < es[t]; ++j) pe *= p;
                d *= pe;
            }
        factors.push_back(d);
    }
    std::reverse(factors.begin(), factors.end());  // ascending, d1 | d2 | ...
    Int prod = 1;
    for (const Int& d : factors) prod *= d;
    if (prod != e.order) fail("internal consistency: abelian reconstruction order mismatch");
    return factors;
}

inline std::optional<std::vector<Int>> abelian_invariants(const ExtensionGroup& e) {
    return abelian_invariants(e.base);
}

inline void check_same_extension_carrier(const ExtensionGroup& a, const ExtensionGroup& b) {
    if (!a.g.same_table(b.g) || !(a.h == b.h) || !(a.action == b.action))
        fail("extensions live over different (G, H, action) data");
}

// Equivalence = the cocycles differ by a coboundary; decided by a direct
// linear solve, which doubles as the witness construction.
inline bool are_equivalent(const ExtensionGroup& e1, const ExtensionGroup& e2) {
    check_same_extension_carrier(e1, e2);
    return cobounding_cochain(e1.g, e1.action, e1.cocycle, e2.cocycle).has_value();
}

// Brute-force isomorphism search on raw tables; exponential, so guarded.
inline bool brute_force_isomorphic(const FiniteGroup& a, const FiniteGroup& b, int guard = 24) {
    if (a.order != b.order) return false;
    if (a.order > guard) fail("isomorphism search guard: order exceeds " + std::to_string(guard));
    const int n = a.order;
    std::vector<int> img(n, -1);
    std::vector<char> used(n, 0);
    img[0] = 0;
    used[0] = 1;
    // order profile must match
    {
        std::vector<int> oa(n), ob(n);
        for (int x = 0; x < n; ++x) oa[x] = element_order(a, x), ob[x] = element_order(b, x);
        std::vector<int> sa = oa, sb = ob;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    auto consistent = [&](int upto) {
        for (int x = 0; x <= upto; ++x)
            for (int y = 0; y <= upto; ++y) {
                int z = a.mul(x, y);
                if (z <= upto && img[z] != b.mul(img[x], img[y])) return false;
                if (z > upto && img[z] >= 0 && img[z] != b.mul(img[x], img[y])) return false;
            }
        return true;
    };
    auto rec = [&](auto&& self, int x) -> bool {
        if (x == n) return true;
        if (img[x] >= 0) return self(self, x + 1);
        for (int y = 0; y < n; ++y) {
            if (used[y] || element_order(a, x) != element_order(b, y)) continue;
            img[x] = y;
            used[y] = 1;
            if (consistent(x) && self(self, x + 1)) return true;
            img[x] = -1;
            used[y] = 0;
        }
        return false;
    };
    return rec(rec, 1);
}

// The same extension data with the topo-symmetric annotation dropped.
struct ClassicalExtension {
    FiniteGroup base;
    FiniteGroup g;
    AbelianGroup h;
    GroupAction action;
    Cochain2 cocycle;
};

inline ClassicalExtension forget_to_classical(const ExtensionGroup& e) {
    return ClassicalExtension{e.base, e.g, e.h, e.action, e.cocycle};
}

}  // namespace symext
