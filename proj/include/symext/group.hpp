#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "symext/error.hpp"

namespace symext {

// A finite group as a multiplication table over indices 0..order-1.
// Index 0 is always the identity.
struct FiniteGroup {
    int order = 0;
    std::vector<int> table;     // table[a * order + b] = a*b
    std::vector<int> inverses;
    std::string name;

    int mul(int a, int b) const { return table[static_cast<size_t>(a) * order + b]; }
    int inv(int a) const { return inverses[a]; }
    int identity() const { return 0; }

    bool same_table(const FiniteGroup& o) const { return order == o.order && table == o.table; }
};

inline bool full_associativity_scan(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b)
            for (int c = 0; c < g.order; ++c)
                if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
    return true;
}

// Builds and validates a group from a raw table. The identity must sit at
// index 0. The full associativity scan is O(order^3); callers constructing
// large tables with associativity guaranteed by design may turn it off.
inline FiniteGroup make_finite_group(int order, std::vector<int> table, std::string name,
                                     bool check_associativity = true) {
    if (order <= 0) fail("group order must be positive");
    if (static_cast<int>(table.size()) != order * order) fail("multiplication table has wrong size");
    for (int x : table)
        if (x < 0 || x >= order) fail("multiplication table entry out of range");
    FiniteGroup g;
    g.order = order;
    g.table = std::move(table);
    g.name = std::move(name);
    for (int a = 0; a < order; ++a)
        if (g.mul(0, a) != a || g.mul(a, 0) != a) fail("index 0 is not an identity in group " + g.name);
    // latin square: rows and columns are permutations
    std::vector<char> seen(order);
    for (int a = 0; a < order; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < order; ++b) seen[g.mul(a, b)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            fail("row " + std::to_string(a) + " of the multiplication table is not a permutation");
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < order; ++b) seen[g.mul(b, a)] = 1;
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            fail("column " + std::to_string(a) + " of the multiplication table is not a permutation");
    }
    g.inverses.assign(order, -1);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                g.inverses[a] = b;
                break;
            }
    for (int a = 0; a < order; ++a)
        if (g.inverses[a] < 0) fail("element " + std::to_string(a) + " has no two-sided inverse");
    if (check_associativity && !full_associativity_scan(g))
        fail("multiplication table is not associative in group " + g.name);
    return g;
}

inline int element_order(const FiniteGroup& g, int x) {
    int y = x, n = 1;
    while (y != 0) {
        y = g.mul(y, x);
        ++n;
        if (n > g.order) fail("element order exceeds group order; table is corrupt");
    }
    return n;
}

inline bool is_abelian(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        for (int b = a + 1; b < g.order; ++b)
            if (g.mul(a, b) != g.mul(b, a)) return false;
    return true;
}

inline bool is_cyclic(const FiniteGroup& g) {
    for (int a = 0; a < g.order; ++a)
        if (element_order(g, a) == g.order) return true;
    return false;
}

inline FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    int n = a.order * b.order;
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int x1 = 0; x1 < a.order; ++x1)
        for (int y1 = 0; y1 < b.order; ++y1)
            for (int x2 = 0; x2 < a.order; ++x2)
                for (int y2 = 0; y2 < b.order; ++y2) {
                    int p = x1 * b.order + y1;
                    int q = x2 * b.order + y2;
                    table[static_cast<size_t>(p) * n + q] = a.mul(x1, x2) * b.order + b.mul(y1, y2);
                }
    return make_finite_group(n, std::move(table), a.name + "x" + b.name, n <= 128);
}

// Symmetric group on n letters, elements in lexicographic one-line order,
// so the identity permutation gets index 0. Composition: (p*q)(i) = p(q(i)).
inline FiniteGroup make_symmetric_group(int n) {
    if (n < 1 || n > 5) fail("symmetric group size out of supported range 1..5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    int order = static_cast<int>(perms.size());
    auto index_of = [&](const std::vector<int>& q) {
        return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<int> table(static_cast<size_t>(order) * order);
    std::vector<int> comp(n);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) {
            for (int t = 0; t < n; ++t) comp[t] = perms[i][perms[j][t]];
            table[static_cast<size_t>(i) * order + j] = index_of(comp);
        }
    return make_finite_group(order, std::move(table), "S" + std::to_string(n), order <= 128);
}

// Index map that respects multiplication.
struct GroupHom {
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
};

inline bool is_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, const std::vector<int>& map) {
    if (static_cast<int>(map.size()) != src.order) return false;
    for (int x : map)
        if (x < 0 || x >= dst.order) return false;
    if (map[0] != 0) return false;
    for (int a = 0; a < src.order; ++a)
        for (int b = 0; b < src.order; ++b)
            if (map[src.mul(a, b)] != dst.mul(map[a], map[b])) return false;
    return true;
}

inline bool is_surjective_map(const std::vector<int>& map, int dst_order) {
    std::vector<char> hit(dst_order, 0);
    for (int x : map) hit[x] = 1;
    return std::find(hit.begin(), hit.end(), 0) == hit.end();
}

inline bool is_injective_map(const std::vector<int>& map, int dst_order) {
    std::vector<char> hit(dst_order, 0);
    for (int x : map) {
        if (hit[x]) return false;
        hit[x] = 1;
    }
    return true;
}

inline GroupHom make_homomorphism(const FiniteGroup& src, const FiniteGroup& dst, std::vector<int> map) {
    if (!is_homomorphism(src, dst, map)) fail("map is not a homomorphism");
    return GroupHom{std::move(map)};
}

}  // namespace symext
