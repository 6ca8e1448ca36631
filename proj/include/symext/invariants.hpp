#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symext/bigint.hpp"
#include "symext/extension.hpp"
#include "symext/morphism.hpp"

namespace symext {

// Finite discrete groups have dimension 0 on both legs; the field is kept so
// report schemas stay stable.
inline int dim_ts(const ExtensionGroup&) { return 0; }

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
    std::vector<char> in(g.order, 0);
    for (int x : elems) in[x] = 1;
    if (!in[0]) return false;
    for (int x : elems) {
        if (!in[g.inv(x)]) return false;
        for (int y : elems)
            if (!in[g.mul(x, y)]) return false;
    }
    return true;
}

// {x in E : x conjugates every element of the embedded kernel to itself},
// i.e. the centralizer of the image of H, as sorted element indices.
inline std::vector<int> stab_centralizer(const ExtensionGroup& e) {
    std::vector<int> out;
    for (int x = 0; x < e.base.order; ++x) {
        bool central = true;
        for (int a = 0; a < e.h_order() && central; ++a) {
            int ia = e.include_h(a);
            if (e.base.mul(x, ia) != e.base.mul(ia, x)) central = false;
        }
        if (central) out.push_back(x);
    }
    if (!is_subgroup(e.base, out)) fail("internal consistency: centralizer failed the subgroup check");
    return out;
}

// Ordered pairs (x,y) on which the table is symmetric.
inline std::vector<std::pair<int, int>> symmetry_locus(const Cochain2& c) {
    std::vector<std::pair<int, int>> locus;
    for (int x = 0; x < c.n; ++x)
        for (int y = 0; y < c.n; ++y) {
            bool equal = true;
            for (int comp = 0; comp < c.k() && equal; ++comp)
                if (c.at(x, y, comp) != c.at(y, x, comp)) equal = false;
            if (equal) locus.emplace_back(x, y);
        }
    return locus;
}

// (delta_centralizer, delta_pair): |centralizer| / |E| and locus size / |G|^2.
inline std::pair<Rational, Rational> density_invariants(const ExtensionGroup& e) {
    Rational dc(Int(stab_centralizer(e).size()), Int(e.base.order));
    Rational dp(Int(symmetry_locus(e.cocycle).size()), Int(e.g_order()) * e.g_order());
    return {dc, dp};
}

struct InvariantReport {
    int dim = 0;
    Int stab_centralizer_order = 1;
    Int symmetry_locus_size = 0;
    Rational delta_centralizer;
    Rational delta_pair;
    Int max_order = 1;
    std::vector<Int> abelian_type;  // invariant factors; meaningful when abelian
    bool abelian = false;
};

inline InvariantReport invariant_report(const ExtensionGroup& e) {
    InvariantReport r;
    r.dim = dim_ts(e);
    r.stab_centralizer_order = static_cast<long long>(stab_centralizer(e).size());
    r.symmetry_locus_size = static_cast<long long>(symmetry_locus(e.cocycle).size());
    auto [dc, dp] = density_invariants(e);
    r.delta_centralizer = dc;
    r.delta_pair = dp;
    r.max_order = max_element_order(e);
    if (auto t = abelian_invariants(e)) {
        r.abelian = true;
        r.abelian_type = std::move(*t);
    }
    return r;
}

// The literally-testable parts of functoriality under a validated morphism:
// equal dimensions (vacuous at 0), the centralizer carried into the target
// centralizer when alpha is onto, and both density pairs side by side with
// no inequality asserted.
struct FunctorialityReport {
    bool morphism_valid = false;
    std::string morphism_failure;
    bool dims_equal = true;
    bool alpha_surjective = false;
    bool stab_mapped = true;   // meaningful only when alpha_surjective
    Rational delta_centralizer_src, delta_centralizer_dst;
    Rational delta_pair_src, delta_pair_dst;
};

inline FunctorialityReport functoriality_check(const ExtensionMorphism& m, const ExtensionGroup& e1,
                                               const ExtensionGroup& e2) {
    FunctorialityReport r;
    MorphismCheck chk = check_morphism(m, e1, e2);
    r.morphism_valid = chk.ok;
    r.morphism_failure = chk.failure;
    r.dims_equal = dim_ts(e1) == dim_ts(e2);
    r.alpha_surjective = is_surjective_map(m.alpha, e2.h_order());
    if (chk.ok && r.alpha_surjective) {
        std::vector<int> dst = stab_centralizer(e2);
        std::vector<char> in(e2.base.order, 0);
        for (int x : dst) in[x] = 1;
        for (int x : stab_centralizer(e1))
            if (!in[m.gamma[x]]) {
                r.stab_mapped = false;
                break;
            }
    }
    auto [dc1, dp1] = density_invariants(e1);
    auto [dc2, dp2] = density_invariants(e2);
    r.delta_centralizer_src = dc1;
    r.delta_centralizer_dst = dc2;
    r.delta_pair_src = dp1;
    r.delta_pair_dst = dp2;
    return r;
}

}  // namespace symext
