#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symext/extension.hpp"

namespace symext {

// Ladder (alpha: H -> H', beta: G -> G', gamma: E -> E') between extensions,
// all three as index maps on the respective carriers.
struct ExtensionMorphism {
    std::vector<int> alpha;
    std::vector<int> beta;
    std::vector<int> gamma;
};

struct MorphismCheck {
    bool ok = true;
    std::string failure;  // names the first failing condition and a witness
};

inline MorphismCheck morphism_failure(const std::string& what) { return MorphismCheck{false, what}; }

inline MorphismCheck check_morphism(const ExtensionMorphism& m, const ExtensionGroup& e1,
                                    const ExtensionGroup& e2) {
    const int nh1 = e1.h_order(), ng1 = e1.g_order(), ne1 = e1.base.order;
    if (static_cast<int>(m.alpha.size()) != nh1) return morphism_failure("alpha has wrong domain size");
    if (static_cast<int>(m.beta.size()) != ng1) return morphism_failure("beta has wrong domain size");
    if (static_cast<int>(m.gamma.size()) != ne1) return morphism_failure("gamma has wrong domain size");
    for (int x : m.alpha)
        if (x < 0 || x >= e2.h_order()) return morphism_failure("alpha maps outside the target");
    for (int x : m.beta)
        if (x < 0 || x >= e2.g_order()) return morphism_failure("beta maps outside the target");
    for (int x : m.gamma)
        if (x < 0 || x >= e2.base.order) return morphism_failure("gamma maps outside the target");

    // alpha additive on H (via index arithmetic in the abelian groups)
    const AbelianGroup& h1 = e1.h;
    const AbelianGroup& h2 = e2.h;
    for (int a = 0; a < nh1; ++a)
        for (int b = 0; b < nh1; ++b) {
            int ab = static_cast<int>(to_i64(h1.index_of(h1.add(h1.tuple_of(a), h1.tuple_of(b)))));
            int im = static_cast<int>(to_i64(h2.index_of(h2.add(h2.tuple_of(m.alpha[a]), h2.tuple_of(m.alpha[b])))));
            if (m.alpha[ab] != im)
                return morphism_failure("alpha is not additive at (" + std::to_string(a) + "," + std::to_string(b) + ")");
        }
    for (int a = 0; a < ng1; ++a)
        for (int b = 0; b < ng1; ++b)
            if (m.beta[e1.g.mul(a, b)] != e2.g.mul(m.beta[a], m.beta[b]))
                return morphism_failure("beta is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    for (int a = 0; a < ne1; ++a)
        for (int b = 0; b < ne1; ++b)
            if (m.gamma[e1.base.mul(a, b)] != e2.base.mul(m.gamma[a], m.gamma[b]))
                return morphism_failure("gamma is not a homomorphism at (" + std::to_string(a) + "," + std::to_string(b) + ")");

    // left square: gamma after inclusion = inclusion after alpha
    for (int a = 0; a < nh1; ++a)
        if (m.gamma[e1.include_h(a)] != e2.include_h(m.alpha[a]))
            return morphism_failure("inclusion square fails at h=" + std::to_string(a));
    // right square: projection after gamma = beta after projection
    for (int x = 0; x < ne1; ++x)
        if (e2.project(m.gamma[x]) != m.beta[e1.project(x)])
            return morphism_failure("projection square fails at e=" + std::to_string(x));
    // action compatibility: alpha(g.h) = beta(g).alpha(h)
    for (int gi = 0; gi < ng1; ++gi)
        for (int a = 0; a < nh1; ++a)
            if (m.alpha[e1.action.apply_idx(gi, a)] != e2.action.apply_idx(m.beta[gi], m.alpha[a]))
                return morphism_failure("action compatibility fails at (g=" + std::to_string(gi) +
                                        ", h=" + std::to_string(a) + ")");
    return MorphismCheck{};
}

inline ExtensionMorphism identity_morphism(const ExtensionGroup& e) {
    ExtensionMorphism m;
    m.alpha.resize(e.h_order());
    m.beta.resize(e.g_order());
    m.gamma.resize(e.base.order);
    for (size_t i = 0; i < m.alpha.size(); ++i) m.alpha[i] = static_cast<int>(i);
    for (size_t i = 0; i < m.beta.size(); ++i) m.beta[i] = static_cast<int>(i);
    for (size_t i = 0; i < m.gamma.size(); ++i) m.gamma[i] = static_cast<int>(i);
    return m;
}

// m2 after m1; range checks stand in for full carrier identity.
inline ExtensionMorphism compose_morphisms(const ExtensionMorphism& m2, const ExtensionMorphism& m1) {
    auto comp = [](const std::vector<int>& outer, const std::vector<int>& inner, const char* which) {
        std::vector<int> r(inner.size());
        for (size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] < 0 || inner[i] >= static_cast<int>(outer.size()))
                fail(std::string("morphisms do not compose: ") + which + " ranges mismatch");
            r[i] = outer[inner[i]];
        }
        return r;
    };
    return ExtensionMorphism{comp(m2.alpha, m1.alpha, "alpha"), comp(m2.beta, m1.beta, "beta"),
                             comp(m2.gamma, m1.gamma, "gamma")};
}

inline bool morphism_is_bijective(const ExtensionMorphism& m) {
    return is_injective_map(m.alpha, static_cast<int>(m.alpha.size())) &&
           is_injective_map(m.beta, static_cast<int>(m.beta.size())) &&
           is_injective_map(m.gamma, static_cast<int>(m.gamma.size()));
}

inline ExtensionMorphism invert_morphism(const ExtensionMorphism& m) {
    auto inv = [](const std::vector<int>& v, const char* which) {
        std::vector<int> r(v.size(), -1);
        for (size_t i = 0; i < v.size(); ++i) {
            if (v[i] < 0 || v[i] >= static_cast<int>(v.size()) || r[v[i]] >= 0)
                fail(std::string("morphism component ") + which + " is not bijective; not invertible");
            r[v[i]] = static_cast<int>(i);
        }
        return r;
    };
    return ExtensionMorphism{inv(m.alpha, "alpha"), inv(m.beta, "beta"), inv(m.gamma, "gamma")};
}

// The equivalence witness between extensions of the same class:
// gamma(h,g) = (h + f(g), g) where df = c1 - c2.
inline std::optional<ExtensionMorphism> equivalence_morphism(const ExtensionGroup& e1,
                                                             const ExtensionGroup& e2) {
    check_same_extension_carrier(e1, e2);
    auto f = cobounding_cochain(e1.g, e1.action, e1.cocycle, e2.cocycle);
    if (!f) return std::nullopt;
    const int k = e1.h.k();
    ExtensionMorphism m = identity_morphism(e1);
    for (int hi = 0; hi < e1.h_order(); ++hi)
        for (int gi = 0; gi < e1.g_order(); ++gi) {
            std::vector<Int> t = e1.h.tuple_of(hi);
            for (int comp = 0; comp < k; ++comp) t[comp] += (*f)[static_cast<size_t>(gi) * k + comp];
            int h_new = static_cast<int>(to_i64(e1.h.index_of(t)));
            m.gamma[e1.index_of(hi, gi)] = e2.index_of(h_new, gi);
        }
    return m;
}

}  // namespace symext
