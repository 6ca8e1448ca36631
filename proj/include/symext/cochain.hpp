#pragma once

#include <array>
#include <optional>
#include <vector>

#include "symext/abelian.hpp"
#include "symext/action.hpp"
#include "symext/bigint.hpp"
#include "symext/error.hpp"
#include "symext/group.hpp"

namespace symext {

// H-valued function on G x G, stored as a flat table of canonical residues:
// values[((x*n + y)*k + comp)]. Identity has index 0 in G.
struct Cochain2 {
    int n = 0;
    AbelianGroup coeffs;
    std::vector<Int> values;

    int k() const { return coeffs.k(); }

    Int& at(int x, int y, int comp) {
        return values[(static_cast<size_t>(x) * n + y) * coeffs.k() + comp];
    }
    const Int& at(int x, int y, int comp) const {
        return values[(static_cast<size_t>(x) * n + y) * coeffs.k() + comp];
    }

    std::vector<Int> tuple_at(int x, int y) const {
        std::vector<Int> t(coeffs.k());
        for (int c = 0; c < coeffs.k(); ++c) t[c] = at(x, y, c);
        return t;
    }

    void set_tuple(int x, int y, const std::vector<Int>& t) {
        for (int c = 0; c < coeffs.k(); ++c) at(x, y, c) = t[c];
    }

    void reduce() {
        int k = coeffs.k();
        for (size_t i = 0; i < values.size(); ++i)
            values[i] = mod_floor(values[i], coeffs.factors[i % k]);
    }

    bool is_zero() const {
        for (const Int& v : values)
            if (v != 0) return false;
        return true;
    }

    bool operator==(const Cochain2& o) const {
        return n == o.n && coeffs == o.coeffs && values == o.values;
    }
};

inline Cochain2 zero_cochain2(const FiniteGroup& g, const AbelianGroup& h) {
    Cochain2 c;
    c.n = g.order;
    c.coeffs = h;
    c.values.assign(static_cast<size_t>(g.order) * g.order * h.k(), Int(0));
    return c;
}

inline bool is_normalized(const Cochain2& c) {
    for (int x = 0; x < c.n; ++x)
        for (int comp = 0; comp < c.k(); ++comp)
            if (c.at(0, x, comp) != 0 || c.at(x, 0, comp) != 0) return false;
    return true;
}

inline bool is_symmetric(const Cochain2& c) {
    for (int x = 0; x < c.n; ++x)
        for (int y = x + 1; y < c.n; ++y)
            for (int comp = 0; comp < c.k(); ++comp)
                if (c.at(x, y, comp) != c.at(y, x, comp)) return false;
    return true;
}

inline Cochain2 transpose_cochain(const Cochain2& c) {
    Cochain2 t = c;
    for (int x = 0; x < c.n; ++x)
        for (int y = 0; y < c.n; ++y)
            for (int comp = 0; comp < c.k(); ++comp) t.at(x, y, comp) = c.at(y, x, comp);
    return t;
}

inline void check_same_carrier(const Cochain2& a, const Cochain2& b) {
    if (a.n != b.n || !(a.coeffs == b.coeffs)) fail("cochains live on different carriers");
}

inline Cochain2 cochain_add(const Cochain2& a, const Cochain2& b) {
    check_same_carrier(a, b);
    Cochain2 c = a;
    for (size_t i = 0; i < c.values.size(); ++i) c.values[i] += b.values[i];
    c.reduce();
    return c;
}

inline Cochain2 cochain_sub(const Cochain2& a, const Cochain2& b) {
    check_same_carrier(a, b);
    Cochain2 c = a;
    for (size_t i = 0; i < c.values.size(); ++i) c.values[i] -= b.values[i];
    c.reduce();
    return c;
}

inline Cochain2 cochain_scale(const Int& s, const Cochain2& a) {
    Cochain2 c = a;
    for (Int& v : c.values) v *= s;
    c.reduce();
    return c;
}

// (df)(x,y) = x.f(y) - f(xy) + f(x) for a 1-cochain f given as a flat table
// of g.order tuples.
inline Cochain2 coboundary(const FiniteGroup& g, const GroupAction& action, const std::vector<Int>& f) {
    const AbelianGroup& h = action.coeffs;
    const int k = h.k();
    if (static_cast<int>(f.size()) != g.order * k) fail("1-cochain table has wrong size");
    auto f_at = [&](int z, int comp) { return f[static_cast<size_t>(z) * k + comp]; };
    Cochain2 c = zero_cochain2(g, h);
    std::vector<Int> fy(k);
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y) {
            for (int comp = 0; comp < k; ++comp) fy[comp] = f_at(y, comp);
            std::vector<Int> moved = action.apply(x, fy);
            int xy = g.mul(x, y);
            for (int comp = 0; comp < k; ++comp)
                c.at(x, y, comp) = moved[comp] - f_at(xy, comp) + f_at(x, comp);
        }
    c.reduce();
    return c;
}

// Residual of the 2-cocycle condition at one triple:
// x.c(y,z) - c(xy,z) + c(x,yz) - c(x,y), reduced componentwise.
inline std::vector<Int> cocycle_residual_at(const FiniteGroup& g, const GroupAction& action,
                                            const Cochain2& c, int x, int y, int z) {
    const AbelianGroup& h = action.coeffs;
    std::vector<Int> r = action.apply(x, c.tuple_at(y, z));
    int xy = g.mul(x, y), yz = g.mul(y, z);
    for (int comp = 0; comp < h.k(); ++comp) {
        r[comp] += -c.at(xy, z, comp) + c.at(x, yz, comp) - c.at(x, y, comp);
        r[comp] = mod_floor(r[comp], h.factors[comp]);
    }
    return r;
}

inline std::optional<std::array<int, 3>> first_cocycle_violation(const FiniteGroup& g,
                                                                 const GroupAction& action,
                                                                 const Cochain2& c) {
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            for (int z = 0; z < g.order; ++z) {
                std::vector<Int> r = cocycle_residual_at(g, action, c, x, y, z);
                for (const Int& v : r)
                    if (v != 0) return std::array<int, 3>{x, y, z};
            }
    return std::nullopt;
}

inline long long cocycle_residual_count(const FiniteGroup& g, const GroupAction& action, const Cochain2& c) {
    long long bad = 0;
    for (int x = 0; x < g.order; ++x)
        for (int y = 0; y < g.order; ++y)
            for (int z = 0; z < g.order; ++z) {
                std::vector<Int> r = cocycle_residual_at(g, action, c, x, y, z);
                for (const Int& v : r)
                    if (v != 0) {
                        ++bad;
                        break;
                    }
            }
    return bad;
}

inline bool is_cocycle(const FiniteGroup& g, const GroupAction& action, const Cochain2& c) {
    return !first_cocycle_violation(g, action, c).has_value();
}

}  // namespace symext
