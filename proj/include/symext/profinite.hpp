#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symext/cohomology.hpp"
#include "symext/json_io.hpp"

// Towers of cyclic p-group quotients with reduction maps, and the transport
// of symmetric cohomology along inflation. This is a finite, exact probe of
// the inverse-limit behaviour: every level is computed by the same oracle as
// the standalone pairs, and the maps between levels are the honest induced
// maps, not formulas.

namespace symext {

struct Tower {
    long long p = 0;
    std::vector<FiniteGroup> levels;  // levels[i] is the cyclic group of order p^(i+1)
    // maps[j][i] for i <= j: reduction mod p^(i+1), a surjection levels[j] -> levels[i]
    std::vector<std::vector<GroupHom>> maps;

    int height() const { return static_cast<int>(levels.size()); }
};

inline Tower build_cyclic_tower(long long p, int k_max, long long size_guard = 16) {
    if (p < 2) fail_usage("tower prime must be at least 2, got " + std::to_string(p));
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) fail_usage("tower base " + std::to_string(p) + " is not prime");
    if (k_max < 1) fail_usage("tower needs at least one level");
    long long top = 1;
    for (int i = 0; i < k_max; ++i) {
        top *= p;
        if (top > size_guard)
            fail("tower level of order " + std::to_string(top) + " exceeds the size guard " +
                 std::to_string(size_guard));
    }

    Tower t;
    t.p = p;
    std::vector<long long> orders;
    long long n = 1;
    for (int k = 1; k <= k_max; ++k) {
        n *= p;
        orders.push_back(n);
        t.levels.push_back(finite_group_view(make_cyclic(n)));
    }
    t.maps.resize(k_max);
    for (int j = 0; j < k_max; ++j) {
        t.maps[j].resize(j + 1);
        for (int i = 0; i <= j; ++i) {
            std::vector<int> m(orders[j]);
            for (long long x = 0; x < orders[j]; ++x)
                m[static_cast<size_t>(x)] = static_cast<int>(x % orders[i]);
            GroupHom q = make_homomorphism(t.levels[j], t.levels[i], std::move(m));
            if (!is_surjective_map(q.map, t.levels[i].order)) fail("tower reduction is not surjective");
            t.maps[j][i] = std::move(q);
        }
    }
    // q_{ac} = q_{ab} . q_{bc} elementwise, for every a <= b <= c
    for (int c = 0; c < k_max; ++c)
        for (int b = 0; b <= c; ++b)
            for (int a = 0; a <= b; ++a)
                for (int x = 0; x < t.levels[c].order; ++x)
                    if (t.maps[c][a](x) != t.maps[b][a](t.maps[c][b](x)))
                        fail("tower reduction maps do not compose coherently");
    return t;
}

// Induced map on symmetric cohomology, from the level with fewer elements
// into the bigger one. Column s holds the coordinates, in the big level's
// H2_ts, of the inflation of the small level's generator s.
struct TowerMap {
    int from_k = 0;  // 1-based level index (group of order p^from_k)
    int to_k = 0;
    IntMatrix matrix;
};

struct TowerReport {
    long long p = 0;
    AbelianGroup h;
    std::vector<SymmetricCohomology> levels;
    std::vector<TowerMap> maps;  // all pairs from_k < to_k, lexicographic
    bool stabilized = false;
    std::vector<Int> limit_factors;  // meaningful only when stabilized
    std::string limit;               // factor string, or "inconclusive at k_max"
    std::string direction_note;
};

namespace detail {

inline std::vector<Int> reduce_coords(std::vector<Int> v, const std::vector<Int>& factors) {
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] %= factors[i];
        if (v[i] < 0) v[i] += factors[i];
    }
    return v;
}

inline IntMatrix reduce_matrix(IntMatrix m, const std::vector<Int>& row_factors) {
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            m.at(i, j) %= row_factors[static_cast<size_t>(i)];
            if (m.at(i, j) < 0) m.at(i, j) += row_factors[static_cast<size_t>(i)];
        }
    return m;
}

// The modules here are finite products of Z_f, so "isomorphism" is decidable
// by enumerating the image: same invariant factors plus surjectivity.
inline bool induced_map_is_iso(const IntMatrix& m, const std::vector<Int>& src_factors,
                               const std::vector<Int>& dst_factors) {
    if (src_factors != dst_factors) return false;
    Int order = 1;
    for (const Int& f : dst_factors) order *= f;
    std::set<std::vector<Int>> image;
    std::vector<Int> x(src_factors.size(), 0);
    while (true) {
        std::vector<Int> y(static_cast<size_t>(m.rows), 0);
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) y[static_cast<size_t>(r)] += m.at(r, c) * x[static_cast<size_t>(c)];
        image.insert(reduce_coords(std::move(y), dst_factors));
        size_t pos = 0;
        while (pos < x.size()) {
            if (++x[pos] < src_factors[pos]) break;
            x[pos] = 0;
            ++pos;
        }
        if (pos == x.size()) break;
    }
    return Int(image.size()) == order;
}

}  // namespace detail

inline TowerReport tower_cohomology_system(const Tower& t, const AbelianGroup& h, Int size_guard = 24) {
    const int L = t.height();
    TowerReport rep;
    rep.p = t.p;
    rep.h = h;

    std::vector<GroupAction> acts;
    acts.reserve(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) {
        acts.push_back(trivial_action(t.levels[static_cast<size_t>(i)], h));
        rep.levels.push_back(compute_h2_ts(t.levels[static_cast<size_t>(i)], h, acts.back(), size_guard));
    }

    for (int i = 0; i < L; ++i)
        for (int j = i + 1; j < L; ++j) {
            const GroupHom& q = t.maps[static_cast<size_t>(j)][static_cast<size_t>(i)];
            const SymmetricCohomology& small = rep.levels[static_cast<size_t>(i)];
            const SymmetricCohomology& big = rep.levels[static_cast<size_t>(j)];
            IntMatrix m(big.rank(), small.rank());
            for (int s = 0; s < small.rank(); ++s) {
                Cochain2 lifted = inflate_cochain(t.levels[static_cast<size_t>(j)], q,
                                                  small.generators[static_cast<size_t>(s)]);
                if (!is_symmetric(lifted)) fail("inflation lost symmetry of a generator");
                if (first_cocycle_violation(t.levels[static_cast<size_t>(j)], acts[static_cast<size_t>(j)], lifted))
                    fail("inflation of a cocycle is not a cocycle");
                auto coords = big.class_of(lifted);
                if (!coords) fail("inflated symmetric class fell outside the symmetric subgroup");
                for (int r = 0; r < big.rank(); ++r) m.at(r, s) = (*coords)[static_cast<size_t>(r)];
            }
            rep.maps.push_back(TowerMap{i + 1, j + 1, std::move(m)});

            // coboundaries must die in cohomology after inflation; the unit
            // 1-cochains span C^1, so checking them checks all of B^2
            const FiniteGroup& gs = t.levels[static_cast<size_t>(i)];
            for (int a = 1; a < gs.order; ++a)
                for (int comp = 0; comp < h.k(); ++comp) {
                    std::vector<Int> f(static_cast<size_t>(gs.order) * h.k(), 0);
                    f[static_cast<size_t>(a) * h.k() + comp] = 1;
                    Cochain2 cb = coboundary(gs, acts[static_cast<size_t>(i)], f);
                    Cochain2 lifted = inflate_cochain(t.levels[static_cast<size_t>(j)], q, cb);
                    std::vector<Int> cls = big.h2.class_of(lifted);
                    for (const Int& v : cls)
                        if (v != 0) fail("an inflated coboundary landed in a nonzero class");
                }
        }

    auto map_at = [&](int from_k, int to_k) -> const IntMatrix& {
        for (const TowerMap& m : rep.maps)
            if (m.from_k == from_k && m.to_k == to_k) return m.matrix;
        fail("missing induced map in tower report");
    };

    // functoriality at the cochain level and coherence of the induced maps
    for (int a = 0; a < L; ++a)
        for (int b = a + 1; b < L; ++b)
            for (int c = b + 1; c < L; ++c) {
                const SymmetricCohomology& base = rep.levels[static_cast<size_t>(a)];
                for (const Cochain2& gen : base.generators) {
                    Cochain2 step =
                        inflate_cochain(t.levels[static_cast<size_t>(b)], t.maps[static_cast<size_t>(b)][static_cast<size_t>(a)], gen);
                    Cochain2 via =
                        inflate_cochain(t.levels[static_cast<size_t>(c)], t.maps[static_cast<size_t>(c)][static_cast<size_t>(b)], step);
                    Cochain2 direct =
                        inflate_cochain(t.levels[static_cast<size_t>(c)], t.maps[static_cast<size_t>(c)][static_cast<size_t>(a)], gen);
                    if (!(via.values == direct.values)) fail("inflation is not functorial on the tower");
                }
                const std::vector<Int>& ff = rep.levels[static_cast<size_t>(c)].factors;
                IntMatrix composed = detail::reduce_matrix(mat_mul(map_at(b + 1, c + 1), map_at(a + 1, b + 1)), ff);
                IntMatrix direct = detail::reduce_matrix(map_at(a + 1, c + 1), ff);
                if (!(composed == direct)) fail("induced maps do not compose coherently");
            }

    if (L == 1) {
        rep.stabilized = true;  // nothing left to compare against
        rep.limit_factors = rep.levels[0].factors;
    } else {
        const SymmetricCohomology& prev = rep.levels[static_cast<size_t>(L - 2)];
        const SymmetricCohomology& last = rep.levels[static_cast<size_t>(L - 1)];
        rep.stabilized = prev.factors == last.factors &&
                         detail::induced_map_is_iso(map_at(L - 1, L), prev.factors, last.factors);
        if (rep.stabilized) rep.limit_factors = last.factors;
    }
    if (rep.stabilized) {
        std::string s = "[";
        for (size_t i = 0; i < rep.limit_factors.size(); ++i) {
            if (i) s += ",";
            s += rep.limit_factors[i].str();
        }
        rep.limit = s + "]";
    } else {
        rep.limit = "inconclusive at k_max";
    }
    rep.direction_note =
        "inflation maps form a directed system indexed upward by k; the inverse-limit "
        "comparison reads against this direction, so the tower reports the directed "
        "system as computed and does not resolve the discrepancy";
    return rep;
}

inline Json json_tower_report(const TowerReport& r) {
    Json j;
    j["p"] = r.p;
    j["k_max"] = static_cast<int>(r.levels.size());
    j["coefficients"] = r.h.name;
    j["levels"] = Json::array();
    for (size_t i = 0; i < r.levels.size(); ++i) {
        const SymmetricCohomology& lv = r.levels[i];
        Json e;
        e["k"] = static_cast<int>(i + 1);
        e["group"] = lv.h2.g.name;
        e["order"] = lv.h2.g.order;
        e["h2_factors"] = json_factors(lv.h2.factors);
        e["h2ts_factors"] = json_factors(lv.factors);
        j["levels"].push_back(std::move(e));
    }
    j["inflation_maps"] = Json::array();
    for (const TowerMap& m : r.maps) {
        Json e;
        e["from_level"] = m.from_k;
        e["to_level"] = m.to_k;
        e["matrix"] = json_matrix(m.matrix);
        j["inflation_maps"].push_back(std::move(e));
    }
    j["stabilized"] = r.stabilized;
    if (r.stabilized)
        j["limit"] = json_factors(r.limit_factors);
    else
        j["limit"] = r.limit;
    j["direction_note"] = r.direction_note;
    return j;
}

}  // namespace symext
