#pragma once

#include <json.hpp>

#include "symext/abelian.hpp"
#include "symext/bigint.hpp"
#include "symext/cochain.hpp"
#include "symext/error.hpp"
#include "symext/group.hpp"
#include "symext/matrix.hpp"

namespace symext {

using Json = nlohmann::ordered_json;

inline long long json_int(const Int& v) { return to_i64(v); }

inline Json json_rational(const Rational& r) {
    return Json{{"num", to_i64(numerator(r))}, {"den", to_i64(denominator(r))}};
}

inline Json json_factors(const std::vector<Int>& factors) {
    Json a = Json::array();
    for (const Int& f : factors) a.push_back(json_int(f));
    return a;
}

inline std::vector<Int> factors_from_json(const Json& a) {
    if (!a.is_array()) fail("expected an array of invariant factors");
    std::vector<Int> out;
    for (const auto& v : a) out.push_back(Int(v.get<long long>()));
    return out;
}

// Cochain tables travel as {"coeffs": [...], "table": [[ [..k..] x n ] x n]}.
inline Json json_cochain(const Cochain2& c) {
    Json table = Json::array();
    for (int x = 0; x < c.n; ++x) {
        Json row = Json::array();
        for (int y = 0; y < c.n; ++y) {
            Json cell = Json::array();
            for (int comp = 0; comp < c.k(); ++comp) cell.push_back(json_int(c.at(x, y, comp)));
            row.push_back(std::move(cell));
        }
        table.push_back(std::move(row));
    }
    return Json{{"coeffs", json_factors(c.coeffs.factors)}, {"table", std::move(table)}};
}

inline Cochain2 cochain_from_json(const FiniteGroup& g, const Json& j) {
    AbelianGroup h = make_abelian(factors_from_json(j.at("coeffs")));
    Cochain2 c = zero_cochain2(g, h);
    const Json& table = j.at("table");
    if (static_cast<int>(table.size()) != g.order) fail("cochain table does not match the group order");
    for (int x = 0; x < g.order; ++x) {
        const Json& row = table.at(x);
        if (static_cast<int>(row.size()) != g.order) fail("cochain table is not square");
        for (int y = 0; y < g.order; ++y) {
            const Json& cell = row.at(y);
            if (static_cast<int>(cell.size()) != c.k()) fail("cochain cell has wrong arity");
            for (int comp = 0; comp < c.k(); ++comp) c.at(x, y, comp) = Int(cell.at(comp).get<long long>());
        }
    }
    c.reduce();
    return c;
}

inline Json json_matrix(const IntMatrix& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows; ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(json_int(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline IntMatrix matrix_from_json(const Json& j) {
    if (!j.is_array()) fail_usage("matrix must be an array of rows");
    const int rows = static_cast<int>(j.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(j.at(0).size());
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(j.at(i).size()) != cols) fail_usage("matrix rows have uneven lengths");
        for (int c = 0; c < cols; ++c) m.at(i, c) = Int(j.at(i).at(c).get<long long>());
    }
    return m;
}

inline Json json_coords(const std::vector<Int>& v) { return json_factors(v); }

inline std::vector<Int> coords_from_json(const Json& a) { return factors_from_json(a); }

}  // namespace symext
