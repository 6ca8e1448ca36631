#pragma once

#include <string>
#include <vector>

#include "symext/bigint.hpp"
#include "symext/error.hpp"
#include "symext/group.hpp"
#include "symext/matrix.hpp"
#include "symext/snf.hpp"

namespace symext {

// Finite abelian coefficient group, always kept in invariant-factor form:
// factors d1 | d2 | ... | dk, all > 1. Elements are tuples (t1,..,tk) with
// ti in [0, di), or flat indices with the first factor most significant.
struct AbelianGroup {
    std::vector<Int> factors;
    Int order = 1;
    std::string name = "C1";

    int k() const { return static_cast<int>(factors.size()); }

    std::vector<Int> tuple_of(Int idx) const {
        std::vector<Int> t(factors.size());
        for (int i = k() - 1; i >= 0; --i) {
            t[i] = mod_floor(idx, factors[i]);
            idx /= factors[i];
        }
        return t;
    }

    Int index_of(const std::vector<Int>& t) const {
        if (static_cast<int>(t.size()) != k()) fail("abelian tuple has wrong length");
        Int idx = 0;
        for (int i = 0; i < k(); ++i) idx = idx * factors[i] + mod_floor(t[i], factors[i]);
        return idx;
    }

    std::vector<Int> reduce(std::vector<Int> t) const {
        for (int i = 0; i < k(); ++i) t[i] = mod_floor(t[i], factors[i]);
        return t;
    }

    std::vector<Int> add(const std::vector<Int>& a, const std::vector<Int>& b) const {
        std::vector<Int> c(factors.size());
        for (int i = 0; i < k(); ++i) c[i] = mod_floor(a[i] + b[i], factors[i]);
        return c;
    }

    std::vector<Int> neg(const std::vector<Int>& a) const {
        std::vector<Int> c(factors.size());
        for (int i = 0; i < k(); ++i) c[i] = mod_floor(-a[i], factors[i]);
        return c;
    }

    Int element_order(const std::vector<Int>& t) const {
        Int n = 1;
        for (int i = 0; i < k(); ++i) {
            Int r = mod_floor(t[i], factors[i]);
            n = int_lcm(n, factors[i] / int_gcd(factors[i], r == 0 ? factors[i] : r));
        }
        return n;
    }

    bool operator==(const AbelianGroup& o) const { return factors == o.factors; }
};

inline std::string abelian_name(const std::vector<Int>& factors) {
    if (factors.empty()) return "C1";
    std::string s;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "x";
        s += "C" + factors[i].str();
    }
    return s;
}

// Canonicalizes any list of cyclic orders into invariant-factor form.
inline AbelianGroup make_abelian(const std::vector<Int>& cyclic_orders) {
    for (const Int& n : cyclic_orders)
        if (n < 1) fail("cyclic order must be at least 1");
    SnfResult s = smith_normal_form_dv(IntMatrix::diagonal(cyclic_orders));
    AbelianGroup h;
    for (int i = 0; i < s.diag_len(); ++i)
        if (s.d.at(i, i) > 1) h.factors.push_back(s.d.at(i, i));
    for (const Int& d : h.factors) h.order *= d;
    h.name = abelian_name(h.factors);
    return h;
}

inline AbelianGroup make_cyclic(const Int& n) {
    if (n < 1) fail("cyclic order must be at least 1");
    return make_abelian({n});
}

// The same group as a multiplication table, for code that only understands
// FiniteGroup. Element indices agree with AbelianGroup::index_of.
inline FiniteGroup finite_group_view(const AbelianGroup& h) {
    Int n = h.order;
    if (n > 4096) fail("abelian group too large to expand into a table");
    int order = static_cast<int>(to_i64(n));
    std::vector<int> table(static_cast<size_t>(order) * order);
    std::vector<std::vector<Int>> tuples(order);
    for (int i = 0; i < order; ++i) tuples[i] = h.tuple_of(i);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            table[static_cast<size_t>(a) * order + b] =
                static_cast<int>(to_i64(h.index_of(h.add(tuples[a], tuples[b]))));
    return make_finite_group(order, std::move(table), h.name, order <= 128);
}

// All automorphisms of h as k x k integer matrices (column j = image of the
// j-th invariant-factor generator, entries reduced mod the row factor).
// Backtracking over generator images with an injectivity prune; refuses to
// run past the size guard or the internal work limit rather than stall.
inline std::vector<IntMatrix> enumerate_automorphisms(const AbelianGroup& h, Int size_guard = 64) {
    if (h.order > size_guard)
        fail("automorphism enumeration guard: group order " + h.order.str() + " exceeds " + size_guard.str());
    const int k = h.k();
    if (k == 0) return {IntMatrix(0, 0)};
    const int n = static_cast<int>(to_i64(h.order));
    std::vector<std::vector<Int>> tuples(n);
    for (int i = 0; i < n; ++i) tuples[i] = h.tuple_of(i);

    // candidate images for generator j: elements killed by factors[j]
    std::vector<std::vector<int>> candidates(k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < n; ++i)
            if (h.element_order(tuples[i]) <= h.factors[j] && h.factors[j] % h.element_order(tuples[i]) == 0)
                candidates[j].push_back(i);

    std::vector<IntMatrix> autos;
    std::vector<int> chosen(k);
    long long work = 0;
    const long long work_limit = 4'000'000;

    auto injective_on_prefix = [&](int depth) {
        // image of the subgroup generated by the first depth+1 generators
        Int sub = 1;
        for (int i = 0; i <= depth; ++i) sub *= h.factors[i];
        long long count = to_i64(sub);
        std::vector<Int> images;
        images.reserve(count);
        std::vector<Int> t(static_cast<size_t>(depth) + 1, Int(0));
        for (;;) {
            std::vector<Int> acc(k, Int(0));
            for (int i = 0; i <= depth; ++i)
                for (int c = 0; c < k; ++c) acc[c] += t[i] * tuples[chosen[i]][c];
            images.push_back(h.index_of(acc));
            ++work;
            int pos = 0;
            while (pos <= depth) {
                t[pos] += 1;
                if (t[pos] < h.factors[pos]) break;
                t[pos] = 0;
                ++pos;
            }
            if (pos > depth) break;
        }
        std::sort(images.begin(), images.end());
        return std::adjacent_find(images.begin(), images.end()) == images.end() &&
               static_cast<long long>(images.size()) == count;
    };

    auto rec = [&](auto&& self, int depth) -> void {
        if (work > work_limit) fail("automorphism enumeration exceeded its work limit");
        if (depth == k) {
            IntMatrix m(k, k);
            for (int j = 0; j < k; ++j)
                for (int i = 0; i < k; ++i) m.at(i, j) = tuples[chosen[j]][i];
            autos.push_back(std::move(m));
            return;
        }
        for (int cand : candidates[depth]) {
            chosen[depth] = cand;
            ++work;
            if (injective_on_prefix(depth)) self(self, depth + 1);
        }
    };
    rec(rec, 0);
    return autos;
}

}  // namespace symext
