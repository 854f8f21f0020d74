#pragma once

// Test-side reference implementations. They share no code with the library
// beyond the input containers: arithmetic, rank and nullspaces are redone
// here from scratch over Gaussian rationals, and extendibility is decided by
// enumerating every assignment of states to parties.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "upbforge/product_basis.hpp"

namespace oracle {

struct GQ {
    mpq_class re, im;
};

inline GQ g_mul(const GQ& a, const GQ& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline GQ g_sub(const GQ& a, const GQ& b) { return {a.re - b.re, a.im - b.im}; }
inline GQ g_add(const GQ& a, const GQ& b) { return {a.re + b.re, a.im + b.im}; }
inline GQ g_conj(const GQ& a) { return {a.re, -a.im}; }
inline bool g_zero(const GQ& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }
inline GQ g_inv(const GQ& a) {
    const mpq_class n = a.re * a.re + a.im * a.im;
    return {a.re / n, -a.im / n};
}

using Vec = std::vector<GQ>;

inline Vec from_lib(const upbforge::ExactVector& v) {
    Vec out;
    for (const auto& z : v.components()) out.push_back({z.real(), z.imag()});
    return out;
}

/// <a|b> with the first argument conjugated.
inline GQ braket(const Vec& a, const Vec& b) {
    GQ s{0, 0};
    for (std::size_t i = 0; i < a.size(); ++i) s = g_add(s, g_mul(g_conj(a[i]), b[i]));
    return s;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && g_zero(rows[p][c])) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const GQ inv = g_inv(rows[r][c]);
        for (auto& x : rows[r]) x = g_mul(x, inv);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || g_zero(rows[i][c])) continue;
            const GQ f = rows[i][c];
            for (std::size_t j = 0; j < cols; ++j) rows[i][j] = g_sub(rows[i][j], g_mul(f, rows[r][j]));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(std::vector<Vec> rows, std::size_t cols) { return rref(rows, cols).size(); }

/// Some nonzero x with <v|x> = 0 for every v, if one exists.
inline std::optional<Vec> orthogonal_vector(const std::vector<Vec>& vs, std::size_t dim) {
    std::vector<Vec> rows;
    for (const auto& v : vs) {
        Vec r;
        for (const auto& z : v) r.push_back(g_conj(z));
        rows.push_back(r);
    }
    const auto pivots = rref(rows, dim);
    if (pivots.size() == dim) return std::nullopt;
    std::vector<bool> is_pivot(dim, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::size_t free = 0;
    while (is_pivot[free]) ++free;
    Vec x(dim, GQ{0, 0});
    x[free] = {1, 0};
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = {-rows[i][free].re, -rows[i][free].im};
    return x;
}

struct Verdict {
    bool orthogonal = false;
    bool is_upb = false;
    /// A product vector orthogonal to every state, when one exists.
    std::optional<std::vector<Vec>> witness;
};

/// Decides UPB status by trying every map from states to parties: the set
/// is extendible iff for some map each party's assigned local vectors fail
/// to span its space.
inline Verdict brute_force(const upbforge::ExactSet& set) {
    const int n = set.parties();
    const int k = set.size();
    std::vector<std::vector<Vec>> local(static_cast<std::size_t>(k));
    for (int i = 1; i <= k; ++i) {
        for (int m = 1; m <= n; ++m) local[i - 1].push_back(from_lib(set.local(i, m)));
    }
    Verdict out;
    out.orthogonal = true;
    for (int i = 0; i < k && out.orthogonal; ++i) {
        for (int j = i + 1; j < k; ++j) {
            bool some_zero = false;
            for (int m = 0; m < n; ++m) some_zero = some_zero || g_zero(braket(local[i][m], local[j][m]));
            if (!some_zero) {
                out.orthogonal = false;
                break;
            }
        }
    }
    if (!out.orthogonal) return out;

    std::vector<int> assign(static_cast<std::size_t>(k), 0);
    while (true) {
        std::vector<std::optional<Vec>> parts;
        bool ok = true;
        for (int m = 0; m < n && ok; ++m) {
            std::vector<Vec> vs;
            for (int i = 0; i < k; ++i) {
                if (assign[i] == m) vs.push_back(local[i][m]);
            }
            auto x = orthogonal_vector(vs, static_cast<std::size_t>(set.dim(m + 1)));
            ok = x.has_value();
            parts.push_back(std::move(x));
        }
        if (ok) {
            std::vector<Vec> w;
            for (auto& p : parts) w.push_back(std::move(*p));
            out.witness = std::move(w);
            break;
        }
        int pos = 0;
        while (pos < k && ++assign[pos] == n) assign[pos++] = 0;
        if (pos == k) break;
    }
    out.is_upb = !out.witness && set.total_dim() > k;
    return out;
}

/// Checks <w|psi_i> = 0 for every state with the oracle's own arithmetic.
inline bool witness_orthogonal(const upbforge::ExactSet& set, const std::vector<Vec>& w) {
    for (int i = 1; i <= set.size(); ++i) {
        bool zero = false;
        for (int m = 1; m <= set.parties(); ++m) {
            zero = zero || g_zero(braket(w[m - 1], from_lib(set.local(i, m))));
        }
        if (!zero) return false;
    }
    for (const auto& v : w) {
        bool nonzero = false;
        for (const auto& z : v) nonzero = nonzero || !g_zero(z);
        if (!nonzero) return false;
    }
    return true;
}

/// Random exact product-state sets. Local vectors come from a small palette
/// rich in orthogonal pairs; most sets are built mutually orthogonal by
/// rejection, a few are left arbitrary.
class SetGenerator {
public:
    explicit SetGenerator(std::uint64_t seed) : rng_(seed) {}

    upbforge::ExactSet next() {
        // Random orthogonal sets are almost never unextendible, so a known UPB
        // is planted now and then, shuffled and sometimes missing a state.
        if (std::uniform_int_distribution<int>(0, 9)(rng_) == 0) return planted();
        std::uniform_int_distribution<int> parties_dist(2, 3);
        std::uniform_int_distribution<int> dim_dist(2, 3);
        const int n = parties_dist(rng_);
        std::vector<int> dims;
        int total = 1;
        for (int m = 0; m < n; ++m) {
            dims.push_back(dim_dist(rng_));
            total *= dims.back();
        }
        // Half of the draws aim at sizes between the smallest possible UPB
        // and D - 1, where UPBs live.
        int lo = 1;
        for (int d : dims) lo += d - 1;
        const int hi = std::min(8, total);
        const bool large = lo <= std::min(hi, total - 1) && std::uniform_int_distribution<int>(0, 1)(rng_) == 1;
        const int k = large ? std::uniform_int_distribution<int>(lo, std::min(hi, total - 1))(rng_)
                            : std::uniform_int_distribution<int>(1, hi)(rng_);
        const bool orthogonal = std::uniform_int_distribution<int>(0, 9)(rng_) != 0;

        std::vector<upbforge::ProductState<upbforge::QComplex>> states;
        for (int attempt = 0; static_cast<int>(states.size()) < k && attempt < 4000; ++attempt) {
            upbforge::ProductState<upbforge::QComplex> st;
            for (int d : dims) st.push_back(pick(d));
            if (!orthogonal || orthogonal_to_all(st, states)) states.push_back(std::move(st));
        }
        if (states.empty()) {
            upbforge::ProductState<upbforge::QComplex> st;
            for (int d : dims) st.push_back(pick(d));
            states.push_back(std::move(st));
        }
        return upbforge::ExactSet(dims, std::move(states));
    }

private:
    static upbforge::ExactVector vec(std::vector<upbforge::QComplex> comps) {
        upbforge::ExactVector v(comps.size());
        for (std::size_t i = 0; i < comps.size(); ++i) v[i] = comps[i];
        return v;
    }

    upbforge::ExactSet planted() {
        std::vector<int> dims;
        std::vector<upbforge::ProductState<upbforge::QComplex>> states;
        if (std::uniform_int_distribution<int>(0, 1)(rng_) == 0) {
            dims = {3, 3};
            const auto e0 = vec({1, 0, 0}), e1 = vec({0, 1, 0}), e2 = vec({0, 0, 1});
            const auto a = vec({1, -1, 0}), b = vec({0, 1, -1}), s = vec({1, 1, 1});
            states = {{e0, a}, {a, e2}, {e2, b}, {b, e0}, {s, s}};
        } else {
            dims = {2, 2, 2};
            const auto z = vec({1, 0}), o = vec({0, 1}), p = vec({1, 1}), m = vec({1, -1});
            states = {{z, o, p}, {o, p, z}, {p, z, o}, {m, m, m}};
        }
        std::shuffle(states.begin(), states.end(), rng_);
        if (std::uniform_int_distribution<int>(0, 2)(rng_) == 0) states.pop_back();
        return upbforge::ExactSet(dims, std::move(states));
    }

    upbforge::ExactVector pick(int d) {
        using upbforge::QComplex;
        static const std::vector<std::vector<QComplex>> c2 = {
            {1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, -1}, {1, QComplex(0, 1)}, {1, QComplex(0, -1)},
        };
        static const std::vector<std::vector<QComplex>> c3 = {
            {1, 0, 0}, {0, 1, 0}, {0, 0, 1},  {1, 1, 0},  {1, -1, 0}, {0, 1, 1},  {0, 1, -1},
            {1, 0, 1}, {1, 0, -1}, {1, 1, 1}, {1, -2, 1}, {2, -1, 0}, {1, 1, -2}, {1, QComplex(0, 1), 0},
        };
        const auto& pal = d == 2 ? c2 : c3;
        const auto& comps = pal[std::uniform_int_distribution<std::size_t>(0, pal.size() - 1)(rng_)];
        upbforge::ExactVector v(comps.size());
        for (std::size_t i = 0; i < comps.size(); ++i) v[i] = comps[i];
        return v;
    }

    static bool orthogonal_to_all(const upbforge::ProductState<upbforge::QComplex>& st,
                                  const std::vector<upbforge::ProductState<upbforge::QComplex>>& states) {
        for (const auto& other : states) {
            bool zero = false;
            for (std::size_t m = 0; m < st.size(); ++m) zero = zero || g_zero(braket(from_lib(st[m]), from_lib(other[m])));
            if (!zero) return false;
        }
        return true;
    }

    std::mt19937_64 rng_;
};

// Bound formulas restated by search rather than closed-form division.

inline std::int64_t total(const std::vector<int>& dims) {
    std::int64_t t = 1;
    for (int d : dims) t *= d;
    return t;
}

/// Smallest integer n with (N-1) n >= sum_m D/d_m - 1.
inline std::int64_t new_bound(const std::vector<int>& dims) {
    const std::int64_t n1 = static_cast<std::int64_t>(dims.size()) - 1;
    std::int64_t s = -1;
    for (int d : dims) s += total(dims) / d;
    std::int64_t n = 0;
    while (n1 * n < s) ++n;
    return n;
}

/// D/d_max + floor((D/d_max - 2)/(N-1)) + 1, floor found by search.
inline std::int64_t demianowicz(const std::vector<int>& dims) {
    int dmax = 0;
    for (int d : dims) dmax = std::max(dmax, d);
    const std::int64_t q = total(dims) / dmax;
    const std::int64_t n1 = static_cast<std::int64_t>(dims.size()) - 1;
    std::int64_t f = -1;
    while (n1 * (f + 1) <= q - 2) ++f;
    return q + f + 1;
}

/// d_1 + D/d_1, minus one unless both terms are even.
inline std::int64_t trivial(const std::vector<int>& dims) {
    int dmin = dims.front();
    for (int d : dims) dmin = std::min(dmin, d);
    const std::int64_t rest = total(dims) / dmin;
    return (dmin % 2 == 0 && rest % 2 == 0) ? dmin + rest : dmin + rest - 1;
}

}  // namespace oracle
