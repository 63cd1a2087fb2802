// oracle.hpp : independent brute-force cross-checks.
//
// Everything here deliberately avoids the polytope machinery of the main
// modules: multiplicities come from lattice-point counting under monomial
// staircases, and memberships from exhaustive Caratheodory enumeration.
// Slower and structurally different by design; shares nothing with
// newton/covolume beyond the input types.
#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "lct/newton.hpp"
#include "lct/rational.hpp"

namespace lct {

struct oracle_config {
    unsigned grid_resolution = 64;  // lattice refinement per unit for lct bisection
    unsigned power_cap = 24;        // m used by the colength limit
    rational tolerance = rational(1, 10);  // relative, in (0,1)

    void validate() const {
        if (grid_resolution == 0 || power_cap == 0)
            throw invalid_input("oracle config requires positive resolution and power cap");
        if (tolerance <= 0 || tolerance >= 1)
            throw invalid_input("oracle tolerance must lie in (0,1)");
    }
};

struct rational_interval {
    rational lo = 0;
    rational hi = 0;
};

namespace oracle_detail {

using point = std::vector<long long>;

// keep only domination-minimal points (p is dropped if some q <= p)
inline std::vector<point> dominance_min(std::vector<point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<point> kept;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pts.size() && !dominated; ++j) {
            if (i == j) continue;
            bool le = true;
            for (std::size_t c = 0; c < pts[i].size(); ++c)
                if (pts[j][c] > pts[i][c]) { le = false; break; }
            if (le && pts[j] != pts[i]) dominated = true;
            if (le && pts[j] == pts[i] && j < i) dominated = true;
        }
        if (!dominated) kept.push_back(pts[i]);
    }
    return kept;
}

// lattice points of the 2D staircase complement; gens must be minimal and
// contain a pure power on each axis
inline long long count2(std::vector<point> gens) {
    gens = dominance_min(std::move(gens));
    // sorted by x ascending; minimality makes y strictly descending
    long long total = 0;
    for (std::size_t i = 1; i < gens.size(); ++i)
        total += (gens[i][0] - gens[i - 1][0]) * gens[i - 1][1];
    return total;
}

inline long long count_complement(const std::vector<point>& gens, std::size_t n) {
    if (n == 1) {
        long long m = gens.front()[0];
        for (const auto& g : gens) m = std::min(m, g[0]);
        return m;
    }
    if (n == 2) return count2(gens);
    // n == 3: sweep the first coordinate; the projected staircase only gains
    // generators as v grows, so the slice counts are nonincreasing.
    long long total = 0;
    std::vector<point> sorted = gens;
    std::sort(sorted.begin(), sorted.end());
    long long vmax = 0;
    for (const auto& g : gens) vmax = std::max(vmax, g[0]);
    for (long long v = 0; v < vmax + 1; ++v) {
        std::vector<point> slice;
        for (const auto& g : sorted)
            if (g[0] <= v) slice.push_back({g[1], g[2]});
        const long long cnt = slice.empty() ? 0 : count2(std::move(slice));
        if (cnt == 0 && v > 0) break;
        total += cnt;
    }
    return total;
}

inline std::vector<point> to_integer_points(const singularity_input& input) {
    std::vector<point> pts;
    for (const auto& g : input.generators) {
        point p(input.n);
        for (std::size_t j = 0; j < input.n; ++j) {
            if (!is_integral(g[j])) throw invalid_input("oracle colength requires integer exponents");
            p[j] = numerator(g[j]).convert_to<long long>();
        }
        pts.push_back(std::move(p));
    }
    return pts;
}

// every axis needs a pure-power generator, otherwise the staircase
// complement is infinite
inline bool primary(const std::vector<point>& gens, std::size_t n) {
    for (std::size_t j = 0; j < n; ++j) {
        bool pure_found = false;
        for (const auto& g : gens) {
            bool pure = true;
            for (std::size_t i = 0; i < n; ++i)
                if (i != j && g[i] != 0) { pure = false; break; }
            if (pure) { pure_found = true; break; }
        }
        if (!pure_found) return false;
    }
    return true;
}

// membership of x in conv(gens) + R^n_{>=0} by exhaustive search over
// candidate supports of size <= n+1 (Caratheodory), solving each square-ish
// system exactly. Completely independent of the simplex routine.
inline bool caratheodory_member(const std::vector<exponent_vector>& gens,
                                const std::vector<rational>& x, std::size_t n) {
    // columns: (g_i, 1) for generators, (e_j, 0) for orthant rays
    const std::size_t cols_total = gens.size() + n;
    std::vector<std::vector<rational>> col(cols_total, std::vector<rational>(n + 1, 0));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) col[i][j] = gens[i][j];
        col[i][n] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) col[gens.size() + j][j] = 1;

    std::vector<rational> rhs(n + 1);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = x[j];
    rhs[n] = 1;

    std::vector<std::size_t> pick;
    bool member = false;
    auto try_subset = [&](const std::vector<std::size_t>& subset) {
        if (member) return;
        const std::size_t k = subset.size();
        // augmented (n+1) x (k+1) system in the chosen coefficients
        std::vector<std::vector<rational>> m(n + 1, std::vector<rational>(k + 1));
        for (std::size_t r = 0; r <= n; ++r) {
            for (std::size_t c = 0; c < k; ++c) m[r][c] = col[subset[c]][r];
            m[r][k] = rhs[r];
        }
        std::vector<std::size_t> pivots;
        std::size_t rank = 0;
        for (std::size_t c = 0; c < k && rank <= n; ++c) {
            std::size_t piv = rank;
            while (piv <= n && m[piv][c] == 0) ++piv;
            if (piv > n) return;  // dependent columns; a smaller subset covers this
            std::swap(m[rank], m[piv]);
            for (std::size_t r = 0; r <= n; ++r) {
                if (r == rank || m[r][c] == 0) continue;
                const rational f = m[r][c] / m[rank][c];
                for (std::size_t cc = c; cc <= k; ++cc) m[r][cc] -= f * m[rank][cc];
            }
            pivots.push_back(c);
            ++rank;
        }
        for (std::size_t r = rank; r <= n; ++r)
            if (m[r][k] != 0) return;  // inconsistent
        for (std::size_t i = 0; i < rank; ++i)
            if (m[i][k] / m[i][pivots[i]] < 0) return;  // negative coefficient
        // solution must use at least one generator column (the lambda sum row
        // already forces that: rays alone cannot satisfy it)
        member = true;
    };
    // subsets of size 1..n+1
    std::vector<std::size_t> idx;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        if (member) return;
        if (!idx.empty()) try_subset(idx);
        if (idx.size() == n + 1) return;
        for (std::size_t i = start; i < cols_total; ++i) {
            idx.push_back(i);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    recurse(recurse, 0);
    return member;
}

}  // namespace oracle_detail

// Number of standard monomials of I^m: lattice points x >= 0 not dominated
// by any generator of I^m. Generators of I^m are accumulated by repeated
// sums with domination filtering.
inline integer colength(const singularity_input& input, unsigned m) {
    input.validate();
    if (input.kind != generator_kind::ideal)
        throw invalid_input("colength requires an ideal input");
    if (input.n > 3) throw unsupported_instance("oracle colength supports n <= 3");
    if (m == 0) throw invalid_input("colength requires m >= 1");
    auto gens = oracle_detail::dominance_min(oracle_detail::to_integer_points(input));
    if (!oracle_detail::primary(gens, input.n))
        throw unsupported_instance("colength requires an m-primary ideal");
    std::vector<oracle_detail::point> power = gens;
    for (unsigned step = 2; step <= m; ++step) {
        std::vector<oracle_detail::point> next;
        next.reserve(power.size() * gens.size());
        for (const auto& p : power)
            for (const auto& g : gens) {
                oracle_detail::point s(input.n);
                for (std::size_t j = 0; j < input.n; ++j) s[j] = p[j] + g[j];
                next.push_back(std::move(s));
            }
        power = oracle_detail::dominance_min(std::move(next));
    }
    return integer(oracle_detail::count_complement(power, input.n));
}

// n! * colength(I^m) / m^n at m = power_cap; approaches the Hilbert-Samuel
// multiplicity e(I) and is contracted to land within cfg.tolerance of the
// exact e_n.
inline rational multiplicity_estimate(const singularity_input& input, const oracle_config& cfg) {
    cfg.validate();
    const integer L = colength(input, cfg.power_cap);
    const unsigned n = static_cast<unsigned>(input.n);
    return rational(factorial(n) * L) / rational(pow(integer(cfg.power_cap), n));
}

// Interval of width <= 1/grid_resolution containing t* = 1/c_u, obtained by
// bisecting the diagonal membership (t,...,t) in G over grid rationals.
inline rational_interval lct_estimate(const singularity_input& input, const oracle_config& cfg) {
    input.validate();
    cfg.validate();
    const std::size_t n = input.n;
    // upper bound: the diagonal point at any generator's coordinate sum
    // dominates that generator
    rational t_ub;
    bool first = true;
    for (const auto& g : input.generators) {
        rational s = 0;
        for (const auto& c : g) s += c;
        if (first || s < t_ub) t_ub = s;
        first = false;
    }
    const integer R(cfg.grid_resolution);
    integer hi_k = numerator(t_ub * rational(R)) / denominator(t_ub * rational(R));
    if (rational(hi_k) < t_ub * rational(R)) hi_k += 1;  // ceil

    auto member = [&](const integer& k) {
        const rational t = rational(k) / rational(R);
        const std::vector<rational> diag(n, t);
        return oracle_detail::caratheodory_member(input.generators, diag, n);
    };
    integer lo_k = 0;  // (0,...,0) is never in G for a valid input
    while (hi_k - lo_k > 1) {
        const integer mid = (lo_k + hi_k) / 2;
        if (member(mid)) hi_k = mid;
        else lo_k = mid;
    }
    return {rational(lo_k) / rational(R), rational(hi_k) / rational(R)};
}

}  // namespace lct
