// invariants.hpp : the numerical invariants of a toric singularity.
//
//   nu = e_1   Lelong number: minimal coordinate sum over the generators
//   l          codimension of the zero set: minimum hitting set of supports
//   e_1..e_l   mixed Monge-Ampere masses, via the m-primary regularization
//              u_N = max{u, N log|z|} and exact stabilization in N
//   c_u        log canonical threshold: 1/t* for the exact LP
//              t* = min{ t : (t,...,t) in G }
//
// Weight inputs with rational coefficients are cleared to integers by the
// least common denominator d and the results rescaled by homogeneity
// (c -> c*d, e_k -> e_k / d^k), so the polytope core only ever sees
// integer data.
#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lct/covolume.hpp"
#include "lct/newton.hpp"
#include "lct/rational.hpp"
#include "lct/simplex.hpp"

namespace lct {

struct invariant_set {
    std::size_t n = 0;
    std::size_t l = 0;        // codimension of the unbounded locus, 1..n
    rational lelong = 0;      // nu = e_1
    std::vector<rational> mixed;  // e_1..e_l; e_0 = 1 is implicit, never stored
    rational lct = 0;         // c_u, exactly rational on this class
    integer N_used = 0;       // regularization parameter that stabilized
};

struct invariant_options {
    // 0 means the default cap 2^10 * (max apex coordinate). Exceeding the
    // cap raises an error; stabilization is never silently approximated.
    integer nmax_regularization = 0;
};

inline rational lelong_number(const singularity_input& input) {
    input.validate();
    rational best = 0;
    bool first = true;
    for (const auto& g : input.generators) {
        rational s = 0;
        for (const auto& c : g) s += c;
        if (first || s < best) best = s;
        first = false;
    }
    return best;
}

namespace detail {

inline std::vector<std::uint32_t> support_masks(const singularity_input& input) {
    std::vector<std::uint32_t> masks;
    for (const auto& g : input.generators) {
        std::uint32_t m = 0;
        for (std::size_t j = 0; j < input.n; ++j)
            if (g[j] != 0) m |= (1u << j);
        masks.push_back(m);
    }
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    return masks;
}

// All hitting sets of minimum size, as bitmasks over the coordinates.
inline std::vector<std::uint32_t> minimum_hitting_sets(const std::vector<std::uint32_t>& supports,
                                                       std::size_t n) {
    std::vector<std::uint32_t> best;
    std::size_t best_size = n + 1;
    for (std::uint32_t set = 1; set < (1u << n); ++set) {
        const std::size_t size = static_cast<std::size_t>(__builtin_popcount(set));
        if (size > best_size) continue;
        bool hits_all = true;
        for (const auto s : supports)
            if ((s & set) == 0) { hits_all = false; break; }
        if (!hits_all) continue;
        if (size < best_size) {
            best_size = size;
            best.clear();
        }
        best.push_back(set);
    }
    return best;
}

}  // namespace detail

// l = codim_0 V(I): the zero set is the union of the coordinate subspaces
// missing every generator support, so its codimension is the size of a
// minimum hitting set of the supports.
inline std::size_t codimension(const singularity_input& input) {
    input.validate();
    if (input.n > 31) throw unsupported_instance("codimension supports n <= 31");
    const auto sets = detail::minimum_hitting_sets(detail::support_masks(input), input.n);
    return static_cast<std::size_t>(__builtin_popcount(sets.front()));
}

// u_N = max{u, N log|z|}: toric carrier is the generator list together with
// the axis caps N e_j. The result is m-primary; the list is returned reduced.
inline singularity_input regularize(const singularity_input& input, const integer& N) {
    input.validate();
    if (N < 1) throw invalid_input("regularization parameter must be >= 1");
    std::vector<exponent_vector> gens = input.generators;
    for (std::size_t j = 0; j < input.n; ++j) {
        exponent_vector cap(input.n, 0);
        cap[j] = rational(N);
        gens.push_back(std::move(cap));
    }
    singularity_input out;
    out.n = input.n;
    out.kind = input.kind;
    out.label = input.label;
    out.generators = newton_polyhedron(input.n, std::move(gens)).apexes();
    return out;
}

namespace detail {

// min t >= 0 with (t,...,t) in G, via the exact simplex. Positive whenever
// no apex is the origin.
inline rational diagonal_entry_value(const newton_polyhedron& poly) {
    const std::size_t n = poly.dim();
    const std::size_t k = poly.apexes().size();
    // variables: lambda_1..lambda_k, slack_1..slack_n, t
    std::vector<std::vector<rational>> A(n + 1, std::vector<rational>(k + n + 1, 0));
    std::vector<rational> b(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) A[j][i] = poly.apexes()[i][j];
        A[j][k + j] = 1;
        A[j][k + n] = -1;
    }
    for (std::size_t i = 0; i < k; ++i) A[n][i] = 1;
    b[n] = 1;
    std::vector<rational> cost(k + n + 1, 0);
    cost[k + n] = 1;
    const auto res = solve_lp(A, std::move(b), cost);
    if (res.status != lp_status::optimal)
        throw theorem_violation("diagonal LP must be feasible and bounded on valid inputs");
    return res.objective;
}

// Clears rational weights: returns the least common denominator d and the
// integer-scaled copy of the input.
inline std::pair<integer, singularity_input> clear_denominators(const singularity_input& input) {
    integer d = 1;
    for (const auto& g : input.generators)
        for (const auto& c : g) d = boost::multiprecision::lcm(d, denominator(c));
    singularity_input cleared = input;
    cleared.kind = generator_kind::ideal;
    if (d != 1)
        for (auto& g : cleared.generators)
            for (auto& c : g) c *= rational(d);
    return {d, cleared};
}

// n! * covolume of a*G + b*Delta for one grid cell, on integer apex data.
// Redundant points in the summed apex set are harmless for the covolume
// kernel, so only a cheap domination filter is applied.
inline integer grid_covolume(const std::vector<std::vector<integer>>& apexes, std::size_t n,
                             const integer& a, const integer& b) {
    std::vector<std::vector<integer>> sums;
    if (a == 0 && b == 0) {
        sums.push_back(std::vector<integer>(n, 0));
    } else if (a == 0) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<integer> v(n, 0);
            v[j] = b;
            sums.push_back(std::move(v));
        }
    } else {
        for (const auto& apex : apexes) {
            if (b == 0) {
                std::vector<integer> v(n);
                for (std::size_t j = 0; j < n; ++j) v[j] = a * apex[j];
                sums.push_back(std::move(v));
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<integer> v(n);
                for (std::size_t i = 0; i < n; ++i) v[i] = a * apex[i];
                v[j] += b;
                sums.push_back(std::move(v));
            }
        }
    }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    std::vector<std::vector<integer>> kept;
    for (const auto& p : sums) {
        bool redundant = false;
        for (const auto& q : sums) {
            if (&p == &q || p == q) continue;
            bool dom = true;
            for (std::size_t j = 0; j < n; ++j)
                if (p[j] < q[j]) { dom = false; break; }
            if (dom) { redundant = true; break; }
        }
        if (!redundant) kept.push_back(p);
    }
    return covolume_numerator_checked(kept, n);
}

// Coefficients c_0..c_n of P(a,b) = sum_k binom(n,k) c_k a^k b^{n-k} from the
// (n+1)^2 evaluation grid, by exact elimination. Every grid equation is
// verified against the solved polynomial; a mismatch would contradict the
// polynomiality of the covolume of Minkowski combinations and is reported
// as a defect.
inline std::vector<rational> solve_mixed_polynomial(const std::vector<std::vector<integer>>& grid,
                                                    std::size_t n) {
    const std::size_t unknowns = n + 1;
    std::vector<std::vector<rational>> rows;
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; b <= n; ++b) {
            std::vector<rational> row(unknowns + 1, 0);
            for (std::size_t k = 0; k <= n; ++k) {
                integer coef = binomial(static_cast<unsigned>(n), static_cast<unsigned>(k));
                coef *= pow(integer(a), static_cast<unsigned>(k));
                coef *= pow(integer(b), static_cast<unsigned>(n - k));
                row[k] = rational(coef);
            }
            row[unknowns] = rational(grid[a][b]);
            rows.push_back(std::move(row));
        }
    auto work = rows;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t col = 0; col < unknowns && rank < work.size(); ++col) {
        std::size_t piv = rank;
        while (piv < work.size() && work[piv][col] == 0) ++piv;
        if (piv == work.size()) continue;
        std::swap(work[rank], work[piv]);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (r == rank || work[r][col] == 0) continue;
            const rational f = work[r][col] / work[rank][col];
            for (std::size_t j = col; j <= unknowns; ++j) work[r][j] -= f * work[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    if (rank != unknowns)
        throw theorem_violation("mixed-multiplicity grid system is rank deficient");
    std::vector<rational> c(unknowns, 0);
    for (std::size_t r = 0; r < rank; ++r)
        c[pivot_col[r]] = work[r][unknowns] / work[r][pivot_col[r]];
    for (const auto& row : rows) {
        rational lhs = 0;
        for (std::size_t k = 0; k < unknowns; ++k) lhs += row[k] * c[k];
        if (lhs != row[unknowns])
            throw theorem_violation(
                "covolume grid is not the expected degree-n polynomial; "
                "mixed multiplicities are ill-defined on this input");
    }
    return c;
}

struct stabilized_mixed {
    std::vector<rational> e;  // e_1..e_l of the integer-cleared input
    integer N_used = 0;
};

// e_1(u_N)..e_l(u_N) for one fixed N, read from the (n+1)^2 grid.
inline std::vector<rational> mixed_at_regularization(const singularity_input& cleared,
                                                     std::size_t l, const rational& nu,
                                                     const integer& N) {
    const std::size_t n = cleared.n;
    const newton_polyhedron reg = build_polyhedron(regularize(cleared, N));
    std::vector<std::vector<integer>> apexes(reg.apexes().size(), std::vector<integer>(n));
    for (std::size_t i = 0; i < reg.apexes().size(); ++i)
        for (std::size_t j = 0; j < n; ++j) apexes[i][j] = numerator(reg.apexes()[i][j]);
    std::vector<std::vector<integer>> grid(n + 1, std::vector<integer>(n + 1));
    for (std::size_t a = 0; a <= n; ++a)
        for (std::size_t b = 0; b <= n; ++b)
            grid[a][b] = grid_covolume(apexes, n, integer(a), integer(b));
    std::vector<rational> c = solve_mixed_polynomial(grid, n);
    if (c[0] != 1)
        throw theorem_violation("grid polynomial has e_0 != 1");
    if (c[1] != std::min(nu, rational(N)))
        throw theorem_violation("grid polynomial e_1 disagrees with the Lelong number");
    return std::vector<rational>(c.begin() + 1, c.begin() + 1 + static_cast<std::ptrdiff_t>(l));
}

// e_k(u_N) for k <= l, doubling N until two consecutive values of N agree
// exactly.
inline stabilized_mixed stabilize_mixed(const singularity_input& cleared, std::size_t l,
                                        const rational& nu, const integer& nmax_override) {
    const newton_polyhedron base = build_polyhedron(cleared);
    integer nmax = nmax_override;
    if (nmax <= 0) nmax = integer(1024) * numerator(base.max_coordinate());
    integer N0 = numerator(base.max_coordinate_sum());
    if (N0 < 1) N0 = 1;

    std::vector<rational> prev = mixed_at_regularization(cleared, l, nu, N0);
    for (integer N = 2 * N0;; N *= 2) {
        if (N > nmax)
            throw unsupported_instance(
                "mixed multiplicities did not stabilize for N <= " + nmax.str() +
                " (raise --nmax-regularization)");
        std::vector<rational> cur = mixed_at_regularization(cleared, l, nu, N);
        if (cur == prev) return {cur, N};
        prev = std::move(cur);
    }
}

}  // namespace detail

// Exact log canonical threshold c_u = 1/t*, rescaled by homogeneity for
// rational weight inputs.
inline rational log_canonical_threshold(const singularity_input& input) {
    input.validate();
    const auto [d, cleared] = detail::clear_denominators(input);
    const rational t = detail::diagonal_entry_value(build_polyhedron(cleared));
    if (t <= 0) throw theorem_violation("diagonal LP returned a nonpositive optimum");
    return rational(d) / t;
}

// The full exact invariant bundle. Mixed multiplicities are defined through
// the m-primary regularization with exact stabilization in N; the run fails
// loudly if the values do not stabilize below the cap.
inline invariant_set compute_invariants(const singularity_input& input,
                                        const invariant_options& opts = {}) {
    input.validate();
    if (input.n > 4)
        throw unsupported_instance("exact invariants support n <= 4");
    const auto [d, cleared] = detail::clear_denominators(input);
    const rational nu_int = lelong_number(cleared);
    const std::size_t l = codimension(cleared);
    const rational lct_int = rational(1) / detail::diagonal_entry_value(build_polyhedron(cleared));
    const auto mixed = detail::stabilize_mixed(cleared, l, nu_int, opts.nmax_regularization);

    invariant_set inv;
    inv.n = input.n;
    inv.l = l;
    inv.lelong = nu_int / rational(d);
    inv.lct = lct_int * rational(d);
    inv.N_used = mixed.N_used;
    inv.mixed.reserve(l);
    for (std::size_t k = 1; k <= l; ++k)
        inv.mixed.push_back(mixed.e[k - 1] / rational(pow(d, static_cast<unsigned>(k))));

    if (inv.mixed.front() != inv.lelong)
        throw theorem_violation("e_1 disagrees with the Lelong number after rescaling");
    for (std::size_t k = 1; k <= l; ++k) {
        if (inv.mixed[k - 1] <= 0)
            throw theorem_violation("e_k must be positive for k <= l");
        if (inv.mixed[k - 1] < pow(inv.lelong, static_cast<unsigned>(k)))
            throw theorem_violation("e_k >= e_1^k violated");
    }
    return inv;
}

// e_1..e_l alone; runs the same pipeline as compute_invariants.
inline std::vector<rational> mixed_multiplicities(const singularity_input& input,
                                                  const invariant_options& opts = {}) {
    return compute_invariants(input, opts).mixed;
}

}  // namespace lct
