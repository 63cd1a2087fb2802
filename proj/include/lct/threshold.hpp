// threshold.hpp : the bound ladder c >= E_k >= F_k and the equality test.
//
// E_k = sum_{j<=k} e_{j-1}/e_j is rational and compared directly. F_k =
// k * e_k^{-1/k} is irrational in general and is never evaluated as a root:
// every comparison against F_k uses the equivalent k-th-power form
//     c >= F_k  <=>  c^k e_k >= k^k,
// so equality detection is exact. A failed inequality is not a result, it
// is a defect: the functions below throw theorem_violation.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lct/invariants.hpp"
#include "lct/newton.hpp"
#include "lct/rational.hpp"

namespace lct {

struct bound_verdict {
    std::size_t k = 0;
    bool c_ge_E = false;
    bool E_equal = false;  // c == E_k
    bool c_ge_F = false;
    bool F_equal = false;  // c == F_k, certified by c^k e_k == k^k
};

// Witness for c = F_l: G equals s * conv{e_j : j in J} + R^n_{>=0}.
// J holds 0-based coordinate indices; |J| = l and s = e_1.
struct equality_structure {
    std::vector<std::size_t> J;
    rational s = 0;

    bool operator==(const equality_structure& other) const {
        return J == other.J && s == other.s;
    }
};

struct threshold_report {
    invariant_set invariants;
    std::vector<rational> E;                           // E_1..E_l
    std::vector<std::pair<std::size_t, rational>> F;   // F_k kept exact as (k, e_k)
    std::vector<bound_verdict> verdicts;
    std::optional<equality_structure> equality;
    std::vector<std::string> notes;
};

namespace detail {

// sign of c - F_k via the k-th power form: +1, 0, -1
inline int compare_c_with_F(const rational& c, std::size_t k, const rational& e_k) {
    const rational lhs = pow(c, static_cast<unsigned>(k)) * e_k;
    const rational rhs = rational(pow(integer(k), static_cast<unsigned>(k)));
    if (lhs > rhs) return 1;
    if (lhs < rhs) return -1;
    return 0;
}

}  // namespace detail

// Evaluates E_1..E_l and certifies every bound of the ladder. All verdicts
// must come out true; a false one fails the run.
inline threshold_report bound_ladder(const invariant_set& inv) {
    if (inv.lelong <= 0) throw invalid_input("bound ladder requires e_1 > 0");
    threshold_report rep;
    rep.invariants = inv;
    rational E = 0;
    rational prev_e = 1;  // e_0 = 1
    for (std::size_t k = 1; k <= inv.l; ++k) {
        const rational& e_k = inv.mixed[k - 1];
        E += prev_e / e_k;
        prev_e = e_k;
        rep.E.push_back(E);
        rep.F.emplace_back(k, e_k);

        bound_verdict v;
        v.k = k;
        v.c_ge_E = inv.lct >= E;
        v.E_equal = inv.lct == E;
        const int cf = detail::compare_c_with_F(inv.lct, k, e_k);
        v.c_ge_F = cf >= 0;
        v.F_equal = cf == 0;
        rep.verdicts.push_back(v);

        if (!v.c_ge_E)
            throw theorem_violation("c >= E_" + std::to_string(k) + " failed");
        if (!v.c_ge_F)
            throw theorem_violation("c >= F_" + std::to_string(k) + " failed");
        // AM-GM step: E_k >= F_k, certified in the same k-th power form.
        if (pow(E, static_cast<unsigned>(k)) * e_k <
            rational(pow(integer(k), static_cast<unsigned>(k))))
            throw theorem_violation("E_" + std::to_string(k) + " >= F_" +
                                    std::to_string(k) + " failed");
    }
    rep.notes.push_back("e_k computed by exact stabilization in N (operational rule), N_used = " +
                        inv.N_used.str());
    rep.notes.push_back("asymptotics not machine-checked");
    return rep;
}

// Decides c = F_l exactly and, when equality holds, returns and verifies the
// structure witness (J, s): J the unique minimum hitting set, s = e_1, with
//   - e_k = e_1^k for all k <= l,
//   - every generator a satisfying sum_{j in J} a_j >= s,
//   - G equal to s * Delta_J + R^n_{>=0} apex by apex.
// Also certifies that c = F_k is impossible for k < l. Any inconsistency
// between the equality verdict and the structure is a defect.
inline std::optional<equality_structure> equality_test(const singularity_input& input,
                                                       const invariant_set& inv) {
    input.validate();
    for (std::size_t k = 1; k < inv.l; ++k) {
        const int cf = detail::compare_c_with_F(inv.lct, k, inv.mixed[k - 1]);
        if (cf < 0) throw theorem_violation("c >= F_" + std::to_string(k) + " failed");
        if (cf == 0)
            throw theorem_violation("c = F_k fired for k = " + std::to_string(k) +
                                    " < l = " + std::to_string(inv.l));
    }
    const int cf_l = detail::compare_c_with_F(inv.lct, inv.l, inv.mixed[inv.l - 1]);
    if (cf_l < 0) throw theorem_violation("c >= F_l failed");
    if (cf_l > 0) return std::nullopt;

    // c = F_l: the equality characterization must now hold in full.
    const auto hitting = detail::minimum_hitting_sets(detail::support_masks(input), input.n);
    if (hitting.size() != 1)
        throw theorem_violation("equality fired but the minimum hitting set is not unique");
    if (static_cast<std::size_t>(__builtin_popcount(hitting.front())) != inv.l)
        throw theorem_violation("equality fired but |J| != l");

    equality_structure w;
    for (std::size_t j = 0; j < input.n; ++j)
        if (hitting.front() & (1u << j)) w.J.push_back(j);
    w.s = inv.lelong;

    if (input.kind == generator_kind::ideal && !is_integral(w.s))
        throw theorem_violation("equality fired on an ideal but s is not an integer");
    for (std::size_t k = 1; k <= inv.l; ++k)
        if (inv.mixed[k - 1] != pow(inv.lelong, static_cast<unsigned>(k)))
            throw theorem_violation("equality fired but e_k != e_1^k for k = " +
                                    std::to_string(k));
    for (const auto& g : input.generators) {
        rational s_J = 0;
        for (const auto j : w.J) s_J += g[j];
        if (s_J < w.s)
            throw theorem_violation("equality fired but a generator falls below the witness face");
    }
    std::vector<exponent_vector> corners;
    for (const auto j : w.J) {
        exponent_vector corner(input.n, 0);
        corner[j] = w.s;
        corners.push_back(std::move(corner));
    }
    if (!(build_polyhedron(input) == newton_polyhedron(input.n, std::move(corners))))
        throw theorem_violation("equality fired but G != s*Delta_J + orthant");
    return w;
}

// Structure detection straight from the polyhedron, independent of the lct:
// does G(I) equal s * Delta_J + R^n_{>=0} for a coordinate set J and an
// integer s? Returns the witness or nothing.
inline std::optional<equality_structure> closure_power_test(const singularity_input& input) {
    input.validate();
    if (input.kind != generator_kind::ideal)
        throw invalid_input("closure_power_test requires an ideal input");
    const newton_polyhedron poly = build_polyhedron(input);

    // Only one J can work: the union of the apex supports.
    equality_structure w;
    for (std::size_t j = 0; j < input.n; ++j) {
        for (const auto& a : poly.apexes())
            if (a[j] != 0) { w.J.push_back(j); break; }
    }
    rational s = 0;
    bool first = true;
    for (const auto& a : poly.apexes()) {
        rational sum_J = 0;
        for (const auto j : w.J) sum_J += a[j];
        if (first) { s = sum_J; first = false; }
        else if (sum_J != s) return std::nullopt;  // apexes not on one scaled simplex face
    }
    if (s <= 0 || !is_integral(s)) return std::nullopt;
    for (const auto j : w.J) {
        exponent_vector corner(input.n, 0);
        corner[j] = s;
        if (!contains(poly, corner)) return std::nullopt;
    }
    w.s = s;
    return w;
}

// Corollary equivalence: the analytic route (equality_test) and the purely
// combinatorial route (closure_power_test) must agree, witnesses included.
// Returns the agreement flag; disagreement is a defect for the caller.
inline bool cross_validate_equality(const singularity_input& input,
                                    const invariant_options& opts = {}) {
    input.validate();
    if (input.kind != generator_kind::ideal)
        throw invalid_input("cross_validate_equality requires an ideal input");
    const invariant_set inv = compute_invariants(input, opts);
    const auto eq = equality_test(input, inv);
    const auto cp = closure_power_test(input);
    if (eq.has_value() != cp.has_value()) return false;
    if (!eq.has_value()) return true;
    return *eq == *cp;
}

}  // namespace lct
