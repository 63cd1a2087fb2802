// newton.hpp : exact Newton polyhedra of monomial ideals and toric weights.
//
// A generator list (exponent vectors a_i >= 0) determines the polyhedron
//   G = conv{a_i} + R^n_{>=0},
// the combinatorial carrier of every invariant computed by this library:
// two generator lists with the same G are indistinguishable downstream
// (for ideals, G carries exactly the integral closure). Apex lists are
// reduced eagerly, so adding a redundant generator is a structural no-op.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "lct/rational.hpp"
#include "lct/simplex.hpp"

namespace lct {

// One monomial generator or one weight row; length = ambient dimension,
// every coordinate >= 0.
using exponent_vector = std::vector<rational>;

enum class generator_kind { ideal, weight };

// u = log|F| for the monomial ideal generated by z^{a_i} (kind = ideal), or
// the multi-circled weight u = max_i <a_i, log|z|> (kind = weight).
struct singularity_input {
    std::size_t n = 0;
    std::vector<exponent_vector> generators;
    generator_kind kind = generator_kind::ideal;
    std::string label;

    void validate() const {
        if (n == 0) throw invalid_input("ambient dimension must be positive");
        if (generators.empty()) throw invalid_input("generator list must be nonempty");
        for (const auto& g : generators) {
            if (g.size() != n)
                throw invalid_input("generator length does not match ambient dimension");
            bool nonzero = false;
            for (const auto& c : g) {
                if (c < 0) throw invalid_input("negative exponent in generator");
                if (kind == generator_kind::ideal && !is_integral(c))
                    throw invalid_input("ideal generators must have integer exponents");
                if (c != 0) nonzero = true;
            }
            if (!nonzero)
                throw invalid_input("zero generator: the ideal is the unit ideal and "
                                    "carries no singularity");
        }
    }
};

namespace detail {

inline void check_dimension(std::size_t have, std::size_t want) {
    if (have != want) throw invalid_input("dimension mismatch");
}

// a >= b componentwise; then a lies in b + R^n_{>=0} and is redundant.
inline bool dominates(const exponent_vector& a, const exponent_vector& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] < b[j]) return false;
    return true;
}

// Membership x in conv(points) + R^n_{>=0} as an exact feasibility LP:
// lambda >= 0, sum lambda = 1, sum lambda_i p_i <= x componentwise.
inline bool hull_contains(const std::vector<exponent_vector>& points,
                          const exponent_vector& x) {
    if (points.empty()) return false;
    const std::size_t n = x.size();
    const std::size_t k = points.size();
    // variables: lambda_1..lambda_k, slack_1..slack_n
    std::vector<std::vector<rational>> A(n + 1, std::vector<rational>(k + n, 0));
    std::vector<rational> b(n + 1, 0);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < k; ++i) A[j][i] = points[i][j];
        A[j][k + j] = 1;
        b[j] = x[j];
    }
    for (std::size_t i = 0; i < k; ++i) A[n][i] = 1;
    b[n] = 1;
    const std::vector<rational> cost(k + n, 0);
    return solve_lp(A, std::move(b), cost).status == lp_status::optimal;
}

// Irredundant core of a generating set: exact duplicates and dominated
// points first (cheap), then the LP test against the remaining peers.
// The result is the vertex set of G, unique regardless of removal order.
inline std::vector<exponent_vector> reduce_apexes(std::vector<exponent_vector> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<exponent_vector> kept;
    for (const auto& p : pts) {
        bool redundant = false;
        for (const auto& q : pts)
            if (&p != &q && p != q && dominates(p, q)) { redundant = true; break; }
        if (!redundant) kept.push_back(p);
    }
    for (std::size_t i = 0; i < kept.size();) {
        std::vector<exponent_vector> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        if (!others.empty() && hull_contains(others, kept[i]))
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    return kept;
}

}  // namespace detail

// G = conv(apexes) + R^n_{>=0}, stored by its reduced apex set in
// lexicographic order. Immutable after construction; all operations below
// are pure functions.
class newton_polyhedron {
  public:
    newton_polyhedron(std::size_t n, std::vector<exponent_vector> generators)
        : n_(n), apexes_(detail::reduce_apexes(std::move(generators))) {
        if (n_ == 0) throw invalid_input("ambient dimension must be positive");
        for (const auto& a : apexes_) {
            detail::check_dimension(a.size(), n_);
            for (const auto& c : a)
                if (c < 0) throw invalid_input("negative coordinate in apex");
        }
        if (apexes_.empty()) throw invalid_input("empty apex set");
    }

    std::size_t dim() const { return n_; }
    const std::vector<exponent_vector>& apexes() const { return apexes_; }

    // Largest coordinate over all apexes.
    rational max_coordinate() const {
        rational m = 0;
        for (const auto& a : apexes_)
            for (const auto& c : a) m = std::max(m, c);
        return m;
    }

    // Largest coordinate sum over all apexes.
    rational max_coordinate_sum() const {
        rational m = 0;
        for (const auto& a : apexes_) {
            rational s = 0;
            for (const auto& c : a) s += c;
            m = std::max(m, s);
        }
        return m;
    }

    // The complement R^n_{>=0} \ G is bounded iff every coordinate axis meets
    // G, which for this class of polyhedra happens iff some apex is supported
    // on that axis alone (the m-primary case).
    bool complement_bounded() const {
        for (std::size_t j = 0; j < n_; ++j) {
            bool axis_met = false;
            for (const auto& a : apexes_) {
                bool pure = true;
                for (std::size_t i = 0; i < n_; ++i)
                    if (i != j && a[i] != 0) { pure = false; break; }
                if (pure) { axis_met = true; break; }
            }
            if (!axis_met) return false;
        }
        return true;
    }

    bool operator==(const newton_polyhedron& other) const {
        return n_ == other.n_ && apexes_ == other.apexes_;
    }

  private:
    std::size_t n_;
    std::vector<exponent_vector> apexes_;
};

inline newton_polyhedron build_polyhedron(const singularity_input& input) {
    input.validate();
    return newton_polyhedron(input.n, input.generators);
}

// Exact membership x in G, decided by the feasibility LP.
inline bool contains(const newton_polyhedron& poly, const exponent_vector& x) {
    detail::check_dimension(x.size(), poly.dim());
    for (const auto& c : x)
        if (c < 0) throw invalid_input("membership point must be nonnegative");
    return detail::hull_contains(poly.apexes(), x);
}

// G(p) + G(q): apexes are the reduced pairwise sums.
inline newton_polyhedron minkowski_sum(const newton_polyhedron& p,
                                       const newton_polyhedron& q) {
    detail::check_dimension(q.dim(), p.dim());
    std::vector<exponent_vector> sums;
    sums.reserve(p.apexes().size() * q.apexes().size());
    for (const auto& a : p.apexes())
        for (const auto& b : q.apexes()) {
            exponent_vector s(p.dim());
            for (std::size_t j = 0; j < p.dim(); ++j) s[j] = a[j] + b[j];
            sums.push_back(std::move(s));
        }
    return newton_polyhedron(p.dim(), std::move(sums));
}

// t.G for rational t > 0.
inline newton_polyhedron scale(const newton_polyhedron& p, const rational& t) {
    if (t <= 0) throw invalid_input("scale factor must be positive");
    std::vector<exponent_vector> scaled = p.apexes();
    for (auto& a : scaled)
        for (auto& c : a) c *= t;
    return newton_polyhedron(p.dim(), std::move(scaled));
}

}  // namespace lct
