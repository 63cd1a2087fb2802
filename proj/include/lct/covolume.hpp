// covolume.hpp : exact volume of the staircase complement R^n_{>=0} \ G.
//
// The complement K of an m-primary Newton polyhedron is star-shaped with
// respect to the origin, and the only part of its boundary not lying in a
// coordinate hyperplane is the union of the bounded facets of G (the ones
// with support value c > 0; m-primarity forces their normals to be strictly
// positive, hence bounded). So
//
//     vol(K) = sum over bounded facets F of vol(cone(0, F))
//            = (1/n!) * sum over a triangulation of each F of |det(v_1..v_n)|.
//
// Facets are enumerated by brute force over apex/axis-direction subsets,
// which is exact and complete for n <= 4; each facet is then triangulated
// recursively through the face lattice read off the vertex/facet incidence.
// After clearing denominators everything runs on integers, in a fixed-width
// kernel when coordinates are small and on big integers otherwise.
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <type_traits>
#include <vector>

#include "lct/newton.hpp"
#include "lct/rational.hpp"

namespace lct::detail {

template <typename I>
I int_gcd(const I& a, const I& b) {
    if constexpr (std::is_integral_v<I>) {
        return std::gcd(a, b);
    } else {
        return boost::multiprecision::gcd(a, b);
    }
}

template <typename F>
void for_each_combination(std::size_t total, std::size_t k, F&& fn) {
    if (k > total) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == total - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

template <typename I>
I int_det(const std::vector<std::vector<I>>& m, std::size_t n) {
    if (n == 1) return m[0][0];
    if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (n == 3)
        return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    I det = 0;
    std::vector<std::vector<I>> minor(n - 1, std::vector<I>(n - 1));
    for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t mc = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) minor[i - 1][mc++] = m[i][j];
        }
        const I cof = m[0][c] * int_det(minor, n - 1);
        det += (c % 2 == 0) ? cof : -cof;
    }
    return det;
}

// Vector orthogonal to the k-1 rows of m (each of length k), as signed
// maximal minors. Zero iff the rows are linearly dependent.
template <typename I>
std::vector<I> orthogonal_vector(const std::vector<std::vector<I>>& rows, std::size_t k) {
    std::vector<I> w(k);
    if (k == 1) {
        w[0] = 1;
        return w;
    }
    std::vector<std::vector<I>> minor(k - 1, std::vector<I>(k - 1));
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t r = 0; r + 1 < k; ++r) {
            std::size_t mc = 0;
            for (std::size_t j = 0; j < k; ++j)
                if (j != c) minor[r][mc++] = rows[r][j];
        }
        const I d = int_det(minor, k - 1);
        w[c] = (c % 2 == 0) ? d : -d;
    }
    return w;
}

// Rank of the difference matrix {p_i - p_0}, i.e. the affine dimension of
// the point set. Fraction-free elimination; matrices here are at most 4x4.
template <typename I>
std::size_t affine_rank(const std::vector<std::vector<I>>& pts,
                        const std::vector<std::size_t>& idx, std::size_t n) {
    if (idx.size() <= 1) return 0;
    std::vector<std::vector<I>> m;
    m.reserve(idx.size() - 1);
    for (std::size_t i = 1; i < idx.size(); ++i) {
        std::vector<I> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = pts[idx[i]][j] - pts[idx[0]][j];
        m.push_back(std::move(row));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[rank], m[piv]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            const I a = m[rank][col], b = m[r][col];
            for (std::size_t j = col; j < n; ++j) m[r][j] = m[r][j] * a - m[rank][j] * b;
        }
        ++rank;
    }
    return rank;
}

template <typename I>
struct face_plane {
    std::vector<I> normal;           // componentwise >= 0, primitive
    I offset = 0;                    // support value c, >= 0
    std::vector<std::size_t> verts;  // ascending apex indices with <w,a> == c
};

// All supporting hyperplanes of conv(apexes) + R^n_{>=0} spanned by apexes
// and axis directions, plus the n coordinate hyperplanes. The list contains
// every facet of the polyhedron; lower-dimensional supporting planes may
// also appear, which downstream consumers filter by affine rank.
template <typename I>
std::vector<face_plane<I>> supporting_planes(const std::vector<std::vector<I>>& apexes,
                                             std::size_t n) {
    const std::size_t m = apexes.size();
    std::map<std::pair<std::vector<I>, I>, face_plane<I>> found;

    auto consider = [&](std::vector<I> w) {
        bool any_pos = false, any_neg = false;
        for (const auto& v : w) {
            if (v > 0) any_pos = true;
            if (v < 0) any_neg = true;
        }
        if (!any_pos && !any_neg) return;
        if (any_neg && !any_pos) {
            for (auto& v : w) v = -v;
            std::swap(any_pos, any_neg);
        }
        std::vector<I> dots(m);
        I lo = 0, hi = 0;
        for (std::size_t i = 0; i < m; ++i) {
            I d = 0;
            for (std::size_t j = 0; j < n; ++j) d += w[j] * apexes[i][j];
            dots[i] = d;
            if (i == 0) { lo = d; hi = d; }
            else { lo = std::min(lo, d); hi = std::max(hi, d); }
        }
        // A supporting normal must be >= 0 (the recession cone is the
        // orthant) and must see every apex on the upper side.
        if (any_neg) {
            // Mixed signs: only usable if apexes sit entirely above some
            // support value with this w, which a negative entry forbids
            // unless all apexes are below; flipping then makes w <= 0 with a
            // positive part, still mixed. Never a face of G.
            return;
        }
        const I c = lo;  // w >= 0 here, so min support is the face value
        face_plane<I> pl;
        pl.normal = std::move(w);
        pl.offset = c;
        // normalize to a primitive vector
        I g = pl.offset < 0 ? I(-pl.offset) : pl.offset;
        for (const auto& v : pl.normal) g = int_gcd(g, I(v < 0 ? -v : v));
        if (g > 1)
            for (auto& v : pl.normal) v /= g;
        if (g > 1) pl.offset /= g;
        auto key = std::make_pair(pl.normal, pl.offset);
        if (found.count(key)) return;
        for (std::size_t i = 0; i < m; ++i) {
            I d = 0;
            for (std::size_t j = 0; j < n; ++j) d += pl.normal[j] * apexes[i][j];
            if (d == pl.offset) pl.verts.push_back(i);
        }
        found.emplace(std::move(key), std::move(pl));
    };

    // coordinate hyperplanes x_j = 0
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<I> w(n, 0);
        w[j] = 1;
        consider(std::move(w));
    }
    // hyperplanes spanned by k apexes and n-k axis directions
    for (std::size_t k = 1; k <= std::min(n, m); ++k) {
        for_each_combination(m, k, [&](const std::vector<std::size_t>& ai) {
            for_each_combination(n, n - k, [&](const std::vector<std::size_t>& dirs) {
                // coordinates not fixed to zero by the chosen directions
                std::vector<std::size_t> free_coords;
                free_coords.reserve(k);
                {
                    std::size_t di = 0;
                    for (std::size_t j = 0; j < n; ++j) {
                        while (di < dirs.size() && dirs[di] < j) ++di;
                        if (di == dirs.size() || dirs[di] != j) free_coords.push_back(j);
                    }
                }
                std::vector<std::vector<I>> rows;
                rows.reserve(k - 1);
                for (std::size_t i = 1; i < k; ++i) {
                    std::vector<I> row(k);
                    for (std::size_t j = 0; j < k; ++j)
                        row[j] = apexes[ai[i]][free_coords[j]] - apexes[ai[0]][free_coords[j]];
                    rows.push_back(std::move(row));
                }
                std::vector<I> wr = orthogonal_vector(rows, k);
                std::vector<I> w(n, 0);
                for (std::size_t j = 0; j < k; ++j) w[free_coords[j]] = wr[j];
                consider(std::move(w));
            });
        });
    }

    std::vector<face_plane<I>> planes;
    planes.reserve(found.size());
    for (auto& [key, pl] : found) planes.push_back(std::move(pl));
    return planes;
}

// Triangulates the face spanned by `verts` (affine dimension d) into
// d-simplices, by coning the lexicographically smallest vertex over the
// recursively triangulated subfaces that avoid it. `verts` may contain
// non-vertex points of the face; they only subdivide the triangulation.
template <typename I>
void triangulate_face(const std::vector<std::vector<I>>& pts,
                      const std::vector<face_plane<I>>& planes,
                      std::vector<std::size_t> verts, std::size_t d,
                      std::vector<std::vector<std::size_t>>& out) {
    std::sort(verts.begin(), verts.end(),
              [&](std::size_t a, std::size_t b) { return pts[a] < pts[b]; });
    if (d == 1) {
        // collinear points in lexicographic order are ordered along the line
        for (std::size_t i = 0; i + 1 < verts.size(); ++i)
            if (pts[verts[i]] != pts[verts[i + 1]])
                out.push_back({verts[i], verts[i + 1]});
        return;
    }
    const std::size_t v0 = verts.front();
    const std::size_t n = pts[v0].size();
    std::vector<std::vector<std::size_t>> seen_subfaces;
    for (const auto& pl : planes) {
        I d0 = 0;
        for (std::size_t j = 0; j < n; ++j) d0 += pl.normal[j] * pts[v0][j];
        if (d0 == pl.offset) continue;  // subface would contain the cone apex
        std::vector<std::size_t> sub;
        std::set_intersection(verts.begin(), verts.end(), pl.verts.begin(), pl.verts.end(),
                              std::back_inserter(sub));
        std::sort(sub.begin(), sub.end());
        if (sub.size() < d) continue;
        if (std::find(seen_subfaces.begin(), seen_subfaces.end(), sub) != seen_subfaces.end())
            continue;
        if (affine_rank(pts, sub, n) != d - 1) continue;
        seen_subfaces.push_back(sub);
        std::vector<std::vector<std::size_t>> sub_simplices;
        triangulate_face(pts, planes, sub, d - 1, sub_simplices);
        for (auto& s : sub_simplices) {
            s.push_back(v0);
            out.push_back(std::move(s));
        }
    }
}

// n! * covolume for an integer apex set whose complement is bounded.
template <typename I>
I covolume_numerator(const std::vector<std::vector<I>>& apexes, std::size_t n) {
    const auto planes = supporting_planes(apexes, n);
    I total = 0;
    std::vector<std::vector<I>> simplex_rows(n, std::vector<I>(n));
    for (const auto& pl : planes) {
        if (pl.offset <= 0) continue;  // unbounded or degenerate direction
        if (affine_rank(apexes, pl.verts, n) != n - 1) continue;
        std::vector<std::vector<std::size_t>> simplices;
        if (n == 1) {
            simplices.push_back({pl.verts.front()});
        } else {
            triangulate_face(apexes, planes, pl.verts, n - 1, simplices);
        }
        for (const auto& s : simplices) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) simplex_rows[i][j] = apexes[s[i]][j];
            I det = int_det(simplex_rows, n);
            if (det < 0) det = -det;
            total += det;
        }
    }
    return total;
}

// Fixed-width kernel is safe while every intermediate determinant and dot
// product stays below 2^62; with n <= 4 a coordinate bound of 2*10^4 leaves
// comfortable headroom.
inline constexpr long long k_int64_coordinate_gate = 20000;

// n! * covolume of conv(apexes) + R^n_{>=0} for big-integer apex rows.
// Tolerates redundant apexes; throws if the complement is unbounded.
inline integer covolume_numerator_checked(const std::vector<std::vector<integer>>& apexes,
                                          std::size_t n) {
    if (n == 0 || n > 4) throw unsupported_instance("exact covolume supports 1 <= n <= 4");
    for (std::size_t j = 0; j < n; ++j) {
        bool axis_met = false;
        for (const auto& a : apexes) {
            bool pure = true;
            for (std::size_t i = 0; i < n; ++i)
                if (i != j && a[i] != 0) { pure = false; break; }
            if (pure) { axis_met = true; break; }
        }
        if (!axis_met)
            throw unsupported_instance(
                "complement is unbounded: coordinate axis " + std::to_string(j + 1) +
                " does not meet the polyhedron");
    }
    integer max_coord = 0;
    for (const auto& a : apexes)
        for (const auto& c : a) max_coord = std::max(max_coord, c);
    if (max_coord <= k_int64_coordinate_gate) {
        std::vector<std::vector<long long>> fast(apexes.size(), std::vector<long long>(n));
        for (std::size_t i = 0; i < apexes.size(); ++i)
            for (std::size_t j = 0; j < n; ++j)
                fast[i][j] = apexes[i][j].convert_to<long long>();
        return integer(covolume_numerator(fast, n));
    }
    return covolume_numerator(apexes, n);
}

}  // namespace lct::detail

namespace lct {

// Exact rational volume of R^n_{>=0} \ G. Requires a bounded complement
// (every axis meets G, the m-primary case) and n <= 4.
inline rational covolume(const newton_polyhedron& poly) {
    const std::size_t n = poly.dim();
    if (n > 4)
        throw unsupported_instance("exact covolume supports n <= 4");
    if (!poly.complement_bounded())
        throw unsupported_instance("complement is unbounded: some coordinate axis misses G");
    integer den = 1;
    for (const auto& a : poly.apexes())
        for (const auto& c : a) den = boost::multiprecision::lcm(den, denominator(c));
    std::vector<std::vector<integer>> apexes(poly.apexes().size(), std::vector<integer>(n));
    for (std::size_t i = 0; i < poly.apexes().size(); ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const rational scaled = poly.apexes()[i][j] * den;
            apexes[i][j] = numerator(scaled);
        }
    const integer num = detail::covolume_numerator_checked(apexes, n);
    return rational(num) / rational(factorial(static_cast<unsigned>(n)) * pow(den, static_cast<unsigned>(n)));
}

}  // namespace lct
