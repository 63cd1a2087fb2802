// Exact covolume against hand-computable staircases, the homogeneity and
// monotonicity laws, and the brute-force colength oracle.
#include <catch2/catch_amalgamated.hpp>

#include "lct/corpus.hpp"
#include "lct/covolume.hpp"
#include "lct/oracle.hpp"

using namespace lct;

namespace {

singularity_input ideal(std::size_t n, std::vector<std::vector<long long>> gens) {
    singularity_input in;
    in.n = n;
    in.kind = generator_kind::ideal;
    for (const auto& g : gens) {
        exponent_vector v;
        for (const auto c : g) v.push_back(rational(c));
        in.generators.push_back(std::move(v));
    }
    return in;
}

newton_polyhedron unit_simplex_hull(std::size_t n) {
    std::vector<exponent_vector> gens;
    for (std::size_t j = 0; j < n; ++j) {
        exponent_vector e(n, 0);
        e[j] = 1;
        gens.push_back(std::move(e));
    }
    return newton_polyhedron(n, std::move(gens));
}

}  // namespace

TEST_CASE("corner simplices") {
    CHECK(covolume(unit_simplex_hull(1)) == 1);
    CHECK(covolume(unit_simplex_hull(2)) == rational(1, 2));
    CHECK(covolume(unit_simplex_hull(3)) == rational(1, 6));
    CHECK(covolume(unit_simplex_hull(4)) == rational(1, 24));
    for (long long s = 2; s <= 4; ++s) {
        const auto poly = scale(unit_simplex_hull(3), rational(s));
        CHECK(covolume(poly) == rational(s * s * s, 6));
    }
}

TEST_CASE("staircase area") {
    CHECK(covolume(build_polyhedron(ideal(2, {{2, 0}, {0, 3}}))) == 3);
    // area under the lower hull (0,2)-(1,1)-(3,0): trapezoids 3/2 + 1 = 5/2
    CHECK(covolume(build_polyhedron(ideal(2, {{3, 0}, {1, 1}, {0, 2}}))) == rational(5, 2));
    // mixed 3d corner: conv{(1,0,0),(0,2,0),(0,0,2)}: cone volume 4/6
    CHECK(covolume(build_polyhedron(ideal(3, {{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}))) ==
          rational(2, 3));
}

TEST_CASE("unsupported cases") {
    CHECK_THROWS_AS(covolume(build_polyhedron(ideal(2, {{1, 1}}))), unsupported_instance);
    CHECK_THROWS_AS(covolume(build_polyhedron(ideal(3, {{1, 0, 0}, {0, 2, 0}}))),
                    unsupported_instance);
    std::vector<exponent_vector> simplex5;
    for (std::size_t j = 0; j < 5; ++j) {
        exponent_vector e(5, 0);
        e[j] = 1;
        simplex5.push_back(std::move(e));
    }
    CHECK_THROWS_AS(covolume(newton_polyhedron(5, simplex5)), unsupported_instance);
}

TEST_CASE("covolume scaling and monotonicity") {
    deterministic_rng rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = rng.between(2, 3);
        auto in = random_ideal(rng, n, 5, 6, "cov");
        for (std::size_t j = 0; j < n; ++j) {  // force a bounded complement
            exponent_vector p(n, 0);
            p[j] = rational(integer(rng.between(1, 6)));
            in.generators.push_back(std::move(p));
        }
        const auto poly = build_polyhedron(in);
        const rational vol = covolume(poly);

        const rational t(integer(rng.between(1, 7)), integer(rng.between(1, 4)));
        CHECK(covolume(scale(poly, t)) == vol * pow(t, static_cast<unsigned>(n)));

        // enlarging G can only shrink the complement
        auto bigger = in;
        exponent_vector extra(n, 0);
        for (auto& c : extra) c = rational(integer(rng.between(0, 4)));
        bool nonzero = false;
        for (const auto& c : extra) nonzero = nonzero || c != 0;
        if (!nonzero) extra[0] = 1;
        bigger.generators.push_back(extra);
        CHECK(covolume(build_polyhedron(bigger)) <= vol);
    }
}

TEST_CASE("big coordinates fall back to the wide kernel") {
    // scaling by 10^5 crosses the fixed-width gate; homogeneity must still
    // hold exactly
    const auto poly = build_polyhedron(ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 2}, {1, 1, 1}}));
    const rational vol = covolume(poly);
    const rational big(100000);
    CHECK(covolume(scale(poly, big)) == vol * pow(big, 3));
}

TEST_CASE("covolume tracks the colength oracle") {
    // n! * covolume = e = lim n! colength(I^m)/m^n. The lattice count always
    // overshoots, by roughly n/m relative at power m: within the 10% default
    // at m = 24 for n = 2, and within 3.5/m + change for n = 3 (the m = 24 /
    // 10% pairing is not attainable for n = 3, see the acceptance notes).
    oracle_config cfg;
    deterministic_rng rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = rng.between(2, 3);
        auto in = random_ideal(rng, n, 4, 5, "oracle");
        for (std::size_t j = 0; j < n; ++j) {
            exponent_vector p(n, 0);
            p[j] = rational(integer(rng.between(1, 5)));
            in.generators.push_back(std::move(p));
        }
        const rational exact = rational(factorial(static_cast<unsigned>(n))) *
                               covolume(build_polyhedron(in));
        const rational est = multiplicity_estimate(in, cfg);
        CHECK(est >= exact);
        const rational rel = (est - exact) / exact;
        if (n == 2) CHECK(rel <= cfg.tolerance);
        else CHECK(rel <= rational(1, 6));
    }
}
