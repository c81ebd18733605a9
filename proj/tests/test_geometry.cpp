#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "opoly/checker.hpp"
#include "opoly/errors.hpp"
#include "opoly/geometry.hpp"
#include "test_util.hpp"

using namespace opoly;

TEST_CASE("normalize_point: canonical scaling") {
    const FieldSpec f8 = make_field(3);
    CHECK(normalize_point(f8, 1, 3, 5) == ProjPoint{1, 3, 5});
    CHECK(normalize_point(f8, 0, 1, 0) == ProjPoint{0, 1, 0});
    CHECK_THROWS_AS(normalize_point(f8, 0, 0, 0), std::invalid_argument);

    // scaling by any nonzero element lands on the same canonical triple
    std::mt19937_64 rng(61);
    for (int i = 0; i < 50; ++i) {
        const Element x = static_cast<Element>(rng() & 7);
        const Element y = static_cast<Element>(rng() & 7);
        const Element z = static_cast<Element>(rng() & 7);
        if (x == 0 && y == 0 && z == 0) continue;
        const ProjPoint p = normalize_point(f8, x, y, z);
        for (Element s = 1; s < 8; ++s)
            CHECK(normalize_point(f8, mul(f8, x, s), mul(f8, y, s), mul(f8, z, s)) == p);
    }
}

TEST_CASE("collinear: pinned triples and invariances") {
    const FieldSpec f8 = make_field(3);
    const ProjPoint e1{1, 0, 0}, e2{0, 1, 0}, e3{0, 0, 1};
    CHECK_FALSE(collinear(f8, e1, e2, e3)); // determinant 1

    const ProjPoint sum12 = normalize_point(f8, 1, 1, 0);
    CHECK(collinear(f8, e1, e2, sum12));

    const ProjPoint all1{1, 1, 1};
    for (Element t = 2; t < 8; ++t)
        CHECK(collinear(f8, e1, all1, normalize_point(f8, 1, t, t))); // all on y + z = 0

    CHECK_THROWS_AS(collinear(f8, e1, e1, e2), std::invalid_argument);

    // permutation invariance
    CHECK(collinear(f8, e2, sum12, e1));
    CHECK(collinear(f8, sum12, e1, e2));

    // scaling any point by a nonzero element leaves the verdict alone
    std::mt19937_64 rng(71);
    for (int i = 0; i < 30; ++i) {
        ProjPoint p[3];
        for (auto& q : p)
            q = ProjPoint{static_cast<Element>(rng() & 7), static_cast<Element>(rng() & 7),
                          static_cast<Element>(rng() & 7)};
        if ((p[0].x | p[0].y | p[0].z) == 0 || (p[1].x | p[1].y | p[1].z) == 0 ||
            (p[2].x | p[2].y | p[2].z) == 0)
            continue;
        if (p[0] == p[1] || p[0] == p[2] || p[1] == p[2]) continue;
        const bool verdict = collinear(f8, p[0], p[1], p[2]);
        const Element s = static_cast<Element>((rng() % 7) + 1);
        const ProjPoint scaled{mul(f8, p[0].x, s), mul(f8, p[0].y, s), mul(f8, p[0].z, s)};
        if (scaled == p[1] || scaled == p[2]) continue;
        CHECK(collinear(f8, scaled, p[1], p[2]) == verdict);
    }
}

TEST_CASE("hyperoval_points: the two points at infinity, set size") {
    for (int n = 2; n <= 4; ++n) {
        const FieldSpec spec = make_field(n);
        const auto pts = hyperoval_points(from_monomial(spec, 2));
        CHECK(pts.size() == spec.size() + 2);
        CHECK(std::binary_search(pts.begin(), pts.end(), ProjPoint{0, 1, 0}));
        CHECK(std::binary_search(pts.begin(), pts.end(), ProjPoint{0, 0, 1}));
    }
    // the zero function still lists 2^n + 2 distinct points; the arc test
    // rejects them downstream because all (1, t, 0) lie on z = 0
    const FieldSpec f4 = make_field(2);
    const auto flat = hyperoval_points(from_polynomial(f4, {}));
    CHECK(flat.size() == 6);
    CHECK_FALSE(is_hyperoval(f4, flat));
}

TEST_CASE("is_hyperoval: verdicts and the size guard") {
    const FieldSpec f8 = make_field(3);
    CHECK(is_hyperoval(f8, hyperoval_points(from_monomial(f8, 2))));
    CHECK_FALSE(is_hyperoval(f8, hyperoval_points(from_monomial(f8, 1))));

    auto pts = hyperoval_points(from_monomial(f8, 2));
    pts.pop_back();
    CHECK_FALSE(is_hyperoval(f8, pts)); // wrong cardinality

    const FieldSpec f64 = make_field(6);
    CHECK_THROWS_AS(is_hyperoval(f64, hyperoval_points(from_monomial(f64, 2))),
                    resource_error);
}

TEST_CASE("geometric oracle agrees with the direct characterization") {
    for (int n = 2; n <= 4; ++n) {
        const FieldSpec spec = make_field(n);
        for (std::uint32_t d = 0; d <= spec.max_element(); ++d) {
            const VecFunc f = from_monomial(spec, d);
            CAPTURE(n);
            CAPTURE(d);
            CHECK(is_hyperoval(spec, hyperoval_points(f)) == check_direct(f));
        }
    }
    std::mt19937_64 rng(67);
    const FieldSpec f8 = make_field(3);
    for (int i = 0; i < 25; ++i) {
        const VecFunc f = testutil::random_func(f8, rng);
        CHECK(is_hyperoval(f8, hyperoval_points(f)) == check_direct(f));
    }
}
