#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "opoly/func.hpp"
#include "test_util.hpp"

using namespace opoly;

TEST_CASE("from_monomial: identity, squaring table, conventions") {
    const FieldSpec f8 = make_field(3, 0xb);
    const VecFunc id = from_monomial(f8, 1);
    for (Element x = 0; x < 8; ++x) CHECK(id.table[x] == x);

    const VecFunc sq = from_monomial(f8, 2);
    CHECK(sq.table == std::vector<Element>{0, 1, 4, 5, 6, 7, 2, 3});

    const VecFunc ones = from_monomial(f8, 0);
    for (Element x = 0; x < 8; ++x) CHECK(ones.table[x] == 1); // 0^0 = 1

    CHECK_THROWS_AS(from_monomial(f8, 8), std::invalid_argument);
}

TEST_CASE("from_polynomial: consistency and rejection") {
    const FieldSpec f8 = make_field(3);
    const VecFunc id = from_polynomial(f8, {{1, 1}});
    for (Element x = 0; x < 8; ++x) CHECK(id.table[x] == x);

    const VecFunc zero = from_polynomial(f8, {});
    for (Element x = 0; x < 8; ++x) CHECK(zero.table[x] == 0);

    const FieldSpec f32 = make_field(5);
    CHECK(from_polynomial(f32, {{6, 1}}).table == from_monomial(f32, 6).table);

    CHECK_THROWS_AS(from_polynomial(f8, {{2, 1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(from_polynomial(f8, {{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(from_polynomial(f8, {{9, 1}}), std::invalid_argument);
}

TEST_CASE("from_table validates shape and range") {
    const FieldSpec f4 = make_field(2);
    CHECK(from_table(f4, {0, 1, 2, 3}).table == std::vector<Element>{0, 1, 2, 3});
    CHECK(from_table(f4, {0, 0, 0, 0}).table == std::vector<Element>{0, 0, 0, 0});
    CHECK_THROWS_AS(from_table(f4, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(from_table(f4, {0, 1, 2, 4}), std::invalid_argument);
}

TEST_CASE("is_permutation agrees with the sorted-table oracle") {
    const FieldSpec f8 = make_field(3);
    CHECK(is_permutation(from_monomial(f8, 1)));
    CHECK(is_permutation(from_monomial(f8, 2))); // Frobenius
    CHECK_FALSE(is_permutation(from_polynomial(f8, {})));

    const FieldSpec f16 = make_field(4);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const VecFunc f = testutil::random_func(f16, rng);
        std::vector<Element> sorted = f.table;
        std::sort(sorted.begin(), sorted.end());
        bool bijective = true;
        for (Element x = 0; x < f16.size(); ++x)
            if (sorted[x] != x) bijective = false;
        CHECK(is_permutation(f) == bijective);
    }
}

TEST_CASE("slope_function: pinned cases") {
    const FieldSpec f8 = make_field(3, 0xb);

    // F = x^2: (t+s)^2 + s^2 = t^2, so G_s = identity for every s
    const VecFunc sq = from_monomial(f8, 2);
    for (Element s = 0; s < 8; ++s) {
        const VecFunc g = slope_function(sq, s);
        for (Element t = 0; t < 8; ++t) CHECK(g.table[t] == t);
    }

    // F = identity: G_s is 1 away from 0
    const VecFunc id = from_monomial(f8, 1);
    for (Element s = 0; s < 8; ++s) {
        const VecFunc g = slope_function(id, s);
        CHECK(g.table[0] == 0);
        for (Element t = 1; t < 8; ++t) CHECK(g.table[t] == 1);
    }

    // F = x^3, s != 0: G_s(t) = t^2 + ts + s^2 collides at t and t + s
    const VecFunc cube = from_monomial(f8, 3);
    for (Element s = 1; s < 8; ++s) {
        const VecFunc g = slope_function(cube, s);
        CHECK_FALSE(is_permutation(g));
        for (Element t = 1; t < 8; ++t) {
            const Element expected =
                mul(f8, t, t) ^ mul(f8, t, s) ^ mul(f8, s, s);
            CHECK(g.table[t] == expected);
            if (t != s) CHECK(g.table[t] == g.table[t ^ s]);
        }
    }
}

TEST_CASE("slope_function properties: value at 0 and the s = 0 slope") {
    const FieldSpec f16 = make_field(4);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        const VecFunc f = testutil::random_func(f16, rng);
        for (Element s = 0; s < f16.size(); ++s)
            CHECK(slope_function(f, s).table[0] == 0);
    }
    // for monomials, G_0 = x^{d-1}
    for (std::uint32_t d = 1; d <= 14; ++d) {
        const VecFunc f = from_monomial(f16, d);
        const VecFunc g = slope_function(f, 0);
        const VecFunc expected = from_monomial(f16, d - 1);
        for (Element t = 1; t < f16.size(); ++t) CHECK(g.table[t] == expected.table[t]);
    }
}
