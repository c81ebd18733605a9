#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "opoly/catalog.hpp"
#include "opoly/checker.hpp"
#include "opoly/geometry.hpp"

using namespace opoly;

TEST_CASE("family: resolved recipes match their monomial forms") {
    CHECK(family("translation", 1, 4).table == from_monomial(make_field(4), 2).table);
    CHECK(family("segre", std::nullopt, 5).table == from_monomial(make_field(5), 6).table);
    CHECK(check_direct(family("segre", std::nullopt, 5)));

    // glynn1 at n = 3 reduces 3*sigma + 4 = 16 to the conic exponent 2
    CHECK(family("glynn1", std::nullopt, 3).table == from_monomial(make_field(3), 2).table);
    // glynn2 at n = 3 coincides with segre
    CHECK(family("glynn2", std::nullopt, 3).table == from_monomial(make_field(3), 6).table);

    CHECK_THROWS_AS(family("segre", std::nullopt, 4), std::invalid_argument);
    CHECK_THROWS_AS(family("translation", 2, 4), std::invalid_argument); // gcd(2,4) != 1
    CHECK_THROWS_AS(family("translation", std::nullopt, 4), std::invalid_argument);
    CHECK_THROWS_AS(family("segre", 1, 5), std::invalid_argument); // stray parameter
    CHECK_THROWS_AS(family("lunelli", std::nullopt, 4), std::invalid_argument);
    CHECK_THROWS_AS(family("glynn2", std::nullopt, 5), std::invalid_argument); // 5 != 3 mod 4
}

TEST_CASE("list_families: parameter ranges per degree") {
    const auto at2 = list_families(2);
    REQUIRE(at2.size() == 1);
    CHECK(at2[0].name == "translation");
    CHECK(at2[0].param == 1);

    const auto at4 = list_families(4);
    REQUIRE(at4.size() == 2);
    CHECK(at4[0].param == 1);
    CHECK(at4[1].param == 3);

    const auto at5 = list_families(5);
    std::vector<std::string> names;
    for (const auto& inst : at5) names.push_back(inst.name);
    CHECK(names == std::vector<std::string>{"translation", "translation", "translation",
                                            "translation", "segre", "glynn1", "payne"});

    const auto at7 = list_families(7);
    bool has_glynn2 = false;
    for (const auto& inst : at7) has_glynn2 |= inst.name == "glynn2";
    CHECK(has_glynn2);
}

TEST_CASE("translation validity is symmetric in k and n - k") {
    for (int n = 2; n <= 16; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(family_valid("translation", k, n) == family_valid("translation", n - k, n));
}

TEST_CASE("every catalog instance passes the direct characterization") {
    // recipes are data from the literature; the in-repo oracle is the truth
    for (int n = 2; n <= 9; ++n) {
        for (const FamilyInstance& inst : list_families(n)) {
            CAPTURE(n);
            CAPTURE(inst.name);
            const VecFunc f = family(inst.name, inst.param, n);
            CHECK(check_direct(f));
        }
    }
}

TEST_CASE("catalog instances pass all four checkers at small degrees") {
    for (int n = 2; n <= 6; ++n) {
        const FieldSpec spec = make_field(n);
        for (const FamilyInstance& inst : list_families(n)) {
            CAPTURE(n);
            CAPTURE(inst.name);
            const VecFunc f = family(inst.name, inst.param, spec);
            CHECK(check_direct(f));
            CHECK(check_slopes(f));
            CHECK(check_walsh(f));
            CHECK(check_remark(f));
            if (n <= kMaxGeometryDegree)
                CHECK(is_hyperoval(spec, hyperoval_points(f)));
        }
    }
}

TEST_CASE("payne trinomial resolves the fractional exponents") {
    // 1/6, 1/2 = 3/6 and 5/6 mod 2^n - 1
    const PolyTerms at5 = family_terms("payne", std::nullopt, 5);
    REQUIRE(at5.size() == 3);
    CHECK(at5[0].exponent == 26);
    CHECK(at5[1].exponent == 16);
    CHECK(at5[2].exponent == 6);
    const PolyTerms at7 = family_terms("payne", std::nullopt, 7);
    CHECK(at7[0].exponent == 106);
    CHECK(at7[1].exponent == 64);
    CHECK(at7[2].exponent == 22);
}
