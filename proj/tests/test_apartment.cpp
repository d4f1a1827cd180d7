#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btlat/apartment.hpp"
#include "btlat/errors.hpp"

using namespace btlat;

namespace {
RootSystem rs_of(const std::string& tag) { return build_root_system(cartan_for_type(tag)); }
} // namespace

TEST_CASE("G2 alcove vertices") {
    RootSystem rs = rs_of("G2");
    auto v = alcove_vertices(rs);
    REQUIRE(v.size() == 3);
    CHECK(v[0] == Coweight{{Rat(0), Rat(0)}});
    CHECK(v[1] == Coweight{{Rat(1, 3), Rat(0)}});
    CHECK(v[2] == Coweight{{Rat(0), Rat(1, 2)}});
}

TEST_CASE("affine simple roots") {
    RootSystem rs = rs_of("A2");
    auto f = affine_simple_roots(rs);
    REQUIRE(f.size() == 3);
    CHECK(f[0].linear == -rs.highest_root);
    CHECK(f[0].constant == Rat(1));
    CHECK(f[1].eval(Coweight{{Rat(1, 3), Rat(1, 3)}}) == Rat(1, 3));
    CHECK(f[0].eval(Coweight{{Rat(1, 3), Rat(1, 3)}}) == Rat(1, 3));
}

TEST_CASE("facet classification") {
    RootSystem rs = rs_of("A2");
    CHECK(facet_of(rs, Coweight{{Rat(0), Rat(0)}}) == FacetLabel{0});
    CHECK(facet_of(rs, Coweight{{Rat(1, 3), Rat(1, 3)}}) == FacetLabel{0, 1, 2});
    CHECK(facet_of(rs, Coweight{{Rat(1, 2), Rat(1, 2)}}) == FacetLabel{1, 2});
    CHECK_THROWS_AS(facet_of(rs, Coweight{{Rat(-1, 4), Rat(0)}}), OutsideAlcove);
    CHECK_THROWS_AS(facet_of(rs, Coweight{{Rat(1), Rat(1)}}), OutsideAlcove);
}

TEST_CASE("barycenter facet roundtrip, exhaustive") {
    for (const char* tag : {"A1", "A2", "B2", "G2", "A3", "C3"}) {
        RootSystem rs = rs_of(tag);
        for (unsigned mask = 1; mask < (1u << (rs.rank + 1)); ++mask) {
            FacetLabel I;
            for (int a = 0; a <= rs.rank; ++a)
                if (mask & (1u << a)) I.insert(a);
            CAPTURE(tag);
            CHECK(facet_of(rs, barycenter(rs, I)) == I);
        }
    }
}

TEST_CASE("barycenter rejects bad labels") {
    RootSystem rs = rs_of("A2");
    CHECK_THROWS_AS(barycenter(rs, FacetLabel{}), EmptySubset);
    CHECK_THROWS_AS(barycenter(rs, FacetLabel{5}), std::out_of_range);
}

TEST_CASE("denominator pair at vertices equals d_alpha") {
    for (const char* tag : {"A1", "A2", "B2", "G2", "C3"}) {
        RootSystem rs = rs_of(tag);
        auto v = alcove_vertices(rs);
        for (int a = 0; a < rs.rank; ++a) {
            CAPTURE(tag);
            CHECK(denominator_pair(rs, v[a + 1]).d == rs.d[a]);
        }
        CHECK(denominator_pair(rs, v[0]).d == 1);
    }
}

TEST_CASE("A2 iwahori denominator") {
    RootSystem rs = rs_of("A2");
    DenominatorPair dp = denominator_pair(rs, Coweight{{Rat(1, 3), Rat(1, 3)}});
    CHECK(dp.d == 3);
    CHECK(dp.lambda == std::vector<long long>{1, 1});
}

TEST_CASE("affine generators are involutions") {
    for (const char* tag : {"A2", "G2", "B2"}) {
        RootSystem rs = rs_of(tag);
        for (int beta = 0; beta <= rs.rank; ++beta) {
            AffineTransform s = affine_simple_generator(rs, beta);
            CHECK(compose(s, s) == affine_identity(rs.rank));
            CHECK(inverse(rs, s) == s);
        }
    }
}

TEST_CASE("s0 fixes the far wall and moves the origin") {
    RootSystem rs = rs_of("A2");
    AffineTransform s0 = affine_simple_generator(rs, 0);
    // The wall <hr, theta> = 1 is fixed pointwise on the facet {1,2}.
    Coweight wall = barycenter(rs, FacetLabel{1, 2});
    CHECK(s0.apply(wall) == wall);
    Coweight origin{{Rat(0), Rat(0)}};
    CHECK_FALSE(s0.apply(origin) == origin);
}

TEST_CASE("word transforms compose right to left") {
    RootSystem rs = rs_of("A2");
    AffineTransform g = transform_of_word(rs, {1, 2});
    Coweight theta{{Rat(1, 5), Rat(1, 7)}};
    AffineTransform s1 = affine_simple_generator(rs, 1);
    AffineTransform s2 = affine_simple_generator(rs, 2);
    CHECK(g.apply(theta) == s1.apply(s2.apply(theta)));
    CHECK_THROWS_AS(transform_of_word(rs, {7}), InvalidWord);
}

TEST_CASE("reduction to the alcove") {
    RootSystem rs = rs_of("A2");
    SUBCASE("already inside is a fixed point") {
        Coweight theta{{Rat(1, 4), Rat(1, 4)}};
        AlcoveReduction red = reduce_to_alcove(rs, theta);
        CHECK(red.point == theta);
        CHECK(red.word.empty());
    }
    SUBCASE("translation by a coroot") {
        // theta + alpha_1^vee reduces back to theta.
        Coweight theta{{Rat(1, 4), Rat(1, 8)}};
        Coweight shifted{{theta.x[0] + Rat(2), theta.x[1] - Rat(1)}};
        AlcoveReduction red = reduce_to_alcove(rs, shifted);
        CHECK(red.point == theta);
        CHECK(transform_of_word(rs, red.word).apply(shifted) == red.point);
    }
    SUBCASE("far points") {
        Coweight theta{{Rat(37, 5), Rat(-22, 7)}};
        AlcoveReduction red = reduce_to_alcove(rs, theta);
        CHECK_NOTHROW(facet_of(rs, red.point));
        CHECK(transform_of_word(rs, red.word).apply(theta) == red.point);
    }
}
