#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btlat/covers.hpp"
#include "btlat/errors.hpp"

using namespace btlat;

namespace {
RootSystem rs_of(const std::string& tag) { return build_root_system(cartan_for_type(tag)); }
} // namespace

TEST_CASE("local cover degrees") {
    RootSystem rs = rs_of("A1");
    CHECK(local_cover(rs, Coweight{{Rat(0)}}).d == 1);
    CHECK(local_cover(rs, Coweight{{Rat(1)}}).d == 2); // vertex, d_1 = 2
    CHECK(local_cover(rs, Coweight{{Rat(1, 2)}}).d == 4);
    RootSystem g2 = rs_of("G2");
    CHECK(local_cover(g2, Coweight{{Rat(1, 3), Rat(0)}}).d == 3);
    CHECK(local_cover(g2, Coweight{{Rat(0), Rat(1, 2)}}).d == 2);
}

TEST_CASE("A1 equivariant model at the vertex") {
    RootSystem rs = rs_of("A1");
    Coweight theta{{Rat(1)}};
    CyclicCoverDatum cover = local_cover(rs, theta);
    CHECK(cover.d == 2);
    CHECK(cover.lambda == std::vector<long long>{2});
    EquivariantLattice eq = equivariant_model(rs, cover, theta);
    CHECK(eq.j == std::vector<long long>{0, 0});
    ParahoricLattice lat = invariant_direct_image(rs, cover, eq);
    CHECK(lat == parahoric_lattice(rs, theta));
    CHECK(lat.m == std::vector<long long>{1, -1});
}

TEST_CASE("A1 equivariant model at the iwahori point") {
    RootSystem rs = rs_of("A1");
    Coweight theta{{Rat(1, 2)}};
    CyclicCoverDatum cover = local_cover(rs, theta);
    CHECK(cover.d == 4);
    EquivariantLattice eq = equivariant_model(rs, cover, theta);
    CHECK(eq.j == std::vector<long long>{2, 2});
    CHECK(invariant_direct_image(rs, cover, eq) == parahoric_lattice(rs, theta));
}

TEST_CASE("cover mismatch and bad exponents throw") {
    RootSystem rs = rs_of("A1");
    CyclicCoverDatum wrong{3, {2}};
    CHECK_THROWS_AS(equivariant_model(rs, wrong, Coweight{{Rat(1)}}), CoverMismatch);
    CyclicCoverDatum cover = local_cover(rs, Coweight{{Rat(1)}});
    EquivariantLattice bad;
    bad.j = {1, 1}; // wrong characters: (j - (r,lambda)) is odd
    CHECK_THROWS_AS(invariant_direct_image(rs, cover, bad), NonIntegralExponent);
    EquivariantLattice short_list;
    short_list.j = {0};
    CHECK_THROWS_AS(invariant_direct_image(rs, cover, short_list), CoverMismatch);
}

TEST_CASE("parabolic weights") {
    RootSystem rs = rs_of("A1");
    SUBCASE("generic point of the alcove") {
        ParabolicStructure ps = parabolic_weights(rs, Coweight{{Rat(1, 2)}});
        CHECK(ps.weights == std::vector<Rat>{Rat(0), Rat(1, 2)});
        CHECK(ps.flag_dims == std::vector<long long>{3, 2});
        CHECK(ps.multiplicities() == std::vector<long long>{1, 2});
        CHECK(ps.denominator == 4);
    }
    SUBCASE("hyperspecial point is unweighted") {
        ParabolicStructure ps = parabolic_weights(rs, Coweight{{Rat(0)}});
        CHECK(ps.weights == std::vector<Rat>{Rat(0)});
        CHECK(ps.flag_dims == std::vector<long long>{3});
    }
    SUBCASE("outside the alcove throws") {
        CHECK_THROWS_AS(parabolic_weights(rs, Coweight{{Rat(2)}}), OutsideAlcove);
    }
}

TEST_CASE("A2 iwahori parabolic structure") {
    RootSystem rs = rs_of("A2");
    ParabolicStructure ps = parabolic_weights(rs, Coweight{{Rat(1, 3), Rat(1, 3)}});
    CHECK(ps.weights == std::vector<Rat>{Rat(0), Rat(1, 3), Rat(2, 3)});
    CHECK(ps.multiplicities() == std::vector<long long>{2, 3, 3});
    CHECK(ps.flag_dims == std::vector<long long>{8, 6, 3});
}

TEST_CASE("roundtrip at distinguished points") {
    for (const char* tag : {"A1", "A2", "B2", "G2", "C3"}) {
        RootSystem rs = rs_of(tag);
        for (const auto& v : alcove_vertices(rs)) {
            CAPTURE(tag);
            CHECK(roundtrip_check(rs, v));
        }
        for (unsigned mask = 1; mask < (1u << (rs.rank + 1)); ++mask) {
            FacetLabel I;
            for (int a = 0; a <= rs.rank; ++a)
                if (mask & (1u << a)) I.insert(a);
            CAPTURE(tag);
            CHECK(roundtrip_check(rs, barycenter(rs, I)));
        }
    }
}
