#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btlat/errors.hpp"
#include "btlat/wonderful.hpp"

using namespace btlat;

namespace {
RootSystem rs_of(const std::string& tag) { return build_root_system(cartan_for_type(tag)); }
} // namespace

TEST_CASE("orbit poset") {
    RootSystem rs = rs_of("A2");
    OrbitPoset p = orbit_poset(rs);
    REQUIRE(p.elements.size() == 4);
    CHECK(p.elements[0] == std::set<int>{});
    CHECK(p.elements[3] == std::set<int>{1, 2});
    CHECK(OrbitPoset::codim({1, 2}) == 2);
    CHECK(OrbitPoset::in_closure({1, 2}, {1}));
    CHECK_FALSE(OrbitPoset::in_closure({1}, {1, 2}));
    CHECK(OrbitPoset::in_closure({1}, {1}));
}

TEST_CASE("theta of a curve") {
    RootSystem rs = rs_of("A2");
    CurveDatum c{{1, 1}};
    CHECK(theta_of_curve(rs, c) == Coweight{{Rat(1, 3), Rat(1, 3)}});
    CurveDatum g2{{1, 0}};
    RootSystem rsg = rs_of("G2");
    CHECK(theta_of_curve(rsg, g2) == Coweight{{Rat(1, 9), Rat(0)}});
    CHECK_THROWS_AS(theta_of_curve(rs, CurveDatum{{1}}), RankMismatch);
}

TEST_CASE("multidegrees are indicator exponents") {
    for (const char* tag : {"A2", "B2", "G2"}) {
        RootSystem rs = rs_of(tag);
        MultidegreeBundle b = bundle_multidegrees(rs);
        for (std::size_t i = 0; i < rs.num_roots(); ++i)
            for (int a = 0; a < rs.rank; ++a) {
                CAPTURE(tag);
                CHECK(b.n[i][a] == (rs.roots[i].c[a] < 0 ? 1 : 0));
            }
    }
}

TEST_CASE("monomial oracle matches the multidegrees") {
    RootSystem rs = rs_of("A2");
    MultidegreeBundle b = bundle_multidegrees(rs);
    for (std::size_t i = 0; i < rs.num_roots(); ++i)
        for (long long m0 = -2; m0 <= 2; ++m0)
            for (long long m1 = -2; m1 <= 2; ++m1) {
                bool expect = m0 >= b.n[i][0] && m1 >= b.n[i][1];
                CHECK(monomial_membership(rs, rs.roots[i], {m0, m1}) == expect);
            }
    CHECK_THROWS_AS(monomial_membership(rs, rs.roots[0], {0}), RankMismatch);
}

TEST_CASE("restriction along standard curves") {
    RootSystem rs = rs_of("A2");
    SUBCASE("k = (1,1) hits the iwahori and has defect on the lowest root") {
        CurveDatum c{{1, 1}};
        ParahoricLattice direct = restrict_direct(rs, c);
        CHECK(direct == std_parahoric(rs, {1, 2}));
        auto pull = restrict_pullback(rs, c);
        auto defect = saturation_defect(rs, c);
        std::size_t low = rs.index_of(-rs.highest_root);
        CHECK(pull[low] == 2);
        CHECK(direct.m[low] == 1);
        CHECK(defect[low] == 1);
        // Simple negative roots have a single negative coefficient.
        CHECK(defect[rs.index_of(RootVector{{-1, 0}})] == 0);
    }
    SUBCASE("single-divisor support has no defect") {
        CurveDatum c{{1, 0}};
        auto defect = saturation_defect(rs, c);
        for (long long v : defect) CHECK(v == 0);
        CHECK(restrict_direct(rs, c) == std_parahoric(rs, {1}));
    }
    SUBCASE("k = 0 is the hyperspecial") {
        CurveDatum c{{0, 0}};
        CHECK(restrict_direct(rs, c).m == std::vector<long long>{0, 0, 0, 0, 0, 0});
        for (long long v : saturation_defect(rs, c)) CHECK(v == 0);
    }
}

TEST_CASE("clamp law, exhaustive over standard data") {
    for (const char* tag : {"A1", "A2", "A3", "B2", "C3", "G2"}) {
        RootSystem rs = rs_of(tag);
        for (unsigned mask = 0; mask < (1u << rs.rank); ++mask) {
            CurveDatum c;
            for (int i = 0; i < rs.rank; ++i) c.k.push_back((mask >> i) & 1);
            ParahoricLattice direct = restrict_direct(rs, c);
            auto pull = restrict_pullback(rs, c);
            for (std::size_t i = 0; i < rs.num_roots(); ++i) {
                CAPTURE(tag);
                CHECK(direct.m[i] == std::min(pull[i], 1LL));
            }
        }
    }
}

TEST_CASE("guards") {
    RootSystem rs = rs_of("A2");
    CHECK_THROWS_AS(restrict_direct(rs, CurveDatum{{-1, 0}}), NotDominant);
    CHECK_THROWS_AS(restrict_pullback(rs, CurveDatum{{-1, 0}}), NotDominant);
    CHECK_THROWS_AS(saturation_defect(rs, CurveDatum{{2, 0}}), NotStandard);
}
