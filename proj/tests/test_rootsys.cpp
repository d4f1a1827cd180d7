#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btlat/errors.hpp"
#include "btlat/rootsys.hpp"

using namespace btlat;

namespace {
RootSystem rs_of(const std::string& tag) { return build_root_system(cartan_for_type(tag)); }

RootVector rv(std::vector<long long> c) {
    RootVector r;
    r.c = std::move(c);
    return r;
}
} // namespace

TEST_CASE("type tags") {
    CHECK(rs_of("A1").num_roots() == 2);
    CHECK(rs_of("A2").num_roots() == 6);
    CHECK(rs_of("A3").num_roots() == 12);
    CHECK(rs_of("B2").num_roots() == 8);
    CHECK(rs_of("C3").num_roots() == 18);
    CHECK(rs_of("G2").num_roots() == 12);
    CHECK(rs_of("F4").num_roots() == 48);
    CHECK(rs_of("D4").num_roots() == 24);
    CHECK_THROWS_AS(cartan_for_type("XX9"), NotFiniteType);
    CHECK_THROWS_AS(cartan_for_type("A0"), NotFiniteType);
    CHECK_THROWS_AS(cartan_for_type("E6"), NotFiniteType);
}

TEST_CASE("cartan validation") {
    CartanMatrix ok = cartan_for_type("A2");
    CHECK_NOTHROW(ok.validate());

    CartanMatrix asym{{{2, -1}, {0, 2}}};
    CHECK_THROWS_AS(asym.validate(), NotFiniteType);

    CartanMatrix affine{{{2, -2}, {-2, 2}}}; // det 0, not finite type
    CHECK_THROWS_AS(affine.validate(), NotFiniteType);

    CartanMatrix disconnected{{{2, 0}, {0, 2}}};
    CHECK_THROWS_AS(disconnected.validate(), NotFiniteType);

    CartanMatrix bad_diag{{{1, -1}, {-1, 2}}};
    CHECK_THROWS_AS(bad_diag.validate(), NotFiniteType);
}

TEST_CASE("A2 data") {
    RootSystem rs = rs_of("A2");
    CHECK(rs.highest_root == rv({1, 1}));
    CHECK(rs.c == std::vector<long long>{1, 1});
    CHECK(rs.e == std::vector<long long>{3, 3});
    CHECK(rs.d == std::vector<long long>{3, 3});
    CHECK(rs.dim_g() == 8);
    CHECK(weyl_elements(rs).size() == 6);
    // Canonical order: negatives by height then lex, then positives.
    CHECK(rs.roots.front() == rv({-1, -1}));
    CHECK(rs.roots.back() == rv({1, 1}));
    CHECK(rs.contains(rv({1, 0})));
    CHECK_FALSE(rs.contains(rv({2, 1})));
    CHECK_THROWS_AS(rs.index_of(rv({2, 1})), std::out_of_range);
}

TEST_CASE("G2 data") {
    RootSystem rs = rs_of("G2");
    CHECK(rs.highest_root == rv({3, 2}));
    CHECK(rs.c == std::vector<long long>{3, 2});
    CHECK(rs.e == std::vector<long long>{1, 1});
    CHECK(rs.d == std::vector<long long>{3, 2});
    CHECK(weyl_elements(rs).size() == 12);
}

TEST_CASE("B2 and C3 highest roots") {
    RootSystem b2 = rs_of("B2");
    CHECK(b2.highest_root == rv({1, 2}));
    CHECK(b2.c == std::vector<long long>{1, 2});
    RootSystem c3 = rs_of("C3");
    CHECK(c3.highest_root == rv({2, 2, 1}));
    CHECK(weyl_elements(c3).size() == 48);
}

TEST_CASE("A1 torsion") {
    RootSystem rs = rs_of("A1");
    CHECK(rs.c == std::vector<long long>{1});
    CHECK(rs.e == std::vector<long long>{2});
    CHECK(rs.d == std::vector<long long>{2});
    CHECK(torsion_order(rs, 0) == 2);
    CHECK(ramification_index(rs, 0) == 2);
}

TEST_CASE("pairing and coroot coordinates") {
    RootSystem rs = rs_of("A2");
    Coweight omega1{{Rat(1), Rat(0)}};
    CHECK(pair(rv({1, 0}), omega1) == Rat(1));
    CHECK(pair(rv({0, 1}), omega1) == Rat(0));
    CHECK(pair(rv({1, 1}), omega1) == Rat(1));
    auto x = coroot_coordinates(rs, omega1);
    CHECK(x == std::vector<Rat>{Rat(2, 3), Rat(1, 3)});
}

TEST_CASE("simple reflections act correctly") {
    RootSystem rs = rs_of("A2");
    Coweight theta{{Rat(1), Rat(0)}};
    Coweight s1 = btlat::apply(weyl_simple_reflection(rs, 0), theta);
    // s_1(omega_1^vee) = omega_1^vee - alpha_1^vee.
    CHECK(s1 == Coweight{{Rat(-1), Rat(1)}});
    Coweight back = btlat::apply(weyl_simple_reflection(rs, 0), s1);
    CHECK(back == theta);
}

TEST_CASE("explicit cartan equals tag") {
    CartanMatrix cm{{{2, -1}, {-1, 2}}};
    RootSystem rs = build_root_system(cm);
    CHECK(rs.num_roots() == 6);
    CHECK(rs.highest_root == rv({1, 1}));
}
