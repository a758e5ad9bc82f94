#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greenring/lie.hpp"

using namespace greenring;
using namespace greenring::lie;

TEST_CASE("exponent data is self-consistent") {
    std::vector<DynkinType> types;
    for (int r = 1; r <= 8; ++r) types.push_back(make_type(Family::A, r));
    for (int r = 2; r <= 8; ++r) types.push_back(make_type(Family::B, r));
    for (int r = 2; r <= 8; ++r) types.push_back(make_type(Family::C, r));
    for (int r = 4; r <= 8; ++r) types.push_back(make_type(Family::D, r));
    for (int r = 6; r <= 8; ++r) types.push_back(make_type(Family::E, r));
    types.push_back(make_type(Family::F, 4));
    types.push_back(make_type(Family::G, 2));
    for (const auto& t : types) CHECK(exponents_consistent(t));
}

TEST_CASE("type parsing") {
    CHECK(parse_type("E7").str() == "E7");
    CHECK(parse_type("B5").rank == 5);
    CHECK_THROWS_AS(parse_type("E9"), precondition_error);
    CHECK_THROWS_AS(parse_type("D3"), precondition_error);
    CHECK_THROWS_AS(parse_type("Z2"), precondition_error);
}

TEST_CASE("exponent pruning: headline cases") {
    CHECK(g_decomp(parse_type("E7"), 23) == std::vector<int>{3, 15});
    CHECK(g_decomp(parse_type("E8"), 37) == std::vector<int>{3, 23});
    // A_{m-1} with p > 2m: no pruning
    for (int m : {2, 3, 4, 5}) {
        std::vector<int> expect;
        for (int k = 2; k <= m; ++k) expect.push_back(2 * k - 1);
        CHECK(g_decomp(make_type(Family::A, m - 1), 2 * m + 1 <= 5 ? 5 : 11) == expect);
    }
    CHECK_THROWS_AS(g_decomp(parse_type("E8"), 29), precondition_error);  // p <= h
}

TEST_CASE("exponent pruning reproduces the exceptional table") {
    for (const auto& e : exceptional_table())
        CHECK(g_decomp(parse_type(e.type), e.p) == e.decomp);
}

TEST_CASE("B-series closed form") {
    for (int p : {11, 13, 17, 19, 23, 29, 31}) {
        for (int m = 2; 2 * m <= p - 7; ++m) {
            std::vector<int> expect;
            int top = std::min(m, (p - 1) / 2 - m);
            for (int i = 1; i <= top; ++i) expect.push_back(4 * i - 1);
            CHECK(g_decomp(make_type(Family::B, m), p) == expect);
        }
    }
}

TEST_CASE("D-series pattern") {
    for (int p : {11, 13, 17, 19, 23, 29, 31}) {
        for (int t = 0; 4 * t <= p - 7; ++t) {
            int m = (p - 1) / 2 - t;
            if (m < 4) continue;
            std::vector<int> expect;
            for (int i = 0; i <= t; ++i) expect.push_back(4 * i + 3);
            expect.push_back(p - 2 - 2 * t);
            std::sort(expect.begin(), expect.end());
            CHECK(g_decomp(make_type(Family::D, m), p) == expect);
        }
    }
}

TEST_CASE("level-rank shadow: B_m matches C_{(p-1)/2 - m}") {
    for (int p : {11, 13, 17, 19, 23, 29, 31}) {
        for (int m = 2; 2 * m <= p - 7; ++m) {
            int dual_rank = (p - 1) / 2 - m;
            if (dual_rank < 2) continue;
            CHECK(g_decomp(make_type(Family::B, m), p) ==
                  g_decomp(make_type(Family::C, dual_rank), p));
        }
    }
}

TEST_CASE("strange formula holds exactly for all families") {
    CHECK(strange_check(make_type(Family::A, 1)));  // 2 = 1*2*2*3*1/6
    for (int r = 1; r <= 8; ++r) CHECK(strange_check(make_type(Family::A, r)));
    for (int r = 2; r <= 8; ++r) {
        CHECK(strange_check(make_type(Family::B, r)));
        CHECK(strange_check(make_type(Family::C, r)));
    }
    for (int r = 4; r <= 8; ++r) CHECK(strange_check(make_type(Family::D, r)));
    for (int r = 6; r <= 8; ++r) CHECK(strange_check(make_type(Family::E, r)));
    CHECK(strange_check(make_type(Family::F, 4)));
    CHECK(strange_check(make_type(Family::G, 2)));
}

TEST_CASE("balanced Gauss-polynomial dimensions") {
    std::vector<int> expect{0, 1, 1, 1, 2, 2, 2};
    for (int i = 0; i < 7; ++i) CHECK(gauss_d(5 + 2 * i) == expect[i]);

    auto [a0, a2] = gauss_balanced_a0_a2(7);
    CHECK(a0 == 5);  // partitions in a 4x3 box
    CHECK(a2 == 4);

    Int prev = 0;
    for (int r = 5; r <= 61; r += 2) {
        Int d = gauss_d(r);
        CHECK(d >= 0);
        CHECK(d >= prev);
        prev = d;
    }
    CHECK_THROWS_AS(gauss_d(6), precondition_error);
    CHECK_THROWS_AS(gauss_d(3), precondition_error);
}

TEST_CASE("rank-2 catalogue") {
    auto eleven = rank2_catalogue(11);
    REQUIRE(eleven.size() == 3);
    CHECK(eleven[0].name == "A2");
    CHECK(eleven[0].decomp == std::vector<int>{3, 5});
    CHECK(eleven[1].name == "B2");
    CHECK(eleven[1].decomp == std::vector<int>{3, 7});
    CHECK(eleven[2].name == "D2*");
    CHECK(eleven[2].decomp == std::vector<int>{3, 9});

    auto e37 = rank2_catalogue(37);
    bool has_estar2 = false;
    for (const auto& e : e37)
        if (e.name == "E2**" && e.decomp == std::vector<int>{3, 23}) has_estar2 = true;
    CHECK(has_estar2);

    CHECK(rank2_catalogue(5).empty());

    // catalogue rows agree with the pruning procedure where both apply
    for (int p : {11, 13, 17, 19, 23, 29, 31, 37}) {
        for (const auto& e : rank2_catalogue(p)) {
            if (e.name == "A2") CHECK(g_decomp(parse_type("A2"), p) == e.decomp);
            if (e.name == "B2") CHECK(g_decomp(parse_type("B2"), p) == e.decomp);
            if (e.name == "G2") CHECK(g_decomp(parse_type("G2"), p) == e.decomp);
            if (e.name == "D2*")
                CHECK(g_decomp(make_type(Family::D, (p - 1) / 2), p) == e.decomp);
            if (e.name == "E2*") CHECK(g_decomp(parse_type("E7"), p) == e.decomp);
            if (e.name == "E2**") CHECK(g_decomp(parse_type("E8"), p) == e.decomp);
        }
    }
}
