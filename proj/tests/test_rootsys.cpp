#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "greenring/asym.hpp"
#include "greenring/rootsys.hpp"

using namespace greenring;
using namespace greenring::rs;

TEST_CASE("built-in systems and their invariants") {
    RootSystem a1 = builtin_system("A1");
    CHECK(a1.rank() == 1);
    CHECK(a1.num_pos() == 1);
    CHECK(a1.weyl_order() == 2);
    CHECK(a1.factors[0].degrees == std::vector<int>{2});

    RootSystem a2 = builtin_system("A2");
    CHECK(a2.num_pos() == 3);
    CHECK(a2.weyl_order() == 6);
    CHECK(a2.factors[0].degrees == std::vector<int>{2, 3});

    RootSystem b2 = builtin_system("B2");
    CHECK(b2.num_pos() == 4);
    CHECK(b2.factors[0].num_short() == 2);
    CHECK(b2.factors[0].laced == 2);
    CHECK(b2.factors[0].degrees == std::vector<int>{2, 4});

    RootSystem g2 = builtin_system("G2");
    CHECK(g2.num_pos() == 6);
    CHECK(g2.factors[0].num_short() == 3);
    CHECK(g2.weyl_order() == 12);

    RootSystem prod = builtin_system("A1xA2");
    CHECK(prod.rank() == 3);
    CHECK(prod.weyl_order() == 12);
    CHECK(prod.wrho_list().size() == 12);

    CHECK_THROWS_AS(builtin_system("F4"), precondition_error);
}

TEST_CASE("tensor powers of the A1 doublet") {
    RootSystem a1 = builtin_system("A1");
    auto v = asym::weight_preset(a1, "L1").joint;
    WeightDistribution m = tensor_power(v, 4);
    CHECK(m.at({-4}) == 1);
    CHECK(m.at({-2}) == 4);
    CHECK(m.at({0}) == 6);
    CHECK(m.at({2}) == 4);
    CHECK(m.at({4}) == 1);
    CHECK(m.total() == 16);
    CHECK(tensor_power(v, 1).at({1}) == 1);
}

TEST_CASE("tensor square of the A2 standard") {
    RootSystem a2 = builtin_system("A2");
    auto v = asym::weight_preset(a2, "standard").joint;
    WeightDistribution m = tensor_power(v, 2);
    CHECK(m.total() == 9);
    CHECK(m.support_size() == 6);
    CHECK(m.at({2, 0}) == 1);
    CHECK(m.at({0, 1}) == 2);
    CHECK(m.at({1, -1}) == 2);
    CHECK(m.at({-2, 2}) == 1);
    CHECK(m.at({-1, 0}) == 2);
    CHECK(m.at({0, -2}) == 1);
}

TEST_CASE("presets are Weyl invariant and stay so under tensor powers") {
    for (auto [sys_name, preset] :
         std::vector<std::pair<std::string, std::string>>{
             {"A1", "L3"}, {"A2", "standard"}, {"A2", "adjoint"}, {"B2", "vector"},
             {"G2", "seven"}}) {
        RootSystem sys = builtin_system(sys_name);
        auto v = asym::weight_preset(sys, preset).joint;
        CHECK(v.is_weyl_invariant(sys));
        CHECK(tensor_power(v, 3).is_weyl_invariant(sys));
    }
}

TEST_CASE("simple multiplicities via the Weyl character formula") {
    RootSystem a1 = builtin_system("A1");
    auto v = asym::weight_preset(a1, "L1").joint;
    WeightDistribution m = tensor_power(v, 4);
    CHECK(simple_multiplicity(a1, m, {0}) == 2);  // 6 - 4
    CHECK(simple_multiplicity(a1, m, {4}) == 1);
    CHECK(simple_multiplicity(a1, m, {2}) == 3);

    // a non-representation triggers the negativity error
    WeightDistribution bad(1);
    bad.add({2}, 1);
    CHECK_THROWS_AS(simple_multiplicity(a1, bad, {0}), precondition_error);
}

TEST_CASE("Weyl dimension formula") {
    RootSystem a1 = builtin_system("A1");
    CHECK(weyl_dim(a1, {0}) == Rat(1));
    for (int j = 1; j <= 9; ++j) CHECK(weyl_dim(a1, {j}) == Rat(j + 1));

    RootSystem a2 = builtin_system("A2");
    CHECK(weyl_dim(a2, {1, 1}) == Rat(8));  // adjoint
    CHECK(weyl_dim(a2, {1, 0}) == Rat(3));

    RootSystem b2 = builtin_system("B2");
    CHECK(weyl_dim(b2, {1, 0}) == Rat(5));  // vector
    CHECK(weyl_dim(b2, {0, 1}) == Rat(4));  // spinor

    RootSystem g2 = builtin_system("G2");
    CHECK(weyl_dim(g2, {1, 0}) == Rat(7));
    CHECK(weyl_dim(g2, {0, 1}) == Rat(14));  // adjoint

    // integrality sweep
    for (const char* name : {"A2", "B2", "G2"}) {
        RootSystem sys = builtin_system(name);
        for (int a = 0; a <= 10; ++a)
            for (int b = 0; b <= 10; ++b) weyl_dim(sys, {a, b});  // asserts internally
    }

    RootSystem prod = builtin_system("A1xB2");
    CHECK(weyl_dim(prod, {1, 1, 0}) == Rat(10));  // 2 * 5
}
