#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "greenring/asym.hpp"

using namespace greenring;
using namespace greenring::asym;
using greenring::rs::builtin_system;
using greenring::rs::WeightDistribution;

namespace {
double cl_j(int j, double s) {  // closed form C_{L(j)}(s) for SL2
    return 2.0 / std::sqrt(M_PI) * std::pow(2.0 * j * (j + 2) / 3.0, (s - 1.0) / 2.0) *
           std::tgamma(s / 2.0 + 1.0);
}
}  // namespace

TEST_CASE("d_n(V, s) values") {
    RootSystem a1 = builtin_system("A1");
    auto l1 = weight_preset(a1, "L1").joint;

    DnsValue d = dns(a1, l1, 10, 0.0);
    REQUIRE(d.exact.has_value());
    CHECK(*d.exact == 252);  // binomial(10, 5)

    DnsValue d1 = dns(a1, l1, 7, 1.0);
    REQUIRE(d1.exact.has_value());
    CHECK(*d1.exact == 128);  // (dim V)^n

    DnsValue dm1 = dns(a1, l1, 2, -1.0);
    CHECK(dm1.value == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("dns at s = 1 equals dim^n on all presets") {
    for (auto [sys_name, preset] :
         std::vector<std::pair<std::string, std::string>>{
             {"A1", "L1"}, {"A1", "L2"}, {"A2", "standard"}, {"A2", "adjoint"},
             {"B2", "vector"}, {"G2", "seven"}}) {
        RootSystem sys = builtin_system(sys_name);
        auto v = weight_preset(sys, preset).joint;
        Int dim = v.total();
        Int expect = 1;
        for (long n = 1; n <= 6; ++n) {
            expect *= dim;
            DnsValue d = dns(sys, v, n, 1.0);
            REQUIRE(d.exact.has_value());
            CHECK(*d.exact == expect);
        }
    }
}

TEST_CASE("gamma for SL2 modules") {
    RootSystem a1 = builtin_system("A1");
    CHECK(gamma_v(a1.factors[0], weight_preset(a1, "L1").joint) == Rat(2));
    for (int j = 1; j <= 6; ++j) {
        Rat g = gamma_v(a1.factors[0], weight_preset(a1, "L" + std::to_string(j)).joint);
        Rat expect(6, j * (j + 2));
        expect.canonicalize();
        CHECK(g == expect);
    }
    // V = L(1) + L(3): gamma = 6(2+4)/(1*2*3 + 3*4*5) = 6/11
    WeightDistribution v(1);
    for (int k : {-1, 1}) v.add({k}, 1);
    for (int k : {-3, -1, 1, 3}) v.add({k}, 1);
    CHECK(gamma_v(a1.factors[0], v) == Rat(6, 11));
}

TEST_CASE("gamma for rank-2 systems") {
    RootSystem a2 = builtin_system("A2");
    CHECK(gamma_v(a2.factors[0], weight_preset(a2, "standard").joint) == Rat(3));
    CHECK(gamma_v(a2.factors[0], weight_preset(a2, "adjoint").joint) == Rat(4, 3));

    RootSystem g2 = builtin_system("G2");
    gamma_v(g2.factors[0], weight_preset(g2, "seven").joint);  // proportionality asserted

    // a non-W-invariant distribution fails the proportionality check
    WeightDistribution skew(2);
    skew.add({1, 0}, 1);
    skew.add({-1, 0}, 1);
    CHECK_THROWS_AS(gamma_v(a2.factors[0], skew), precondition_error);
}

TEST_CASE("C_V(s) closed form") {
    RootSystem a1 = builtin_system("A1");
    auto rep1 = weight_preset(a1, "L1");
    CHECK(cvs(a1, rep1.factor_parts, 0.0) ==
          doctest::Approx(std::sqrt(2.0 / M_PI)).epsilon(1e-12));
    CHECK(cvs(a1, rep1.factor_parts, 0.0) == doctest::Approx(0.79788).epsilon(1e-4));

    for (int j = 1; j <= 3; ++j) {
        auto rep = weight_preset(a1, "L" + std::to_string(j));
        for (double s : {-0.5, 0.0, 0.5, 1.0, 2.0})
            CHECK(cvs(a1, rep.factor_parts, s) == doctest::Approx(cl_j(j, s)).epsilon(1e-10));
    }

    // s = 1 gives C_V = 1 for every system (the |W| = prod d_j identity)
    for (auto [sys_name, preset] :
         std::vector<std::pair<std::string, std::string>>{
             {"A1", "L2"}, {"A2", "standard"}, {"A2", "adjoint"}, {"B2", "vector"},
             {"G2", "seven"}, {"A1xA2", "L1,standard"}}) {
        RootSystem sys = builtin_system(sys_name);
        auto rep = weight_preset(sys, preset);
        CHECK(cvs(sys, rep.factor_parts, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(cvs(a1, rep1.factor_parts, -1.5), precondition_error);
}

TEST_CASE("asymptotic ratio approaches C_V(s)") {
    RootSystem a1 = builtin_system("A1");
    auto rep = weight_preset(a1, "L1");
    double target = std::sqrt(2.0 / M_PI);

    double r512 = asym_ratio(a1, rep.joint, 0.0, 512);
    CHECK(std::fabs(r512 / target - 1.0) <= 1.0 / (2.0 * 512));

    // s = 1: the ratio is exactly 1
    CHECK(asym_ratio(a1, rep.joint, 1.0, 9) == doctest::Approx(1.0).epsilon(1e-12));

    // A2 standard at s = 0: halving the mesh roughly halves the error
    RootSystem a2 = builtin_system("A2");
    auto std3 = weight_preset(a2, "standard");
    double c = cvs(a2, std3.factor_parts, 0.0);
    double r96 = asym_ratio(a2, std3.joint, 0.0, 96);
    double r192 = asym_ratio(a2, std3.joint, 0.0, 192);
    CHECK(std::fabs(r192 - c) < std::fabs(r96 - c));
    CHECK(std::fabs(r192 / c - 1.0) < 0.05);
}

TEST_CASE("closed-form coin-flip ratio via log-factorials") {
    CHECK(std::fabs(a1_coin_ratio(10000) - 1.0) <= 1e-3);
    CHECK(std::fabs(a1_coin_ratio(1000000) - 1.0) <= 1e-4);

    // cross-check the lgamma path against the exact binomial at n = 100
    Int binom = 1;
    for (int i = 0; i < 50; ++i) binom = binom * (100 - i) / (i + 1);
    double exact = binom.get_d() / std::pow(2.0, 100) * std::sqrt(M_PI * 100 / 2.0);
    CHECK(a1_coin_ratio(100) == doctest::Approx(exact).epsilon(1e-12));

    // d_n(L(1)) from the Weyl formula matches binomial(n, n/2) for n <= 12
    RootSystem a1 = builtin_system("A1");
    auto l1 = weight_preset(a1, "L1").joint;
    for (long n = 1; n <= 12; ++n) {
        Int b = 1;
        for (long i = 0; i < n / 2; ++i) b = b * (n - i) / (i + 1);
        CHECK(*dns(a1, l1, n, 0.0).exact == b);
    }
}

TEST_CASE("B2 ratio converges to the closed form at the expected 1/n rate") {
    RootSystem b2 = builtin_system("B2");
    auto rep = weight_preset(b2, "vector");
    double c = cvs(b2, rep.factor_parts, 0.0);
    double e24 = std::fabs(asym_ratio(b2, rep.joint, 0.0, 24) / c - 1.0);
    double e48 = std::fabs(asym_ratio(b2, rep.joint, 0.0, 48) / c - 1.0);
    CHECK(e48 < 0.08);
    CHECK(e48 < 0.75 * e24);  // roughly halves when n doubles
}

TEST_CASE("float path of dns agrees with exact accumulation") {
    RootSystem a1 = builtin_system("A1");
    auto l1 = weight_preset(a1, "L1").joint;
    for (long n : {4L, 6L, 9L}) {
        // exact: sum over dominant mu of mult * (mu+1)^2 for s = 2
        auto m = rs::tensor_power(l1, n);
        Int exact = 0;
        for (int mu = n % 2; mu <= n; mu += 2)
            exact += rs::simple_multiplicity(a1, m, {mu}) * (mu + 1) * (mu + 1);
        double approx = dns(a1, l1, n, 2.0).value;
        CHECK(approx == doctest::Approx(exact.get_d()).epsilon(1e-12));
    }
}

TEST_CASE("Macdonald-Mehta-Opdam identity by quadrature") {
    for (const char* name : {"A1", "A2", "B2", "G2"}) {
        RootSystem sys = builtin_system(name);
        for (double s : {-1.0, 0.0, 1.0, 2.0}) {
            MmoResult r = mmo_check(sys, s);
            INFO(name, " s=", s, " lhs=", r.lhs, " rhs=", r.rhs);
            CHECK(r.residual < 1e-6);
        }
        MmoResult half = mmo_check(sys, 0.5);
        CHECK(half.residual < 1e-6);
    }
    // product system through the generic rank-2 path
    RootSystem prod = builtin_system("A1xA1");
    for (double s : {-1.0, 0.0, 1.0, 2.0}) CHECK(mmo_check(prod, s).residual < 1e-6);

    CHECK_THROWS_AS(mmo_check(builtin_system("A1xA2"), 0.0), precondition_error);
    CHECK_THROWS_AS(mmo_check(builtin_system("A1"), -2.0), precondition_error);
}
