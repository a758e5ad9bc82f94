#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "greenring/ring.hpp"

using namespace greenring;

namespace {

RingElement random_element(std::mt19937& rng, int lo, int hi, int max_coeff) {
    std::uniform_int_distribution<int> idx(lo, hi), coeff(-max_coeff, max_coeff);
    RingElement e;
    for (int t = 0; t < 4; ++t) e.add(idx(rng), coeff(rng));
    return e;
}

// Z/2 group ring: a tiny hand-rolled table for plumbing tests.
FusionTable z2_table() {
    return FusionTable(0, 2, 0, [](int i, int j) { return RingElement::basis(i ^ j); });
}

}  // namespace

TEST_CASE("canonical form drops zeros") {
    RingElement e;
    e.add(3, 5);
    e.add(3, -5);
    CHECK(e.is_zero());
    CHECK(e.coeff(3) == 0);
    e.add(7, 2);
    CHECK(e.support_size() == 1);
    CHECK(e == RingElement::from_pairs({{7, Int(2)}}));
}

TEST_CASE("abelian group axioms on random elements") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 200; ++trial) {
        RingElement a = random_element(rng, 0, 9, 8);
        RingElement b = random_element(rng, 0, 9, 8);
        RingElement c = random_element(rng, 0, 9, 8);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a - a == RingElement());
        CHECK(a + RingElement() == a);
        CHECK(-(-a) == a);
        CHECK(Int(3) * (a + b) == Int(3) * a + Int(3) * b);
    }
}

TEST_CASE("summand_count") {
    RingElement e = RingElement::basis(1) + RingElement::basis(3);
    CHECK(summand_count(e) == 2);

    RingElement f = Int(2) * RingElement::basis(2) + RingElement::basis(4);
    CHECK(summand_count(f) == 3);

    // Green ring of Z/9: v_r with 3 | r are negligible.
    RingElement g = RingElement::basis(1) + RingElement::basis(3);
    CHECK(summand_count(g, [](std::int64_t r) { return r % 3 == 0; }) == 1);

    RingElement neg = RingElement::from_pairs({{2, Int(-1)}});
    CHECK_THROWS_AS(summand_count(neg), precondition_error);
}

TEST_CASE("fusion table plumbing on the Z/2 group ring") {
    FusionTable t = z2_table();
    CHECK(check_unit(t));
    CHECK(check_commutative(t));
    CHECK(check_associative(t));

    RingElement a = RingElement::basis(0) + Int(3) * RingElement::basis(1);
    CHECK(t.mul(t.unit_element(), a) == a);
    CHECK(t.pow(t.unit_element(), 5) == t.unit_element());

    RingElement bad = RingElement::basis(7);
    CHECK_THROWS_AS(t.mul(bad, a), precondition_error);
    CHECK_THROWS_AS(t.pow(a, 0), precondition_error);
}

TEST_CASE("pow is multiplicative in the exponent") {
    FusionTable t = z2_table();
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        RingElement a = random_element(rng, 0, 1, 5);
        if (a.is_zero()) continue;
        std::uniform_int_distribution<int> exp(1, 6);
        int n = exp(rng), m = exp(rng);
        CHECK(t.pow(a, n + m) == t.mul(t.pow(a, n), t.pow(a, m)));
    }
}
