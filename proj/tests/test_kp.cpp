#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "greenring/kp.hpp"

using namespace greenring;

namespace {
RingElement X(int i) { return RingElement::basis(i); }
RingElement L(int k) { return RingElement::basis(k); }
}  // namespace

TEST_CASE("K_3 table equals the displayed relations") {
    const KpRing& k3 = KpRing::get(3);
    CHECK(k3.table().product(1, 1) == X(0) + X(1) + X(2));
    CHECK(k3.table().product(1, 2) == X(1));
    CHECK(k3.table().product(2, 2) == X(0));
    CHECK(k3.table().product(0, 2) == X(2));
}

TEST_CASE("K_2 is the group ring of Z/2") {
    const KpRing& k2 = KpRing::get(2);
    CHECK(k2.table().product(1, 1) == X(0));
}

TEST_CASE("K_5 recursion value") {
    const KpRing& k5 = KpRing::get(5);
    CHECK(k5.table().product(2, 4) == X(2));
}

TEST_CASE("generated tables are commutative, associative, unital") {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        const KpRing& kp = KpRing::get(p);
        CHECK(check_unit(kp.table()));
        CHECK(check_commutative(kp.table()));
        CHECK(check_associative(kp.table()));
    }
}

TEST_CASE("involution: X_{p-1} X_i = X_{p-1-i}") {
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        const KpRing& kp = KpRing::get(p);
        for (int i = 0; i <= p - 1; ++i)
            CHECK(kp.table().product(p - 1, i) == X(p - 1 - i));
    }
}

TEST_CASE("phi1 basics") {
    const KpRing& k5 = KpRing::get(5);
    CHECK(k5.phi1(0) == L(1));
    CHECK(k5.phi1(1) == L(1) + L(3));  // L_1 + L_{p-2}
    // X_2 image: (L_1+L_3)^2 - (L_1+L_3) - L_1 = 2 L_3
    CHECK(k5.phi1(2) == Int(2) * L(3));
    for (int i = 0; i <= 4; ++i) {
        RingElement img = k5.phi1(i);
        CHECK(img.nonnegative());
        for (const auto& [k, c] : img.coeffs()) CHECK(k % 2 == 1);
    }
}

TEST_CASE("phi1 is a based-ring homomorphism for p <= 13") {
    for (int p : {5, 7, 11, 13}) {
        const KpRing& kp = KpRing::get(p);
        const VerlindeRing& ver = VerlindeRing::get(p);
        std::vector<RingElement> img(p);
        for (int i = 0; i < p; ++i) img[i] = kp.phi1(i);
        for (int i = 0; i < p; ++i)
            for (int j = i; j < p; ++j) {
                RingElement lhs = ver.table().mul(img[i], img[j]);
                RingElement rhs;
                for (const auto& [k, c] : kp.table().product(i, j).coeffs())
                    rhs += c * img[static_cast<int>(k)];
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("phi2 kills the middle basis element") {
    for (int p : {5, 7, 11, 13}) {
        const KpRing& kp = KpRing::get(p);
        CHECK(kp.phi2((p - 1) / 2).is_zero());
        CHECK(kp.phi2(1) == L(3));
    }
}

TEST_CASE("phi3 is multiplicative (dimension character)") {
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        const KpRing& kp = KpRing::get(p);
        for (int i = 0; i < p; ++i) {
            CHECK(KpRing::phi3(i) == (i % 2 ? -1 : 1));
            for (int j = 0; j < p; ++j) {
                long long rhs = 0;
                for (const auto& [k, c] : kp.table().product(i, j).coeffs())
                    rhs += c.get_si() * KpRing::phi3(static_cast<int>(k));
                CHECK(rhs == KpRing::phi3(i) * KpRing::phi3(j));
            }
        }
    }
}

TEST_CASE("FPdim character") {
    const KpRing& k7 = KpRing::get(7);
    CHECK(k7.fpdim_char(0).numeric().value == doctest::Approx(1.0));  // [1]_q
    // X_{p-1} -> [p-1]_q since [p]_q = 0
    CHECK(k7.fpdim_char(6).numeric().value == doctest::Approx(qint_numeric(7, 6)));

    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        const KpRing& kp = KpRing::get(p);
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < p; ++j) {
                double lhs = kp.fpdim_char(i).numeric().value * kp.fpdim_char(j).numeric().value;
                double rhs = 0;
                for (const auto& [k, c] : kp.table().product(i, j).coeffs())
                    rhs += c.get_d() * kp.fpdim_char(static_cast<int>(k)).numeric().value;
                CHECK(std::fabs(lhs - rhs) < 1e-9);
            }
    }
}
