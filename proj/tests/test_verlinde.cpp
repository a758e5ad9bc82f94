#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <thread>

#include "greenring/verlinde.hpp"

using namespace greenring;

namespace {
const double PHI = (1.0 + std::sqrt(5.0)) / 2.0;

RingElement L(int k) { return RingElement::basis(k); }

RingElement random_nonneg(std::mt19937& rng, int p) {
    std::uniform_int_distribution<int> idx(1, p - 1), coeff(0, 3);
    RingElement e;
    for (int t = 0; t < 3; ++t) e.add(idx(rng), coeff(rng));
    return e;
}
}  // namespace

TEST_CASE("fusion rule basics") {
    CHECK(VerlindeRing::fuse(5, 1, 3) == L(3));             // unit
    CHECK(VerlindeRing::fuse(5, 4, 4) == L(1));             // L_4 invertible
    CHECK(VerlindeRing::fuse(3, 2, 2) == L(1));             // Ver_3 ~ sVec
    CHECK(VerlindeRing::fuse(5, 2, 2) == L(1) + L(3));
    CHECK(VerlindeRing::fuse(5, 2, 3) == L(2) + L(4));
    CHECK_THROWS_AS(VerlindeRing::fuse(5, 0, 2), precondition_error);
    CHECK_THROWS_AS(VerlindeRing::fuse(5, 1, 5), precondition_error);
}

TEST_CASE("powers of L_2 in Ver_5") {
    const VerlindeRing& ver = VerlindeRing::get(5);
    CHECK(ver.table().pow(L(2), 3) == Int(2) * L(2) + L(4));
    CHECK(ver.table().pow(L(2), 4) == Int(2) * L(1) + Int(3) * L(3));
    CHECK(ver.table().pow(ver.table().unit_element(), 5) == L(1));
}

TEST_CASE("table laws for small primes") {
    for (int p : {2, 3, 5, 7, 11}) {
        const VerlindeRing& ver = VerlindeRing::get(p);
        CHECK(check_unit(ver.table()));
        CHECK(check_commutative(ver.table()));
        CHECK(check_associative(ver.table()));
        // self-duality: L_1 appears in L_k L_k exactly once
        for (int k = 1; k <= p - 1; ++k)
            CHECK(ver.table().product(k, k).coeff(1) == 1);
    }
}

TEST_CASE("delta values") {
    const VerlindeRing& v5 = VerlindeRing::get(5);
    Approx d3 = v5.delta(L(3)).numeric();
    CHECK(std::fabs(d3.value - PHI) < 1e-12);  // (1+sqrt5)/2

    CHECK(v5.delta(L(1)).numeric().value == doctest::Approx(1.0).epsilon(1e-14));

    const VerlindeRing& v3 = VerlindeRing::get(3);
    CHECK(v3.delta(L(2)).numeric().value == doctest::Approx(1.0).epsilon(1e-14));

    CHECK_THROWS_AS(v5.delta(RingElement::from_pairs({{2, Int(-1)}})), precondition_error);
}

TEST_CASE("exact field arithmetic: phi^2 = phi + 1") {
    // [2]^2 = [1] + [3] at p = 5, as an exact identity in Q(2cos(pi/5))
    const QField& f = QField::get(5);
    Poly lhs = f.mul(f.qint_poly(2), f.qint_poly(2));
    Poly rhs = polyops::add(f.qint_poly(1), f.qint_poly(3));
    CHECK(f.is_zero(polyops::sub(lhs, rhs)));
    CHECK(f.sign(polyops::sub(f.qint_poly(3), f.qint_poly(1))) == 1);
    CHECK(f.sign(polyops::sub(f.qint_poly(1), f.qint_poly(3))) == -1);
}

TEST_CASE("sign decisions survive near-degenerate combinations") {
    // At p = 5 the generator evaluates to the golden ratio phi, and
    // F_n phi - F_{n+1} = -(-1)^n phi^{-n}: far below double resolution for
    // large n, so these force the high-precision interval path.
    const QField& f = QField::get(5);
    Int fib_prev = 0, fib_cur = 1;  // F_0, F_1
    Poly x0 = f.qint_poly(2);       // [2]_q = phi at p = 5
    for (int n = 1; n <= 120; ++n) {
        Int next = fib_prev + fib_cur;
        fib_prev = fib_cur;
        fib_cur = next;  // now fib_prev = F_n, fib_cur = F_{n+1}
        if (n < 100) continue;
        Poly val = polyops::sub(polyops::scale(x0, fib_prev), Poly{fib_cur});
        int expected = (n % 2 == 0) ? -1 : 1;
        CHECK(f.sign(val) == expected);
        CHECK_FALSE(f.is_zero(val));
    }
    // and an exact zero built the same way: phi^2 - phi - 1
    Poly sq = f.mul(x0, x0);
    CHECK(f.sign(polyops::sub(sq, polyops::add(x0, Poly{Int(1)}))) == 0);
}

TEST_CASE("dn sequences") {
    const VerlindeRing& v5 = VerlindeRing::get(5);
    auto rows = v5.dn_sequence(L(2), 5);
    std::vector<long> expect{1, 2, 3, 5, 8};  // Fibonacci
    for (int i = 0; i < 5; ++i) CHECK(rows[i].d_n == expect[i]);

    auto unit_rows = v5.dn_sequence(L(1), 6);
    for (const auto& r : unit_rows) {
        CHECK(r.d_n == 1);
        CHECK(r.c_n.value == doctest::Approx(1.0).epsilon(1e-12));
    }

    const VerlindeRing& v3 = VerlindeRing::get(3);
    for (const auto& r : v3.dn_sequence(L(2), 6)) {
        CHECK(r.d_n == 1);
        CHECK(r.c_n.value == doctest::Approx(1.0).epsilon(1e-12));
    }

    CHECK_THROWS_AS(v5.dn_sequence(RingElement(), 3), precondition_error);
}

TEST_CASE("support closure and K_V") {
    const VerlindeRing& v5 = VerlindeRing::get(5);
    auto k5 = v5.kv(L(2));
    CHECK(k5.closure == std::set<int>{1, 2, 3, 4});
    CHECK(std::fabs(k5.value.numeric().value - PHI) < 1e-12);

    auto k1 = v5.kv(L(1));
    CHECK(k1.closure == std::set<int>{1});
    CHECK(k1.value.numeric().value == doctest::Approx(1.0));

    const VerlindeRing& v7 = VerlindeRing::get(7);
    auto k6 = v7.kv(L(6));
    CHECK(k6.closure == std::set<int>{1, 6});
    CHECK(k6.value.numeric().value == doctest::Approx(1.0));
}

TEST_CASE("c_n >= K_V^{-1} with exact margins") {
    const VerlindeRing& v5 = VerlindeRing::get(5);
    auto rows = v5.check_p0(L(2), 20);
    for (const auto& r : rows) CHECK(r.exact_sign >= 0);
    // c_2 = 2/phi^2 vs phi^{-1}
    CHECK(std::fabs((rows[1].margin) - (2.0 / (PHI * PHI) - 1.0 / PHI)) < 1e-12);
    CHECK(rows[1].margin > 0);

    for (const auto& r : v5.check_p0(L(1), 10)) {
        CHECK(r.exact_sign == 0);  // equality c_n = 1 = K^{-1}
        CHECK(std::fabs(r.margin) < 1e-12);
    }

    const VerlindeRing& v3 = VerlindeRing::get(3);
    for (const auto& r : v3.check_p0(L(2), 10)) CHECK(r.exact_sign == 0);
}

TEST_CASE("delta multiplicativity, exact vector identity") {
    std::mt19937 rng(42);
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        const VerlindeRing& ver = VerlindeRing::get(p);
        for (int trial = 0; trial < 25; ++trial) {
            RingElement a = random_nonneg(rng, p);
            RingElement b = random_nonneg(rng, p);
            DeltaValue lhs = ver.delta(ver.table().mul(a, b));
            DeltaValue rhs = ver.delta(a).mul(ver.delta(b));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("d_n bounded by delta^n and supermultiplicative along powers") {
    std::mt19937 rng(99);
    for (int p : {3, 5, 7}) {
        const VerlindeRing& ver = VerlindeRing::get(p);
        for (int trial = 0; trial < 5; ++trial) {
            RingElement v = random_nonneg(rng, p);
            if (v.is_zero()) continue;
            auto rows = ver.dn_sequence(v, 8);
            const QField& f = QField::get(p);
            for (const auto& r : rows) {
                // delta^n - d_n >= 0, exactly
                Poly diff = polyops::sub(r.delta_pow.poly(),
                                         Poly{Int(r.d_n)});
                CHECK(f.sign(diff) >= 0);
            }
            for (std::size_t i = 0; i + 1 < rows.size(); ++i)
                for (std::size_t j = 0; i + j + 1 < rows.size(); ++j)
                    CHECK(rows[i + j + 1].d_n >= rows[i].d_n * rows[j].d_n);
        }
    }
}

TEST_CASE("numeric delta of simples lies in [1, 1/sin(pi/p)]") {
    for (int p : {2, 3, 5, 7, 11, 13}) {
        for (int k = 1; k <= p - 1; ++k) {
            double v = qint_numeric(p, k);
            CHECK(v >= 1.0 - 1e-12);
            CHECK(v <= 1.0 / std::sin(M_PI / p) + 1e-12);
        }
    }
}

TEST_CASE("bound evaluators") {
    CHECK(bound_lambda(2, 1.0) == doctest::Approx(4.0 * std::log(3.0) / 3.0));
    CHECK(bound_lambda(2, 1.0) == doctest::Approx(1.4648).epsilon(1e-4));
    CHECK(bound_lambda(3, 2.0) == doctest::Approx(48.0));
    CHECK_THROWS_AS(bound_lambda(2, 0.0), precondition_error);

    CHECK(std::exp(log_bound_kv_p2(1.0)) == doctest::Approx(std::pow(3.0, 1.0 / 3.0)));
    // abstract cross-check: the c lower bound 3^{-(4/3)d + 1} at d = 1
    CHECK(std::exp(-log_bound_kv_p2(1.0)) == doctest::Approx(std::pow(3.0, -1.0 / 3.0)));

    double a5 = default_ap(5);
    CHECK(log_bound_fp(5, 2.0) ==
          doctest::Approx(2.0 * a5 + (M_PI / 2.0) * 3.0 * 4.0 * std::log(2.0)));
    CHECK(log_bound_fp(5, 2.0, 7.0) ==
          doctest::Approx(14.0 + (M_PI / 2.0) * 3.0 * 4.0 * std::log(2.0)));
    CHECK(log_bound_fp(2, 3.0) == doctest::Approx(3.0 * 4.0 * std::log(3.0) / 3.0));
}

TEST_CASE("memoized fusion table tolerates concurrent use") {
    const VerlindeRing& ver = VerlindeRing::get(11);
    std::vector<std::thread> threads;
    std::vector<RingElement> results(4);
    for (int t = 0; t < 4; ++t)
        threads.emplace_back([&, t] {
            RingElement acc = ver.table().unit_element();
            for (int k = 1; k <= 10; ++k) acc = ver.table().mul(acc, L(1 + (t + k) % 10));
            results[t] = acc;
        });
    for (auto& th : threads) th.join();
    for (int t = 0; t < 4; ++t) CHECK(!results[t].is_zero());
    CHECK(results[0] == results[2]);  // same factor multiset, commutative ring
}

TEST_CASE("q-integer inequality chain") {
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
        bool ok = false;
        auto rows = qint_inequality_check(p, &ok);
        CHECK(ok);
        CHECK(static_cast<int>(rows.size()) == p - 1);
        // k = 1: min = 1 and (p/2) sin(pi/p) >= 1
        CHECK(rows[0].lhs == 1.0);
        CHECK(rows[0].mid >= 1.0 - 1e-12);
    }
}
