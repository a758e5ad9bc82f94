#pragma once

// The golden-fixture registry behind `greenring selftest`: every worked
// numeric example and property suite at desk scale, one fixture per topic.
// A fixture passes by returning and fails by throwing; the runner turns
// that into a machine-readable report.

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "greenring/asym.hpp"
#include "greenring/chartab.hpp"
#include "greenring/green.hpp"
#include "greenring/jordan.hpp"
#include "greenring/kp.hpp"
#include "greenring/lie.hpp"
#include "greenring/verlinde.hpp"

namespace greenring::selftest {

struct Fixture {
    std::string id;
    std::string description;
    std::function<void(std::string& detail)> run;
};

struct FixtureResult {
    std::string id;
    bool pass;
    std::string detail;
};

struct Report {
    std::vector<FixtureResult> results;
    int failures = 0;
};

// Seed for the randomized property fixtures; fixed by default so runs are
// reproducible, overridable via the CLI --seed flag.
inline unsigned& seed() {
    static unsigned s = 20240817;
    return s;
}

namespace detail {

inline void expect(bool cond, const std::string& what) {
    if (!cond) throw internal_error("fixture check failed: " + what);
}

inline RingElement L(int k) { return RingElement::basis(k); }
inline RingElement X(int i) { return RingElement::basis(i); }
inline RingElement V(long long r) { return RingElement::basis(r); }

inline std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

}  // namespace detail

inline std::vector<Fixture> all_fixtures() {
    using namespace detail;
    std::vector<Fixture> fx;
    auto add = [&fx](std::string id, std::string desc,
                     std::function<void(std::string&)> run) {
        fx.push_back({std::move(id), std::move(desc), std::move(run)});
    };

    // --- characteristic-zero asymptotics -------------------------------------

    add("asym-cl1-1e4", "c_n(L(1)) sqrt(pi n/2) within 1e-3 at n=10^4", [](std::string& d) {
        double m = std::fabs(asym::a1_coin_ratio(10000) - 1.0);
        d = "margin " + fmt(1e-3 - m);
        expect(m <= 1e-3, "cl1 at n=1e4");
    });
    add("asym-cl1-1e6", "c_n(L(1)) sqrt(pi n/2) within 1e-4 at n=10^6", [](std::string& d) {
        double m = std::fabs(asym::a1_coin_ratio(1000000) - 1.0);
        d = "margin " + fmt(1e-4 - m);
        expect(m <= 1e-4, "cl1 at n=1e6");
    });
    add("asym-coin-n10", "d_10(C^2) = binom(10,5) = 252", [](std::string&) {
        auto sys = rs::builtin_system("A1");
        auto v = asym::weight_preset(sys, "L1").joint;
        expect(*asym::dns(sys, v, 10, 0.0).exact == 252, "binomial value");
    });
    add("asym-cv-l1", "C_{L(1)}(0) = sqrt(2/pi)", [](std::string& d) {
        auto sys = rs::builtin_system("A1");
        auto rep = asym::weight_preset(sys, "L1");
        double c = asym::cvs(sys, rep.factor_parts, 0.0);
        d = "value " + fmt(c);
        expect(std::fabs(c - std::sqrt(2.0 / M_PI)) < 1e-12, "C_{L(1)}(0)");
    });
    add("asym-cv-s1", "C_V(1) = 1 on every preset", [](std::string&) {
        for (auto [s, p] : std::vector<std::pair<std::string, std::string>>{
                 {"A1", "L2"}, {"A2", "standard"}, {"A2", "adjoint"},
                 {"B2", "vector"}, {"G2", "seven"}}) {
            auto sys = rs::builtin_system(s);
            auto rep = asym::weight_preset(sys, p);
            expect(std::fabs(asym::cvs(sys, rep.factor_parts, 1.0) - 1.0) < 1e-12, s);
        }
    });
    add("asym-dim-exact", "sum mult*dim = dim^n exactly, n <= 12", [](std::string&) {
        for (auto [s, p] : std::vector<std::pair<std::string, std::string>>{
                 {"A1", "L1"}, {"A2", "standard"}, {"B2", "vector"}, {"G2", "seven"}}) {
            auto sys = rs::builtin_system(s);
            auto v = asym::weight_preset(sys, p).joint;
            Int expect_val = 1;
            for (long n = 1; n <= 12; ++n) {
                expect_val *= v.total();
                expect(*asym::dns(sys, v, n, 1.0).exact == expect_val, s + " at n");
            }
        }
    });
    add("asym-mmo", "MMO identity residual < 1e-6 on A1/A2/B2/G2", [](std::string& d) {
        double worst = 0.0;
        for (const char* name : {"A1", "A2", "B2", "G2"})
            for (double s : {-1.0, 0.0, 1.0, 2.0}) {
                double r = asym::mmo_check(rs::builtin_system(name), s).residual;
                worst = std::max(worst, r);
            }
        d = "max residual " + fmt(worst);
        expect(worst < 1e-6, "MMO residual");
    });
    add("asym-ratio-a2", "A2 standard ratio approaches C_V(0), n=400", [](std::string& d) {
        auto sys = rs::builtin_system("A2");
        auto rep = asym::weight_preset(sys, "standard");
        double c = asym::cvs(sys, rep.factor_parts, 0.0);
        double r200 = asym::asym_ratio(sys, rep.joint, 0.0, 200);
        double r400 = asym::asym_ratio(sys, rep.joint, 0.0, 400);
        d = "rel err " + fmt(std::fabs(r400 / c - 1.0));
        expect(std::fabs(r400 - c) < std::fabs(r200 - c), "error decreases");
        expect(std::fabs(r400 / c - 1.0) < 0.05, "within 5 percent");
    });

    // --- bounds ----------------------------------------------------------------

    add("bound-consistency", "log K_V <= log f_p(delta) and lambda <= bound", [](std::string&) {
        for (int p : {2, 3, 5, 7, 11, 13}) {
            const VerlindeRing& ver = VerlindeRing::get(p);
            for (int k = 1; k <= p - 1; ++k) {
                RingElement v = L(k);
                auto kv = ver.kv(v);
                double delta = ver.delta(v).numeric().value;
                if (delta < 1.0) delta = 1.0;
                expect(std::log(kv.value.numeric().value) <=
                           log_bound_fp(p, delta) + 1e-9, "K_V vs f_p");
                double lambda_emp = 0.0;
                for (const auto& row : ver.dn_sequence(v, 20))
                    lambda_emp = std::max(lambda_emp, -std::log(row.c_n.value));
                expect(lambda_emp <= bound_lambda(p, delta) + 1e-9, "lambda vs bound");
            }
        }
    });
    add("ver-bounds", "headline bound values", [](std::string&) {
        expect(std::fabs(bound_lambda(2, 1.0) - 4.0 * std::log(3.0) / 3.0) < 1e-12, "a_2");
        expect(std::fabs(bound_lambda(3, 2.0) - 48.0) < 1e-12, "a_3 * 2");
        expect(std::fabs(std::exp(log_bound_kv_p2(1.0)) - std::cbrt(3.0)) < 1e-12, "3^{1/3}");
        double a5 = default_ap(5);
        expect(std::fabs(log_bound_fp(5, 2.0) -
                         (2 * a5 + M_PI / 2 * 3 * 4 * std::log(2.0))) < 1e-12, "f_5(2)");
    });

    // --- Green ring of Z/p^n ------------------------------------------------------

    add("green-dn-p2", "all basis classes of Gbar are invertible at p=2", [](std::string&) {
        green::CyclicContext ctx(2, 6);
        for (long long r : {1LL, 3LL, 21LL, 63LL})
            for (const auto& row : green::dn_cyclic(ctx, r, 10))
                expect(row.d_n == 1, "d_n = 1");
    });
    add("green-dn-p3-u4", "delta(u_4) = 2, d_2 = 3, c_2 = 3/4 over Z/9", [](std::string&) {
        green::CyclicContext ctx(3, 2);
        expect(std::fabs(green::delta_class(ctx, 4).value - 2.0) < 1e-12, "delta");
        auto rows = green::dn_cyclic(ctx, 4, 2);
        expect(rows[1].d_n == 3, "d_2");
        expect(std::fabs(rows[1].c_n.value - 0.75) < 1e-12, "c_2");
    });
    add("green-factorize-1023", "u_1023 = L_3 (x) X_4 (x) X_0 (x) X_1 (x) X_1", [](std::string&) {
        green::CyclicContext ctx(5, 5);
        auto f = green::factorize(ctx, 1023);
        expect(f.base == 3 && f.levels == std::vector<int>{4, 0, 1, 1}, "chain");
        expect(green::reconstruct(ctx, f) == 1023, "round trip");
    });
    add("green-factorize-99-53", "factorization chains at p = 2", [](std::string&) {
        green::CyclicContext ctx(2, 7);
        auto f99 = green::factorize(ctx, 99);
        auto f53 = green::factorize(ctx, 53);
        expect(f99.levels == std::vector<int>{1, 0, 0, 1, 0, 1}, "u_99");
        expect(f53.levels == std::vector<int>{1, 1, 1, 0, 1, 0}, "u_53");
    });
    add("green-formula-cases", "eq (5.1)/(5.2) worked cases at p=3, q=3", [](std::string&) {
        green::CyclicContext ctx(3, 2);
        expect(green::w_mul(ctx, 3, 2) == V(5) - V(1), "w case r <= q");
        expect(green::w_mul(ctx, 3, 4) == V(7) + V(1), "w middle case");
        expect(green::w_mul(ctx, 3, 7) == V(4) + Int(2) * V(9) - V(8), "w top case");
        expect(green::vq1_mul(ctx, 3, 2) == V(1) + V(3), "vq1 case r < q");
        expect(green::vq1_mul(ctx, 3, 4) == V(5) + V(3), "vq1 case r >= q");
        expect(green::vq1_mul(ctx, 3, 3) == Int(2) * V(3), "r1 = 0");
    });
    add("green-project", "projection drops p | r", [](std::string&) {
        green::CyclicContext ctx(3, 2);
        expect(green::project(ctx, V(1) + V(3)) == V(1), "drop v_3");
        expect(green::project(ctx, V(4) + Int(2) * V(9) - V(8)) == V(4) - V(8), "drop v_9");
    });
    add("green-u87", "u_99 u_53 = u_87 in Gbar_7 at p = 2", [](std::string&) {
        green::CyclicContext ctx(2, 7);
        expect(green::ssbar_mul(ctx, 99, 53) == V(87), "product");
    });
    add("green-oracle-sweep", "project(oracle) = ssbar over (2,<=4),(3,<=3),(5,2)",
        [](std::string& d) {
            long checks = 0;
            for (auto [p, nmax] : std::vector<std::pair<int, int>>{{2, 4}, {3, 3}, {5, 2}}) {
                for (int n = 1; n <= nmax; ++n) {
                    green::CyclicContext ctx(p, n);
                    for (long long a = 1; a <= ctx.pn; ++a)
                        for (long long b = a; b <= ctx.pn; ++b) {
                            if (a * b > 10000) continue;
                            RingElement lhs = green::project(
                                ctx, jordan::oracle_mul(p, n, a, b).to_element());
                            RingElement rhs = (a % p && b % p)
                                                  ? green::ssbar_mul(ctx, a, b)
                                                  : RingElement();
                            expect(lhs == rhs, "pair " + std::to_string(a) + "," +
                                                   std::to_string(b));
                            ++checks;
                        }
                }
            }
            d = std::to_string(checks) + " pairs";
        });
    add("green-bijection", "factorize/reconstruct bijection over full ranges",
        [](std::string& d) {
            long checks = 0;
            for (auto [p, nmax] :
                 std::vector<std::pair<int, int>>{{2, 10}, {3, 6}, {5, 5}, {7, 4}})
                for (int n = 1; n <= nmax; ++n) {
                    green::CyclicContext ctx(p, n);
                    for (long long r = 1; r <= ctx.pn; ++r) {
                        if (r % p == 0) continue;
                        expect(green::reconstruct(ctx, green::factorize(ctx, r)) == r,
                               "round trip");
                        ++checks;
                    }
                }
            d = std::to_string(checks) + " classes";
        });
    add("green-wv-oracle", "w and v_{q-1} formulas match the oracle", [](std::string&) {
        for (auto [p, q] : std::vector<std::pair<int, long long>>{
                 {2, 2}, {2, 4}, {3, 3}, {3, 9}, {5, 5}}) {
            int n = 1;
            while (pow_ll(p, n) < p * q) ++n;
            green::CyclicContext ctx(p, n);
            for (long long r = 1; r <= p * q; ++r) {
                expect(green::vq1_mul(ctx, q, r) ==
                           jordan::oracle_mul(p, n, q - 1, r).to_element(), "vq1");
                expect(green::w_mul(ctx, q, r) ==
                           jordan::oracle_mul(p, n, q + 1, r).to_element() -
                               jordan::oracle_mul(p, n, q - 1, r).to_element(), "w");
            }
        }
    });

    // --- finite groups ----------------------------------------------------------

    add("grp-d4-oscillation", "order-8 oscillation between 1 and 1/2", [](std::string&) {
        auto t = grp::d4_table();
        std::vector<Int> v(5, Int(0));
        v[4] = 1;
        for (long k = 1; k <= 10; ++k) {
            expect(grp::cn(t, v, 2 * k) == Rat(1), "even");
            expect(grp::cn(t, v, 2 * k + 1) == Rat(1, 2), "odd");
        }
    });
    add("grp-orthogonality", "orthogonality relations for all tables", [](std::string&) {
        grp::s3_table();
        grp::s4_table();
        grp::d4_table();
        grp::q8_table();
        for (int m = 3; m <= 8; ++m) grp::sm_table(m);  // verify() runs inside
    });
    add("grp-s3", "S_3 standard: c_1 = 1/2, c(V) = 2/3", [](std::string&) {
        auto t = grp::s3_table();
        std::vector<Int> v{Int(0), Int(0), Int(1)};
        expect(grp::cn(t, v, 1) == Rat(1, 2), "c_1");
        expect(grp::climit(t, v) == Rat(2, 3), "c(V)");
        expect(grp::cs_bound(t) >= 2.0 / 3.0, "CS bound");
    });
    add("grp-s4", "S_4: c(V) = 5/12 <= sqrt(5/24)", [](std::string&) {
        auto t = grp::s4_table();
        std::vector<Int> v{Int(0), Int(0), Int(0), Int(1), Int(0)};
        expect(grp::climit(t, v) == Rat(5, 12), "c(V)");
        expect(grp::cs_bound(t) >= 5.0 / 12.0, "CS bound");
    });
    add("grp-s5-involutions", "sum of dims of S_5 = 26", [](std::string&) {
        auto t = grp::sm_table(5);
        Rat dims(0);
        for (int i = 0; i < t.k(); ++i) dims += t.dim(i);
        expect(dims == Rat(26), "involutions");
    });
    add("grp-sm-closed-form", "involution sum equals table value, m <= 8", [](std::string&) {
        expect(grp::sm_climit(3) == Rat(2, 3), "m=3");
        expect(grp::sm_climit(4) == Rat(5, 12), "m=4");
        for (int m = 5; m <= 8; ++m) grp::sm_climit(m);  // cross-check inside
    });

    // --- Jordan oracle ------------------------------------------------------------

    add("jordan-commutativity", "tensor order does not matter, sampled up to 40",
        [](std::string& d) {
            long checks = 0;
            for (long long a = 1; a <= 14; ++a)
                for (long long b = a + 1; b <= 14; ++b) {
                    expect(jordan::compute_jordan_type(5, 3, a, b) ==
                               jordan::compute_jordan_type(5, 3, b, a),
                           "small pair");
                    ++checks;
                }
            for (auto [a, b] : std::vector<std::pair<long long, long long>>{
                     {23, 40}, {31, 40}, {39, 40}, {29, 37}, {38, 39}}) {
                expect(jordan::compute_jordan_type(5, 3, a, b) ==
                           jordan::compute_jordan_type(5, 3, b, a),
                       "large pair");
                ++checks;
            }
            d = std::to_string(checks) + " pairs both ways";
        });
    add("jordan-basics", "small Jordan types", [](std::string&) {
        expect(jordan::oracle_mul(2, 1, 2, 2).parts == std::vector<long long>{2, 2}, "2x2");
        expect(jordan::oracle_mul(3, 2, 2, 2).parts == std::vector<long long>{3, 1}, "v2v2");
        expect(jordan::oracle_mul(3, 2, 2, 4).parts == std::vector<long long>{5, 3}, "v2v4");
        expect(jordan::green_mul_oracle(3, 2, V(4), V(4)) ==
                   V(1) + V(3) + V(5) + V(7), "v4^2");
        expect(jordan::green_mul_oracle(2, 2, V(3), V(3)) == V(1) + Int(2) * V(4), "p2 v3^2");
    });

    // --- K_p ------------------------------------------------------------------------

    add("kp-k2", "K_2 is the group ring of Z/2", [](std::string&) {
        expect(KpRing::get(2).table().product(1, 1) == X(0), "X1^2");
    });
    add("kp-k3", "K_3 table equals the displayed relations", [](std::string&) {
        const KpRing& k3 = KpRing::get(3);
        expect(k3.table().product(1, 1) == X(0) + X(1) + X(2), "X1 X1");
        expect(k3.table().product(1, 2) == X(1), "X1 X2");
        expect(k3.table().product(2, 2) == X(0), "X2 X2");
    });
    add("kp-k5-x2x4", "X_2 X_4 = X_2 in K_5", [](std::string&) {
        expect(KpRing::get(5).table().product(2, 4) == X(2), "value");
    });
    add("kp-phi1", "phi_1 is a based-ring homomorphism, p <= 13", [](std::string&) {
        for (int p : {5, 7, 11, 13}) {
            const KpRing& kp = KpRing::get(p);
            const VerlindeRing& ver = VerlindeRing::get(p);
            std::vector<RingElement> img(p);
            for (int i = 0; i < p; ++i) img[i] = kp.phi1(i);
            expect(img[1] == L(1) + L(p - 2), "phi1(X_1)");
            for (int i = 0; i < p; ++i)
                for (int j = i; j < p; ++j) {
                    RingElement lhs = ver.table().mul(img[i], img[j]);
                    RingElement rhs;
                    for (const auto& [k, c] : kp.table().product(i, j).coeffs())
                        rhs += c * img[static_cast<int>(k)];
                    expect(lhs == rhs, "homomorphism");
                }
        }
    });
    add("kp-phi2", "phi_2 kills X_{(p-1)/2}, p <= 13", [](std::string&) {
        for (int p : {5, 7, 11, 13})
            expect(KpRing::get(p).phi2((p - 1) / 2).is_zero(), "degeneracy");
    });
    add("kp-phi3-fpdim", "dimension and FPdim characters multiplicative", [](std::string&) {
        for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
            const KpRing& kp = KpRing::get(p);
            for (int i = 0; i < p; ++i)
                for (int j = i; j < p; ++j) {
                    long long rhs3 = 0;
                    double rhsf = 0.0;
                    for (const auto& [k, c] : kp.table().product(i, j).coeffs()) {
                        rhs3 += c.get_si() * KpRing::phi3(static_cast<int>(k));
                        rhsf += c.get_d() *
                                kp.fpdim_char(static_cast<int>(k)).numeric().value;
                    }
                    expect(rhs3 == KpRing::phi3(i) * KpRing::phi3(j), "phi3");
                    expect(std::fabs(rhsf - kp.fpdim_char(i).numeric().value *
                                                kp.fpdim_char(j).numeric().value) < 1e-9,
                           "fpdim");
                }
        }
    });
    add("kp-involution", "X_{p-1} X_i = X_{p-1-i}, p <= 23", [](std::string&) {
        for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
            const KpRing& kp = KpRing::get(p);
            for (int i = 0; i <= p - 1; ++i)
                expect(kp.table().product(p - 1, i) == X(p - 1 - i), "involution");
        }
    });

    // --- Dynkin bookkeeping -----------------------------------------------------------

    add("lie-b-series", "B-series closed form, p in 11..31", [](std::string&) {
        for (int p : {11, 13, 17, 19, 23, 29, 31})
            for (int m = 2; 2 * m <= p - 7; ++m) {
                std::vector<int> e;
                int top = std::min(m, (p - 1) / 2 - m);
                for (int i = 1; i <= top; ++i) e.push_back(4 * i - 1);
                expect(lie::g_decomp(lie::make_type(lie::Family::B, m), p) == e, "B series");
            }
    });
    add("lie-d-series", "D-series pattern", [](std::string&) {
        for (int p : {11, 13, 17, 19, 23, 29, 31})
            for (int t = 0; 4 * t <= p - 7; ++t) {
                int m = (p - 1) / 2 - t;
                if (m < 4) continue;
                std::vector<int> e;
                for (int i = 0; i <= t; ++i) e.push_back(4 * i + 3);
                e.push_back(p - 2 - 2 * t);
                std::sort(e.begin(), e.end());
                expect(lie::g_decomp(lie::make_type(lie::Family::D, m), p) == e, "D series");
            }
    });
    add("lie-exceptional", "every exceptional-type table entry", [](std::string& d) {
        for (const auto& e : lie::exceptional_table())
            expect(lie::g_decomp(lie::parse_type(e.type), e.p) == e.decomp,
                   std::string(e.type) + " at p=" + std::to_string(e.p));
        d = std::to_string(lie::exceptional_table().size()) + " entries";
    });
    add("lie-gaussd", "d_r = 0,1,1,1,2,2,2 for r = 5..17", [](std::string&) {
        std::vector<int> expect_v{0, 1, 1, 1, 2, 2, 2};
        for (int i = 0; i < 7; ++i)
            expect(lie::gauss_d(5 + 2 * i) == expect_v[i], "d_r");
        auto [a0, a2] = lie::gauss_balanced_a0_a2(7);
        expect(a0 == 5 && a2 == 4, "balanced coefficients of C(7,4)_q");
    });
    add("lie-levelrank", "B_m matches C_{(p-1)/2-m}", [](std::string&) {
        for (int p : {11, 13, 17, 19, 23, 29, 31})
            for (int m = 2; 2 * m <= p - 7; ++m) {
                int dual = (p - 1) / 2 - m;
                if (dual < 2) continue;
                expect(lie::g_decomp(lie::make_type(lie::Family::B, m), p) ==
                           lie::g_decomp(lie::make_type(lie::Family::C, dual), p),
                       "level-rank");
            }
    });
    add("lie-rank2", "rank-2 catalogue at p = 5, 11, 37", [](std::string&) {
        expect(lie::rank2_catalogue(5).empty(), "p=5 empty");
        auto eleven = lie::rank2_catalogue(11);
        expect(eleven.size() == 3 && eleven[2].decomp == std::vector<int>{3, 9}, "p=11");
        bool found = false;
        for (const auto& e : lie::rank2_catalogue(37))
            if (e.name == "E2**" && e.decomp == std::vector<int>{3, 23}) found = true;
        expect(found, "p=37 E2**");
    });
    add("lie-strange", "strange formula for all families", [](std::string&) {
        for (int r = 1; r <= 8; ++r)
            expect(lie::strange_check(lie::make_type(lie::Family::A, r)), "A");
        for (int r = 2; r <= 8; ++r) {
            expect(lie::strange_check(lie::make_type(lie::Family::B, r)), "B");
            expect(lie::strange_check(lie::make_type(lie::Family::C, r)), "C");
        }
        for (int r = 4; r <= 8; ++r)
            expect(lie::strange_check(lie::make_type(lie::Family::D, r)), "D");
        for (int r = 6; r <= 8; ++r)
            expect(lie::strange_check(lie::make_type(lie::Family::E, r)), "E");
        expect(lie::strange_check(lie::make_type(lie::Family::F, 4)), "F4");
        expect(lie::strange_check(lie::make_type(lie::Family::G, 2)), "G2");
    });

    // --- based-ring laws -----------------------------------------------------------

    add("ring-laws-kp", "K_p commutative, associative, unital, p <= 23", [](std::string&) {
        for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
            const FusionTable& t = KpRing::get(p).table();
            expect(check_unit(t) && check_commutative(t) && check_associative(t),
                   "p=" + std::to_string(p));
        }
    });
    add("ring-laws-verlinde", "Ver_p commutative, associative, unital, p <= 23",
        [](std::string&) {
            for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
                const FusionTable& t = VerlindeRing::get(p).table();
                expect(check_unit(t) && check_commutative(t) && check_associative(t),
                       "p=" + std::to_string(p));
                for (int k = 1; k <= p - 1; ++k)
                    expect(t.product(k, k).coeff(1) == 1, "self-duality");
            }
        });

    // --- Verlinde ring ----------------------------------------------------------------

    add("ver-delta-l3", "delta(L_3) = (1+sqrt5)/2 at p = 5", [](std::string& d) {
        double v = VerlindeRing::get(5).delta(L(3)).numeric().value;
        d = "value " + fmt(v);
        expect(std::fabs(v - (1.0 + std::sqrt(5.0)) / 2.0) < 1e-12, "golden ratio");
        expect(std::fabs(VerlindeRing::get(3).delta(L(2)).numeric().value - 1.0) < 1e-12,
               "delta integer at p=3");
    });
    add("ver-delta-mult", "delta is multiplicative, exact vectors, p <= 23",
        [](std::string&) {
            std::mt19937 rng(seed());
            for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
                const VerlindeRing& ver = VerlindeRing::get(p);
                std::uniform_int_distribution<int> idx(1, p - 1), coeff(0, 3);
                for (int trial = 0; trial < 20; ++trial) {
                    RingElement a, b;
                    for (int t = 0; t < 3; ++t) {
                        a.add(idx(rng), coeff(rng));
                        b.add(idx(rng), coeff(rng));
                    }
                    expect(ver.delta(ver.table().mul(a, b)) ==
                               ver.delta(a).mul(ver.delta(b)), "vector identity");
                }
            }
        });
    add("ver-dn-fib", "d_n(L_2) = 1,2,3,5,8 in Ver_5", [](std::string&) {
        auto rows = VerlindeRing::get(5).dn_sequence(L(2), 5);
        std::vector<long> e{1, 2, 3, 5, 8};
        for (int i = 0; i < 5; ++i) expect(rows[i].d_n == e[i], "Fibonacci");
    });
    add("ver-kv", "support closures and K_V", [](std::string&) {
        auto k5 = VerlindeRing::get(5).kv(L(2));
        expect(k5.closure == std::set<int>{1, 2, 3, 4}, "closure p=5");
        expect(std::fabs(k5.value.numeric().value - (1 + std::sqrt(5.0)) / 2) < 1e-12, "K");
        auto k7 = VerlindeRing::get(7).kv(L(6));
        expect(k7.closure == std::set<int>{1, 6}, "closure p=7");
        expect(std::fabs(k7.value.numeric().value - 1.0) < 1e-12, "L_6 invertible");
    });
    add("ver-p0", "c_n >= K_V^{-1} with exact margins, n <= 30", [](std::string&) {
        for (int p : {2, 3, 5, 7, 11, 13}) {
            const VerlindeRing& ver = VerlindeRing::get(p);
            for (int k = 1; k <= p - 1; ++k)
                for (const auto& row : ver.check_p0(L(k), 30))
                    expect(row.exact_sign >= 0, "margin at p=" + std::to_string(p));
        }
    });
    add("ver-qint", "min(k,p-k) <= (p/2)[k] sin(pi/p) <= (pi/2)[k]", [](std::string&) {
        for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
            bool ok = false;
            qint_inequality_check(p, &ok);
            expect(ok, "p=" + std::to_string(p));
        }
    });

    std::sort(fx.begin(), fx.end(),
              [](const Fixture& a, const Fixture& b) { return a.id < b.id; });
    return fx;
}

inline Report run(const std::string& filter = "") {
    Report rep;
    for (const auto& f : all_fixtures()) {
        if (!filter.empty() && f.id.find(filter) == std::string::npos) continue;
        FixtureResult r{f.id, true, ""};
        try {
            f.run(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
            ++rep.failures;
        }
        rep.results.push_back(std::move(r));
    }
    return rep;
}

}  // namespace greenring::selftest
