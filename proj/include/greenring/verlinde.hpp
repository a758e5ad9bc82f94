#pragma once

// The fusion ring Gr(Ver_p) on simples L_1..L_{p-1} with the truncated
// Clebsch-Gordan rule, the delta character, Frobenius-Perron data K_V, and
// the closed-form bound evaluators.

#include <cmath>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "greenring/qdelta.hpp"
#include "greenring/ring.hpp"

namespace greenring {

class VerlindeRing {
public:
    explicit VerlindeRing(int p)
        : p_(p),
          table_(1, p - 1, 1, [p](int i, int j) { return fuse(p, i, j); }) {
        require(is_prime(p), "Ver_p: p must be prime");
    }

    static const VerlindeRing& get(int p) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<VerlindeRing>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(p);
        if (it == registry.end())
            it = registry.emplace(p, std::make_unique<VerlindeRing>(p)).first;
        return *it->second;
    }

    // L_i L_j = sum of L_k, k = |i-j|+1, |i-j|+3, ..., min(i+j-1, 2p-1-i-j).
    static RingElement fuse(int p, int i, int j) {
        require(i >= 1 && i <= p - 1 && j >= 1 && j <= p - 1,
                "fuse: index out of range");
        RingElement out;
        int hi = std::min(i + j - 1, 2 * p - 1 - i - j);
        for (int k = std::abs(i - j) + 1; k <= hi; k += 2) out.add(k, 1);
        return out;
    }

    int p() const { return p_; }
    const FusionTable& table() const { return table_; }

    DeltaValue delta(const RingElement& v) const { return DeltaValue::of_element(p_, v); }

    struct DnRow {
        long n;
        Int d_n;
        DeltaValue delta_pow;  // delta(V)^n as an exact multiplicity vector
        Approx c_n;
    };

    std::vector<DnRow> dn_sequence(const RingElement& v, long horizon) const {
        require(!v.is_zero(), "dn_sequence: zero object");
        require(v.nonnegative(), "dn_sequence: negative coefficient");
        require(horizon >= 1, "dn_sequence: horizon must be >= 1");
        std::vector<DnRow> rows;
        DeltaValue d = delta(v);
        DeltaValue dpow = DeltaValue::one(p_);
        RingElement power = v;
        for (long n = 1; n <= horizon; ++n) {
            if (n > 1) power = table_.mul(power, v);
            dpow = dpow.mul(d);
            Int dn = summand_count(power);
            Approx den = dpow.numeric();
            double val = dn.get_d() / den.value;
            double err = std::fabs(val) * (den.err / den.value) + 1e-300;
            rows.push_back({n, dn, dpow, {val, err}});
        }
        return rows;
    }

    // Smallest fusion-closed set of simples containing supp(V); simples are
    // self-dual here, so no dual step is needed.
    std::set<int> support_closure(const RingElement& v) const {
        require(!v.is_zero(), "support_closure: zero object");
        std::set<int> closed;
        closed.insert(1);  // V^{tensor 0} = 1
        for (const auto& [i, c] : v.coeffs()) {
            require(table_.valid_index(i), "support_closure: index out of range");
            closed.insert(static_cast<int>(i));
        }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(closed.begin(), closed.end());
            for (int i : cur)
                for (int j : cur)
                    for (const auto& [k, c] : table_.product(i, j).coeffs())
                        if (closed.insert(static_cast<int>(k)).second) grew = true;
        }
        return closed;
    }

    // K_V = max delta(L_k) over the closure, decided by exact comparison.
    struct KvResult {
        int argmax;           // simple index attaining the max
        DeltaValue value;     // delta(L_argmax)
        std::set<int> closure;
    };

    KvResult kv(const RingElement& v) const {
        std::set<int> cl = support_closure(v);
        int best = *cl.begin();
        for (int k : cl) {
            DeltaValue dk = delta(RingElement::basis(k));
            DeltaValue db = delta(RingElement::basis(best));
            if (dk.compare(db) > 0) best = k;
        }
        return {best, delta(RingElement::basis(best)), cl};
    }

    struct P0Row {
        long n;
        double margin;    // c_n - K_V^{-1}, numerically
        int exact_sign;   // exact sign of d_n K_V - delta(V)^n (>= 0 required)
    };

    // Prop: c_n >= K_V^{-1}, i.e. d_n K_V >= delta(V)^n.
    std::vector<P0Row> check_p0(const RingElement& v, long horizon) const {
        KvResult k = kv(v);
        const QField& f = QField::get(p_);
        Poly kpoly = k.value.poly();
        Approx knum = k.value.numeric();
        std::vector<P0Row> rows;
        for (const DnRow& row : dn_sequence(v, horizon)) {
            Poly lhs = polyops::scale(kpoly, row.d_n);
            Poly margin_poly = polyops::sub(lhs, row.delta_pow.poly());
            int sgn = f.sign(margin_poly);
            double m = row.c_n.value - 1.0 / knum.value;
            rows.push_back({row.n, m, sgn});
        }
        return rows;
    }

private:
    int p_;
    FusionTable table_;
};

// --- closed-form bound evaluators ------------------------------------------

// Default linear coefficient a_p of the bounds: fixed constants for
// p = 2, 3; for p >= 5 the value log(3)/3 + log(24^7 p), which dominates
// the odd-order normal-subgroup estimate entering K_V.
inline double default_ap(int p) {
    require(is_prime(p), "default_ap: p must be prime");
    if (p == 2) return 4.0 * std::log(3.0) / 3.0;
    if (p == 3) return 24.0;
    return std::log(3.0) / 3.0 + 7.0 * std::log(24.0) + std::log(static_cast<double>(p));
}

// lambda(V) <= a_p d for p = 2,3;  <= a_p d + (pi log2 / 2)(p-2) d^2 for p >= 5.
inline double bound_lambda(int p, double d, std::optional<double> ap = std::nullopt) {
    require(is_prime(p), "bound_lambda: p must be prime");
    require(d >= 1.0, "bound_lambda: d must be >= 1");
    double a = ap ? *ap : default_ap(p);
    if (p <= 3) return a * d;
    return a * d + (M_PI * std::log(2.0) / 2.0) * (p - 2) * d * d;
}

// log of K_V <= 3^{(4/3)delta - 1} (p = 2 case).
inline double log_bound_kv_p2(double d) {
    require(d >= 1.0, "bound_kv_p2: d must be >= 1");
    return ((4.0 / 3.0) * d - 1.0) * std::log(3.0);
}

// log f_p(d), f_p(d) = e^{a_p d} (p=2,3) or e^{a_p d} 2^{(pi/2)(p-2)d^2}.
inline double log_bound_fp(int p, double d, std::optional<double> ap = std::nullopt) {
    require(is_prime(p), "bound_fp: p must be prime");
    require(d >= 1.0, "bound_fp: d must be >= 1");
    double a = ap ? *ap : default_ap(p);
    if (p <= 3) return a * d;
    return a * d + (M_PI / 2.0) * (p - 2) * d * d * std::log(2.0);
}

struct QintCheckRow {
    int k;
    double lhs;        // min(k, p-k)
    double mid;        // (p/2) [k]_q sin(pi/p)
    double rhs;        // (pi/2) [k]_q
    double margin1;    // mid - lhs
    double margin2;    // rhs - mid
};

// min(k, p-k) <= (p/2)[k]_q sin(pi/p) <= (pi/2)[k]_q for k = 1..p-1.
// Fails only if an inequality is violated beyond the rounding-error bound.
inline std::vector<QintCheckRow> qint_inequality_check(int p, bool* ok = nullptr) {
    require(p >= 2 && is_prime(p), "qint check: p must be prime");
    std::vector<QintCheckRow> rows;
    bool all_ok = true;
    for (int k = 1; k <= p - 1; ++k) {
        double qk = qint_numeric(p, k);
        double lhs = std::min(k, p - k);
        double mid = 0.5 * p * qk * std::sin(M_PI / p);
        double rhs = 0.5 * M_PI * qk;
        double tol = 64.0 * std::numeric_limits<double>::epsilon() * (std::fabs(mid) + std::fabs(rhs) + lhs);
        if (mid - lhs < -tol || rhs - mid < -tol) all_ok = false;
        rows.push_back({k, lhs, mid, rhs, mid - lhs, rhs - mid});
    }
    if (ok) *ok = all_ok;
    return rows;
}

}  // namespace greenring
