#pragma once

// The Green ring of Z/p^n and its semisimplification.
//
// v_r (1 <= r <= p^n) is the class of the indecomposable of dimension r,
// with the convention v_0 = 0.  Green's formulas give w v_r and v_{q-1} v_r
// at each level q = p^t; the semisimplified ring G-bar drops the classes
// with p | r, and factorizes as Gr(Ver_p) tensor K_p^{(n-1)} via the
// coordinates computed by factorize/reconstruct.

#include <cmath>
#include <cstdlib>
#include <functional>
#include <vector>

#include "greenring/kp.hpp"
#include "greenring/qdelta.hpp"
#include "greenring/ring.hpp"
#include "greenring/verlinde.hpp"

namespace greenring::green {

struct CyclicContext {
    int p;
    int n;
    long long pn;                   // p^n
    std::vector<long long> levels;  // q = p, p^2, ..., p^{n-1}

    CyclicContext(int p_, int n_) : p(p_), n(n_) {
        require(is_prime(p), "cyclic context: p must be prime");
        require(n >= 1, "cyclic context: n must be >= 1");
        pn = pow_ll(p, n);
        long long q = 1;
        for (int t = 1; t <= n - 1; ++t) {
            q = (t == 1) ? p : q * p;
            levels.push_back(q);
        }
    }

    bool is_level(long long q) const {
        for (long long l : levels)
            if (l == q) return true;
        return false;
    }
};

namespace detail {
inline void addv(RingElement& e, long long idx, long long c) {
    ensure(idx >= 0, "green formula produced a negative index");
    if (idx != 0) e.add(idx, to_Int(c));  // v_0 = 0
}
}  // namespace detail

// w v_r with w = v_{q+1} - v_{q-1} at level q.
inline RingElement w_mul(const CyclicContext& ctx, long long q, long long r) {
    require(ctx.is_level(q), "w_mul: q must be p^t with 1 <= t <= n-1");
    require(r >= 1 && r <= ctx.p * q, "w_mul: r out of range");
    long long p = ctx.p;
    RingElement out;
    if (r <= q) {
        detail::addv(out, r + q, 1);
        detail::addv(out, q - r, -1);
    } else if (r < (p - 1) * q) {
        detail::addv(out, r + q, 1);
        detail::addv(out, r - q, 1);
    } else {
        detail::addv(out, r - q, 1);
        detail::addv(out, p * q, 2);
        detail::addv(out, 2 * p * q - r - q, -1);
    }
    return out;
}

// v_{q-1} v_r.  The second branch is evaluated literally with signed
// arithmetic (the r_1 = 0 case cancels after canonicalization); the result
// is asserted nonnegative with all indices in range.
inline RingElement vq1_mul(const CyclicContext& ctx, long long q, long long r) {
    require(ctx.is_level(q), "vq1_mul: q must be p^t with 1 <= t <= n-1");
    require(r >= 1 && r <= ctx.p * q, "vq1_mul: r out of range");
    RingElement out;
    if (r < q) {
        detail::addv(out, q - r, 1);
        detail::addv(out, q, r - 1);
    } else {
        long long r0 = r / q, r1 = r % q;
        detail::addv(out, q * (r0 + 1), r1 - 1);
        detail::addv(out, q * (r0 + 1) - r1, 1);
        detail::addv(out, q * r0, q - r1 - 1);
    }
    ensure(out.nonnegative(), "vq1_mul result has a negative coefficient");
    for (const auto& [i, c] : out.coeffs())
        ensure(i >= 1 && i <= ctx.p * q, "vq1_mul result index out of range");
    return out;
}

// Semisimplification: drop v_r with p | r (the negligible classes).
inline RingElement project(const CyclicContext& ctx, const RingElement& a) {
    RingElement out;
    for (const auto& [r, c] : a.coeffs())
        if (r % ctx.p != 0) out.add(r, c);
    return out;
}

// Coordinates of u_r under G-bar_n = Gr(Ver_p) tensor K_p^{(n-1)}:
// levels[t-1] is the K_p index at level q = p^t.
struct FactorizedClass {
    int base = 1;             // Ver_p simple index in [1, p-1]
    std::vector<int> levels;  // one X-index per level, ascending q

    bool operator==(const FactorizedClass& o) const {
        return base == o.base && levels == o.levels;
    }
};

// Peel levels top-down: at level q write r = 2kq + m (m = r mod 2q); if
// m < q the coordinate is X_{2k} and the remainder is m, otherwise the
// coordinate is X_{2k'-1} with r = 2k'q - r' and remainder r' = 2q - m.
inline FactorizedClass factorize(const CyclicContext& ctx, long long r) {
    require(r >= 1 && r <= ctx.pn, "factorize: r out of range");
    require(r % ctx.p != 0, "factorize: negligible class (p divides r)");
    FactorizedClass out;
    out.levels.assign(ctx.levels.size(), 0);
    for (std::size_t t = ctx.levels.size(); t-- > 0;) {
        long long q = ctx.levels[t];
        long long m = r % (2 * q);
        if (m < q) {
            long long k = (r - m) / (2 * q);
            out.levels[t] = static_cast<int>(2 * k);
            r = m;
        } else {
            long long rp = 2 * q - m;
            long long k = (r + rp) / (2 * q);
            out.levels[t] = static_cast<int>(2 * k - 1);
            r = rp;
        }
        ensure(out.levels[t] >= 0 && out.levels[t] <= ctx.p - 1,
               "factorize: K_p coordinate out of range");
    }
    ensure(r >= 1 && r <= ctx.p - 1, "factorize: base index out of range");
    out.base = static_cast<int>(r);
    return out;
}

// Inverse of factorize, bottom-up: X_0 leaves r unchanged, X_{2k-1} sends
// r to 2kq - r, X_{2k} sends r to 2kq + r.
inline long long reconstruct(const CyclicContext& ctx, const FactorizedClass& c) {
    require(c.base >= 1 && c.base <= ctx.p - 1, "reconstruct: bad base index");
    require(c.levels.size() == ctx.levels.size(), "reconstruct: wrong number of levels");
    long long r = c.base;
    for (std::size_t t = 0; t < ctx.levels.size(); ++t) {
        int x = c.levels[t];
        require(x >= 0 && x <= ctx.p - 1, "reconstruct: bad K_p index");
        long long q = ctx.levels[t];
        if (x == 0) continue;
        long long k = (x + 1) / 2;
        r = (x % 2 == 1) ? 2 * k * q - r : 2 * k * q + r;
    }
    ensure(r >= 1 && r <= ctx.pn && r % ctx.p != 0, "reconstruct: result out of range");
    return r;
}

// u_r u_s in the semisimplified ring: multiply coordinatewise in
// Gr(Ver_p) and K_p, expand the distributed product, and reconstruct.
inline RingElement ssbar_mul(const CyclicContext& ctx, long long r, long long s) {
    FactorizedClass a = factorize(ctx, r);
    FactorizedClass b = factorize(ctx, s);
    const VerlindeRing& ver = VerlindeRing::get(ctx.p);
    const KpRing& kp = KpRing::get(ctx.p);

    RingElement base_prod = ver.table().product(a.base, b.base);
    std::vector<RingElement> level_prods;
    for (std::size_t t = 0; t < ctx.levels.size(); ++t)
        level_prods.push_back(kp.table().product(a.levels[t], b.levels[t]));

    RingElement out;
    FactorizedClass tuple;
    tuple.levels.assign(ctx.levels.size(), 0);
    // Iterate the cartesian product of supports.
    std::function<void(std::size_t, Int)> walk = [&](std::size_t t, Int coeff) {
        if (t == ctx.levels.size()) {
            out.add(reconstruct(ctx, tuple), coeff);
            return;
        }
        for (const auto& [x, c] : level_prods[t].coeffs()) {
            tuple.levels[t] = static_cast<int>(x);
            walk(t + 1, coeff * c);
        }
    };
    for (const auto& [k, c] : base_prod.coeffs()) {
        tuple.base = static_cast<int>(k);
        walk(0, c);
    }
    return out;
}

// Bilinear extension over u-basis elements.
inline RingElement ssbar_mul(const CyclicContext& ctx, const RingElement& x,
                             const RingElement& y) {
    RingElement out;
    for (const auto& [r, cr] : x.coeffs())
        for (const auto& [s, cs] : y.coeffs()) out += (cr * cs) * ssbar_mul(ctx, r, s);
    return out;
}

// delta(u_r) = delta(L_base) * prod_t fpdim(X_{level t}), numerically.
inline Approx delta_class(const CyclicContext& ctx, long long r) {
    FactorizedClass c = factorize(ctx, r);
    const KpRing& kp = KpRing::get(ctx.p);
    Approx acc = DeltaValue::of_element(ctx.p, RingElement::basis(c.base)).numeric();
    for (int x : c.levels) {
        Approx f = kp.fpdim_char(x).numeric();
        double v = acc.value * f.value;
        acc.err = std::fabs(acc.value) * f.err + std::fabs(f.value) * acc.err + acc.err * f.err;
        acc.value = v;
    }
    return acc;
}

// delta of a nonnegative u-basis combination.
inline Approx delta_cyclic(const CyclicContext& ctx, const RingElement& a) {
    require(a.nonnegative(), "delta_cyclic: negative coefficient");
    Approx acc{0.0, 0.0};
    for (const auto& [r, c] : a.coeffs()) {
        require(r % ctx.p != 0, "delta_cyclic: negligible class in support");
        Approx d = delta_class(ctx, r);
        double cv = c.get_d();
        acc.value += cv * d.value;
        acc.err += std::fabs(cv) * d.err;
    }
    return acc;
}

struct DnRow {
    long n;
    Int d_n;
    Approx c_n;
};

// d_n(u_r) by power iteration in the factorized ring: the n-th power of a
// basis class is the product over tensor factors, so d_n is the product of
// the per-factor coefficient sums.
inline std::vector<DnRow> dn_cyclic(const CyclicContext& ctx, long long r, long horizon) {
    require(horizon >= 1, "dn_cyclic: horizon must be >= 1");
    FactorizedClass c = factorize(ctx, r);
    const VerlindeRing& ver = VerlindeRing::get(ctx.p);
    const KpRing& kp = KpRing::get(ctx.p);
    Approx delta1 = delta_class(ctx, r);

    RingElement base_pow = RingElement::basis(c.base);
    std::vector<RingElement> level_pow;
    for (int x : c.levels) level_pow.push_back(RingElement::basis(x));

    std::vector<DnRow> rows;
    double delta_n = 1.0;
    for (long n = 1; n <= horizon; ++n) {
        if (n > 1) {
            base_pow = ver.table().mul(base_pow, RingElement::basis(c.base));
            for (std::size_t t = 0; t < level_pow.size(); ++t)
                level_pow[t] = kp.table().mul(level_pow[t], RingElement::basis(c.levels[t]));
        }
        Int dn = summand_count(base_pow);
        for (const auto& lp : level_pow) dn *= summand_count(lp);
        delta_n *= delta1.value;
        double cn = dn.get_d() / delta_n;
        double rel = n * (delta1.err / std::max(delta1.value, 1e-300));
        rows.push_back({n, dn, {cn, std::fabs(cn) * rel + 1e-300}});
    }
    return rows;
}

}  // namespace greenring::green
