#pragma once

// Quantum integers [k]_q at q = e^{i pi/p} and exact delta-value arithmetic.
//
// A delta value is a nonnegative integer combination sum m_k [k]_q.  Such
// numbers live in Z[x0] with x0 = 2cos(pi/p): [k]_q is the Chebyshev-like
// polynomial S_{k-1}(x0), where S_0 = 1, S_1 = x, S_{k+1} = x S_k - S_{k-1}.
// Equality of combinations is decided exactly by reduction modulo the
// minimal polynomial of x0; signs of provably nonzero elements are decided
// by double evaluation with an error bound, widening to MPFR directed
// rounding intervals (256 bits and up) when the margin is small.

#include <mpfr.h>

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "greenring/common.hpp"
#include "greenring/ring.hpp"

namespace greenring {

using Poly = std::vector<Int>;  // coefficients, low degree first

namespace polyops {

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Poly add(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

inline Poly scale(Poly a, const Int& k) {
    for (auto& c : a) c *= k;
    trim(a);
    return a;
}

// Exact division, asserting zero remainder.  Divisor need not be monic.
inline Poly divide_exact(Poly num, const Poly& den) {
    ensure(!den.empty(), "polynomial division by zero");
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
    while (num.size() >= den.size() && !num.empty()) {
        Int lead = num.back() / den.back();
        ensure(lead * den.back() == num.back(), "polynomial division not exact");
        std::size_t shift = num.size() - den.size();
        q[shift] = lead;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= lead * den[j];
        trim(num);
    }
    ensure(num.empty(), "polynomial division left a remainder");
    trim(q);
    return q;
}

}  // namespace polyops

namespace detail {

// Directed-rounding interval in MPFR, just enough for Horner evaluation.
class MpfrInterval {
public:
    explicit MpfrInterval(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }
    ~MpfrInterval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }
    MpfrInterval(const MpfrInterval&) = delete;
    MpfrInterval& operator=(const MpfrInterval&) = delete;

    void set_z(const Int& v) {
        mpfr_set_z(lo_, v.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(hi_, v.get_mpz_t(), MPFR_RNDU);
    }

    // *this = *this * x + c, with x a nonnegative point interval.
    void horner_step(const MpfrInterval& x, const Int& c) {
        mpfr_prec_t prec = mpfr_get_prec(lo_);
        mpfr_t a, b;
        mpfr_init2(a, prec);
        mpfr_init2(b, prec);
        // x >= 0, so candidate extremes are lo*x.lo, lo*x.hi, hi*x.lo, hi*x.hi
        // with the minimum attained at lo*(sign-appropriate bound).
        mpfr_mul(a, lo_, mpfr_sgn(lo_) >= 0 ? x.lo_ : x.hi_, MPFR_RNDD);
        mpfr_mul(b, hi_, mpfr_sgn(hi_) >= 0 ? x.hi_ : x.lo_, MPFR_RNDU);
        mpfr_add_z(lo_, a, c.get_mpz_t(), MPFR_RNDD);
        mpfr_add_z(hi_, b, c.get_mpz_t(), MPFR_RNDU);
        mpfr_clear(a);
        mpfr_clear(b);
    }

    int sign() const {
        if (mpfr_sgn(lo_) > 0) return 1;
        if (mpfr_sgn(hi_) < 0) return -1;
        return 0;  // undecided
    }

    // x0 = 2cos(pi/p) as a point interval (cos decreases on [0, pi]).
    void set_two_cos_pi_over(long p) {
        mpfr_t ang;
        mpfr_init2(ang, mpfr_get_prec(lo_));
        mpfr_const_pi(ang, MPFR_RNDU);
        mpfr_div_si(ang, ang, p, MPFR_RNDU);
        mpfr_cos(lo_, ang, MPFR_RNDD);
        mpfr_mul_2ui(lo_, lo_, 1, MPFR_RNDD);
        mpfr_const_pi(ang, MPFR_RNDD);
        mpfr_div_si(ang, ang, p, MPFR_RNDD);
        mpfr_cos(hi_, ang, MPFR_RNDU);
        mpfr_mul_2ui(hi_, hi_, 1, MPFR_RNDU);
        mpfr_clear(ang);
    }

private:
    mpfr_t lo_, hi_;
};

}  // namespace detail

inline double qint_numeric(int p, long k) {
    return std::sin(k * M_PI / p) / std::sin(M_PI / p);
}

// The field Q(2cos(pi/p)) for a prime p, with exact reduction data.
class QField {
public:
    static const QField& get(int p) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<QField>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(p);
        if (it == registry.end())
            it = registry.emplace(p, std::unique_ptr<QField>(new QField(p))).first;
        return *it->second;
    }

    int p() const { return p_; }
    const Poly& min_poly() const { return psi_; }

    // S_{k-1} reduced: the polynomial of [k]_q.  Valid for k >= 0 ([0] = 0).
    Poly qint_poly(long k) const {
        require(k >= 0, "qint_poly: negative index");
        Poly prev{};          // S_{-1} = 0
        Poly cur{Int(1)};     // S_0 = 1
        if (k == 0) return prev;
        for (long i = 1; i < k; ++i) {
            Poly next = polyops::sub(shift_mul_x(cur), prev);
            prev = std::move(cur);
            cur = reduce(std::move(next));
        }
        return cur;
    }

    Poly reduce(Poly a) const {
        polyops::trim(a);
        std::size_t d = psi_.size() - 1;  // psi_ is monic of degree d
        while (a.size() > d) {
            Int c = a.back();
            std::size_t shift = a.size() - 1 - d;
            for (std::size_t j = 0; j < psi_.size(); ++j) a[shift + j] -= c * psi_[j];
            polyops::trim(a);
        }
        return a;
    }

    Poly mul(const Poly& a, const Poly& b) const { return reduce(polyops::mul(a, b)); }

    Poly pow(const Poly& a, long n) const {
        Poly acc{Int(1)};
        Poly base = reduce(a);
        long e = n;
        while (e > 0) {
            if (e & 1) acc = mul(acc, base);
            base = mul(base, base);
            e >>= 1;
        }
        return acc;
    }

    bool is_zero(const Poly& a) const { return reduce(a).empty(); }

    // Exact sign of a(x0).  Zero is decided algebraically; nonzero signs by
    // escalating interval evaluation.
    int sign(const Poly& a) const {
        Poly r = reduce(a);
        if (r.empty()) return 0;

        // Fast path: double Horner with a conservative error bound.
        double x0 = 2.0 * std::cos(M_PI / p_);
        double val = 0.0, mag = 0.0;
        for (std::size_t i = r.size(); i-- > 0;) {
            val = val * x0 + r[i].get_d();
            mag = mag * x0 + std::fabs(r[i].get_d());
        }
        double err = mag * static_cast<double>(r.size() + 2) * 8.0 *
                     std::numeric_limits<double>::epsilon();
        if (std::fabs(val) > err && std::fabs(val) > 1e-9) return val > 0 ? 1 : -1;

        for (mpfr_prec_t prec = 256; prec <= 4096; prec *= 2) {
            detail::MpfrInterval x(prec), acc(prec);
            x.set_two_cos_pi_over(p_);
            acc.set_z(r.back());
            for (std::size_t i = r.size() - 1; i-- > 0;) acc.horner_step(x, r[i]);
            if (int s = acc.sign()) return s;
        }
        throw internal_error("qfield sign: interval evaluation did not resolve");
    }

    // Directed numeric value of a(x0) as double + error bound.
    Approx numeric(const Poly& a) const {
        Poly r = reduce(a);
        double x0 = 2.0 * std::cos(M_PI / p_);
        double val = 0.0, mag = 0.0;
        for (std::size_t i = r.size(); i-- > 0;) {
            val = val * x0 + r[i].get_d();
            mag = mag * x0 + std::fabs(r[i].get_d());
        }
        double err = mag * static_cast<double>(r.size() + 2) * 8.0 *
                     std::numeric_limits<double>::epsilon();
        return {val, err};
    }

private:
    explicit QField(int p) : p_(p) {
        require(is_prime(p), "QField: p must be prime");
        if (p == 2) {
            psi_ = {Int(0), Int(1)};  // x0 = 0
            return;
        }
        // S_{p-1} factors as psi_p * Psi_p where Psi_p is the minimal
        // polynomial of 2cos(2pi/p), namely 1 + sum_{k<={(p-1)/2}} E_k.
        Poly s_prev{Int(1)};           // S_0
        Poly s_cur{Int(0), Int(1)};    // S_1
        for (int k = 2; k <= p - 1; ++k) {
            Poly next = polyops::sub(shift_raw(s_cur), s_prev);
            s_prev = std::move(s_cur);
            s_cur = std::move(next);
        }
        Poly e_prev{Int(2)};             // E_0
        Poly e_cur{Int(0), Int(1)};      // E_1
        Poly big{Int(1)};
        big = polyops::add(big, e_cur);
        for (int k = 2; k <= (p - 1) / 2; ++k) {
            Poly next = polyops::sub(shift_raw(e_cur), e_prev);
            e_prev = std::move(e_cur);
            e_cur = std::move(next);
            big = polyops::add(big, e_cur);
        }
        psi_ = polyops::divide_exact(s_cur, big);
        ensure(psi_.back() == 1, "minimal polynomial is not monic");
        ensure(static_cast<int>(psi_.size()) == (p - 1) / 2 + 1,
               "minimal polynomial has wrong degree");
    }

    static Poly shift_raw(const Poly& a) {  // multiply by x, no reduction
        Poly b(a.size() + 1, Int(0));
        for (std::size_t i = 0; i < a.size(); ++i) b[i + 1] = a[i];
        return b;
    }
    Poly shift_mul_x(const Poly& a) const { return reduce(shift_raw(a)); }

    int p_;
    Poly psi_;
};

// delta(V) = sum m_k [k]_q, stored as the multiplicity vector m_1..m_{p-1}.
class DeltaValue {
public:
    DeltaValue(int p, std::vector<Int> m) : p_(p), m_(std::move(m)) {
        require(static_cast<int>(m_.size()) == p - 1, "DeltaValue: wrong vector length");
    }

    static DeltaValue one(int p) {
        std::vector<Int> m(p - 1, Int(0));
        m[0] = 1;
        return DeltaValue(p, std::move(m));
    }

    // m_k = coefficient of L_k; requires a nonnegative element on basis 1..p-1.
    static DeltaValue of_element(int p, const RingElement& v) {
        std::vector<Int> m(p - 1, Int(0));
        for (const auto& [k, c] : v.coeffs()) {
            require(k >= 1 && k <= p - 1, "delta: basis index out of range");
            require(c >= 0, "delta: negative coefficient");
            m[k - 1] = c;
        }
        return DeltaValue(p, std::move(m));
    }

    int p() const { return p_; }
    const std::vector<Int>& multiplicities() const { return m_; }
    Int multiplicity(int k) const { return m_.at(k - 1); }

    bool is_zero() const {
        for (const auto& c : m_)
            if (c != 0) return false;
        return true;
    }

    Poly poly() const {
        const QField& f = QField::get(p_);
        Poly acc;
        for (int k = 1; k <= p_ - 1; ++k)
            if (m_[k - 1] != 0)
                acc = polyops::add(acc, polyops::scale(f.qint_poly(k), m_[k - 1]));
        return f.reduce(acc);
    }

    Approx numeric() const { return QField::get(p_).numeric(poly()); }

    // Product via the untruncated Clebsch-Gordan sum with the reflection
    // reduction [p] = 0, [p+t] = -[p-t].  Agrees with the fusion-ring
    // product componentwise; that agreement is what the delta
    // multiplicativity tests assert.
    DeltaValue mul(const DeltaValue& o) const {
        require(p_ == o.p_, "DeltaValue::mul: mixed primes");
        std::vector<Int> out(p_ - 1, Int(0));
        for (int a = 1; a <= p_ - 1; ++a) {
            if (m_[a - 1] == 0) continue;
            for (int b = 1; b <= p_ - 1; ++b) {
                if (o.m_[b - 1] == 0) continue;
                Int c = m_[a - 1] * o.m_[b - 1];
                for (int j = std::abs(a - b) + 1; j <= a + b - 1; j += 2) {
                    if (j < p_) out[j - 1] += c;
                    else if (j > p_) out[2 * p_ - j - 1] -= c;
                }
            }
        }
        for (const auto& c : out)
            ensure(c >= 0, "DeltaValue::mul produced a negative multiplicity");
        return DeltaValue(p_, std::move(out));
    }

    DeltaValue pow(long n) const {
        require(n >= 0, "DeltaValue::pow: negative exponent");
        DeltaValue acc = one(p_);
        for (long i = 0; i < n; ++i) acc = acc.mul(*this);
        return acc;
    }

    bool operator==(const DeltaValue& o) const { return p_ == o.p_ && m_ == o.m_; }

    // Exact three-way comparison of the real numbers.
    int compare(const DeltaValue& o) const {
        require(p_ == o.p_, "DeltaValue::compare: mixed primes");
        return QField::get(p_).sign(polyops::sub(poly(), o.poly()));
    }

private:
    int p_;
    std::vector<Int> m_;
};

}  // namespace greenring
