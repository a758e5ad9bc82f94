#pragma once

// Ground-truth Green-ring multiplication for Z/p^n: the Jordan type of
// J_a (x) J_b over F_p, computed by exact rank linear algebra.
//
// With N = J_a (x) J_b - I, the number of Jordan blocks of size >= k is
// rank(N^{k-1}) - rank(N^k).  N maps the tensor basis vector e_{i,j} to
// e_{i+1,j} + e_{i,j+1} + e_{i+1,j+1} (out-of-range terms dropped), so
// instead of forming matrix powers we iterate "apply N to an echelon basis
// of the current image and re-echelonize", which keeps everything at
// O(rank * dim) per step.  This is a test fixture, not a hot path.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "greenring/common.hpp"
#include "greenring/ring.hpp"

namespace greenring::jordan {

struct JordanType {
    std::vector<long long> parts;  // block sizes, descending

    long long total() const {
        long long s = 0;
        for (long long x : parts) s += x;
        return s;
    }

    RingElement to_element() const {
        RingElement e;
        for (long long x : parts) e.add(x, 1);
        return e;
    }

    bool operator==(const JordanType& o) const { return parts == o.parts; }
};

struct OracleLimits {
    long long cap_product = 10000;  // max a*b
    long long cap_mb = 512;         // memory guard, overridable via env

    static OracleLimits from_env() {
        OracleLimits lim;
        if (const char* s = std::getenv("GREENRING_CAP_MB")) {
            long long v = std::atoll(s);
            if (v > 0) lim.cap_mb = v;
        }
        return lim;
    }
};

namespace detail {

// Dense rows over F_p (p odd), echelonized incrementally.
class EchelonFp {
public:
    EchelonFp(long long dim, long p) : dim_(dim), p_(p) {}

    // Reduce row against current pivots; insert if nonzero.  Returns rank delta.
    int insert(std::vector<uint32_t> row) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            uint32_t c = row[pivots_[r]];
            if (c != 0) submul(row, rows_[r], c);
        }
        long long piv = -1;
        for (long long j = 0; j < dim_; ++j)
            if (row[j] != 0) { piv = j; break; }
        if (piv < 0) return 0;
        normalize(row, piv);
        // insertion keeping pivot columns sorted keeps later reductions short
        std::size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(row));
        pivots_.insert(pivots_.begin() + pos, piv);
        return 1;
    }

    const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
    long long rank() const { return static_cast<long long>(rows_.size()); }

private:
    void submul(std::vector<uint32_t>& a, const std::vector<uint32_t>& b, uint32_t c) {
        // a -= c*b (mod p)
        for (long long j = 0; j < dim_; ++j) {
            if (b[j] == 0) continue;
            uint32_t sub = static_cast<uint32_t>((static_cast<uint64_t>(c) * b[j]) % p_);
            a[j] = (a[j] + static_cast<uint32_t>(p_) - sub) % static_cast<uint32_t>(p_);
        }
    }
    void normalize(std::vector<uint32_t>& a, long long piv) {
        uint32_t inv = mod_inverse(a[piv]);
        if (inv == 1) return;
        for (long long j = piv; j < dim_; ++j)
            a[j] = static_cast<uint32_t>((static_cast<uint64_t>(a[j]) * inv) % p_);
    }
    uint32_t mod_inverse(uint32_t x) const {
        // extended Euclid
        long long t = 0, newt = 1, r = p_, newr = x;
        while (newr != 0) {
            long long q = r / newr;
            t -= q * newt; std::swap(t, newt);
            r -= q * newr; std::swap(r, newr);
        }
        ensure(r == 1, "mod_inverse: not invertible");
        return static_cast<uint32_t>((t % p_ + p_) % p_);
    }

    long long dim_;
    long p_;
    std::vector<std::vector<uint32_t>> rows_;
    std::vector<long long> pivots_;
};

// Bit-packed rows over F_2.
class EchelonF2 {
public:
    explicit EchelonF2(long long dim) : dim_(dim), words_((dim + 63) / 64) {}

    int insert(std::vector<uint64_t> row) {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (get(row, pivots_[r]))
                for (long long w = 0; w < words_; ++w) row[w] ^= rows_[r][w];
        long long piv = -1;
        for (long long j = 0; j < dim_; ++j)
            if (get(row, j)) { piv = j; break; }
        if (piv < 0) return 0;
        std::size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < piv) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(row));
        pivots_.insert(pivots_.begin() + pos, piv);
        return 1;
    }

    const std::vector<std::vector<uint64_t>>& rows() const { return rows_; }
    long long rank() const { return static_cast<long long>(rows_.size()); }
    static bool get(const std::vector<uint64_t>& row, long long j) {
        return (row[j >> 6] >> (j & 63)) & 1u;
    }
    static void flip(std::vector<uint64_t>& row, long long j) { row[j >> 6] ^= 1ull << (j & 63); }

private:
    long long dim_;
    long long words_;
    std::vector<std::vector<uint64_t>> rows_;
    std::vector<long long> pivots_;
};

}  // namespace detail

// Jordan type of J_a (x) J_b over F_p, computed literally in that order
// (no memo, no symmetrization) -- the commutativity tests rely on this.
inline JordanType compute_jordan_type(int p, int n, long long a, long long b,
                                      const OracleLimits& limits = OracleLimits::from_env()) {
    require(is_prime(p), "oracle: p must be prime");
    long long pn = pow_ll(p, n);
    require(a >= 1 && a <= pn && b >= 1 && b <= pn, "oracle: block size out of range");
    require(a * b <= limits.cap_product, "oracle: a*b exceeds the configured cap");

    long long dim = a * b;
    double bytes = static_cast<double>(dim) * dim * (p == 2 ? 0.125 : 4.0) * 2.0;
    require(bytes <= static_cast<double>(limits.cap_mb) * 1024.0 * 1024.0,
            "oracle: matrix would exceed GREENRING_CAP_MB");

    auto idx = [b](long long i, long long j) { return i * b + j; };
    std::vector<long long> ranks{dim};

    if (p == 2) {
        long long words = (dim + 63) / 64;
        detail::EchelonF2 image(dim);
        // image of N on the standard basis
        for (long long i = 0; i < a; ++i)
            for (long long j = 0; j < b; ++j) {
                std::vector<uint64_t> row(words, 0);
                if (i + 1 < a) detail::EchelonF2::flip(row, idx(i + 1, j));
                if (j + 1 < b) detail::EchelonF2::flip(row, idx(i, j + 1));
                if (i + 1 < a && j + 1 < b) detail::EchelonF2::flip(row, idx(i + 1, j + 1));
                image.insert(std::move(row));
            }
        ranks.push_back(image.rank());
        while (ranks.back() > 0) {
            detail::EchelonF2 next(dim);
            for (const auto& v : image.rows()) {
                std::vector<uint64_t> out(words, 0);
                for (long long i = 0; i < a; ++i)
                    for (long long j = 0; j < b; ++j) {
                        if (!detail::EchelonF2::get(v, idx(i, j))) continue;
                        if (i + 1 < a) detail::EchelonF2::flip(out, idx(i + 1, j));
                        if (j + 1 < b) detail::EchelonF2::flip(out, idx(i, j + 1));
                        if (i + 1 < a && j + 1 < b) detail::EchelonF2::flip(out, idx(i + 1, j + 1));
                    }
                next.insert(std::move(out));
            }
            ranks.push_back(next.rank());
            image = std::move(next);
        }
    } else {
        detail::EchelonFp image(dim, p);
        for (long long i = 0; i < a; ++i)
            for (long long j = 0; j < b; ++j) {
                std::vector<uint32_t> row(dim, 0);
                if (i + 1 < a) row[idx(i + 1, j)] = 1;
                if (j + 1 < b) row[idx(i, j + 1)] = 1;
                if (i + 1 < a && j + 1 < b) row[idx(i + 1, j + 1)] = 1;
                image.insert(std::move(row));
            }
        ranks.push_back(image.rank());
        while (ranks.back() > 0) {
            detail::EchelonFp next(dim, p);
            for (const auto& v : image.rows()) {
                std::vector<uint32_t> out(dim, 0);
                for (long long i = 0; i < a; ++i)
                    for (long long j = 0; j < b; ++j) {
                        uint32_t c = v[idx(i, j)];
                        if (c == 0) continue;
                        if (i + 1 < a) out[idx(i + 1, j)] = (out[idx(i + 1, j)] + c) % p;
                        if (j + 1 < b) out[idx(i, j + 1)] = (out[idx(i, j + 1)] + c) % p;
                        if (i + 1 < a && j + 1 < b)
                            out[idx(i + 1, j + 1)] = (out[idx(i + 1, j + 1)] + c) % p;
                    }
                next.insert(std::move(out));
            }
            ranks.push_back(next.rank());
            image = std::move(next);
        }
    }

    // ranks must strictly decrease until 0
    for (std::size_t k = 1; k < ranks.size(); ++k)
        ensure(ranks[k] < ranks[k - 1] || (ranks[k] == 0 && ranks[k - 1] == 0),
               "oracle: rank sequence is not strictly decreasing");

    JordanType jt;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        long long at_least_k = ranks[k - 1] - ranks[k];
        long long at_least_k1 = (k < ranks.size() - 1) ? ranks[k] - ranks[k + 1] : 0;
        long long exactly_k = at_least_k - at_least_k1;
        ensure(exactly_k >= 0, "oracle: inconsistent block counts");
        for (long long t = 0; t < exactly_k; ++t) jt.parts.push_back(static_cast<long long>(k));
    }
    std::sort(jt.parts.rbegin(), jt.parts.rend());
    ensure(jt.total() == dim, "oracle: block sizes do not sum to the dimension");
    for (long long x : jt.parts) ensure(x <= pn, "oracle: block size exceeds p^n");
    return jt;
}

// Memoized front end; the cache key is canonicalized with a <= b.
inline JordanType oracle_mul(int p, int n, long long a, long long b,
                             const OracleLimits& limits = OracleLimits::from_env()) {
    require(is_prime(p), "oracle: p must be prime");
    long long pn = pow_ll(p, n);
    require(a >= 1 && a <= pn && b >= 1 && b <= pn, "oracle: block size out of range");
    require(a * b <= limits.cap_product, "oracle: a*b exceeds the configured cap");
    static std::mutex mu;
    static std::map<std::tuple<int, int, long long, long long>, JordanType> memo;
    long long lo = std::min(a, b), hi = std::max(a, b);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({p, n, lo, hi});
        if (it != memo.end()) return it->second;
    }
    JordanType jt = compute_jordan_type(p, n, lo, hi, limits);
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(std::make_tuple(p, n, lo, hi), jt);
    return jt;
}

// Bilinear extension over v-basis elements.
inline RingElement green_mul_oracle(int p, int n, const RingElement& x, const RingElement& y,
                                    const OracleLimits& limits = OracleLimits::from_env()) {
    require(x.nonnegative() && y.nonnegative(), "oracle mul: inputs must be nonnegative");
    RingElement out;
    for (const auto& [a, ca] : x.coeffs())
        for (const auto& [b, cb] : y.coeffs())
            out += (ca * cb) * oracle_mul(p, n, a, b, limits).to_element();
    return out;
}

}  // namespace greenring::jordan
