#pragma once

// Exact sparse arithmetic for based rings given by structure constants.
//
// A RingElement is a finitely supported Z-linear combination of basis
// indices; a FusionTable supplies the products of basis pairs.  Everything
// is immutable after construction and safe for concurrent use; the table's
// lazy memo cache is guarded by a mutex.

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <vector>

#include "greenring/common.hpp"

namespace greenring {

class RingElement {
public:
    using index_t = std::int64_t;

    RingElement() = default;

    static RingElement basis(index_t i) {
        RingElement e;
        e.coeffs_[i] = 1;
        return e;
    }

    static RingElement from_pairs(const std::vector<std::pair<index_t, Int>>& pairs) {
        RingElement e;
        for (const auto& [i, c] : pairs) e.add(i, c);
        return e;
    }

    // Canonical form: zero coefficients are never stored.
    void add(index_t i, const Int& c) {
        if (c == 0) return;
        auto it = coeffs_.find(i);
        if (it == coeffs_.end()) {
            coeffs_.emplace(i, c);
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    Int coeff(index_t i) const {
        auto it = coeffs_.find(i);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    const std::map<index_t, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t support_size() const { return coeffs_.size(); }

    bool nonnegative() const {
        for (const auto& [i, c] : coeffs_)
            if (c < 0) return false;
        return true;
    }

    RingElement& operator+=(const RingElement& o) {
        for (const auto& [i, c] : o.coeffs_) add(i, c);
        return *this;
    }
    RingElement& operator-=(const RingElement& o) {
        for (const auto& [i, c] : o.coeffs_) add(i, -c);
        return *this;
    }
    friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
    friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
    friend RingElement operator-(const RingElement& a) {
        RingElement r;
        for (const auto& [i, c] : a.coeffs_) r.coeffs_.emplace(i, -c);
        return r;
    }
    friend RingElement operator*(const Int& k, const RingElement& a) {
        RingElement r;
        if (k == 0) return r;
        for (const auto& [i, c] : a.coeffs_) r.coeffs_.emplace(i, k * c);
        return r;
    }

    bool operator==(const RingElement& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RingElement& o) const { return !(*this == o); }

    std::string str(const std::string& sym = "e") const {
        if (coeffs_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& [i, c] : coeffs_) {
            if (!first) s += c >= 0 ? " + " : " - ";
            else if (c < 0) s += "-";
            Int a = abs(c);
            if (a != 1) s += a.get_str() + "*";
            s += sym + "_" + std::to_string(i);
            first = false;
        }
        return s;
    }

private:
    std::map<index_t, Int> coeffs_;
};

// Sum of coefficients over indices not flagged negligible.
inline Int summand_count(const RingElement& a,
                         const std::function<bool(RingElement::index_t)>& negligible = nullptr) {
    Int total = 0;
    for (const auto& [i, c] : a.coeffs()) {
        require(c >= 0, "summand_count: negative coefficient, not an object");
        if (!negligible || !negligible(i)) total += c;
    }
    return total;
}

// A commutative based ring on basis indices lo .. lo+size-1 with a
// distinguished unit.  Structure constants come from a callback and are
// memoized on first use.
class FusionTable {
public:
    using index_t = RingElement::index_t;

    FusionTable(int lo, int size, int unit,
                std::function<RingElement(int, int)> constants)
        : lo_(lo), size_(size), unit_(unit), constants_(std::move(constants)),
          memo_(static_cast<std::size_t>(size) * size) {}

    FusionTable(const FusionTable&) = delete;
    FusionTable& operator=(const FusionTable&) = delete;

    int lo() const { return lo_; }
    int size() const { return size_; }
    int unit() const { return unit_; }
    bool valid_index(index_t i) const { return i >= lo_ && i < lo_ + size_; }

    const RingElement& product(int i, int j) const {
        require(valid_index(i) && valid_index(j), "fusion table: basis index out of range");
        std::size_t slot = static_cast<std::size_t>(i - lo_) * size_ + (j - lo_);
        std::lock_guard<std::mutex> lock(mutex_);
        if (!memo_[slot]) memo_[slot] = constants_(i, j);
        return *memo_[slot];
    }

    // Bilinear extension of the structure constants.
    RingElement mul(const RingElement& a, const RingElement& b) const {
        RingElement out;
        for (const auto& [i, ci] : a.coeffs()) {
            require(valid_index(i), "mul: basis index out of range");
            for (const auto& [j, cj] : b.coeffs()) {
                require(valid_index(j), "mul: basis index out of range");
                Int cij = ci * cj;
                for (const auto& [k, n] : product(static_cast<int>(i), static_cast<int>(j)).coeffs())
                    out.add(k, cij * n);
            }
        }
        return out;
    }

    RingElement pow(const RingElement& a, long n) const {
        require(n >= 1, "pow: exponent must be >= 1");
        RingElement acc = a;
        for (long k = 1; k < n; ++k) acc = mul(acc, a);
        return acc;
    }

    RingElement unit_element() const { return RingElement::basis(unit_); }

private:
    int lo_;
    int size_;
    int unit_;
    std::function<RingElement(int, int)> constants_;
    mutable std::vector<std::optional<RingElement>> memo_;
    mutable std::mutex mutex_;
};

// Exhaustive law checks, used by tests and `selftest`.
inline bool check_commutative(const FusionTable& t) {
    for (int i = t.lo(); i < t.lo() + t.size(); ++i)
        for (int j = i; j < t.lo() + t.size(); ++j)
            if (t.product(i, j) != t.product(j, i)) return false;
    return true;
}

inline bool check_associative(const FusionTable& t) {
    for (int i = t.lo(); i < t.lo() + t.size(); ++i)
        for (int j = t.lo(); j < t.lo() + t.size(); ++j) {
            RingElement ij = t.product(i, j);
            for (int k = t.lo(); k < t.lo() + t.size(); ++k) {
                RingElement lhs = t.mul(ij, RingElement::basis(k));
                RingElement rhs = t.mul(RingElement::basis(i), t.product(j, k));
                if (lhs != rhs) return false;
            }
        }
    return true;
}

inline bool check_unit(const FusionTable& t) {
    for (int i = t.lo(); i < t.lo() + t.size(); ++i)
        if (t.product(t.unit(), i) != RingElement::basis(i)) return false;
    return true;
}

}  // namespace greenring
