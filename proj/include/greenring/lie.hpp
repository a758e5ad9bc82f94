#pragma once

// Dynkin-type invariants and the small-characteristic bookkeeping built on
// them: the exponent-pruning procedure for the regular-nilpotent
// decomposition at a prime p > h, the self-dual strange formula, balanced
// Gauss-polynomial dimensions d_r, and the rank-2 catalogue.

#include <algorithm>
#include <string>
#include <vector>

#include "greenring/common.hpp"

namespace greenring::lie {

enum class Family { A, B, C, D, E, F, G };

struct DynkinType {
    Family fam;
    int rank;

    std::string str() const {
        switch (fam) {
            case Family::A: return "A" + std::to_string(rank);
            case Family::B: return "B" + std::to_string(rank);
            case Family::C: return "C" + std::to_string(rank);
            case Family::D: return "D" + std::to_string(rank);
            case Family::E: return "E" + std::to_string(rank);
            case Family::F: return "F4";
            case Family::G: return "G2";
        }
        return "?";
    }
};

inline DynkinType make_type(Family f, int rank) {
    switch (f) {
        case Family::A: require(rank >= 1, "A_n needs n >= 1"); break;
        case Family::B: require(rank >= 2, "B_n needs n >= 2"); break;
        case Family::C: require(rank >= 2, "C_n needs n >= 2"); break;
        case Family::D: require(rank >= 4, "D_n needs n >= 4"); break;
        case Family::E: require(rank >= 6 && rank <= 8, "E_n needs n in 6..8"); break;
        case Family::F: require(rank == 4, "F4 has rank 4"); break;
        case Family::G: require(rank == 2, "G2 has rank 2"); break;
    }
    return {f, rank};
}

inline DynkinType parse_type(const std::string& s) {
    require(s.size() >= 2, "Dynkin type: expected e.g. A3, E7");
    char fam = s[0];
    int rank = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        require(s[i] >= '0' && s[i] <= '9', "Dynkin type: bad rank");
        rank = rank * 10 + (s[i] - '0');
    }
    switch (fam) {
        case 'A': return make_type(Family::A, rank);
        case 'B': return make_type(Family::B, rank);
        case 'C': return make_type(Family::C, rank);
        case 'D': return make_type(Family::D, rank);
        case 'E': return make_type(Family::E, rank);
        case 'F': return make_type(Family::F, rank);
        case 'G': return make_type(Family::G, rank);
        default: throw precondition_error("Dynkin type: unknown family " + s);
    }
}

inline std::vector<int> exponents(const DynkinType& t) {
    std::vector<int> m;
    switch (t.fam) {
        case Family::A:
            for (int i = 1; i <= t.rank; ++i) m.push_back(i);
            break;
        case Family::B:
        case Family::C:
            for (int i = 1; i <= t.rank; ++i) m.push_back(2 * i - 1);
            break;
        case Family::D:
            for (int i = 1; i <= t.rank - 1; ++i) m.push_back(2 * i - 1);
            m.push_back(t.rank - 1);
            std::sort(m.begin(), m.end());
            break;
        case Family::E:
            if (t.rank == 6) m = {1, 4, 5, 7, 8, 11};
            else if (t.rank == 7) m = {1, 5, 7, 9, 11, 13, 17};
            else m = {1, 7, 11, 13, 17, 19, 23, 29};
            break;
        case Family::F: m = {1, 5, 7, 11}; break;
        case Family::G: m = {1, 5}; break;
    }
    return m;
}

inline int coxeter_number(const DynkinType& t) {
    switch (t.fam) {
        case Family::A: return t.rank + 1;
        case Family::B:
        case Family::C: return 2 * t.rank;
        case Family::D: return 2 * t.rank - 2;
        case Family::E: return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
        case Family::F: return 12;
        case Family::G: return 6;
    }
    return 0;
}

inline int dual_coxeter_number(const DynkinType& t) {
    switch (t.fam) {
        case Family::A: return t.rank + 1;
        case Family::B: return 2 * t.rank - 1;
        case Family::C: return t.rank + 1;
        case Family::D: return 2 * t.rank - 2;
        case Family::E: return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
        case Family::F: return 9;
        case Family::G: return 4;
    }
    return 0;
}

inline DynkinType dual_type(const DynkinType& t) {
    if (t.fam == Family::B) return {Family::C, t.rank};
    if (t.fam == Family::C) return {Family::B, t.rank};
    return t;
}

inline int lacedness(const DynkinType& t) {
    switch (t.fam) {
        case Family::B:
        case Family::C:
        case Family::F: return 2;
        case Family::G: return 3;
        default: return 1;
    }
}

// Structural invariants of the stored data; used by tests.
inline bool exponents_consistent(const DynkinType& t) {
    std::vector<int> m = exponents(t);
    if (static_cast<int>(m.size()) != t.rank) return false;
    int h = coxeter_number(t);
    if (*std::max_element(m.begin(), m.end()) != h - 1) return false;
    long long dim = 0;
    for (int mi : m) dim += 2LL * mi + 1;
    return dim == static_cast<long long>(t.rank) * (h + 1);
}

// The regular-nilpotent decomposition at p > h: start from {2m_i + 1},
// remove one copy of p if present, then repeatedly remove the largest
// k > p together with one copy of its mirror 2p - k.
inline std::vector<int> g_decomp(const DynkinType& t, int p) {
    require(is_prime(p), "g_decomp: p must be prime");
    require(p > coxeter_number(t), "g_decomp: requires p > h");
    std::vector<int> parts;
    for (int m : exponents(t)) parts.push_back(2 * m + 1);
    std::sort(parts.begin(), parts.end());
    auto erase_one = [&parts](int v) {
        auto it = std::find(parts.begin(), parts.end(), v);
        if (it == parts.end()) return false;
        parts.erase(it);
        return true;
    };
    erase_one(p);
    while (!parts.empty() && parts.back() > p) {
        int k = parts.back();
        parts.pop_back();
        ensure(erase_one(2 * p - k), "g_decomp: missing mirror copy of " +
                                         std::to_string(2 * p - k));
    }
    return parts;
}

// sum m(m+1)(2m+1)/3 = lacedness * h^v(Q) * h^v(Q^v) * (h+1) * r / 6, exactly.
inline bool strange_check(const DynkinType& t) {
    long long lhs3 = 0;  // 3 * LHS
    for (int m : exponents(t)) lhs3 += static_cast<long long>(m) * (m + 1) * (2 * m + 1);
    ensure(lhs3 % 3 == 0, "strange formula: LHS not divisible by 3");
    long long rhs6 = static_cast<long long>(lacedness(t)) * dual_coxeter_number(t) *
                     dual_coxeter_number(dual_type(t)) *
                     (coxeter_number(t) + 1) * t.rank;
    if (rhs6 % 6 != 0) return false;
    return lhs3 / 3 == rhs6 / 6;
}

// Gaussian binomial C(n, k)_q via the q-Pascal recurrence, exact.
inline std::vector<Int> gauss_binomial(int n, int k) {
    require(n >= 0 && k >= 0 && k <= n, "gauss_binomial: bad arguments");
    // row-by-row in n, keeping polynomials for all j <= k
    std::vector<std::vector<Int>> row(k + 1);
    row[0] = {Int(1)};
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            // C(i, j)_q = C(i-1, j-1)_q + q^j C(i-1, j)_q
            std::vector<Int> next = row[j - 1];
            if (static_cast<int>(row[j].size()) != 0 && j <= i - 1) {
                std::size_t need = row[j].size() + j;
                if (next.size() < need) next.resize(need, Int(0));
                for (std::size_t d = 0; d < row[j].size(); ++d) next[d + j] += row[j][d];
            }
            row[j] = std::move(next);
        }
    }
    return row[k];
}

// Balanced coefficients (a_0, a_2) of C(r, 4)_q: the Laurent recentering
// puts degree 2(r-4) at q^0.
inline std::pair<Int, Int> gauss_balanced_a0_a2(int r) {
    require(r >= 5 && r % 2 == 1, "gauss_d: r must be odd and >= 5");
    std::vector<Int> c = gauss_binomial(r, 4);
    int center = 2 * (r - 4);
    ensure(static_cast<int>(c.size()) == 4 * (r - 4) + 1, "gauss polynomial degree wrong");
    return {c[center], c[center + 2]};
}

// d_r = dim Hom(1, wedge^4 L_r) = a_0(r) - a_2(r) in the balanced form.
inline Int gauss_d(int r) {
    auto [a0, a2] = gauss_balanced_a0_a2(r);
    return a0 - a2;
}

struct Rank2Entry {
    std::string name;
    std::vector<int> decomp;
};

// Simple rank-2 Lie algebras present at the prime p.
inline std::vector<Rank2Entry> rank2_catalogue(int p) {
    require(is_prime(p) && p >= 5, "rank2_catalogue: p must be a prime >= 5");
    std::vector<Rank2Entry> out;
    if (p >= 7) out.push_back({"A2", {3, 5}});
    if (p >= 11) out.push_back({"B2", {3, 7}});
    if (p >= 11) out.push_back({"D2*", {3, p - 2}});
    if (p >= 17) out.push_back({"G2", {3, 11}});
    if (p == 23) out.push_back({"E2*", {3, 15}});
    if (p == 37) out.push_back({"E2**", {3, 23}});
    return out;
}

// The exceptional-type table entries with their primes, as golden data.
struct ExceptionalEntry {
    const char* type;
    int p;
    std::vector<int> decomp;
};

inline const std::vector<ExceptionalEntry>& exceptional_table() {
    static const std::vector<ExceptionalEntry> table = {
        {"F4", 17, {3, 15}},
        {"E6", 17, {3, 9, 15}},
        {"F4", 19, {3, 11}},
        {"E6", 19, {3, 9, 11, 17}},
        {"F4", 23, {3, 11, 15}},
        {"E6", 23, {3, 9, 11, 15, 17}},
        {"E7", 23, {3, 15}},
        {"E7", 29, {3, 11, 15, 19, 27}},
        {"E7", 31, {3, 11, 15, 19, 23}},
        {"E8", 37, {3, 23}},
        {"E8", 41, {3, 15, 27, 39}},
        {"E8", 43, {3, 15, 23, 35}},
        {"E8", 47, {3, 15, 23, 27, 39}},
        {"E8", 53, {3, 15, 23, 27, 35, 39}},
        {"E8", 59, {3, 15, 23, 27, 35, 39, 47}},
    };
    return table;
}

}  // namespace greenring::lie
