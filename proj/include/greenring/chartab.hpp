#pragma once

// Exact character-table arithmetic for finite groups in the non-modular
// case: c_n(V), the limit c(V) of Prop-type hypotheses, the Cauchy-Schwarz
// bound sqrt(k(G)/|G|), and Murnaghan-Nakayama tables for S_m.
//
// Built-in tables are rational-valued, so every inner product is exact.

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "greenring/common.hpp"

namespace greenring::grp {

struct ClassInfo {
    std::string name;
    long long size;
    int inverse;  // index of the class of g^{-1}
};

struct CharacterTable {
    std::string name;
    long long order = 0;
    std::vector<ClassInfo> classes;           // class 0 is the identity
    std::vector<std::vector<Rat>> chars;      // chars[irrep][class]

    int k() const { return static_cast<int>(classes.size()); }
    Rat dim(int irrep) const { return chars[irrep][0]; }

    // class-weighted inner product (f, chi_irrep) = (1/|G|) sum |c| f(c) chi(c^{-1})
    Rat inner(const std::vector<Rat>& f, int irrep) const {
        Rat acc(0);
        for (int c = 0; c < k(); ++c)
            acc += Rat(to_Int(classes[c].size)) * f[c] * chars[irrep][classes[c].inverse];
        acc /= Rat(to_Int(order));
        acc.canonicalize();
        return acc;
    }

    // Exact structural checks: row/column orthogonality, sum of squared
    // dimensions, class sizes.
    void verify() const {
        long long total = 0;
        for (const auto& c : classes) total += c.size;
        ensure(total == order, "character table: class sizes do not sum to |G|");
        Rat sq(0);
        for (int i = 0; i < k(); ++i) sq += dim(i) * dim(i);
        ensure(sq == Rat(to_Int(order)), "character table: sum dim^2 != |G| (Maschke)");
        for (int i = 0; i < k(); ++i)
            for (int j = 0; j < k(); ++j) {
                Rat ip = inner(chars[i], j);
                ensure(ip == Rat(i == j ? 1 : 0), "character table: row orthogonality fails");
            }
        for (int c = 0; c < k(); ++c)
            for (int d = 0; d < k(); ++d) {
                Rat acc(0);
                for (int i = 0; i < k(); ++i)
                    acc += chars[i][c] * chars[i][classes[d].inverse];
                Rat expect = (c == d) ? Rat(to_Int(order)) / Rat(to_Int(classes[c].size)) : Rat(0);
                expect.canonicalize();
                ensure(acc == expect, "character table: column orthogonality fails");
            }
    }

    // chi_V for a nonnegative combination of irreducibles.
    std::vector<Rat> character_of(const std::vector<Int>& mult) const {
        require(static_cast<int>(mult.size()) == k(),
                "rep spec: need one multiplicity per irreducible");
        std::vector<Rat> chi(k(), Rat(0));
        bool any = false;
        for (int i = 0; i < k(); ++i) {
            require(mult[i] >= 0, "rep spec: negative multiplicity");
            if (mult[i] == 0) continue;
            any = true;
            for (int c = 0; c < k(); ++c) chi[c] += Rat(mult[i]) * chars[i][c];
        }
        require(any, "rep spec: zero representation");
        return chi;
    }
};

// c_n(V) = [sum_L <chi_V^n, chi_L>] / (dim V)^n, exactly.
inline Rat cn(const CharacterTable& t, const std::vector<Int>& mult, long n) {
    require(n >= 1, "cn: n must be >= 1");
    std::vector<Rat> chi = t.character_of(mult);
    std::vector<Rat> chin(t.k(), Rat(1));
    for (long e = 0; e < n; ++e)
        for (int c = 0; c < t.k(); ++c) chin[c] *= chi[c];
    Rat total(0);
    for (int i = 0; i < t.k(); ++i) {
        Rat ip = t.inner(chin, i);
        require(ip.get_den() == 1 && ip >= 0,
                "cn: inner products are not nonnegative integers (not a character?)");
        total += ip;
    }
    Rat dimn(1);
    for (long e = 0; e < n; ++e) dimn *= chi[0];
    Rat out = total / dimn;
    out.canonicalize();
    return out;
}

// c(V) = (sum_L dim L)/|G| under the hypothesis that V is faithful and no
// nontrivial g acts by a scalar, i.e. |chi_V(g)| < dim V off the identity.
inline Rat climit(const CharacterTable& t, const std::vector<Int>& mult) {
    std::vector<Rat> chi = t.character_of(mult);
    Rat dim2 = chi[0] * chi[0];
    for (int c = 1; c < t.k(); ++c) {
        Rat norm2 = chi[c] * chi[t.classes[c].inverse];  // = |chi(g)|^2, exactly
        require(norm2 < dim2,
                "climit: hypothesis fails on class " + t.classes[c].name +
                    " (some nontrivial element acts by a scalar)");
    }
    Rat acc(0);
    for (int i = 0; i < t.k(); ++i) acc += t.dim(i);
    Rat out = acc / Rat(to_Int(t.order));
    out.canonicalize();
    return out;
}

inline double cs_bound(const CharacterTable& t) {
    return std::sqrt(static_cast<double>(t.k()) / static_cast<double>(t.order));
}

// Two leading terms of the factorial-type growth curve for log(c(V)^{-1}),
// delta (log delta - 1) + (1/2) log delta.  A reference curve only: the
// constant term is not pinned down, so this is not a rigorous bound.
inline double js_reference_curve(double delta) {
    require(delta >= 1.0, "reference curve: delta must be >= 1");
    return delta * (std::log(delta) - 1.0) + 0.5 * std::log(delta);
}

// --- built-in tables --------------------------------------------------------

inline CharacterTable s3_table() {
    CharacterTable t;
    t.name = "S3";
    t.order = 6;
    t.classes = {{"1", 1, 0}, {"2", 3, 1}, {"3", 2, 2}};
    t.chars = {{Rat(1), Rat(1), Rat(1)},
               {Rat(1), Rat(-1), Rat(1)},
               {Rat(2), Rat(0), Rat(-1)}};
    t.verify();
    return t;
}

inline CharacterTable s4_table() {
    CharacterTable t;
    t.name = "S4";
    t.order = 24;
    t.classes = {{"1", 1, 0}, {"2", 6, 1}, {"2+2", 3, 2}, {"3", 8, 3}, {"4", 6, 4}};
    t.chars = {{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)},
               {Rat(1), Rat(-1), Rat(1), Rat(1), Rat(-1)},
               {Rat(2), Rat(0), Rat(2), Rat(-1), Rat(0)},
               {Rat(3), Rat(1), Rat(-1), Rat(0), Rat(-1)},
               {Rat(3), Rat(-1), Rat(-1), Rat(0), Rat(1)}};
    t.verify();
    return t;
}

// Non-abelian group of order 8 (dihedral); Q_8 has the same table.
inline CharacterTable d4_table() {
    CharacterTable t;
    t.name = "D4";
    t.order = 8;
    t.classes = {{"e", 1, 0}, {"r2", 1, 1}, {"r", 2, 2}, {"s", 2, 3}, {"rs", 2, 4}};
    t.chars = {{Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)},
               {Rat(1), Rat(1), Rat(1), Rat(-1), Rat(-1)},
               {Rat(1), Rat(1), Rat(-1), Rat(1), Rat(-1)},
               {Rat(1), Rat(1), Rat(-1), Rat(-1), Rat(1)},
               {Rat(2), Rat(-2), Rat(0), Rat(0), Rat(0)}};
    t.verify();
    return t;
}

inline CharacterTable q8_table() {
    CharacterTable t = d4_table();
    t.name = "Q8";
    t.classes = {{"1", 1, 0}, {"-1", 1, 1}, {"i", 2, 2}, {"j", 2, 3}, {"k", 2, 4}};
    t.verify();
    return t;
}

// --- S_m via Murnaghan-Nakayama ---------------------------------------------

namespace detail {

using Partition = std::vector<int>;  // parts descending

inline std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(rest, maxpart); part >= 1; --part) {
            cur.push_back(part);
            rec(rest - part, part);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

inline long long factorial(int m) {
    long long f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

// centralizer order z_mu = prod k^{c_k} c_k!
inline long long class_size(int m, const Partition& mu) {
    std::map<int, int> freq;
    for (int part : mu) ++freq[part];
    long long z = 1;
    for (auto [part, count] : freq) {
        for (int i = 0; i < count; ++i) z *= part;
        z *= factorial(count);
    }
    return factorial(m) / z;
}

// chi_lambda(mu) by border-strip removal on beta numbers.
inline long long mn_char(const Partition& lambda, const Partition& mu) {
    if (lambda.empty()) return mu.empty() ? 1 : 0;
    if (mu.empty()) return 0;
    int len = static_cast<int>(lambda.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    int t = mu[0];
    Partition mu_rest(mu.begin() + 1, mu.end());
    long long acc = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[i];
        if (b < t) continue;
        int target = b - t;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < b) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        Partition next;
        for (int j = 0; j < len; ++j) {
            int part = nb[j] - (len - 1 - j);
            ensure(part >= 0, "MN: negative part");
            if (part > 0) next.push_back(part);
        }
        acc += (between % 2 ? -1 : 1) * mn_char(next, mu_rest);
    }
    return acc;
}

inline std::string partition_name(const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += "+";
        s += std::to_string(p[i]);
    }
    return s;
}

}  // namespace detail

// Integer character table of S_m generated by the MN recursion.
inline CharacterTable sm_table(int m) {
    require(m >= 3 && m <= 8, "sm_table: 3 <= m <= 8");
    auto parts = detail::partitions_of(m);
    CharacterTable t;
    t.name = "S" + std::to_string(m);
    t.order = detail::factorial(m);
    for (std::size_t c = 0; c < parts.size(); ++c)
        t.classes.push_back({detail::partition_name(parts[c]),
                             detail::class_size(m, parts[c]), static_cast<int>(c)});
    // identity class (1+1+...+1) must come first
    std::size_t id = 0;
    for (std::size_t c = 0; c < parts.size(); ++c)
        if (static_cast<int>(parts[c].size()) == m) id = c;
    std::swap(parts[0], parts[id]);
    std::swap(t.classes[0], t.classes[id]);
    t.classes[0].inverse = 0;
    t.classes[id].inverse = static_cast<int>(id);
    for (const auto& lambda : parts) {
        std::vector<Rat> row;
        for (const auto& mu : parts) row.push_back(Rat(to_Int(detail::mn_char(lambda, mu))));
        t.chars.push_back(std::move(row));
    }
    t.verify();
    return t;
}

// c(V) for a faithful V in S_m: the closed involution sum, cross-checked
// against the table-derived sum of dimensions.
inline Rat sm_climit(int m) {
    require(m >= 3 && m <= 8, "sm_climit: 3 <= m <= 8");
    Rat closed(0);
    for (int kk = 0; 2 * kk <= m; ++kk) {
        Int den = 1;
        for (int i = 2; i <= m - 2 * kk; ++i) den *= i;
        for (int i = 2; i <= kk; ++i) den *= i;
        for (int i = 0; i < kk; ++i) den *= 2;
        closed += Rat(Int(1), den);
    }
    closed.canonicalize();

    CharacterTable t = sm_table(m);
    Rat dims(0);
    for (int i = 0; i < t.k(); ++i) dims += t.dim(i);
    Rat table_val = dims / Rat(to_Int(t.order));
    table_val.canonicalize();
    ensure(closed == table_val, "sm_climit: involution sum differs from table value");
    return closed;
}

// --- user-supplied tables with irrational values ------------------------------
//
// Accepted as fixed-precision complex data with a 1e-9 comparison tolerance.

struct ApproxCharacterTable {
    std::string name;
    long long order = 0;
    std::vector<ClassInfo> classes;
    std::vector<std::vector<std::complex<double>>> chars;
    static constexpr double tol = 1e-9;

    int k() const { return static_cast<int>(classes.size()); }

    std::complex<double> inner(const std::vector<std::complex<double>>& f, int irrep) const {
        std::complex<double> acc(0.0);
        for (int c = 0; c < k(); ++c)
            acc += static_cast<double>(classes[c].size) * f[c] *
                   chars[irrep][classes[c].inverse];
        return acc / static_cast<double>(order);
    }

    void verify() const {
        for (int i = 0; i < k(); ++i)
            for (int j = 0; j < k(); ++j) {
                std::complex<double> ip = inner(chars[i], j);
                double expect = (i == j) ? 1.0 : 0.0;
                ensure(std::abs(ip - expect) < tol, "approx table: orthogonality fails");
            }
    }
};

inline double approx_cn(const ApproxCharacterTable& t, const std::vector<Int>& mult, long n) {
    require(n >= 1, "cn: n must be >= 1");
    require(static_cast<int>(mult.size()) == t.k(), "rep spec: wrong length");
    std::vector<std::complex<double>> chi(t.k(), 0.0);
    for (int i = 0; i < t.k(); ++i) {
        require(mult[i] >= 0, "rep spec: negative multiplicity");
        for (int c = 0; c < t.k(); ++c)
            chi[c] += mult[i].get_d() * t.chars[i][c];
    }
    std::vector<std::complex<double>> chin(t.k(), 1.0);
    for (long e = 0; e < n; ++e)
        for (int c = 0; c < t.k(); ++c) chin[c] *= chi[c];
    double total = 0.0;
    for (int i = 0; i < t.k(); ++i) {
        std::complex<double> ip = t.inner(chin, i);
        require(std::abs(ip.imag()) < ApproxCharacterTable::tol &&
                    std::abs(ip.real() - std::round(ip.real())) < ApproxCharacterTable::tol &&
                    ip.real() > -ApproxCharacterTable::tol,
                "cn: inner products are not nonnegative integers (not a character?)");
        total += std::round(ip.real());
    }
    return total / std::pow(chi[0].real(), static_cast<double>(n));
}

inline double approx_climit(const ApproxCharacterTable& t, const std::vector<Int>& mult) {
    std::vector<std::complex<double>> chi(t.k(), 0.0);
    for (int i = 0; i < t.k(); ++i)
        for (int c = 0; c < t.k(); ++c) chi[c] += mult[i].get_d() * t.chars[i][c];
    double dim = chi[0].real();
    for (int c = 1; c < t.k(); ++c)
        require(std::abs(chi[c]) < dim - ApproxCharacterTable::tol,
                "climit: hypothesis fails on class " + t.classes[c].name);
    double acc = 0.0;
    for (int i = 0; i < t.k(); ++i) acc += t.chars[i][0].real();
    return acc / static_cast<double>(t.order);
}

inline CharacterTable builtin_table(const std::string& name) {
    if (name == "S3") return s3_table();
    if (name == "S4") return s4_table();
    if (name == "D4") return d4_table();
    if (name == "Q8") return q8_table();
    if (name.size() == 2 && name[0] == 'S' && name[1] >= '3' && name[1] <= '8')
        return sm_table(name[1] - '0');
    throw precondition_error("unknown built-in character table: " + name);
}

}  // namespace greenring::grp
