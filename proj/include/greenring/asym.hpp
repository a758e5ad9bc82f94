#pragma once

// Characteristic-zero asymptotics on the built-in root systems: exact
// d_n(V, s), the quadratic-form ratio gamma_V, the closed-form C_V(s), the
// convergence diagnostic d_n/(dim^n n^{(s-1)|R+|/2}), and a numerical
// verification of the Macdonald-Mehta-Opdam identity.
//
// The MMO left side is evaluated by quadrature in coordinates orthonormal
// for the normalized inner product (the measure the identity is stated
// for): in rank 2 the integral splits into a radial part and an angular
// part, and the angular integrand is analytic between consecutive root
// hyperplane angles, so adaptive Gauss-Legendre panels split at those
// angles converge fast even for the |.|^{s+1} kinks.

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "greenring/rootsys.hpp"

namespace greenring::asym {

using rs::RootSystem;
using rs::SimpleSystem;
using rs::Weight;
using rs::WeightDistribution;

// --- presets -----------------------------------------------------------------

struct PresetRep {
    std::vector<WeightDistribution> factor_parts;
    WeightDistribution joint;
};

namespace detail {

inline WeightDistribution factor_preset(const SimpleSystem& f, const std::string& name) {
    WeightDistribution v(f.rank);
    if (f.name == "A1" && name.size() >= 2 && name[0] == 'L') {
        int j = std::stoi(name.substr(1));
        require(j >= 1 && j <= 1000, "A1 preset: L1..L1000");
        for (int k = -j; k <= j; k += 2) v.add({k}, 1);
        return v;
    }
    if (f.name == "A2" && name == "standard") {
        v.add({1, 0}, 1);
        v.add({-1, 1}, 1);
        v.add({0, -1}, 1);
        return v;
    }
    if (f.name == "A2" && name == "adjoint") {
        for (Weight w : {Weight{2, -1}, Weight{-1, 2}, Weight{1, 1}}) {
            v.add(w, 1);
            v.add({-w[0], -w[1]}, 1);
        }
        v.add({0, 0}, 2);
        return v;
    }
    if (f.name == "B2" && name == "vector") {
        v.add({1, 0}, 1);
        v.add({-1, 2}, 1);
        v.add({0, 0}, 1);
        v.add({1, -2}, 1);
        v.add({-1, 0}, 1);
        return v;
    }
    if (f.name == "G2" && name == "seven") {
        v.add({0, 0}, 1);
        for (Weight w : {Weight{1, 0}, Weight{2, -1}, Weight{-1, 1}}) {
            v.add(w, 1);
            v.add({-w[0], -w[1]}, 1);
        }
        return v;
    }
    throw precondition_error("unknown preset '" + name + "' for " + f.name);
}

}  // namespace detail

// Comma-separated preset names, one per factor: "standard", "L1,adjoint", ...
inline PresetRep weight_preset(const RootSystem& sys, const std::string& spec) {
    std::vector<std::string> names;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t next = spec.find(',', pos);
        names.push_back(spec.substr(pos, next == std::string::npos ? std::string::npos
                                                                   : next - pos));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    require(names.size() == sys.factors.size(),
            "preset: need one name per factor, comma separated");
    PresetRep rep{{}, WeightDistribution(1)};
    for (std::size_t i = 0; i < names.size(); ++i)
        rep.factor_parts.push_back(detail::factor_preset(sys.factors[i], names[i]));
    WeightDistribution joint = rep.factor_parts[0];
    for (std::size_t i = 1; i < rep.factor_parts.size(); ++i)
        joint = joint.outer(rep.factor_parts[i]);
    rep.joint = joint;
    return rep;
}

// --- d_n(V, s) -----------------------------------------------------------------

struct DnsValue {
    std::optional<Int> exact;  // present for s = 0 and s = 1
    double value = 0.0;
};

inline double log_of_int(const Int& v) {
    ensure(v > 0, "log_of_int: nonpositive");
    long exp2;
    double d = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(d) + static_cast<double>(exp2) * std::log(2.0);
}

inline DnsValue dns(const RootSystem& sys, const WeightDistribution& v, long n, double s) {
    require(n >= 1, "dns: n must be >= 1");
    WeightDistribution m = rs::tensor_power(v, n);
    auto wrho = sys.wrho_list();
    bool exact = (s == 0.0) || (s == 1.0);
    Int acc_exact = 0;
    double acc = 0.0;
    std::vector<Weight> dominant;
    m.for_each([&](const Weight& w, const Int&) {
        for (int c : w)
            if (c < 0) return;
        dominant.push_back(w);
    });
    for (const Weight& mu : dominant) {
        Int mult = rs::simple_multiplicity(sys, m, mu, wrho);
        if (mult == 0) continue;
        Rat dim = rs::weyl_dim(sys, mu);
        if (s == 0.0) acc_exact += mult;
        else if (s == 1.0) acc_exact += mult * dim.get_num();
        acc += mult.get_d() * std::exp(s * std::log(dim.get_d()));
    }
    DnsValue out;
    if (exact) {
        out.exact = acc_exact;
        out.value = acc_exact.get_d();
    } else {
        out.value = acc;
    }
    return out;
}

// Evaluate d_n(V, s) at several n with one incremental convolution pass.
inline std::vector<std::pair<long, DnsValue>> dns_sweep(const RootSystem& sys,
                                                        const WeightDistribution& v,
                                                        std::vector<long> ns, double s) {
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    require(!ns.empty() && ns.front() >= 1, "dns_sweep: n must be >= 1");
    auto wrho = sys.wrho_list();
    std::vector<std::pair<long, DnsValue>> out;
    WeightDistribution m = v;
    long cur = 1;
    for (long target : ns) {
        for (; cur < target; ++cur) m = m.convolve(v);
        DnsValue val;
        Int acc_exact = 0;
        double acc = 0.0;
        m.for_each([&](const Weight& w, const Int&) {
            for (int c : w)
                if (c < 0) return;
            Int mult = rs::simple_multiplicity(sys, m, w, wrho);
            if (mult == 0) return;
            Rat dim = rs::weyl_dim(sys, w);
            if (s == 0.0) acc_exact += mult;
            else if (s == 1.0) acc_exact += mult * dim.get_num();
            acc += mult.get_d() * std::exp(s * std::log(dim.get_d()));
        });
        if (s == 0.0 || s == 1.0) {
            val.exact = acc_exact;
            val.value = acc_exact.get_d();
        } else {
            val.value = acc;
        }
        out.emplace_back(target, val);
    }
    return out;
}

// --- gamma_V -------------------------------------------------------------------

namespace detail {

// inverse of a small positive definite rational matrix
inline std::vector<std::vector<Rat>> invert(const std::vector<std::vector<Rat>>& a) {
    int r = static_cast<int>(a.size());
    std::vector<std::vector<Rat>> m = a, inv(r, std::vector<Rat>(r, Rat(0)));
    for (int i = 0; i < r; ++i) inv[i][i] = 1;
    for (int col = 0; col < r; ++col) {
        int piv = -1;
        for (int row = col; row < r; ++row)
            if (m[row][col] != 0) { piv = row; break; }
        require(piv >= 0, "gamma: quadratic form is singular (V not faithful enough)");
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        Rat d = m[col][col];
        for (int j = 0; j < r; ++j) {
            m[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int row = 0; row < r; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rat f = m[row][col];
            for (int j = 0; j < r; ++j) {
                m[row][j] -= f * m[col][j];
                inv[row][j] -= f * inv[col][j];
            }
        }
    }
    for (auto& row : inv)
        for (auto& x : row) x.canonicalize();
    return inv;
}

}  // namespace detail

// gamma with Q^{-1}(mu) = gamma (mu, mu): the Gram matrix of Q on the coroot
// basis is inverted and must be exactly proportional to the normalized form.
inline Rat gamma_v(const SimpleSystem& f, const WeightDistribution& v) {
    int r = f.rank;
    std::vector<std::vector<Rat>> q(r, std::vector<Rat>(r, Rat(0)));
    Int total = v.total();
    require(total > 0, "gamma: empty weight distribution");
    v.for_each([&](const Weight& w, const Int& c) {
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) q[i][j] += Rat(c * w[i] * w[j]);
    });
    for (auto& row : q)
        for (auto& x : row) {
            x /= Rat(total);
            x.canonicalize();
        }
    auto qinv = detail::invert(q);
    Rat gamma = qinv[0][0] / f.gram[0][0];
    gamma.canonicalize();
    require(gamma > 0, "gamma: quadratic form not positive definite");
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            Rat expect = gamma * f.gram[i][j];
            expect.canonicalize();
            require(qinv[i][j] == expect,
                    "gamma: Q^{-1} is not proportional to the normalized form "
                    "(not a single-factor situation)");
        }
    return gamma;
}

// --- C_V(s) ----------------------------------------------------------------------

inline double cvs_factor(const SimpleSystem& f, const WeightDistribution& v, double s) {
    require(s >= -1.0, "C_V(s): s must be >= -1");
    double g = gamma_v(f, v).get_d();
    double logc = 0.5 * (1.0 - s) * f.num_pos() * std::log(g);
    logc -= std::log(static_cast<double>(f.weyl_order()));
    logc -= 0.5 * (1.0 - s) * f.num_short() * std::log(static_cast<double>(f.laced));
    for (int d : f.degrees) {
        logc -= s * std::lgamma(static_cast<double>(d));  // (d-1)!^{-s}
        logc += std::lgamma(1.0 + 0.5 * (s + 1.0) * d) - std::lgamma(0.5 * (s + 3.0));
    }
    return std::exp(logc);
}

inline double cvs(const RootSystem& sys, const std::vector<WeightDistribution>& factor_parts,
                  double s) {
    require(factor_parts.size() == sys.factors.size(), "cvs: one distribution per factor");
    double c = 1.0;
    for (std::size_t i = 0; i < sys.factors.size(); ++i)
        c *= cvs_factor(sys.factors[i], factor_parts[i], s);
    return c;
}

// --- convergence diagnostic -------------------------------------------------------

inline double asym_ratio(const RootSystem& sys, const WeightDistribution& v, double s,
                         long n) {
    DnsValue d = dns(sys, v, n, s);
    double log_dns = d.exact ? log_of_int(*d.exact) : std::log(d.value);
    double log_dim = log_of_int(v.total());
    double expo = 0.5 * (s - 1.0) * sys.num_pos();
    return std::exp(log_dns - n * log_dim - expo * std::log(static_cast<double>(n)));
}

// c_n(L(1)) * sqrt(pi n / 2) for SL2 via log-factorials; tends to 1.
inline double a1_coin_ratio(long n) {
    require(n >= 1, "a1_coin_ratio: n must be >= 1");
    double nn = static_cast<double>(n);
    double logc = std::lgamma(nn + 1.0) - std::lgamma(std::floor(nn / 2.0) + 1.0) -
                  std::lgamma(nn - std::floor(nn / 2.0) + 1.0) - nn * std::log(2.0);
    return std::exp(logc + 0.5 * std::log(M_PI * nn / 2.0));
}

// --- Macdonald-Mehta-Opdam check ----------------------------------------------------

namespace quad {

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
inline const std::vector<std::pair<double, double>>& gl_rule(int order) {
    static std::map<int, std::vector<std::pair<double, double>>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(order);
    if (it != cache.end()) return it->second;
    std::vector<std::pair<double, double>> rule;
    for (int i = 0; i < order; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= order; ++k) {
                double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= order; ++k) {
            double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        double dp = order * (x * p1 - p0) / (x * x - 1.0);
        rule.emplace_back(x, 2.0 / ((1.0 - x * x) * dp * dp));
    }
    return cache.emplace(order, std::move(rule)).first->second;
}

template <typename F>
double gl_apply(const F& f, double a, double b, int order) {
    const auto& rule = gl_rule(order);
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double acc = 0.0;
    for (const auto& [x, w] : rule) acc += w * f(mid + half * x);
    return acc * half;
}

template <typename F>
double adaptive(const F& f, double a, double b, double tol, bool& converged,
                int depth = 0) {
    double coarse = gl_apply(f, a, b, 15);
    double fine = gl_apply(f, a, b, 31);
    if (std::fabs(fine - coarse) <= tol * (1.0 + std::fabs(fine))) return fine;
    if (depth >= 32) {
        converged = false;  // max refinement order reached
        return fine;
    }
    double mid = 0.5 * (a + b);
    return adaptive(f, a, mid, tol * 0.6, converged, depth + 1) +
           adaptive(f, mid, b, tol * 0.6, converged, depth + 1);
}

}  // namespace quad

struct MmoResult {
    double lhs;
    double rhs;
    double residual;  // |lhs - rhs| / rhs
};

inline MmoResult mmo_check(const RootSystem& sys, double s, double tol = 1e-9) {
    require(s >= -1.0, "mmo_check: s must be >= -1");
    int r = sys.rank();
    require(r <= 2, "mmo_check: rank <= 2 only");

    // closed form (right side), multiplicative over factors
    double log_rhs = 0.0;
    for (const auto& f : sys.factors) {
        log_rhs += 0.5 * (s + 1.0) * f.num_short() * std::log(static_cast<double>(f.laced));
        for (int d : f.degrees)
            log_rhs += std::lgamma(1.0 + 0.5 * (s + 1.0) * d) - std::lgamma(0.5 * (s + 3.0));
    }
    double rhs = std::exp(log_rhs);

    // orthonormal coordinates: block Cholesky of the Gram matrix
    std::vector<std::vector<double>> chol(r, std::vector<double>(r, 0.0));
    {
        int off = 0;
        for (const auto& f : sys.factors) {
            std::vector<std::vector<double>> g(f.rank, std::vector<double>(f.rank));
            for (int i = 0; i < f.rank; ++i)
                for (int j = 0; j < f.rank; ++j) g[i][j] = f.gram[i][j].get_d();
            for (int i = 0; i < f.rank; ++i)
                for (int j = 0; j <= i; ++j) {
                    double acc = g[i][j];
                    for (int k = 0; k < j; ++k)
                        acc -= chol[off + i][off + k] * chol[off + j][off + k];
                    chol[off + i][off + j] = (i == j) ? std::sqrt(acc)
                                                      : acc / chol[off + j][off + j];
                }
            off += f.rank;
        }
    }

    // coroot pairing functionals in orthonormal coordinates: v = L^{-1} c
    std::vector<std::vector<double>> vs;
    {
        int off = 0;
        for (const auto& f : sys.factors) {
            for (const auto& pairing : f.coroot_pairing) {
                std::vector<double> c(r, 0.0);
                for (int i = 0; i < f.rank; ++i) c[off + i] = pairing[i];
                std::vector<double> v(r, 0.0);
                for (int i = 0; i < r; ++i) {
                    double acc = c[i];
                    for (int k = 0; k < i; ++k) acc -= chol[i][k] * v[k];
                    v[i] = acc / chol[i][i];
                }
                vs.push_back(std::move(v));
            }
            off += f.rank;
        }
    }

    double lhs = 0.0;
    double expo = s + 1.0;
    bool converged = true;
    if (r == 1) {
        double scale = 1.0;
        for (const auto& v : vs) scale *= std::pow(std::fabs(v[0]), expo);
        double k = expo * static_cast<double>(vs.size());
        auto f = [&](double x) { return std::exp(-0.5 * x * x) * std::pow(x, k); };
        double integral = 2.0 * quad::adaptive(f, 0.0, 40.0, tol, converged);
        lhs = integral * scale / std::sqrt(2.0 * M_PI);
    } else {
        double k = expo * static_cast<double>(vs.size());
        auto frad = [&](double rho) { return std::exp(-0.5 * rho * rho) * std::pow(rho, k + 1.0); };
        double irad = quad::adaptive(frad, 0.0, 45.0, tol, converged);

        // split the circle at the hyperplane angles, where factors vanish
        std::vector<double> cuts;
        for (const auto& v : vs) {
            double phi = std::atan2(v[1], v[0]);
            for (double t : {phi + M_PI / 2, phi - M_PI / 2, phi + 3 * M_PI / 2}) {
                double a = std::fmod(t, 2 * M_PI);
                if (a < 0) a += 2 * M_PI;
                cuts.push_back(a);
            }
        }
        cuts.push_back(0.0);
        cuts.push_back(2 * M_PI);
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end(),
                               [](double a, double b) { return std::fabs(a - b) < 1e-12; }),
                   cuts.end());
        auto fang = [&](double theta) {
            double c = std::cos(theta), sn = std::sin(theta);
            double prod = 1.0;
            for (const auto& v : vs)
                prod *= std::pow(std::fabs(c * v[0] + sn * v[1]), expo);
            return prod;
        };
        double iang = 0.0;
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            iang += quad::adaptive(fang, cuts[i], cuts[i + 1], tol / cuts.size(), converged);
        lhs = irad * iang / (2.0 * M_PI);
    }

    ensure(converged, "mmo_check: quadrature did not converge at max order");
    double residual = std::fabs(lhs - rhs) / rhs;
    return {lhs, rhs, residual};
}

}  // namespace greenring::asym
