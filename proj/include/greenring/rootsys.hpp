#pragma once

// Root-system data for the built-in rank <= 2 systems (A1, A2, B2, G2) and
// their direct products, plus exact weight-multiplicity arithmetic: tensor
// powers of a weight distribution, simple multiplicities via the Weyl
// character formula, and the Weyl dimension formula.
//
// Weights are stored in fundamental-weight coordinates.  The inner product
// is normalized so long roots have squared length 2; its Gram matrix on the
// fundamental weights is exact rational data, checked against the Weyl
// group invariants on construction.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "greenring/common.hpp"

namespace greenring::rs {

using Weight = std::vector<int>;

struct WeylElement {
    std::vector<std::vector<int>> mat;
    int sign;

    Weight apply(const Weight& w) const {
        int r = static_cast<int>(mat.size());
        Weight out(r, 0);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) out[i] += mat[i][j] * w[j];
        return out;
    }
};

struct SimpleSystem {
    std::string name;
    int rank = 0;
    std::vector<std::vector<int>> cartan;          // A[i][j] = 2(a_i,a_j)/(a_i,a_i)
    std::vector<std::vector<Rat>> gram;            // (omega_i, omega_j)
    std::vector<std::vector<int>> coroot_pairing;  // (lambda, alpha^v) = sum c_i lambda_i
    std::vector<std::vector<int>> pos_roots;       // omega coordinates
    std::vector<bool> short_flag;
    std::vector<int> degrees;
    int laced = 1;
    std::vector<WeylElement> weyl;

    int num_pos() const { return static_cast<int>(coroot_pairing.size()); }
    int num_short() const {
        int c = 0;
        for (bool b : short_flag) c += b ? 1 : 0;
        return c;
    }
    long weyl_order() const { return static_cast<long>(weyl.size()); }
};

namespace detail {

inline std::vector<WeylElement> generate_weyl(const std::vector<std::vector<int>>& cartan) {
    int r = static_cast<int>(cartan.size());
    std::vector<WeylElement> gens;
    for (int i = 0; i < r; ++i) {
        WeylElement s;
        s.sign = -1;
        s.mat.assign(r, std::vector<int>(r, 0));
        for (int j = 0; j < r; ++j) s.mat[j][j] = 1;
        for (int j = 0; j < r; ++j) s.mat[j][i] -= cartan[j][i];
        gens.push_back(std::move(s));
    }
    std::map<std::vector<std::vector<int>>, int> seen;
    std::vector<WeylElement> all;
    WeylElement id;
    id.sign = 1;
    id.mat.assign(r, std::vector<int>(r, 0));
    for (int j = 0; j < r; ++j) id.mat[j][j] = 1;
    all.push_back(id);
    seen[id.mat] = 1;
    for (std::size_t head = 0; head < all.size(); ++head) {
        WeylElement cur = all[head];  // copy: all may reallocate
        for (const auto& g : gens) {
            WeylElement next;
            next.sign = cur.sign * g.sign;
            next.mat.assign(r, std::vector<int>(r, 0));
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b)
                    for (int c = 0; c < r; ++c) next.mat[a][b] += g.mat[a][c] * cur.mat[c][b];
            if (seen.emplace(next.mat, 1).second) all.push_back(std::move(next));
        }
        ensure(all.size() <= 12000, "Weyl group closure did not terminate");
    }
    return all;
}

inline void verify_simple(const SimpleSystem& s) {
    long deg_prod = 1;
    for (int d : s.degrees) deg_prod *= d;
    ensure(deg_prod == s.weyl_order(), "|W| != product of degrees");

    // sum of positive roots = 2 rho = (2,...,2)
    std::vector<int> total(s.rank, 0);
    for (const auto& root : s.pos_roots)
        for (int i = 0; i < s.rank; ++i) total[i] += root[i];
    for (int i = 0; i < s.rank; ++i) ensure(total[i] == 2, "sum of positive roots != 2 rho");

    // every Weyl element permutes the root set {+-roots}
    std::map<Weight, int> rootset;
    for (const auto& root : s.pos_roots) {
        rootset[root] = 1;
        Weight neg = root;
        for (int& x : neg) x = -x;
        rootset[neg] = 1;
    }
    for (const auto& w : s.weyl)
        for (const auto& [root, tag] : rootset)
            ensure(rootset.count(w.apply(root)) == 1, "Weyl element does not permute roots");

    // the Gram matrix is W-invariant: w^T G w = G
    for (const auto& w : s.weyl)
        for (int i = 0; i < s.rank; ++i)
            for (int j = 0; j < s.rank; ++j) {
                Rat acc(0);
                for (int a = 0; a < s.rank; ++a)
                    for (int b = 0; b < s.rank; ++b)
                        acc += Rat(w.mat[a][i]) * s.gram[a][b] * Rat(w.mat[b][j]);
                ensure(acc == s.gram[i][j], "Gram matrix is not Weyl invariant");
            }
}

inline SimpleSystem make_a1() {
    SimpleSystem s;
    s.name = "A1";
    s.rank = 1;
    s.cartan = {{2}};
    s.gram = {{Rat(1, 2)}};
    s.coroot_pairing = {{1}};
    s.pos_roots = {{2}};
    s.short_flag = {false};
    s.degrees = {2};
    s.laced = 1;
    s.weyl = generate_weyl(s.cartan);
    verify_simple(s);
    return s;
}

inline SimpleSystem make_a2() {
    SimpleSystem s;
    s.name = "A2";
    s.rank = 2;
    s.cartan = {{2, -1}, {-1, 2}};
    s.gram = {{Rat(2, 3), Rat(1, 3)}, {Rat(1, 3), Rat(2, 3)}};
    s.coroot_pairing = {{1, 0}, {0, 1}, {1, 1}};
    s.pos_roots = {{2, -1}, {-1, 2}, {1, 1}};
    s.short_flag = {false, false, false};
    s.degrees = {2, 3};
    s.laced = 1;
    s.weyl = generate_weyl(s.cartan);
    verify_simple(s);
    return s;
}

inline SimpleSystem make_b2() {
    SimpleSystem s;
    s.name = "B2";
    s.rank = 2;
    // alpha_1 long, alpha_2 short
    s.cartan = {{2, -1}, {-2, 2}};
    s.gram = {{Rat(1), Rat(1, 2)}, {Rat(1, 2), Rat(1, 2)}};
    s.coroot_pairing = {{1, 0}, {0, 1}, {2, 1}, {1, 1}};  // a1, a2, a1+a2, a1+2a2
    s.pos_roots = {{2, -2}, {-1, 2}, {1, 0}, {0, 2}};
    s.short_flag = {false, true, true, false};
    s.degrees = {2, 4};
    s.laced = 2;
    s.weyl = generate_weyl(s.cartan);
    verify_simple(s);
    return s;
}

inline SimpleSystem make_g2() {
    SimpleSystem s;
    s.name = "G2";
    s.rank = 2;
    // alpha_1 short, alpha_2 long
    s.cartan = {{2, -3}, {-1, 2}};
    s.gram = {{Rat(2, 3), Rat(1)}, {Rat(1), Rat(2)}};
    // a1, a2, a1+a2, 2a1+a2, 3a1+a2, 3a1+2a2
    s.coroot_pairing = {{1, 0}, {0, 1}, {1, 3}, {2, 3}, {1, 1}, {1, 2}};
    s.pos_roots = {{2, -1}, {-3, 2}, {-1, 1}, {1, 0}, {3, -1}, {0, 1}};
    s.short_flag = {true, false, true, true, false, false};
    s.degrees = {2, 6};
    s.laced = 3;
    s.weyl = generate_weyl(s.cartan);
    verify_simple(s);
    return s;
}

}  // namespace detail

struct RootSystem {
    std::vector<SimpleSystem> factors;

    int rank() const {
        int r = 0;
        for (const auto& f : factors) r += f.rank;
        return r;
    }
    int num_pos() const {
        int n = 0;
        for (const auto& f : factors) n += f.num_pos();
        return n;
    }
    long weyl_order() const {
        long n = 1;
        for (const auto& f : factors) n *= f.weyl_order();
        return n;
    }
    Weight rho() const { return Weight(rank(), 1); }

    std::string name() const {
        std::string s;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) s += "x";
            s += factors[i].name;
        }
        return s;
    }

    // All (w rho, sign) pairs across the product group.
    std::vector<std::pair<Weight, int>> wrho_list() const {
        std::vector<std::pair<Weight, int>> out{{Weight{}, 1}};
        for (const auto& f : factors) {
            Weight rho_f(f.rank, 1);
            std::vector<std::pair<Weight, int>> next;
            next.reserve(out.size() * f.weyl.size());
            for (const auto& [prefix, sign] : out)
                for (const auto& w : f.weyl) {
                    Weight ext = prefix;
                    Weight wr = w.apply(rho_f);
                    ext.insert(ext.end(), wr.begin(), wr.end());
                    next.emplace_back(std::move(ext), sign * w.sign);
                }
            out = std::move(next);
        }
        return out;
    }
};

// "A2", "A1xA2", "B2xG2", ...
inline RootSystem builtin_system(const std::string& name) {
    RootSystem sys;
    std::size_t pos = 0;
    while (pos < name.size()) {
        std::size_t next = name.find('x', pos);
        std::string tok = name.substr(pos, next == std::string::npos ? std::string::npos
                                                                     : next - pos);
        if (tok == "A1") sys.factors.push_back(detail::make_a1());
        else if (tok == "A2") sys.factors.push_back(detail::make_a2());
        else if (tok == "B2") sys.factors.push_back(detail::make_b2());
        else if (tok == "G2") sys.factors.push_back(detail::make_g2());
        else throw precondition_error("unknown root system: " + tok);
        pos = next == std::string::npos ? name.size() : next + 1;
    }
    require(!sys.factors.empty(), "empty root system name");
    require(sys.rank() <= 4, "products of total rank > 4 are not supported");
    return sys;
}

// Sparse weight-multiplicity map with packed keys (rank <= 4, |coord| <= 32000).
class WeightDistribution {
public:
    explicit WeightDistribution(int rank) : rank_(rank) {
        require(rank >= 1 && rank <= 4, "weight distribution: rank must be 1..4");
    }

    static WeightDistribution delta(int rank) {  // unit of convolution
        WeightDistribution d(rank);
        d.add(Weight(rank, 0), Int(1));
        return d;
    }

    int rank() const { return rank_; }

    void add(const Weight& w, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = mass_.try_emplace(encode(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) mass_.erase(it);
        }
    }

    Int at(const Weight& w) const {
        auto it = mass_.find(encode(w));
        return it == mass_.end() ? Int(0) : it->second;
    }

    Int total() const {
        Int t = 0;
        for (const auto& [k, c] : mass_) t += c;
        return t;
    }

    std::size_t support_size() const { return mass_.size(); }

    void for_each(const std::function<void(const Weight&, const Int&)>& f) const {
        for (const auto& [k, c] : mass_) f(decode(k), c);
    }

    WeightDistribution convolve(const WeightDistribution& other) const {
        require(rank_ == other.rank_, "convolve: rank mismatch");
        const WeightDistribution& big = support_size() >= other.support_size() ? *this : other;
        const WeightDistribution& small = support_size() >= other.support_size() ? other : *this;
        WeightDistribution out(rank_);
        out.mass_.reserve(big.support_size() * 2);
        for (const auto& [ks, cs] : small.mass_) {
            Weight ws = decode(ks);
            for (const auto& [kb, cb] : big.mass_) {
                Weight w = decode(kb);
                for (int i = 0; i < rank_; ++i) w[i] += ws[i];
                out.add(w, cs * cb);
            }
        }
        return out;
    }

    // Outer product with disjoint coordinates (for product systems).
    WeightDistribution outer(const WeightDistribution& other) const {
        WeightDistribution out(rank_ + other.rank_);
        for (const auto& [ka, ca] : mass_) {
            Weight wa = decode(ka);
            for (const auto& [kb, cb] : other.mass_) {
                Weight w = wa;
                Weight wb = other.decode(kb);
                w.insert(w.end(), wb.begin(), wb.end());
                out.add(w, ca * cb);
            }
        }
        return out;
    }

    bool is_weyl_invariant(const RootSystem& sys) const;

private:
    std::uint64_t encode(const Weight& w) const {
        ensure(static_cast<int>(w.size()) == rank_, "weight has wrong rank");
        std::uint64_t key = 0;
        for (int i = 0; i < rank_; ++i) {
            require(w[i] >= -32000 && w[i] <= 32000, "weight coordinate out of range");
            key |= static_cast<std::uint64_t>(static_cast<std::uint16_t>(w[i] + 32768))
                   << (16 * i);
        }
        return key;
    }
    Weight decode(std::uint64_t key) const {
        Weight w(rank_);
        for (int i = 0; i < rank_; ++i)
            w[i] = static_cast<int>((key >> (16 * i)) & 0xffffu) - 32768;
        return w;
    }

    int rank_;
    std::unordered_map<std::uint64_t, Int> mass_;
};

// Apply a product-group Weyl element blockwise.
inline Weight apply_blockwise(const RootSystem& sys, const std::vector<const WeylElement*>& ws,
                              const Weight& w) {
    Weight out;
    int off = 0;
    for (std::size_t f = 0; f < sys.factors.size(); ++f) {
        Weight part(w.begin() + off, w.begin() + off + sys.factors[f].rank);
        Weight image = ws[f]->apply(part);
        out.insert(out.end(), image.begin(), image.end());
        off += sys.factors[f].rank;
    }
    return out;
}

inline bool WeightDistribution::is_weyl_invariant(const RootSystem& sys) const {
    std::vector<std::size_t> idx(sys.factors.size(), 0);
    std::vector<const WeylElement*> ws(sys.factors.size());
    // iterate the product of Weyl groups
    while (true) {
        for (std::size_t f = 0; f < sys.factors.size(); ++f)
            ws[f] = &sys.factors[f].weyl[idx[f]];
        bool ok = true;
        for_each([&](const Weight& w, const Int& c) {
            if (at(apply_blockwise(sys, ws, w)) != c) ok = false;
        });
        if (!ok) return false;
        std::size_t f = 0;
        while (f < idx.size()) {
            if (++idx[f] < sys.factors[f].weyl.size()) break;
            idx[f] = 0;
            ++f;
        }
        if (f == idx.size()) break;
    }
    return true;
}

// n-fold convolution of the weight distribution.
inline WeightDistribution tensor_power(const WeightDistribution& v, long n) {
    require(n >= 1, "tensor_power: n must be >= 1");
    WeightDistribution acc = v;
    for (long i = 1; i < n; ++i) acc = acc.convolve(v);
    return acc;
}

// [M : L_mu] = sum_w (-1)^w dim M[mu + rho - w rho]  (Weyl character formula).
inline Int simple_multiplicity(const RootSystem&, const WeightDistribution& m,
                               const Weight& mu,
                               const std::vector<std::pair<Weight, int>>& wrho) {
    for (int c : mu) require(c >= 0, "simple_multiplicity: mu must be dominant");
    Int acc = 0;
    Weight probe(mu.size());
    for (const auto& [wr, sign] : wrho) {
        for (std::size_t i = 0; i < mu.size(); ++i) probe[i] = mu[i] + 1 - wr[i];
        if (sign > 0) acc += m.at(probe);
        else acc -= m.at(probe);
    }
    require(acc >= 0, "simple_multiplicity: negative value (not a representation)");
    return acc;
}

inline Int simple_multiplicity(const RootSystem& sys, const WeightDistribution& m,
                               const Weight& mu) {
    return simple_multiplicity(sys, m, mu, sys.wrho_list());
}

// Weyl dimension formula; the result must be a positive integer.
inline Rat weyl_dim(const RootSystem& sys, const Weight& mu) {
    for (int c : mu) require(c >= 0, "weyl_dim: mu must be dominant");
    Rat dim(1);
    int off = 0;
    for (const auto& f : sys.factors) {
        for (const auto& pairing : f.coroot_pairing) {
            long num = 0, den = 0;
            for (int i = 0; i < f.rank; ++i) {
                num += static_cast<long>(pairing[i]) * (mu[off + i] + 1);
                den += pairing[i];
            }
            dim *= Rat(num, den);
        }
        off += f.rank;
    }
    dim.canonicalize();
    ensure(dim.get_den() == 1 && dim > 0, "weyl_dim: non-integer value (root data bug)");
    return dim;
}

}  // namespace greenring::rs
