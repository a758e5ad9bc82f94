#pragma once

// The based ring K_p on X_0..X_{p-1}: full multiplication table generated
// from the defining relations
//   X_0 = 1,  X_1 X_i = X_{i-1} + X_i + X_{i+1} (1 <= i <= p-2),
//   X_1 X_{p-1} = X_{p-2},
// together with the three characters of the ring and the FPdim character
// X_i -> [i+1]_q + [i]_q.

#include <memory>
#include <mutex>
#include <vector>

#include "greenring/qdelta.hpp"
#include "greenring/ring.hpp"
#include "greenring/verlinde.hpp"

namespace greenring {

class KpRing {
public:
    explicit KpRing(int p)
        : p_(p), rows_(generate(p)),
          table_(0, p, 0, [this](int i, int j) { return rows_[i][j]; }) {}

    static const KpRing& get(int p) {
        static std::mutex mu;
        static std::map<int, std::unique_ptr<KpRing>> registry;
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(p);
        if (it == registry.end())
            it = registry.emplace(p, std::make_unique<KpRing>(p)).first;
        return *it->second;
    }

    int p() const { return p_; }
    const FusionTable& table() const { return table_; }

    // Image of X_i under the ring map sending X_1 to x1_image, computed in
    // the target fusion ring by the same X-recursion that generates K_p.
    static std::vector<RingElement> phi_images(int p, const RingElement& x1_image,
                                               const FusionTable& target) {
        std::vector<RingElement> img(p);
        img[0] = target.unit_element();
        if (p >= 2) img[1] = x1_image;
        for (int i = 1; i + 1 <= p - 1; ++i)
            img[i + 1] = target.mul(x1_image, img[i]) - img[i] - img[i - 1];
        return img;
    }

    // phi_1(X_1) = L_1 + L_{p-2}: a based-ring homomorphism into Gr(Ver_p),
    // landing on odd simple indices.
    RingElement phi1(int i) const {
        require(p_ >= 5, "phi1: requires p >= 5");
        require(i >= 0 && i <= p_ - 1, "phi1: index out of range");
        const VerlindeRing& ver = VerlindeRing::get(p_);
        RingElement x1 = RingElement::basis(1) + RingElement::basis(p_ - 2);
        std::vector<RingElement> img = phi_images(p_, x1, ver.table());
        ensure(img[i].nonnegative(), "phi1 image has a negative coefficient");
        for (const auto& [k, c] : img[i].coeffs())
            ensure(k % 2 == 1, "phi1 image supported on an even index");
        return img[i];
    }

    // phi_2(X_1) = L_3: multiplicative but degenerate (kills X_{(p-1)/2}).
    RingElement phi2(int i) const {
        require(p_ >= 5, "phi2: requires p >= 5");
        require(i >= 0 && i <= p_ - 1, "phi2: index out of range");
        const VerlindeRing& ver = VerlindeRing::get(p_);
        std::vector<RingElement> img = phi_images(p_, RingElement::basis(3), ver.table());
        return img[i];
    }

    // phi_3(X_i) = (-1)^i, the categorical dimension.
    static int phi3(int i) { return (i % 2 == 0) ? 1 : -1; }

    // X_i -> [i+1]_q + [i]_q with the convention [0]_q = [p]_q = 0.
    DeltaValue fpdim_char(int i) const {
        require(i >= 0 && i <= p_ - 1, "fpdim_char: index out of range");
        std::vector<Int> m(p_ - 1, Int(0));
        if (i >= 1) m[i - 1] += 1;          // [i]_q
        if (i + 1 <= p_ - 1) m[i] += 1;     // [i+1]_q
        return DeltaValue(p_, std::move(m));
    }

private:
    // Rows of the table via X_{i+1} X_j = X_1 (X_i X_j) - X_i X_j - X_{i-1} X_j,
    // seeded by the defining products of X_1.  Doubles as a consistency
    // proof: every derived structure constant must come out nonnegative.
    static std::vector<std::vector<RingElement>> generate(int p) {
        require(is_prime(p), "K_p: p must be prime");
        std::vector<std::vector<RingElement>> rows(p, std::vector<RingElement>(p));
        for (int j = 0; j < p; ++j) rows[0][j] = RingElement::basis(j);
        if (p >= 2) {
            rows[1][0] = RingElement::basis(1);
            for (int j = 1; j <= p - 2; ++j) {
                RingElement e = RingElement::basis(j - 1) + RingElement::basis(j);
                e.add(j + 1, 1);
                rows[1][j] = e;
            }
            rows[1][p - 1] = RingElement::basis(p - 2);
        }
        auto mul_x1 = [&](const RingElement& e) {
            RingElement out;
            for (const auto& [k, c] : e.coeffs())
                out += c * rows[1][static_cast<std::size_t>(k)];
            return out;
        };
        for (int i = 1; i + 1 <= p - 1; ++i)
            for (int j = 0; j < p; ++j) {
                RingElement e = mul_x1(rows[i][j]) - rows[i][j] - rows[i - 1][j];
                ensure(e.nonnegative(), "K_p generation produced a negative constant");
                rows[i + 1][j] = std::move(e);
            }
        for (int i = 0; i < p; ++i)
            for (int j = 0; j < i; ++j)
                ensure(rows[i][j] == rows[j][i], "K_p table is not symmetric");
        return rows;
    }

    int p_;
    std::vector<std::vector<RingElement>> rows_;
    FusionTable table_;
};

}  // namespace greenring
