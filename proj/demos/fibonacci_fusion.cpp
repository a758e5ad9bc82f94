// Tensor powers of L_2 in the Ver_5 fusion ring: the summand counts follow
// the Fibonacci recursion and c_n converges with golden-ratio geometry.

#include <cstdio>

#include "greenring/verlinde.hpp"

using namespace greenring;

int main() {
    const VerlindeRing& ver = VerlindeRing::get(5);
    RingElement v = RingElement::basis(2);

    std::printf("delta(L_2) = %.15f\n", ver.delta(v).numeric().value);
    auto kv = ver.kv(v);
    std::printf("K_V = delta(L_%d) = %.15f\n\n", kv.argmax, kv.value.numeric().value);

    std::printf("%4s %12s %12s %12s\n", "n", "d_n", "c_n", "margin");
    auto p0 = ver.check_p0(v, 16);
    auto rows = ver.dn_sequence(v, 16);
    for (std::size_t i = 0; i < rows.size(); ++i)
        std::printf("%4ld %12s %12.8f %12.8f\n", rows[i].n, rows[i].d_n.get_str().c_str(),
                    rows[i].c_n.value, p0[i].margin);
    return 0;
}
