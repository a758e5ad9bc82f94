// Multiplication in the semisimplified Green ring of a cyclic 2-group:
// factor u_99 and u_53 into Verlinde and K_2 coordinates, multiply
// coordinatewise, and compare with the Jordan-type oracle.

#include <cstdio>

#include "greenring/green.hpp"
#include "greenring/jordan.hpp"

using namespace greenring;

static void show(const char* label, const green::FactorizedClass& f) {
    std::printf("%s = (base L_%d; levels", label, f.base);
    for (int x : f.levels) std::printf(" X_%d", x);
    std::printf(")\n");
}

int main() {
    green::CyclicContext ctx(2, 7);  // Z/128

    auto f99 = green::factorize(ctx, 99);
    auto f53 = green::factorize(ctx, 53);
    show("u_99", f99);
    show("u_53", f53);

    RingElement prod = green::ssbar_mul(ctx, 99, 53);
    std::printf("u_99 * u_53 = %s\n", prod.str("u").c_str());

    // the same product through exact F_2 linear algebra
    RingElement oracle =
        green::project(ctx, jordan::oracle_mul(2, 7, 99, 53).to_element());
    std::printf("oracle route  = %s\n", oracle.str("u").c_str());
    std::printf("%s\n", prod == oracle ? "agree" : "DISAGREE");

    // a p = 3 example with a non-invertible class
    green::CyclicContext c3(3, 2);  // Z/9
    std::printf("\nu_4^2 over Z/9 = %s\n", green::ssbar_mul(c3, 4, 4).str("u").c_str());
    auto rows = green::dn_cyclic(c3, 4, 8);
    std::printf("d_n(u_4):");
    for (const auto& r : rows) std::printf(" %s", r.d_n.get_str().c_str());
    std::printf("\n");
    return 0;
}
