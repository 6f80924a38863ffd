// Shows P(n,k) marching toward 1 for a fixed threshold, with the
// asymptotic estimate of the miss probability alongside.

#include <cstdio>

#include "sockmatch/sockmatch.hpp"

using namespace sockmatch;

int main() {
    const unsigned k = 3;
    std::printf("threshold k = %u\n\n", k);
    std::printf("%5s %22s %16s %14s\n", "n", "exact", "decimal", "est. 1-P");
    for (const unsigned n : {3u, 5u, 10u, 20u, 40u, 80u, 160u}) {
        const Ratio p(b_explicit(n, k), catalan(n));
        std::printf("%5u %22s %16s %14.6g\n", n, p.str().c_str(),
                    p.to_decimal_string(10).c_str(), one_minus_p_estimate(n, k));
    }

    std::printf("\nphysical-model comparison at n = 2, k = 2:\n");
    const Ratio uniform(b_explicit(2, 2), catalan(2));
    const Ratio physical = physical_hit_probability(2, 2);
    std::printf("  uniform paths: %s   drawing process: %s\n",
                uniform.str().c_str(), physical.str().c_str());
    return 0;
}
