// Prints the exact height census for a small order next to the
// closed-form tail counts, then a handful of sampled trajectories.

#include <cstdio>
#include <string>

#include "sockmatch/sockmatch.hpp"

using namespace sockmatch;

int main() {
    const unsigned n = 10;
    const HeightDistribution dist = enumerate_heights(n);
    std::printf("order %u: %s paths total\n\n", n, catalan(n).str().c_str());
    std::printf("%6s %12s %12s\n", "height", "exact", "tail B(n,k)");
    for (unsigned k = 1; k <= n; ++k) {
        const Count exact =
            dist.exact_counts.count(k) ? dist.exact_counts.at(k) : Count(0u);
        std::printf("%6u %12s %12s\n", k, exact.str().c_str(),
                    b_explicit(n, k).str().c_str());
    }

    std::printf("\nfive uniform draws of order 6:\n");
    for (unsigned t = 0; t < 5; ++t) {
        RandomEngine rng = make_trial_engine(2718, t);
        const Trajectory traj = sample_uniform_dyck(6, rng);
        std::string line;
        for (const unsigned v : traj.values) line += std::to_string(v) + " ";
        std::printf("  height %u: %s\n", traj.max_height(), line.c_str());
    }
    return 0;
}
