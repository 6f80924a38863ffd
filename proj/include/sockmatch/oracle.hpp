#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "sockmatch/closed_form.hpp"
#include "sockmatch/count.hpp"
#include "sockmatch/numeric.hpp"

namespace sockmatch {

/// Unmatched-sock counts a_1..a_{2n} after each draw. Consecutive
/// entries differ by exactly 1, a_1 = 1, a_{2n} = 0, a_i >= 0, and
/// a_i has the parity of i.
struct Trajectory {
    std::vector<unsigned> values;

    [[nodiscard]] unsigned order() const {
        return static_cast<unsigned>(values.size() / 2);
    }
    [[nodiscard]] unsigned max_height() const {
        return values.empty() ? 0u : *std::max_element(values.begin(), values.end());
    }
};

/// Exact-height tallies for one order: exact_counts[k] is the number of
/// trajectories of order n whose maximum equals k. Values sum to C_n.
struct HeightDistribution {
    unsigned n = 0;
    std::map<unsigned, Count> exact_counts;

    /// Number of trajectories with maximum height >= k.
    [[nodiscard]] Count tail_sum(unsigned k) const {
        Count acc(0u);
        for (const auto& [height, count] : exact_counts)
            if (height >= k) acc += count;
        return acc;
    }
};

/// Visits every trajectory of order n exactly once, in lexicographic
/// step order with up-steps before down-steps. Iterative backtracking;
/// the visited Trajectory is reused between calls, so visitors must
/// copy anything they keep.
template <typename Visit>
inline void for_each_trajectory(unsigned n, Visit&& visit) {
    if (n == 0) throw std::domain_error("for_each_trajectory requires n >= 1");
    const unsigned len = 2 * n;
    Trajectory traj;
    traj.values.assign(len, 0u);
    std::vector<unsigned char> tried(len, 0u);
    unsigned i = 0;
    while (true) {
        if (i == len) {
            visit(static_cast<const Trajectory&>(traj));
            --i;
            continue;
        }
        const unsigned before = (i == 0) ? 0u : traj.values[i - 1];
        const unsigned after = len - i - 1;
        if (tried[i] == 0) {
            tried[i] = 1;
            if (before + 1 <= after) {
                traj.values[i] = before + 1;
                ++i;
                continue;
            }
        }
        if (tried[i] == 1) {
            tried[i] = 2;
            if (before > 0) {
                traj.values[i] = before - 1;
                ++i;
                continue;
            }
        }
        tried[i] = 0;
        if (i == 0) break;
        --i;
    }
}

/// Exhaustive height census for order n. Enumeration budget caps n at
/// 15 (C_15 is just under ten million paths).
inline HeightDistribution enumerate_heights(unsigned n) {
    if (n < 1) throw std::domain_error("enumerate_heights requires n >= 1");
    if (n > 15) throw std::domain_error("enumerate_heights budget is n <= 15");
    std::vector<unsigned long long> tally(n + 1, 0u);
    for_each_trajectory(n, [&](const Trajectory& t) { ++tally[t.max_height()]; });
    HeightDistribution dist;
    dist.n = n;
    for (unsigned k = 1; k <= n; ++k)
        if (tally[k] != 0) dist.exact_counts.emplace(k, Count(tally[k]));
    return dist;
}

namespace detail {

inline unsigned long long walk_dfs(unsigned steps_left, long long height,
                                   long long lower, long long upper) {
    if (height < -lower || height > upper) return 0;
    if (height > static_cast<long long>(steps_left) ||
        -height > static_cast<long long>(steps_left))
        return 0;
    if (steps_left == 0) return height == 0 ? 1u : 0u;
    return walk_dfs(steps_left - 1, height + 1, lower, upper) +
           walk_dfs(steps_left - 1, height - 1, lower, upper);
}

} // namespace detail

/// Brute-force count of ±1 walks of length 2n from 0 to 0 inside
/// [-h, t]. Budget n <= 10; arbiter for bounded_walk_count.
inline Count count_bounded_walks_oracle(const WalkSpec& spec) {
    if (spec.pairs > 10) throw std::domain_error("bounded-walk oracle budget is n <= 10");
    return Count(detail::walk_dfs(2 * spec.pairs, 0, spec.lower, spec.upper));
}

/// Number of ±1 walks of m steps from height a to 0 staying >= 0:
/// C(m, (m-a)/2) - C(m, (m+a+2)/2) when m >= a and m = a (mod 2),
/// otherwise 0. Drives the uniform sampler.
inline Count suffix_completions(unsigned m, unsigned a) {
    if (m < a || (m - a) % 2 != 0) return Count(0u);
    const long long down = static_cast<long long>(m - a) / 2;
    return Count::from_signed(binomial(m, down).value() -
                              binomial(m, down + static_cast<long long>(a) + 1).value());
}

/// Exact probability, drawing socks uniformly from the pile, that the
/// unmatched count ever reaches k. Forward DP over (draws, unmatched)
/// with an absorbing aggregate at k; all arithmetic exact.
inline Ratio physical_hit_probability(unsigned n, unsigned k) {
    if (k == 0) return Ratio::from_rational(Rational(1));
    if (n == 0 || k > n) return Ratio::from_rational(Rational(0));
    std::vector<Rational> cur(k, Rational(0)), next(k, Rational(0));
    Rational absorbed(0);
    cur[0] = 1;
    for (unsigned i = 0; i < 2 * n; ++i) {
        const unsigned remaining = 2 * n - i;
        for (auto& v : next) v = 0;
        for (unsigned u = 0; u < k; ++u) {
            if (cur[u] == 0) continue;
            const unsigned fresh = remaining - u;
            if (fresh > 0) {
                Rational go_up = cur[u] * fresh / remaining;
                if (u + 1 == k) absorbed += go_up;
                else next[u + 1] += go_up;
            }
            if (u > 0) next[u - 1] += cur[u] * u / remaining;
        }
        cur.swap(next);
    }
    return Ratio::from_rational(absorbed);
}

/// Same probability by brute force: every trajectory weighted by the
/// product of its per-draw transition probabilities. Budget n <= 10.
inline Ratio physical_hit_probability_oracle(unsigned n, unsigned k) {
    if (n < 1) throw std::domain_error("physical oracle requires n >= 1");
    if (n > 10) throw std::domain_error("physical oracle budget is n <= 10");
    Rational hit(0);
    for_each_trajectory(n, [&](const Trajectory& t) {
        if (t.max_height() < k) return;
        Rational w(1);
        unsigned prev = 0;
        for (unsigned i = 0; i < 2 * n; ++i) {
            const unsigned remaining = 2 * n - i;
            if (t.values[i] > prev) w *= Rational(remaining - prev, remaining);
            else w *= Rational(prev, remaining);
            prev = t.values[i];
        }
        hit += w;
    });
    return Ratio::from_rational(hit);
}

/// Total trajectory weight under the drawing model; exactly 1 for any
/// order in budget. Normalization check for the weight oracle.
inline Ratio physical_total_weight(unsigned n) {
    if (n < 1) throw std::domain_error("physical oracle requires n >= 1");
    if (n > 10) throw std::domain_error("physical oracle budget is n <= 10");
    Rational total(0);
    for_each_trajectory(n, [&](const Trajectory& t) {
        Rational w(1);
        unsigned prev = 0;
        for (unsigned i = 0; i < 2 * n; ++i) {
            const unsigned remaining = 2 * n - i;
            if (t.values[i] > prev) w *= Rational(remaining - prev, remaining);
            else w *= Rational(prev, remaining);
            prev = t.values[i];
        }
        total += w;
    });
    return Ratio::from_rational(total);
}

} // namespace sockmatch
