#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "sockmatch/count.hpp"
#include "sockmatch/oracle.hpp"

namespace sockmatch {

/// The generator identity is part of the external contract: pinned
/// seeds in tests and reproducible CLI runs depend on this exact
/// algorithm and on the seeding expansion below.
using RandomEngine = std::mt19937_64;

enum class Model { uniform, physical };

[[nodiscard]] inline std::string_view model_name(Model m) {
    return m == Model::uniform ? "uniform" : "physical";
}

namespace detail {

inline constexpr std::uint64_t kSeedGamma = 0x9E3779B97F4A7C15ULL;

/// SplitMix64 finalizer; the per-trial seed expansion.
inline std::uint64_t mix_seed(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace detail

/// Independent generator stream for one trial: mt19937_64 seeded with
/// mix_seed(seed + (trial + 1) * gamma). Trials can therefore run in
/// any order, or in parallel, without changing any result.
[[nodiscard]] inline RandomEngine make_trial_engine(std::uint64_t seed, std::uint64_t trial) {
    return RandomEngine(detail::mix_seed(seed + (trial + 1) * detail::kSeedGamma));
}

/// Uniform integer in [0, bound) by masked rejection on raw 64-bit
/// draws. bound = 1 is a forced outcome and consumes no entropy.
inline std::uint64_t uniform_below(RandomEngine& rng, std::uint64_t bound) {
    if (bound == 0) throw std::domain_error("uniform_below requires bound >= 1");
    if (bound == 1) return 0;
    const int bits = std::bit_width(bound - 1);
    const std::uint64_t mask = (bits == 64) ? ~0ULL : ((1ULL << bits) - 1);
    for (;;) {
        const std::uint64_t v = rng() & mask;
        if (v < bound) return v;
    }
}

/// Arbitrary-precision variant: low chunks drawn first, top chunk
/// masked to the bit width of bound - 1, rejection as above.
inline Int uniform_below(RandomEngine& rng, const Int& bound) {
    if (bound <= 0) throw std::domain_error("uniform_below requires bound >= 1");
    if (bound == 1) return Int(0);
    const unsigned bits = boost::multiprecision::msb(Int(bound - 1)) + 1;
    const unsigned words = (bits + 63) / 64;
    const Int top = Int(1) << bits;
    for (;;) {
        Int v = 0;
        for (unsigned w = 0; w < words; ++w) v |= Int(rng()) << (64 * w);
        v &= top - 1;
        if (v < bound) return v;
    }
}

namespace detail {

/// suffix_completions(m, a) for 0 <= m <= 2n, cached per n. Rows are
/// padded two entries past a = m, so the up-branch lookup at a + 1
/// reads a zero instead of falling off the row when a = m.
inline std::shared_ptr<const std::vector<std::vector<Int>>> suffix_table(unsigned n) {
    static std::mutex mu;
    static std::map<unsigned, std::shared_ptr<const std::vector<std::vector<Int>>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    auto tab = std::make_shared<std::vector<std::vector<Int>>>();
    tab->resize(2 * n + 1);
    for (unsigned m = 0; m <= 2 * n; ++m) {
        (*tab)[m].resize(m + 3);
        for (unsigned a = 0; a <= m + 2; ++a)
            (*tab)[m][a] = suffix_completions(m, a).value();
    }
    cache.emplace(n, tab);
    return tab;
}

} // namespace detail

/// Exactly uniform draw from the C_n trajectories of order n. Each
/// step compares an integer uniform below suffix(m, a) against the
/// up-branch count suffix(m-1, a+1); forced steps consume no entropy.
inline Trajectory sample_uniform_dyck(unsigned n, RandomEngine& rng) {
    if (n < 1) throw std::domain_error("sample_uniform_dyck requires n >= 1");
    const auto tab = detail::suffix_table(n);
    Trajectory traj;
    traj.values.reserve(2 * n);
    unsigned a = 0;
    for (unsigned m = 2 * n; m >= 1; --m) {
        const Int& total = (*tab)[m][a];
        const Int& up = (*tab)[m - 1][a + 1];
        bool step_up;
        if (up == total) step_up = true;
        else if (up == 0) step_up = false;
        else step_up = uniform_below(rng, total) < up;
        a = step_up ? a + 1 : a - 1;
        traj.values.push_back(a);
    }
    return traj;
}

/// Direct simulation of the drawing process: with i socks drawn and u
/// unmatched, the next draw matches with probability u/(2n-i). Exact
/// integer comparison, forced steps consume no entropy.
inline Trajectory simulate_physical_draw(unsigned n, RandomEngine& rng) {
    if (n < 1) throw std::domain_error("simulate_physical_draw requires n >= 1");
    Trajectory traj;
    traj.values.reserve(2 * n);
    unsigned u = 0;
    for (unsigned i = 0; i < 2 * n; ++i) {
        const unsigned remaining = 2 * n - i;
        bool match;
        if (u == 0) match = false;
        else if (u == remaining) match = true;
        else match = uniform_below(rng, static_cast<std::uint64_t>(remaining)) < u;
        u = match ? u - 1 : u + 1;
        traj.values.push_back(u);
    }
    return traj;
}

/// One Monte Carlo estimate with its 99% Wilson score interval.
struct SimResult {
    Model model = Model::uniform;
    unsigned n = 0;
    unsigned k = 0;
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;
};

namespace detail {

/// z for a two-sided 99% interval; pinned so intervals are stable.
inline constexpr double kWilsonZ99 = 2.5758293035489004;

} // namespace detail

/// Estimates P(max height >= k) under the chosen model. Deterministic
/// in (model, n, k, trials, seed); the Wilson interval always contains
/// p_hat.
inline SimResult estimate_hit_probability(Model model, unsigned n, unsigned k,
                                          std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (n < 1) throw std::invalid_argument("n must be positive");
    SimResult res;
    res.model = model;
    res.n = n;
    res.k = k;
    res.trials = trials;
    res.seed = seed;
    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomEngine rng = make_trial_engine(seed, t);
        const Trajectory traj = (model == Model::uniform)
                                    ? sample_uniform_dyck(n, rng)
                                    : simulate_physical_draw(n, rng);
        if (traj.max_height() >= k) ++res.hits;
    }
    const double z = detail::kWilsonZ99;
    const double nn = static_cast<double>(trials);
    res.p_hat = static_cast<double>(res.hits) / nn;
    const double denom = 1.0 + z * z / nn;
    const double center = (res.p_hat + z * z / (2.0 * nn)) / denom;
    const double half =
        z * std::sqrt(res.p_hat * (1.0 - res.p_hat) / nn + z * z / (4.0 * nn * nn)) / denom;
    res.ci_low = std::max(0.0, center - half);
    res.ci_high = std::min(1.0, center + half);
    return res;
}

} // namespace sockmatch
