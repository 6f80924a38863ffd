#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <vector>

#include "sockmatch/sampler.hpp"

using namespace sockmatch;

namespace {

void require_valid(const Trajectory& t, unsigned n) {
    REQUIRE(t.values.size() == 2 * n);
    REQUIRE(t.values.front() == 1);
    REQUIRE(t.values.back() == 0);
    unsigned prev = 0;
    for (const unsigned v : t.values) {
        REQUIRE((v == prev + 1 || v + 1 == prev));
        prev = v;
    }
}

} // namespace

TEST_CASE("trial engines are deterministic and distinct", "[sampler]") {
    RandomEngine a = make_trial_engine(42, 0);
    RandomEngine b = make_trial_engine(42, 0);
    RandomEngine c = make_trial_engine(42, 1);
    RandomEngine d = make_trial_engine(43, 0);
    const std::uint64_t first = a();
    CHECK(first == b());
    CHECK(first != c());
    CHECK(first != d());
}

TEST_CASE("uniform_below stays in range and skips forced draws", "[sampler]") {
    RandomEngine rng = make_trial_engine(7, 0);
    for (unsigned i = 0; i < 1000; ++i) REQUIRE(uniform_below(rng, 6ULL) < 6);

    RandomEngine x = make_trial_engine(9, 0);
    RandomEngine y = make_trial_engine(9, 0);
    CHECK(uniform_below(x, 1ULL) == 0);
    CHECK(uniform_below(x, Int(1)) == 0);
    CHECK(x() == y());

    RandomEngine z = make_trial_engine(11, 0);
    const Int big = Int("123456789012345678901234567890");
    std::map<int, int> buckets;
    for (unsigned i = 0; i < 2000; ++i) {
        const Int v = uniform_below(z, big);
        REQUIRE(v >= 0);
        REQUIRE(v < big);
        ++buckets[static_cast<int>(Int(10 * v / big))];
    }
    REQUIRE(buckets.size() == 10);
    for (const auto& [decile, count] : buckets) {
        CHECK(count > 100);
    }
}

TEST_CASE("samplers emit structurally valid trajectories", "[sampler]") {
    RandomEngine rng = make_trial_engine(3, 0);
    for (unsigned i = 0; i < 200; ++i) {
        require_valid(sample_uniform_dyck(6, rng), 6);
        require_valid(simulate_physical_draw(6, rng), 6);
    }
}

TEST_CASE("order one is forced for both samplers", "[sampler]") {
    RandomEngine rng = make_trial_engine(5, 0);
    for (unsigned i = 0; i < 50; ++i) {
        const Trajectory u = sample_uniform_dyck(1, rng);
        const Trajectory p = simulate_physical_draw(1, rng);
        REQUIRE(u.values == std::vector<unsigned>{1, 0});
        REQUIRE(p.values == std::vector<unsigned>{1, 0});
    }
}

TEST_CASE("estimates are reproducible bit for bit", "[sampler]") {
    const SimResult a = estimate_hit_probability(Model::uniform, 5, 2, 20000, 31415);
    const SimResult b = estimate_hit_probability(Model::uniform, 5, 2, 20000, 31415);
    CHECK(a.hits == b.hits);
    CHECK(a.p_hat == b.p_hat);
    CHECK(a.ci_low == b.ci_low);
    CHECK(a.ci_high == b.ci_high);
    CHECK(a.ci_low <= a.p_hat);
    CHECK(a.p_hat <= a.ci_high);

    const SimResult c = estimate_hit_probability(Model::physical, 5, 2, 20000, 31415);
    CHECK(c.hits != 0);
    CHECK(c.trials == 20000);
    CHECK_THROWS_AS(estimate_hit_probability(Model::uniform, 5, 2, 0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(estimate_hit_probability(Model::uniform, 5, 0, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("threshold one always hits", "[sampler]") {
    for (const Model m : {Model::uniform, Model::physical}) {
        const SimResult res = estimate_hit_probability(m, 4, 1, 5000, 99);
        REQUIRE(res.hits == res.trials);
        REQUIRE(res.p_hat == 1.0);
        REQUIRE(res.ci_high == 1.0);
    }
}

TEST_CASE("empirical frequencies track the exact values", "[sampler]") {
    const std::uint64_t trials = 100000;

    const SimResult u2 = estimate_hit_probability(Model::uniform, 2, 2, trials, 2024);
    const double sd_u2 = std::sqrt(0.5 * 0.5 / static_cast<double>(trials));
    CHECK(std::fabs(u2.p_hat - 0.5) < 3.0 * sd_u2);

    const SimResult u5 = estimate_hit_probability(Model::uniform, 5, 3, trials, 2024);
    const double p5 = 26.0 / 42.0;
    const double sd_u5 = std::sqrt(p5 * (1.0 - p5) / static_cast<double>(trials));
    CHECK(std::fabs(u5.p_hat - p5) < 3.0 * sd_u5);

    const SimResult ph = estimate_hit_probability(Model::physical, 2, 2, trials, 2024);
    const double pp = 2.0 / 3.0;
    const double sd_ph = std::sqrt(pp * (1.0 - pp) / static_cast<double>(trials));
    CHECK(std::fabs(ph.p_hat - pp) < 3.0 * sd_ph);
}

TEST_CASE("Wilson intervals cover the exact values on a small grid", "[sampler]") {
    const std::uint64_t trials = 20000;
    for (const Model m : {Model::uniform, Model::physical})
        for (const unsigned n : {2u, 5u})
            for (const unsigned k : {1u, 2u}) {
                const SimResult res = estimate_hit_probability(m, n, k, trials, 777);
                const Ratio exact = (m == Model::uniform)
                                        ? Ratio(b_explicit(n, k), catalan(n))
                                        : physical_hit_probability(n, k);
                const double p = exact.to_double();
                REQUIRE(res.ci_low <= p);
                REQUIRE(p <= res.ci_high);
            }
}
