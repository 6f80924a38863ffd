#include <catch2/catch_amalgamated.hpp>

#include "sockmatch/closed_form.hpp"
#include "sockmatch/recurrence.hpp"

using namespace sockmatch;

TEST_CASE("A-recurrence table boundaries and small entries", "[recurrences]") {
    const CountTable tab = a_recurrence(15, 7);
    CHECK(tab.at(0, 7) == Count(1u));
    CHECK(tab.at(6, 3) == Count(89u));
    for (unsigned n = 1; n <= 15; ++n) {
        REQUIRE(tab.at(n, 0) == Count(0u));
        REQUIRE(tab.at(n, 1) == Count(1u));
    }
    for (unsigned t = 0; t <= 7; ++t) REQUIRE(tab.at(0, t) == Count(1u));
}

TEST_CASE("A-recurrence entries match the closed form", "[recurrences]") {
    const unsigned n_max = 20, t_max = 10;
    const CountTable tab = a_recurrence(n_max, t_max);
    for (unsigned n = 0; n <= n_max; ++n)
        for (unsigned t = 0; t <= t_max; ++t)
            REQUIRE(tab.at(n, t) == a_bounded(n, t));
}

TEST_CASE("first B-recurrence", "[recurrences]") {
    CHECK(b_recurrence_first(2, 2) == Count(1u));
    CHECK(b_recurrence_first(3, 2) == Count(4u));
    CHECK(b_recurrence_first(6, 6) == Count(1u));
}

TEST_CASE("second B-recurrence", "[recurrences]") {
    CHECK(b_recurrence_second(4, 2) == Count(13u));
    CHECK(b_recurrence_second(5, 4) == Count(8u));
    CHECK(b_recurrence_second(1, 2) == Count(0u));
}

TEST_CASE("recurrences agree with the closed forms", "[recurrences]") {
    for (unsigned n = 1; n <= 25; ++n)
        for (unsigned k = 1; k <= n; ++k) {
            const Count e = b_explicit(n, k);
            REQUIRE(b_recurrence_first(n, k) == e);
            REQUIRE(b_recurrence_second(n, k) == e);
            REQUIRE(b_recurrence_second(n, k) == b_recurrence_first(n, k));
        }
}

TEST_CASE("complement identity ties the A and B families", "[recurrences]") {
    const CountTable tab = a_recurrence(25, 25);
    for (unsigned n = 1; n <= 25; ++n)
        for (unsigned k = 1; k <= n + 1; ++k)
            REQUIRE(tab.at(n, k - 1) + b_recurrence_first(n, k) == catalan(n));
}

TEST_CASE("exact-height counts partition the Catalan total", "[recurrences]") {
    for (unsigned n = 1; n <= 20; ++n) {
        Count sum(0u);
        for (unsigned k = 1; k <= n; ++k) {
            const Count upper = (k + 1 <= n) ? b_recurrence_first(n, k + 1) : Count(0u);
            sum += b_recurrence_first(n, k) - upper;
        }
        REQUIRE(sum == catalan(n));
    }
}
