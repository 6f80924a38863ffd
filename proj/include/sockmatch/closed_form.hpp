#pragma once

#include "sockmatch/count.hpp"
#include "sockmatch/numeric.hpp"

namespace sockmatch {

/// A family of ±1 walks with 2n steps from 0 back to 0, confined to the
/// band [-lower, upper].
struct WalkSpec {
    unsigned pairs = 0; ///< n: number of up/down pairs (walk length 2n)
    unsigned lower = 0; ///< h: how far below the axis the walk may go
    unsigned upper = 0; ///< t: how far above the axis the walk may go
};

namespace detail {

/// C(2n, r) with the zero convention, as a signed Int for sum assembly.
inline Int b2n(unsigned two_n, long long r) { return binomial(two_n, r).value(); }

} // namespace detail

/// Number of ±1 walks of length 2n from 0 to 0 staying within [-h, t].
///
/// Four-term reflection sum with period h+t+2; the sum truncates once
/// every binomial argument has fallen below zero. Partial sums may dip
/// negative, so the narrowing happens only at the end.
inline Count bounded_walk_count(const WalkSpec& spec) {
    const unsigned n = spec.pairs;
    const long long h = spec.lower, t = spec.upper;
    const long long period = h + t + 2;
    Int acc = 0;
    for (long long j = 0; static_cast<long long>(n) - j * period >= 0; ++j) {
        const long long base = static_cast<long long>(n) - j * period;
        acc += detail::b2n(2 * n, base);
        acc -= detail::b2n(2 * n, base - h - 1);
        acc -= detail::b2n(2 * n, base - t - 1);
        acc += detail::b2n(2 * n, static_cast<long long>(n) - (j + 1) * period);
    }
    return Count::from_signed(acc);
}

/// A(n, t): number of nonnegative ±1 walks (lower barrier 0) of length
/// 2n from 0 to 0 with height at most t. A(0, t) = 1 by convention.
inline Count a_bounded(unsigned n, unsigned t) {
    if (n == 0) return Count(1u);
    return bounded_walk_count(WalkSpec{n, 0, t});
}

/// B(n, k): number of nonnegative walks of length 2n whose height
/// reaches k or more, by the two-sum explicit formula.
inline Count b_explicit(unsigned n, unsigned k) {
    if (k < 1) throw std::domain_error("b_explicit requires k >= 1");
    const long long period = static_cast<long long>(k) + 1;
    Int acc = 0;
    for (long long j = 1; j <= (static_cast<long long>(n) + 1) / period; ++j) {
        acc += binomial(2 * n + 2, static_cast<long long>(n) + 1 - j * period).value();
    }
    for (long long j = 1; j <= static_cast<long long>(n) / period; ++j) {
        acc -= 4 * binomial(2 * n, static_cast<long long>(n) - j * period).value();
    }
    return Count::from_signed(acc);
}

/// B(n, k) by the equivalent three-term reflection sum.
inline Count b_alt(unsigned n, unsigned k) {
    if (k < 1) throw std::domain_error("b_alt requires k >= 1");
    const long long period = static_cast<long long>(k) + 1;
    Int acc = 0;
    for (long long j = 1; static_cast<long long>(n) + 1 - j * period >= 0; ++j) {
        const long long base = static_cast<long long>(n) - j * period;
        acc += detail::b2n(2 * n, base + 1);
        acc -= 2 * detail::b2n(2 * n, base);
        acc += detail::b2n(2 * n, base - 1);
    }
    return Count::from_signed(acc);
}

/// B(n, k) as the complement C_n - A(n, k-1): a path misses height k
/// exactly when it stays at or below k-1.
inline Count b_complement(unsigned n, unsigned k) {
    if (n < 1 || k < 1) throw std::domain_error("b_complement requires n >= 1, k >= 1");
    return catalan(n) - a_bounded(n, k - 1);
}

/// A(n, t) assembled purely from binomial coefficients. Valid only on
/// n >= t + 2, where the underlying power-sum identity applies; callers
/// outside that envelope use a_bounded instead.
inline Count a_binomial_form(unsigned n, unsigned t) {
    if (n < t + 2) throw std::domain_error("a_binomial_form requires n >= t + 2");
    const long long period = static_cast<long long>(t) + 2;
    Int acc = Int(4) * binomial(2 * n - 1, static_cast<long long>(n) - 1).value();
    for (long long j = 1; j <= static_cast<long long>(n) / period; ++j) {
        acc += 4 * binomial(2 * n, static_cast<long long>(n) - j * period).value();
    }
    acc -= binomial(2 * n + 1, n).value();
    for (long long j = 1; j <= (static_cast<long long>(n) + 1) / period; ++j) {
        acc -= binomial(2 * n + 2, static_cast<long long>(n) + 1 - j * period).value();
    }
    return Count::from_signed(acc);
}

} // namespace sockmatch
