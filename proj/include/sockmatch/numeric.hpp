#pragma once

#include "sockmatch/count.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <mutex>
#include <vector>

namespace sockmatch {

/// Binomial coefficient C(n, r), exact.
///
/// Out-of-range r (negative or above n) yields 0 instead of an error:
/// the reflection-style sums in this library run their index past the
/// valid range and rely on the zero convention to terminate.
inline Count binomial(unsigned n, long long r) {
    if (r < 0 || r > static_cast<long long>(n)) return Count(0u);
    unsigned k = static_cast<unsigned>(r);
    if (k > n - k) k = n - k;
    Int acc = 1;
    for (unsigned i = 1; i <= k; ++i) {
        acc *= n - k + i;
        acc /= i; // exact at every step: acc is C(n-k+i, i)
    }
    return Count::from_signed(acc);
}

/// n-th Catalan number C(2n,n)/(n+1), memoized.
inline Count catalan(unsigned n) {
    static std::mutex mu;
    static std::vector<Count> table;
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= n) {
        const unsigned m = static_cast<unsigned>(table.size());
        Int c = binomial(2 * m, m).value() / (m + 1);
        table.push_back(Count::from_signed(c));
    }
    return table[n];
}

/// Same values by the convolution recurrence C_{m+1} = sum C_i C_{m-i}.
/// Kept free of any shortcut through catalan() so the two routes stay
/// independent cross-checks.
inline Count catalan_via_convolution(unsigned n) {
    static std::mutex mu;
    static std::vector<Int> table{Int(1)};
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= n) {
        const std::size_t m = table.size() - 1;
        Int next = 0;
        for (std::size_t i = 0; i <= m; ++i) next += table[i] * table[m - i];
        table.push_back(next);
    }
    return Count::from_signed(table[n]);
}

/// Stirling-based approximation 4^n / (n^{3/2} sqrt(pi)).
/// Overflows to +inf once the true value leaves double range (n ~ 510).
inline double catalan_stirling_approx(unsigned n) {
    if (n < 1) throw std::domain_error("catalan_stirling_approx requires n >= 1");
    const double ln = n * std::log(4.0) - 1.5 * std::log(static_cast<double>(n))
                      - 0.5 * std::log(std::acos(-1.0));
    return std::exp(ln);
}

/// catalan_stirling_approx(n) / catalan(n), evaluated in wide floating
/// point so it stays finite where the raw approximation overflows.
inline double catalan_stirling_ratio(unsigned n) {
    if (n < 1) throw std::domain_error("catalan_stirling_ratio requires n >= 1");
    using BF = boost::multiprecision::cpp_bin_float_50;
    const BF pi = boost::multiprecision::acos(BF(-1));
    const BF approx = boost::multiprecision::pow(BF(4), static_cast<int>(n))
                      / (boost::multiprecision::pow(BF(n), BF(1.5)) * boost::multiprecision::sqrt(pi));
    const BF exact(catalan(n).value());
    return static_cast<double>(approx / exact);
}

} // namespace sockmatch
