#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "sockmatch/closed_form.hpp"
#include "sockmatch/count.hpp"
#include "sockmatch/numeric.hpp"

namespace sockmatch {

/// Result of rounding a floating trigonometric sum to a count. An
/// evaluation is only ever produced with residual < 0.25; anything
/// wider is rejected as a precision failure, never mis-rounded.
struct TrigEvaluation {
    double raw = 0.0;
    Count rounded;
    double residual = 0.0;
};

namespace detail {

inline constexpr long double pi_ld = std::numbers::pi_v<long double>;

/// Kahan-compensated accumulator.
class KahanSum {
public:
    void add(long double x) {
        const long double y = x - comp_;
        const long double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    [[nodiscard]] long double value() const { return sum_; }

private:
    long double sum_ = 0.0L;
    long double comp_ = 0.0L;
};

inline TrigEvaluation round_to_count(long double raw_ld) {
    TrigEvaluation ev;
    ev.raw = static_cast<double>(raw_ld);
    const double nearest = std::nearbyint(ev.raw);
    ev.residual = std::fabs(ev.raw - nearest);
    if (!(ev.residual < 0.25))
        throw precision_error("trigonometric sum residual reached "
                              + std::to_string(ev.residual));
    ev.rounded = Count::from_signed(Int(static_cast<long long>(nearest)));
    return ev;
}

inline void check_trig_envelope(unsigned n) {
    if (n < 1 || n > 25)
        throw std::domain_error("trigonometric forms support 1 <= n <= 25");
}

} // namespace detail

/// A(n, t) by the trigonometric closed form
/// (1/(t+2)) sum_{1<=j<=(t+1)/2} 4^{n+1} sin^2(theta_j) cos^2n(theta_j),
/// theta_j = j*pi/(t+2). Envelope 1 <= n <= 25.
inline TrigEvaluation a_trig(unsigned n, unsigned t) {
    detail::check_trig_envelope(n);
    detail::KahanSum sum;
    const long double scale = std::pow(4.0L, static_cast<long double>(n) + 1.0L);
    for (unsigned j = 1; 2 * j <= t + 1; ++j) {
        const long double theta = (j * detail::pi_ld) / (t + 2);
        const long double c = std::cos(theta);
        const long double s = std::sin(theta);
        sum.add(scale * s * s * std::pow(c, 2.0L * n));
    }
    return detail::round_to_count(sum.value() / (t + 2));
}

/// A(n, t) by the split form
/// (4^{n+1}/(t+2)) (sum cos^2n(theta_j) - sum cos^{2n+2}(theta_j)),
/// same range and envelope as a_trig.
inline TrigEvaluation a_trig_split(unsigned n, unsigned t) {
    detail::check_trig_envelope(n);
    detail::KahanSum even, odd;
    for (unsigned j = 1; 2 * j <= t + 1; ++j) {
        const long double theta = (j * detail::pi_ld) / (t + 2);
        const long double c = std::cos(theta);
        even.add(std::pow(c, 2.0L * n));
        odd.add(std::pow(c, 2.0L * n + 2.0L));
    }
    const long double scale = std::pow(4.0L, static_cast<long double>(n) + 1.0L);
    return detail::round_to_count(scale * (even.value() - odd.value()) / (t + 2));
}

/// Both sides of the cosine power-sum identity for m >= N:
/// lhs = sum_{j=0}^{N-1} cos^{2m}(j pi / N) numerically,
/// rhs = 2^{1-2m} N (C(2m-1, m-1) + sum_{p>=1} C(2m, m-pN)) exactly.
struct CosPowerSum {
    double lhs = 0.0;
    Ratio rhs;
};

inline CosPowerSum cos_power_sum(unsigned m, unsigned N) {
    if (m < 1 || N < 1) throw std::domain_error("cos_power_sum requires m, N >= 1");
    if (m < N) throw std::domain_error("cos_power_sum identity needs m >= N");
    detail::KahanSum sum;
    for (unsigned j = 0; j < N; ++j) {
        const long double theta = (j * detail::pi_ld) / N;
        sum.add(std::pow(std::cos(theta), 2.0L * m));
    }
    Int numer = binomial(2 * m - 1, static_cast<long long>(m) - 1).value();
    for (long long p = 1; p <= static_cast<long long>(m / N); ++p)
        numer += binomial(2 * m, static_cast<long long>(m) - p * N).value();
    numer *= N;
    const Int denom = Int(1) << (2 * m - 1);
    CosPowerSum out;
    out.lhs = static_cast<double>(sum.value());
    out.rhs = Ratio(Count::from_signed(numer), Count::from_signed(denom));
    return out;
}

namespace detail {

/// cos^2 and sin^2 of pi/(k+1), squared in extended precision and only
/// then narrowed, so dyadic values (k = 2, 3) come out exact.
struct AngleSquares {
    double c2;
    double s2;
};

inline AngleSquares angle_squares(unsigned k) {
    const long double theta = pi_ld / (k + 1);
    const long double c = std::cos(theta);
    const long double s = std::sin(theta);
    return {static_cast<double>(c * c), static_cast<double>(s * s)};
}

} // namespace detail

/// Leading term of the trigonometric sum for A_{n,k-1}:
/// (1/(k+1)) 4^{n+1} sin^2(pi/(k+1)) cos^2n(pi/(k+1)).
/// Exactly 1 for k = 2, where 4 cos^2 = 1.
inline double dominant_term(unsigned n, unsigned k) {
    if (n < 1 || k < 2) throw std::domain_error("dominant_term requires n >= 1, k >= 2");
    const auto [c2, s2] = detail::angle_squares(k);
    return std::pow(4.0 * c2, static_cast<double>(n)) * 4.0 * s2 / (k + 1);
}

/// Stirling-based estimate of 1 - P_{n,k}:
/// (4(n+1)/(k+1)) sqrt(pi n) sin^2(pi/(k+1)) cos^2n(pi/(k+1)).
inline double one_minus_p_estimate(unsigned n, unsigned k) {
    if (n < 1 || k < 2) throw std::domain_error("one_minus_p_estimate requires n >= 1, k >= 2");
    const auto [c2, s2] = detail::angle_squares(k);
    const double front = 4.0 * (static_cast<double>(n) + 1.0) / (k + 1);
    return front * std::sqrt(std::numbers::pi * n) * s2 * std::pow(c2, static_cast<double>(n));
}

/// One row of the convergence table for fixed k.
struct ConvergencePoint {
    unsigned n = 0;
    Ratio p_exact;      ///< B_{n,k} / C_n
    double p_float = 0.0;
    double bound = 0.0; ///< estimate of 1 - P_{n,k}; identically 0 for k = 1
};

/// P_{n,k} for n = k..n_max, exact and floating, with the asymptotic
/// 1 - P bound alongside. For k = 1 the probability is identically 1.
inline std::vector<ConvergencePoint> convergence_series(unsigned k, unsigned n_max) {
    if (k < 1) throw std::domain_error("convergence_series requires k >= 1");
    if (n_max < k) throw std::domain_error("convergence_series requires n_max >= k");
    std::vector<ConvergencePoint> out;
    out.reserve(n_max - k + 1);
    for (unsigned n = k; n <= n_max; ++n) {
        ConvergencePoint pt;
        pt.n = n;
        pt.p_exact = Ratio(b_explicit(n, k), catalan(n));
        pt.p_float = pt.p_exact.to_double();
        pt.bound = (k >= 2) ? one_minus_p_estimate(n, k) : 0.0;
        out.push_back(std::move(pt));
    }
    return out;
}

} // namespace sockmatch
