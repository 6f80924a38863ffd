#pragma once

#include <mutex>
#include <utility>
#include <vector>

#include "sockmatch/count.hpp"
#include "sockmatch/numeric.hpp"

namespace sockmatch {

/// Dense table of counts indexed by (n, k), n down the rows.
class CountTable {
public:
    CountTable(unsigned n_max, unsigned k_max)
        : n_max_(n_max), k_max_(k_max),
          data_((n_max + 1) * (k_max + 1), Count(0u)) {}

    [[nodiscard]] unsigned n_max() const { return n_max_; }
    [[nodiscard]] unsigned k_max() const { return k_max_; }

    [[nodiscard]] Count& at(unsigned n, unsigned k) {
        return data_.at(static_cast<std::size_t>(n) * (k_max_ + 1) + k);
    }
    [[nodiscard]] const Count& at(unsigned n, unsigned k) const {
        return data_.at(static_cast<std::size_t>(n) * (k_max_ + 1) + k);
    }

private:
    unsigned n_max_;
    unsigned k_max_;
    std::vector<Count> data_;
};

/// Table of A_{n,t} for 0 <= n <= n_max, 0 <= t <= t_max, built from the
/// concatenation recurrence A_{n,k+1} = sum_i A_{n-1-i,k+1} A_{i,k} with
/// A_{0,t} = 1 and A_{n,0} = 0 for n >= 1.
inline CountTable a_recurrence(unsigned n_max, unsigned t_max) {
    CountTable tab(n_max, t_max);
    for (unsigned t = 0; t <= t_max; ++t) tab.at(0, t) = Count(1u);
    for (unsigned t = 1; t <= t_max; ++t) {
        for (unsigned n = 1; n <= n_max; ++n) {
            Count acc(0u);
            for (unsigned i = 0; i < n; ++i) acc += tab.at(n - 1 - i, t) * tab.at(i, t - 1);
            tab.at(n, t) = acc;
        }
    }
    return tab;
}

namespace detail {

/// Memoized column store for one B-recurrence. Column j holds B_{n,j}
/// for all filled n; column 0 is the Catalan row. Each recurrence owns
/// its own store so the two stay independent cross-checks.
class BTable {
public:
    /// kind 0: first decomposition (split at the last return to 0 before
    /// the first high excursion); kind 1: the substituted form.
    explicit BTable(int kind) : kind_(kind) {}

    Count get(unsigned n, unsigned k) {
        std::lock_guard<std::mutex> lock(mu_);
        fill(n, k);
        return Count::from_signed(cols_[k][n]);
    }

private:
    void fill(unsigned n, unsigned k) {
        if (cols_.size() <= k) cols_.resize(k + 1);
        for (unsigned j = 0; j <= k; ++j) {
            auto& col = cols_[j];
            for (unsigned m = col.size(); m <= n; ++m) col.push_back(entry(m, j));
        }
    }

    Int entry(unsigned n, unsigned j) {
        if (j == 0) return catalan(n).value();
        if (n == 0) return 0;
        const auto& lower = cols_[j - 1];
        const auto& same = cols_[j];
        Int acc = 0;
        if (kind_ == 0) {
            for (unsigned i = 1; i <= n; ++i) {
                const Int& b1 = lower[i - 1];
                const Int& b2 = same[n - i];
                acc += b1 * catalan(n - i).value();
                acc += catalan(i - 1).value() * b2;
                acc -= b1 * b2;
            }
        } else {
            for (unsigned i = 0; i < n; ++i) {
                const Int& b1 = same[i];
                const Int& b2 = lower[n - i - 1];
                acc += b1 * catalan(n - i - 1).value();
                acc += catalan(i).value() * b2;
                acc -= b1 * b2;
            }
        }
        return acc;
    }

    int kind_;
    std::mutex mu_;
    std::vector<std::vector<Int>> cols_;
};

} // namespace detail

/// B(n, k) via B_{n,k} = sum_{i=1}^{n} (B_{i-1,k-1} C_{n-i}
/// + C_{i-1} B_{n-i,k} - B_{i-1,k-1} B_{n-i,k}), with B_{m,0} = C_m and
/// B_{0,j} = 0 for j >= 1.
inline Count b_recurrence_first(unsigned n, unsigned k) {
    static detail::BTable table(0);
    return table.get(n, k);
}

/// B(n, k) via the substituted form B_{n,k} = sum_{j=0}^{n-1}
/// (B_{j,k} C_{n-j-1} + C_j B_{n-j-1,k-1} - B_{j,k} B_{n-j-1,k-1}),
/// same boundary conventions, independent memo store.
inline Count b_recurrence_second(unsigned n, unsigned k) {
    static detail::BTable table(1);
    return table.get(n, k);
}

} // namespace sockmatch
