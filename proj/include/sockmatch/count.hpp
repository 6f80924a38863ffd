#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace sockmatch {

/// Signed arbitrary-precision integer used for intermediate algebra.
/// Formula evaluation happens here; results narrow to Count at the end.
using Int = boost::multiprecision::cpp_int;

/// Exact rational backing for probabilities. Always kept in canonical
/// form (lowest terms, positive denominator) by the backend.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a value that must be a nonnegative count comes out
/// negative. This never happens for correct formula transcriptions, so
/// it is a logic error, not an input error.
struct negative_count_error : std::logic_error {
    using std::logic_error::logic_error;
};

/// Thrown when a floating-point evaluation cannot be rounded to an
/// integer with confidence (residual too large).
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An exact nonnegative integer count of combinatorial objects.
///
/// Alternating-sign sums are evaluated in Int and narrowed through
/// from_signed(), which rejects negative results loudly.
class Count {
public:
    Count() = default;
    Count(unsigned v) : value_(v) {}
    Count(unsigned long v) : value_(v) {}
    Count(unsigned long long v) : value_(v) {}

    static Count from_signed(Int v) {
        if (v < 0) {
            throw negative_count_error("count narrowed from negative value: " + v.str());
        }
        Count c;
        c.value_ = std::move(v);
        return c;
    }

    [[nodiscard]] const Int& value() const noexcept { return value_; }
    [[nodiscard]] std::string str() const { return value_.str(); }
    [[nodiscard]] bool is_zero() const noexcept { return value_.is_zero(); }

    [[nodiscard]] double to_double() const { return value_.convert_to<double>(); }

    /// Exact conversion for values that fit; throws std::overflow_error otherwise.
    [[nodiscard]] std::uint64_t to_uint64() const { return value_.convert_to<std::uint64_t>(); }

    Count& operator+=(const Count& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    Count& operator*=(const Count& rhs) {
        value_ *= rhs.value_;
        return *this;
    }

    friend Count operator+(Count lhs, const Count& rhs) { return lhs += rhs; }
    friend Count operator*(Count lhs, const Count& rhs) { return lhs *= rhs; }

    /// Checked subtraction: the difference must be nonnegative.
    friend Count operator-(const Count& lhs, const Count& rhs) {
        return Count::from_signed(lhs.value_ - rhs.value_);
    }

    friend bool operator==(const Count& a, const Count& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Count& a, const Count& b) { return a.value_ != b.value_; }
    friend bool operator<(const Count& a, const Count& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Count& a, const Count& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Count& a, const Count& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Count& a, const Count& b) { return a.value_ >= b.value_; }

    template <class Stream>
    friend Stream& operator<<(Stream& os, const Count& c) {
        os << c.value_.str();
        return os;
    }

private:
    Int value_{0};
};

namespace detail {

/// Round-to-nearest double for an arbitrary-size nonnegative quotient a/b.
/// Works on the leading 64 bits of each operand so huge magnitudes that
/// would overflow a direct conversion still divide cleanly.
inline double big_quotient(const Int& a, const Int& b) {
    if (a.is_zero()) return 0.0;
    const long ea = static_cast<long>(boost::multiprecision::msb(a));
    const long eb = static_cast<long>(boost::multiprecision::msb(b));
    auto top64 = [](const Int& x, long e) {
        const long shift = e - 63;
        Int t = shift > 0 ? Int(x >> shift) : x;
        return t.convert_to<double>();
    };
    const double q = top64(a, ea) / top64(b, eb);
    const long sa = ea - 63 > 0 ? ea - 63 : 0;
    const long sb = eb - 63 > 0 ? eb - 63 : 0;
    return std::ldexp(q, static_cast<int>(sa - sb));
}

} // namespace detail

/// An exact probability or other nonnegative fraction, stored in lowest
/// terms with a positive denominator.
class Ratio {
public:
    Ratio() = default;

    Ratio(const Count& num, const Count& den) {
        if (den.is_zero()) throw std::domain_error("ratio with zero denominator");
        value_ = Rational(num.value(), den.value());
    }

    static Ratio from_rational(Rational r) {
        if (r < 0) throw negative_count_error("ratio narrowed from negative rational");
        Ratio q;
        q.value_ = std::move(r);
        return q;
    }

    [[nodiscard]] const Rational& value() const noexcept { return value_; }
    [[nodiscard]] Count numerator() const {
        return Count::from_signed(boost::multiprecision::numerator(value_));
    }
    [[nodiscard]] Count denominator() const {
        return Count::from_signed(boost::multiprecision::denominator(value_));
    }

    [[nodiscard]] bool is_zero() const { return value_.is_zero(); }
    [[nodiscard]] bool is_one() const { return value_ == 1; }

    [[nodiscard]] double to_double() const {
        return detail::big_quotient(boost::multiprecision::numerator(value_),
                                    boost::multiprecision::denominator(value_));
    }

    /// "p/q" in lowest terms.
    [[nodiscard]] std::string str() const {
        return numerator().str() + "/" + denominator().str();
    }

    /// Fixed-point decimal with `digits` places, rounded half away from zero.
    [[nodiscard]] std::string to_decimal_string(unsigned digits) const {
        const Int num = boost::multiprecision::numerator(value_);
        const Int den = boost::multiprecision::denominator(value_);
        Int scale = 1;
        for (unsigned i = 0; i < digits; ++i) scale *= 10;
        const Int scaled = (num * scale * 2 + den) / (den * 2);
        const Int whole = scaled / scale;
        std::string frac = Int(scaled % scale).str();
        if (digits == 0) return whole.str();
        frac.insert(frac.begin(), digits - frac.size(), '0');
        return whole.str() + "." + frac;
    }

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Ratio& a, const Ratio& b) { return a.value_ != b.value_; }
    friend bool operator<(const Ratio& a, const Ratio& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Ratio& a, const Ratio& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Ratio& a, const Ratio& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Ratio& a, const Ratio& b) { return a.value_ >= b.value_; }

private:
    Rational value_{0};
};

} // namespace sockmatch
