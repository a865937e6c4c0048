#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace raycheck {

/// Exact rational with 64-bit reduced representation.
///
/// Every value is kept reduced with positive denominator.  Intermediate
/// products are computed in 128 bits; if a reduced result no longer fits in
/// 64 bits the operation throws std::overflow_error instead of wrapping.
/// All quantities handled here have tiny denominators (dividing 196), so in
/// practice the checks never fire -- they exist to make silent corruption
/// impossible.
class Rational {
public:
    constexpr Rational() : num_(0), den_(1) {}
    constexpr Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { assign(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return from128(i128(x.num_) * y.den_ + i128(y.num_) * x.den_,
                       i128(x.den_) * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return from128(i128(x.num_) * y.den_ - i128(y.num_) * x.den_,
                       i128(x.den_) * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return from128(i128(x.num_) * y.num_, i128(x.den_) * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(i128(x.num_) * y.den_, i128(x.den_) * y.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return i128(x.num_) * y.den_ < i128(y.num_) * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    /// "n/d", or just "n" for integers.
    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        if (n == 0) {
            d = 1;
        } else {
            i128 g = gcd128(n, d);
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational exceeds 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    void assign(std::int64_t n, std::int64_t d) { *this = from128(n, d); }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace raycheck
