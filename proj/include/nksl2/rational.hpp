#pragma once

// Exact rational arithmetic on int64 with 128-bit intermediates.
// Overflow after reduction is a hard error, not a silent wrap: the
// exact layer is only trusted because it refuses to lie.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <cmath>

namespace nksl2 {

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d) { set(n, d); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        __int128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
        __int128 d = i128(a.den_) * b.den_;
        return from128(n, d);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const { Rational r; r.num_ = -num_; r.den_ = den_; return r; }

    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const { return double(num_) / double(den_); }

    // Exact conversion of a finite double (doubles are dyadic rationals).
    // Throws if the reduced form does not fit in int64.
    static Rational from_double(double v) {
        if (!std::isfinite(v)) throw std::domain_error("rational from non-finite double");
        int exp = 0;
        double m = std::frexp(v, &exp);          // v = m * 2^exp, |m| in [0.5, 1)
        auto n = static_cast<std::int64_t>(std::ldexp(m, 53));  // integer, |n| < 2^53
        exp -= 53;
        Rational r(n);
        while (exp > 0) { r *= Rational(2); --exp; }
        while (exp < 0) { r /= Rational(2); ++exp; }
        return r;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    static __int128 i128(std::int64_t v) { return static_cast<__int128>(v); }

    void set(std::int64_t n, std::int64_t d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        std::int64_t g = std::gcd(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        num_ = n; den_ = d;
    }

    static Rational from128(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = gcd128(a, d);
        if (g > 1) { n /= g; d /= g; }
        constexpr __int128 lo = -static_cast<__int128>(INT64_MAX) - 1;
        constexpr __int128 hi = static_cast<__int128>(INT64_MAX);
        if (n < lo || n > hi || d > hi)
            throw std::overflow_error("rational overflow");
        Rational r;
        r.num_ = static_cast<std::int64_t>(n);
        r.den_ = static_cast<std::int64_t>(d);
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a;
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace nksl2
