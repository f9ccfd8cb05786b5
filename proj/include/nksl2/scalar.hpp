#pragma once

// Scalar field for the kernel: exact elements of Q(sqrt3) with a float
// fallback. Every coefficient that appears in the frame algebra lives in
// Q(sqrt3) (the almost complex structure brings in 1/sqrt3, the cone
// construction 2/(3 sqrt3)), so structure checks can run with zero
// residual. Surface parametrisations need sqrt(3/2) and exponentials,
// which do not, so those computations run in float mode. Mixing an exact
// scalar with a float one demotes the result to float.

#include "nksl2/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace nksl2 {

// a + b*sqrt(3) with rational a, b. A field: x*conj(x) = a^2 - 3 b^2
// vanishes only at x = 0 since 3 is not a rational square.
struct Q3 {
    Rational a;
    Rational b;

    Q3() = default;
    Q3(Rational a_) : a(a_) {}
    Q3(Rational a_, Rational b_) : a(a_), b(b_) {}

    bool is_zero() const { return a.is_zero() && b.is_zero(); }

    friend Q3 operator+(const Q3& x, const Q3& y) { return {x.a + y.a, x.b + y.b}; }
    friend Q3 operator-(const Q3& x, const Q3& y) { return {x.a - y.a, x.b - y.b}; }
    Q3 operator-() const { return {-a, -b}; }
    friend Q3 operator*(const Q3& x, const Q3& y) {
        return {x.a * y.a + Rational(3) * x.b * y.b, x.a * y.b + x.b * y.a};
    }
    friend Q3 operator/(const Q3& x, const Q3& y) {
        Rational n = y.a * y.a - Rational(3) * y.b * y.b;
        if (n.is_zero()) throw std::domain_error("division by zero in Q(sqrt3)");
        Q3 conj{y.a, -y.b};
        Q3 p = x * conj;
        return {p.a / n, p.b / n};
    }
    friend bool operator==(const Q3& x, const Q3& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator!=(const Q3& x, const Q3& y) { return !(x == y); }

    double to_double() const { return a.to_double() + b.to_double() * std::sqrt(3.0); }
};

class Scalar {
public:
    Scalar() : exact_(true), q_(), f_(0.0) {}
    Scalar(int n) : exact_(true), q_(Rational(n)), f_(double(n)) {}
    Scalar(Rational r) : exact_(true), q_(r), f_(r.to_double()) {}
    Scalar(Q3 q) : exact_(true), q_(q), f_(q.to_double()) {}

    static Scalar sqrt3() { return Scalar(Q3(Rational(0), Rational(1))); }
    static Scalar ratio(std::int64_t n, std::int64_t d) { return Scalar(Rational(n, d)); }

    // float-mode constructor; named to keep accidental double->exact out
    static Scalar approx(double v) {
        Scalar s;
        s.exact_ = false;
        s.f_ = v;
        return s;
    }

    // exact dyadic promotion of a double (throws when it does not fit)
    static Scalar exact_from_double(double v) { return Scalar(Q3(Rational::from_double(v))); }

    bool exact() const { return exact_; }
    double to_double() const { return exact_ ? q_.to_double() : f_; }
    const Q3& q3() const {
        if (!exact_) throw std::logic_error("float-mode scalar has no exact value");
        return q_;
    }

    bool is_zero() const { return exact_ ? q_.is_zero() : f_ == 0.0; }

    friend Scalar operator+(const Scalar& x, const Scalar& y) {
        if (x.exact_ && y.exact_) return Scalar(x.q_ + y.q_);
        return approx(x.to_double() + y.to_double());
    }
    friend Scalar operator-(const Scalar& x, const Scalar& y) {
        if (x.exact_ && y.exact_) return Scalar(x.q_ - y.q_);
        return approx(x.to_double() - y.to_double());
    }
    friend Scalar operator*(const Scalar& x, const Scalar& y) {
        if (x.exact_ && y.exact_) return Scalar(x.q_ * y.q_);
        return approx(x.to_double() * y.to_double());
    }
    friend Scalar operator/(const Scalar& x, const Scalar& y) {
        if (x.exact_ && y.exact_) return Scalar(x.q_ / y.q_);
        double d = y.to_double();
        if (d == 0.0) throw std::domain_error("scalar division by zero");
        return approx(x.to_double() / d);
    }
    Scalar operator-() const {
        if (exact_) return Scalar(-q_);
        return approx(-f_);
    }
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    // exact==exact compares in the field, anything else compares as double
    friend bool operator==(const Scalar& x, const Scalar& y) {
        if (x.exact_ && y.exact_) return x.q_ == y.q_;
        return x.to_double() == y.to_double();
    }
    friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

private:
    bool exact_;
    Q3 q_;
    double f_;
};

inline double fabs_s(const Scalar& s) { return std::fabs(s.to_double()); }

} // namespace nksl2
