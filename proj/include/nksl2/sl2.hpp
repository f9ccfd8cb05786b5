#pragma once

// 2x2 matrix layer: the Lie group SL(2,R) sits inside the 2x2 matrices as
// the quadric <A,A> = -1 of the split-signature pairing
//   <a,b> = -1/2 Tr(adj(a) b),
// adj being the classical adjugate (a * adj(a) = det(a) I). On trace-free
// matrices this pairing has signature (+,+,-) in the basis
//   e1 = [1 0; 0 -1], e2 = [0 1; 1 0], e3 = [0 1; -1 0],
// and x (x) y = 1/2 (xy - yx) is the induced cross product.

#include "nksl2/scalar.hpp"

#include <array>
#include <cmath>
#include <cstdint>
#include <random>

namespace nksl2 {

struct Mat2 {
    Scalar m11, m12, m21, m22;

    static Mat2 identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }
    static Mat2 zero() { return {Scalar(0), Scalar(0), Scalar(0), Scalar(0)}; }

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.m11 + b.m11, a.m12 + b.m12, a.m21 + b.m21, a.m22 + b.m22};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.m11 - b.m11, a.m12 - b.m12, a.m21 - b.m21, a.m22 - b.m22};
    }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m11 * b.m11 + a.m12 * b.m21, a.m11 * b.m12 + a.m12 * b.m22,
                a.m21 * b.m11 + a.m22 * b.m21, a.m21 * b.m12 + a.m22 * b.m22};
    }
    friend Mat2 operator*(const Scalar& s, const Mat2& a) {
        return {s * a.m11, s * a.m12, s * a.m21, s * a.m22};
    }
    Mat2 operator-() const { return {-m11, -m12, -m21, -m22}; }

    Scalar det() const { return m11 * m22 - m12 * m21; }
    Scalar trace() const { return m11 + m22; }
    Mat2 transpose() const { return {m11, m21, m12, m22}; }
};

inline Mat2 adjugate(const Mat2& m) { return {m.m22, -m.m12, -m.m21, m.m11}; }

inline Mat2 inverse(const Mat2& m) {
    Scalar d = m.det();
    if (d.is_zero()) throw std::domain_error("singular 2x2 matrix");
    Mat2 a = adjugate(m);
    return {a.m11 / d, a.m12 / d, a.m21 / d, a.m22 / d};
}

// split pairing; restricted to sl(2,R) it is x1 y1 + x2 y2 - x3 y3
inline Scalar minkowski_inner(const Mat2& a, const Mat2& b) {
    Mat2 p = adjugate(a) * b;
    return Scalar(Rational(-1, 2)) * p.trace();
}

// trace-free part of sl(2,R) in the e1,e2,e3 basis
struct TraceZero {
    Scalar c1, c2, c3;

    static TraceZero zero() { return {Scalar(0), Scalar(0), Scalar(0)}; }

    Mat2 to_mat() const {
        return {c1, c2 + c3, c2 - c3, -c1};
    }
    static TraceZero from_mat(const Mat2& m) {
        Scalar half = Scalar(Rational(1, 2));
        return {half * (m.m11 - m.m22), half * (m.m12 + m.m21), half * (m.m12 - m.m21)};
    }

    friend TraceZero operator+(const TraceZero& x, const TraceZero& y) {
        return {x.c1 + y.c1, x.c2 + y.c2, x.c3 + y.c3};
    }
    friend TraceZero operator-(const TraceZero& x, const TraceZero& y) {
        return {x.c1 - y.c1, x.c2 - y.c2, x.c3 - y.c3};
    }
    friend TraceZero operator*(const Scalar& s, const TraceZero& x) {
        return {s * x.c1, s * x.c2, s * x.c3};
    }
    TraceZero operator-() const { return {-c1, -c2, -c3}; }
};

inline TraceZero basis_e(int i) {
    switch (i) {
        case 1: return {Scalar(1), Scalar(0), Scalar(0)};
        case 2: return {Scalar(0), Scalar(1), Scalar(0)};
        case 3: return {Scalar(0), Scalar(0), Scalar(1)};
    }
    throw std::invalid_argument("basis index must be 1, 2 or 3");
}

// restriction of the pairing to trace-free matrices
inline Scalar tz_inner(const TraceZero& x, const TraceZero& y) {
    return x.c1 * y.c1 + x.c2 * y.c2 - x.c3 * y.c3;
}

// x (x) y = 1/2 (xy - yx); in coefficients e1xe2 = e3, e2xe3 = -e1, e3xe1 = -e2
inline TraceZero cross(const TraceZero& x, const TraceZero& y) {
    return {-(x.c2 * y.c3 - x.c3 * y.c2),
            -(x.c3 * y.c1 - x.c1 * y.c3),
            x.c1 * y.c2 - x.c2 * y.c1};
}

struct Sl2Point {
    Mat2 m;
};

inline bool is_sl2(const Mat2& m, double tol) {
    return std::fabs(minkowski_inner(m, m).to_double() + 1.0) <= tol;
}

// exp of a trace-free matrix; lands on the quadric <A,A> = -1
Sl2Point sl2_exp(const TraceZero& x);

// float-mode random trace-free matrix with coefficients in [-lim, lim]
TraceZero random_trace_zero(std::mt19937_64& rng, double lim);

} // namespace nksl2
