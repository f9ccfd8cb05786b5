#pragma once

// The product group SL(2,R) x SL(2,R) carries a homogeneous almost complex
// structure J and a compatible metric g of signature (4,2) making it nearly
// Kahler: G(X,Y) = (nabla_X J)Y is skew. Everything here is expressed
// through left translation, i.e. a tangent vector at (A,B) is the pair
// (A a, B b) with a, b trace-free, and we store just (a, b).
//
// Frame indices 0..5 stand for E1,E2,E3,F1,F2,F3 where E_i = (A e_i, 0)
// and F_i = (0, B e_i).

#include "nksl2/sl2.hpp"

#include <array>
#include <optional>
#include <random>

namespace nksl2 {

struct NKPoint {
    Sl2Point A;
    Sl2Point B;

    static NKPoint identity() { return {{Mat2::identity()}, {Mat2::identity()}}; }
};

struct Tangent {
    NKPoint base;
    TraceZero alpha;  // A^{-1} (first-factor part)
    TraceZero beta;   // B^{-1} (second-factor part)
};

// coefficients against the left-invariant frame E1,E2,E3,F1,F2,F3
struct FrameCoeffs {
    std::array<Scalar, 6> c{};

    static FrameCoeffs zero() { return {}; }

    friend FrameCoeffs operator+(const FrameCoeffs& x, const FrameCoeffs& y) {
        FrameCoeffs r;
        for (int k = 0; k < 6; ++k) r.c[k] = x.c[k] + y.c[k];
        return r;
    }
    friend FrameCoeffs operator-(const FrameCoeffs& x, const FrameCoeffs& y) {
        FrameCoeffs r;
        for (int k = 0; k < 6; ++k) r.c[k] = x.c[k] - y.c[k];
        return r;
    }
    friend FrameCoeffs operator*(const Scalar& s, const FrameCoeffs& x) {
        FrameCoeffs r;
        for (int k = 0; k < 6; ++k) r.c[k] = s * x.c[k];
        return r;
    }

    bool exact_zero() const {
        for (const auto& v : c)
            if (!(v.exact() && v.is_zero())) return false;
        return true;
    }
    double norm() const;  // euclidean norm of the six coefficients
};

bool same_base(const NKPoint& p, const NKPoint& q);
void require_same_base(const Tangent& X, const Tangent& Y);

// pointwise tangent arithmetic (same base required)
Tangent t_add(const Tangent& X, const Tangent& Y);
Tangent t_sub(const Tangent& X, const Tangent& Y);
Tangent t_scale(const Scalar& s, const Tangent& X);
double tangent_norm(const Tangent& X);  // euclidean norm of frame coefficients

// ambient product metric <.,.> and the nearly Kahler metric g
Scalar product_metric(const Tangent& X, const Tangent& Y);
Scalar nk_metric(const Tangent& X, const Tangent& Y);

Tangent apply_J(const Tangent& X);  // J(Aa,Bb) = 1/sqrt3 (A(a-2b), B(2a-b))
Tangent apply_P(const Tangent& X);  // P(Aa,Bb) = (Ab,Ba)
Tangent apply_Q(const Tangent& X);  // Q(Aa,Bb) = (-Aa,Bb)

// G(X,Y) = (nabla_X J) Y, from the closed product-of-cross-products form
Tangent tensor_G(const Tangent& X, const Tangent& Y);

// closed-form curvature R(U,V)W and derived tensor identities
Tangent curvature(const Tangent& U, const Tangent& V, const Tangent& W);
Tangent nabla_G(const Tangent& X, const Tangent& Y, const Tangent& Z);
Scalar g_GG(const Tangent& X, const Tangent& Y, const Tangent& Z, const Tangent& W);
Tangent G_of_G(const Tangent& X, const Tangent& Z, const Tangent& W);

Tangent frame_field(int i, const NKPoint& p);
Tangent coeffs_to_tangent(const FrameCoeffs& fc, const NKPoint& p);
FrameCoeffs tangent_to_coeffs(const Tangent& X);

// structure constants of the left-invariant frame, from the commutator
FrameCoeffs lie_bracket(int i, int j);

// Levi-Civita connection on the frame: stored table, plus an independent
// Koszul evaluation used to validate it
FrameCoeffs levi_civita_frame(int i, int j);
FrameCoeffs koszul_connection(int i, int j);

// (nabla_{X_i} J) X_j via the Leibniz rule on the stored connection table
FrameCoeffs nabla_J_frame(int i, int j);

// curvature and nabla G on the frame, derived from the tables (these are
// the oracles the closed forms are checked against)
FrameCoeffs frame_curvature(int i, int j, int k);
FrameCoeffs frame_nabla_G(int i, int j, int k);

// catalogued tables exactly as printed in the reference material; the
// bracket line [E2,E3] and one empty nabla-J slot deviate from the derived
// values and are surfaced as informational records by the harness
FrameCoeffs reference_bracket(int i, int j);
std::optional<FrameCoeffs> reference_nabla_J(int i, int j);

// 1/2 (J G(X,PY) + J G(Y,PX)): difference between the product Levi-Civita
// connection and the nearly Kahler one
Tangent connection_shift(const Tangent& X, const Tangent& Y);

// Recover nabla_X Y from raw ambient (matrix-space) derivatives DA, DB of
// the Y field along X: subtract the two quadric normal components and the
// connection shift, then pull back by left translation. The trace of the
// pulled-back matrices is a pure numerical diagnostic; it vanishes in
// exact arithmetic and is reported through trace_diag when requested.
Tangent ambient_to_nk(const Mat2& DA, const Mat2& DB, const Tangent& X,
                      const Tangent& Y, double* trace_diag = nullptr);

// float-mode sampling helpers shared by tests and the harness
Tangent random_tangent(std::mt19937_64& rng, const NKPoint& p);
Tangent random_nonnull_tangent(std::mt19937_64& rng, const NKPoint& p);

} // namespace nksl2
