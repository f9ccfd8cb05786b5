#include "nksl2/manifold.hpp"

#include <cmath>
#include <stdexcept>

namespace nksl2 {

namespace {

const Scalar kHalf{Rational(1, 2)};
const Scalar kThird{Rational(1, 3)};
const Scalar kTwoThirds{Rational(2, 3)};
// 1/sqrt3 = sqrt3/3 and 2/(3 sqrt3) = 2 sqrt3/9 live in Q(sqrt3)
const Scalar kInvSqrt3{Q3(Rational(0), Rational(1, 3))};
const Scalar kGCoef{Q3(Rational(0), Rational(2, 9))};

bool scalar_close(const Scalar& x, const Scalar& y) {
    if (x.exact() && y.exact()) return x == y;
    return std::fabs(x.to_double() - y.to_double()) <= 1e-12;
}

Tangent tadd(const Tangent& x, const Tangent& y) {
    return {x.base, x.alpha + y.alpha, x.beta + y.beta};
}
Tangent tsub(const Tangent& x, const Tangent& y) {
    return {x.base, x.alpha - y.alpha, x.beta - y.beta};
}
Tangent tscale(const Scalar& s, const Tangent& x) {
    return {x.base, s * x.alpha, s * x.beta};
}

} // namespace

Tangent t_add(const Tangent& X, const Tangent& Y) {
    require_same_base(X, Y);
    return tadd(X, Y);
}
Tangent t_sub(const Tangent& X, const Tangent& Y) {
    require_same_base(X, Y);
    return tsub(X, Y);
}
Tangent t_scale(const Scalar& s, const Tangent& X) { return tscale(s, X); }

double tangent_norm(const Tangent& X) {
    double s = 0.0;
    const Scalar* cs[6] = {&X.alpha.c1, &X.alpha.c2, &X.alpha.c3,
                           &X.beta.c1,  &X.beta.c2,  &X.beta.c3};
    for (const auto* v : cs) {
        double d = v->to_double();
        s += d * d;
    }
    return std::sqrt(s);
}

double FrameCoeffs::norm() const {
    double s = 0.0;
    for (const auto& v : c) {
        double d = v.to_double();
        s += d * d;
    }
    return std::sqrt(s);
}

bool same_base(const NKPoint& p, const NKPoint& q) {
    const Scalar* a[4] = {&p.A.m.m11, &p.A.m.m12, &p.A.m.m21, &p.A.m.m22};
    const Scalar* b[4] = {&q.A.m.m11, &q.A.m.m12, &q.A.m.m21, &q.A.m.m22};
    const Scalar* c[4] = {&p.B.m.m11, &p.B.m.m12, &p.B.m.m21, &p.B.m.m22};
    const Scalar* d[4] = {&q.B.m.m11, &q.B.m.m12, &q.B.m.m21, &q.B.m.m22};
    for (int k = 0; k < 4; ++k)
        if (!scalar_close(*a[k], *b[k]) || !scalar_close(*c[k], *d[k])) return false;
    return true;
}

void require_same_base(const Tangent& X, const Tangent& Y) {
    if (!same_base(X.base, Y.base))
        throw std::invalid_argument("tangent vectors based at different points");
}

Scalar product_metric(const Tangent& X, const Tangent& Y) {
    require_same_base(X, Y);
    return tz_inner(X.alpha, Y.alpha) + tz_inner(X.beta, Y.beta);
}

// g = 2/3 <Z,Z'> - 1/3 <PZ,Z'>, written out on the (alpha,beta) parts
Scalar nk_metric(const Tangent& X, const Tangent& Y) {
    require_same_base(X, Y);
    Scalar plain = tz_inner(X.alpha, Y.alpha) + tz_inner(X.beta, Y.beta);
    Scalar swapped = tz_inner(X.beta, Y.alpha) + tz_inner(X.alpha, Y.beta);
    return kTwoThirds * plain - kThird * swapped;
}

Tangent apply_J(const Tangent& X) {
    TraceZero a = X.alpha - Scalar(2) * X.beta;
    TraceZero b = Scalar(2) * X.alpha - X.beta;
    return {X.base, kInvSqrt3 * a, kInvSqrt3 * b};
}

Tangent apply_P(const Tangent& X) { return {X.base, X.beta, X.alpha}; }

Tangent apply_Q(const Tangent& X) { return {X.base, -X.alpha, X.beta}; }

Tangent tensor_G(const Tangent& X, const Tangent& Y) {
    require_same_base(X, Y);
    const TraceZero& a = X.alpha;
    const TraceZero& b = X.beta;
    const TraceZero& g = Y.alpha;
    const TraceZero& d = Y.beta;
    TraceZero ag = cross(a, g), ad = cross(a, d), gb = cross(g, b), bd = cross(b, d);
    TraceZero first = (-ag) - ad + gb + Scalar(2) * bd;
    TraceZero second = Scalar(-2) * ag + ad - gb + bd;
    return {X.base, kGCoef * first, kGCoef * second};
}

Tangent curvature(const Tangent& U, const Tangent& V, const Tangent& W) {
    require_same_base(U, V);
    require_same_base(V, W);
    Tangent JU = apply_J(U), JV = apply_J(V), JW = apply_J(W);
    Tangent PU = apply_P(U), PV = apply_P(V);
    Tangent JPU = apply_J(PU), JPV = apply_J(PV);

    Tangent t1 = tsub(tscale(nk_metric(V, W), U), tscale(nk_metric(U, W), V));
    Tangent t2 = tsub(tscale(nk_metric(JV, W), JU), tscale(nk_metric(JU, W), JV));
    t2 = tsub(t2, tscale(Scalar(2) * nk_metric(JU, V), JW));
    Tangent t3 = tsub(tscale(nk_metric(PV, W), PU), tscale(nk_metric(PU, W), PV));
    t3 = tadd(t3, tsub(tscale(nk_metric(JPV, W), JPU), tscale(nk_metric(JPU, W), JPV)));

    Tangent out = tscale(Scalar(Rational(-5, 6)), t1);
    out = tadd(out, tscale(Scalar(Rational(-1, 6)), t2));
    out = tadd(out, tscale(Scalar(Rational(-2, 3)), t3));
    return out;
}

Tangent nabla_G(const Tangent& X, const Tangent& Y, const Tangent& Z) {
    require_same_base(X, Y);
    require_same_base(Y, Z);
    Tangent JY = apply_J(Y), JZ = apply_J(Z);
    Tangent t = tsub(tscale(nk_metric(X, Z), JY), tscale(nk_metric(X, Y), JZ));
    t = tsub(t, tscale(nk_metric(JY, Z), X));
    return tscale(Scalar(Rational(-2, 3)), t);
}

Scalar g_GG(const Tangent& X, const Tangent& Y, const Tangent& Z, const Tangent& W) {
    Tangent JX = apply_J(X);
    Scalar t = nk_metric(X, Z) * nk_metric(Y, W) - nk_metric(X, W) * nk_metric(Y, Z);
    t += nk_metric(JX, Z) * nk_metric(apply_J(W), Y) -
         nk_metric(JX, W) * nk_metric(apply_J(Z), Y);
    return Scalar(Rational(-2, 3)) * t;
}

Tangent G_of_G(const Tangent& X, const Tangent& Z, const Tangent& W) {
    Tangent JX = apply_J(X), JZ = apply_J(Z), JW = apply_J(W);
    Tangent t = tsub(tscale(nk_metric(X, Z), W), tscale(nk_metric(X, W), Z));
    t = tadd(t, tsub(tscale(nk_metric(JX, Z), JW), tscale(nk_metric(JX, W), JZ)));
    return tscale(kTwoThirds, t);
}

Tangent frame_field(int i, const NKPoint& p) {
    if (i < 0 || i >= 6) throw std::invalid_argument("frame index out of range");
    Tangent t{p, TraceZero::zero(), TraceZero::zero()};
    if (i < 3)
        t.alpha = basis_e(i + 1);
    else
        t.beta = basis_e(i - 2);
    return t;
}

Tangent coeffs_to_tangent(const FrameCoeffs& fc, const NKPoint& p) {
    Tangent t{p, TraceZero::zero(), TraceZero::zero()};
    for (int i = 0; i < 3; ++i) {
        t.alpha = t.alpha + fc.c[i] * basis_e(i + 1);
        t.beta = t.beta + fc.c[i + 3] * basis_e(i + 1);
    }
    return t;
}

FrameCoeffs tangent_to_coeffs(const Tangent& X) {
    FrameCoeffs fc;
    fc.c = {X.alpha.c1, X.alpha.c2, X.alpha.c3, X.beta.c1, X.beta.c2, X.beta.c3};
    return fc;
}

// [X_i, X_j]: left-invariant fields bracket factorwise, and on trace-free
// matrices [x,y] = 2 (x cross y)
FrameCoeffs lie_bracket(int i, int j) {
    FrameCoeffs fc;
    if (i < 3 && j < 3) {
        TraceZero c = cross(basis_e(i + 1), basis_e(j + 1));
        fc.c[0] = Scalar(2) * c.c1;
        fc.c[1] = Scalar(2) * c.c2;
        fc.c[2] = Scalar(2) * c.c3;
    } else if (i >= 3 && j >= 3) {
        TraceZero c = cross(basis_e(i - 2), basis_e(j - 2));
        fc.c[3] = Scalar(2) * c.c1;
        fc.c[4] = Scalar(2) * c.c2;
        fc.c[5] = Scalar(2) * c.c3;
    }
    return fc;
}

namespace {

using Table66 = std::array<std::array<FrameCoeffs, 6>, 6>;

FrameCoeffs fc1(int i, Rational v) {
    FrameCoeffs f;
    f.c[i] = Scalar(v);
    return f;
}
FrameCoeffs fc2(int i, Rational vi, int j, Rational vj) {
    FrameCoeffs f;
    f.c[i] = Scalar(vi);
    f.c[j] = Scalar(vj);
    return f;
}
FrameCoeffs fc2s(int i, Scalar vi, int j, Scalar vj) {
    FrameCoeffs f;
    f.c[i] = vi;
    f.c[j] = vj;
    return f;
}

// Levi-Civita connection on the frame (rows: direction i, columns: field j)
const Table66& lc_table() {
    static const Table66 t = [] {
        Table66 v{};
        const Rational one(1), third(1, 3);
        // first-factor fields
        v[0][1] = fc1(2, one);           // E3
        v[0][2] = fc1(1, one);           // E2
        v[1][0] = fc1(2, -one);          // -E3
        v[1][2] = fc1(0, -one);          // -E1
        v[2][0] = fc1(1, -one);          // -E2
        v[2][1] = fc1(0, one);           // E1
        // mixed rows: E-direction on F-fields
        v[0][4] = fc2(2, -third, 5, third);   // 1/3(-E3+F3)
        v[0][5] = fc2(1, -third, 4, third);   // 1/3(-E2+F2)
        v[1][3] = fc2(2, third, 5, -third);   // 1/3(E3-F3)
        v[1][5] = fc2(0, third, 3, -third);   // 1/3(E1-F1)
        v[2][3] = fc2(1, third, 4, -third);   // 1/3(E2-F2)
        v[2][4] = fc2(0, -third, 3, third);   // 1/3(-E1+F1)
        // F-direction on E-fields
        v[3][1] = fc2(2, third, 5, -third);
        v[3][2] = fc2(1, third, 4, -third);
        v[4][0] = fc2(2, -third, 5, third);
        v[4][2] = fc2(0, -third, 3, third);
        v[5][0] = fc2(1, -third, 4, third);
        v[5][1] = fc2(0, third, 3, -third);
        // second-factor fields
        v[3][4] = fc1(5, one);
        v[3][5] = fc1(4, one);
        v[4][3] = fc1(5, -one);
        v[4][5] = fc1(3, -one);
        v[5][3] = fc1(4, -one);
        v[5][4] = fc1(3, one);
        return v;
    }();
    return t;
}

Scalar gram(int a, int b) {
    static const std::array<std::array<Scalar, 6>, 6> g = [] {
        std::array<std::array<Scalar, 6>, 6> v;
        NKPoint id = NKPoint::identity();
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                v[i][j] = nk_metric(frame_field(i, id), frame_field(j, id));
        return v;
    }();
    return g[a][b];
}

Scalar fc_metric(const FrameCoeffs& u, const FrameCoeffs& v) {
    Scalar s;
    for (int a = 0; a < 6; ++a) {
        if (u.c[a].is_zero()) continue;
        for (int b = 0; b < 6; ++b) s += u.c[a] * v.c[b] * gram(a, b);
    }
    return s;
}

// exact 6x6 Gaussian elimination; the Gram matrix is invertible so a
// nonzero pivot always exists
std::array<Scalar, 6> solve6(std::array<std::array<Scalar, 6>, 6> m,
                             std::array<Scalar, 6> rhs) {
    for (int col = 0; col < 6; ++col) {
        int piv = -1;
        for (int r = col; r < 6; ++r)
            if (!m[r][col].is_zero()) { piv = r; break; }
        if (piv < 0) throw std::domain_error("singular system");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (int r = 0; r < 6; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            Scalar f = m[r][col] / m[col][col];
            for (int c2 = col; c2 < 6; ++c2) m[r][c2] -= f * m[col][c2];
            rhs[r] -= f * rhs[col];
        }
    }
    std::array<Scalar, 6> x;
    for (int i = 0; i < 6; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

FrameCoeffs cov_frame(int i, const FrameCoeffs& v) {
    FrameCoeffs r;
    for (int k = 0; k < 6; ++k) {
        if (v.c[k].is_zero()) continue;
        r = r + v.c[k] * lc_table()[i][k];
    }
    return r;
}

FrameCoeffs apply_J_fc(const FrameCoeffs& fc) {
    return tangent_to_coeffs(apply_J(coeffs_to_tangent(fc, NKPoint::identity())));
}

FrameCoeffs G_fc(const FrameCoeffs& u, const FrameCoeffs& v) {
    NKPoint id = NKPoint::identity();
    return tangent_to_coeffs(tensor_G(coeffs_to_tangent(u, id), coeffs_to_tangent(v, id)));
}

} // namespace

FrameCoeffs levi_civita_frame(int i, int j) {
    if (i < 0 || i >= 6 || j < 0 || j >= 6)
        throw std::invalid_argument("frame index out of range");
    return lc_table()[i][j];
}

// Koszul on left-invariant fields: the metric is constant on the frame, so
// 2 g(nabla_i j, X_k) = g([Xi,Xj],Xk) - g([Xj,Xk],Xi) + g([Xk,Xi],Xj)
FrameCoeffs koszul_connection(int i, int j) {
    FrameCoeffs di, dj;
    di.c[i] = Scalar(1);
    dj.c[j] = Scalar(1);
    std::array<Scalar, 6> rhs;
    for (int k = 0; k < 6; ++k) {
        FrameCoeffs dk;
        dk.c[k] = Scalar(1);
        Scalar s = fc_metric(lie_bracket(i, j), dk) - fc_metric(lie_bracket(j, k), di) +
                   fc_metric(lie_bracket(k, i), dj);
        rhs[k] = kHalf * s;
    }
    std::array<std::array<Scalar, 6>, 6> m;
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) m[a][b] = gram(a, b);
    FrameCoeffs out;
    out.c = solve6(m, rhs);
    return out;
}

FrameCoeffs nabla_J_frame(int i, int j) {
    FrameCoeffs dj;
    dj.c[j] = Scalar(1);
    return cov_frame(i, apply_J_fc(dj)) - apply_J_fc(lc_table()[i][j]);
}

FrameCoeffs frame_curvature(int i, int j, int k) {
    const Table66& lc = lc_table();
    FrameCoeffs t = cov_frame(i, lc[j][k]) - cov_frame(j, lc[i][k]);
    FrameCoeffs br = lie_bracket(i, j);
    for (int a = 0; a < 6; ++a) {
        if (br.c[a].is_zero()) continue;
        t = t - br.c[a] * lc[a][k];
    }
    return t;
}

FrameCoeffs frame_nabla_G(int i, int j, int k) {
    FrameCoeffs dj, dk;
    dj.c[j] = Scalar(1);
    dk.c[k] = Scalar(1);
    const Table66& lc = lc_table();
    FrameCoeffs t = cov_frame(i, G_fc(dj, dk));
    t = t - G_fc(lc[i][j], dk);
    t = t - G_fc(dj, lc[i][k]);
    return t;
}

// the bracket table exactly as catalogued; [E2,E3] is printed as -2E3
// there, while the commutator gives -2E1
FrameCoeffs reference_bracket(int i, int j) {
    static const Table66 t = [] {
        Table66 v{};
        v[0][1] = fc1(2, Rational(2));
        v[0][2] = fc1(1, Rational(2));
        v[1][2] = fc1(2, Rational(-2));  // catalogued line, deviates from -2E1
        v[3][4] = fc1(5, Rational(2));
        v[3][5] = fc1(4, Rational(2));
        v[4][5] = fc1(3, Rational(-2));
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < a; ++b) v[a][b] = FrameCoeffs::zero() - v[b][a];
        return v;
    }();
    if (i < 0 || i >= 6 || j < 0 || j >= 6)
        throw std::invalid_argument("frame index out of range");
    return t[i][j];
}

std::optional<FrameCoeffs> reference_nabla_J(int i, int j) {
    if (i < 0 || i >= 6 || j < 0 || j >= 6)
        throw std::invalid_argument("frame index out of range");
    if (i == 0 && j == 3) return std::nullopt;  // empty slot in the source table
    static const Table66 t = [] {
        const Scalar k = kGCoef, k2 = Scalar(2) * kGCoef;
        Table66 v{};
        v[0][1] = fc2s(2, -k, 5, -k2);
        v[0][2] = fc2s(1, -k, 4, -k2);
        v[0][4] = fc2s(2, -k, 5, k);
        v[0][5] = fc2s(1, -k, 4, k);
        v[1][0] = fc2s(2, k, 5, k2);
        v[1][2] = fc2s(0, k, 3, k2);
        v[1][3] = fc2s(2, k, 5, -k);
        v[1][5] = fc2s(0, k, 3, -k);
        v[2][0] = fc2s(1, k, 4, k2);
        v[2][1] = fc2s(0, -k, 3, -k2);
        v[2][3] = fc2s(1, k, 4, -k);
        v[2][4] = fc2s(0, -k, 3, k);
        v[3][1] = fc2s(2, -k, 5, k);
        v[3][2] = fc2s(1, -k, 4, k);
        v[3][4] = fc2s(2, k2, 5, k);
        v[3][5] = fc2s(1, k2, 4, k);
        v[4][0] = fc2s(2, k, 5, -k);
        v[4][2] = fc2s(0, k, 3, -k);
        v[4][3] = fc2s(2, -k2, 5, -k);
        v[4][5] = fc2s(0, -k2, 3, -k);
        v[5][0] = fc2s(1, k, 4, -k);
        v[5][1] = fc2s(0, -k, 3, k);
        v[5][3] = fc2s(1, -k2, 4, -k);
        v[5][4] = fc2s(0, k2, 3, k);
        return v;
    }();
    return t[i][j];
}

Tangent connection_shift(const Tangent& X, const Tangent& Y) {
    require_same_base(X, Y);
    Tangent a = apply_J(tensor_G(X, apply_P(Y)));
    Tangent b = apply_J(tensor_G(Y, apply_P(X)));
    return tscale(kHalf, tadd(a, b));
}

Tangent ambient_to_nk(const Mat2& DA, const Mat2& DB, const Tangent& X,
                      const Tangent& Y, double* trace_diag) {
    require_same_base(X, Y);
    const Mat2& A = X.base.A.m;
    const Mat2& B = X.base.B.m;
    Scalar ip = product_metric(X, Y);
    Scalar iq = product_metric(X, apply_Q(Y));
    // D_X Y = nabla^E_X Y + 1/2 <X,Y> (A,B) + 1/2 <X,QY> (-A,B), and
    // nabla^E differs from the nearly Kahler connection by the shift
    Mat2 ta = DA - (kHalf * (ip - iq)) * A;
    Mat2 tb = DB - (kHalf * (ip + iq)) * B;
    Tangent shift = connection_shift(X, Y);
    ta = ta - A * shift.alpha.to_mat();
    tb = tb - B * shift.beta.to_mat();
    Mat2 a = inverse(A) * ta;
    Mat2 b = inverse(B) * tb;
    if (trace_diag) {
        double t1 = std::fabs(a.trace().to_double());
        double t2 = std::fabs(b.trace().to_double());
        *trace_diag = t1 > t2 ? t1 : t2;
    }
    return {X.base, TraceZero::from_mat(a), TraceZero::from_mat(b)};
}

Tangent random_tangent(std::mt19937_64& rng, const NKPoint& p) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Tangent t{p, TraceZero::zero(), TraceZero::zero()};
    t.alpha = {Scalar::approx(u(rng)), Scalar::approx(u(rng)), Scalar::approx(u(rng))};
    t.beta = {Scalar::approx(u(rng)), Scalar::approx(u(rng)), Scalar::approx(u(rng))};
    return t;
}

Tangent random_nonnull_tangent(std::mt19937_64& rng, const NKPoint& p) {
    for (;;) {
        Tangent t = random_tangent(rng, p);
        if (std::fabs(nk_metric(t, t).to_double()) >= 0.1) return t;
    }
}

} // namespace nksl2
