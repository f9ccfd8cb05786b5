#include "nksl2/surfaces.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace nksl2 {
namespace {

const double kS3 = std::sqrt(3.0);
const double kS2 = std::sqrt(2.0);

using Fn1 = std::function<double(double)>;

// 5-point central stencils (fourth order) with one Richardson level (sixth)
double d1(const Fn1& f, double x, double h) {
    return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}
double d1r(const Fn1& f, double x, double h) {
    return (16 * d1(f, x, h / 2) - d1(f, x, h)) / 15;
}
double d2(const Fn1& f, double x, double h) {
    return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) /
           (12 * h * h);
}
double d2r(const Fn1& f, double x, double h) {
    return (16 * d2(f, x, h / 2) - d2(f, x, h)) / 15;
}

using Arr4 = std::array<double, 4>;
using MatFn = std::function<Arr4(double, double)>;

Arr4 to4(const Mat2& m) {
    return {m.m11.to_double(), m.m12.to_double(), m.m21.to_double(), m.m22.to_double()};
}
Mat2 from4(const Arr4& a) {
    return {Scalar::approx(a[0]), Scalar::approx(a[1]), Scalar::approx(a[2]),
            Scalar::approx(a[3])};
}

Arr4 mat_d1s(const MatFn& F, double s, double t, double h) {
    Arr4 r;
    for (int k = 0; k < 4; ++k)
        r[k] = d1r([&](double u) { return F(u, t)[k]; }, s, h);
    return r;
}
Arr4 mat_d1t(const MatFn& F, double s, double t, double h) {
    Arr4 r;
    for (int k = 0; k < 4; ++k)
        r[k] = d1r([&](double v) { return F(s, v)[k]; }, t, h);
    return r;
}
Arr4 mat_d2s(const MatFn& F, double s, double t, double h) {
    Arr4 r;
    for (int k = 0; k < 4; ++k)
        r[k] = d2r([&](double u) { return F(u, t)[k]; }, s, h);
    return r;
}
Arr4 mat_d2t(const MatFn& F, double s, double t, double h) {
    Arr4 r;
    for (int k = 0; k < 4; ++k)
        r[k] = d2r([&](double v) { return F(s, v)[k]; }, t, h);
    return r;
}
Arr4 mat_mixed(const MatFn& F, double s, double t, double h) {
    Arr4 r;
    for (int k = 0; k < 4; ++k)
        r[k] = d1r(
            [&](double u) {
                return d1r([&](double v) { return F(u, v)[k]; }, t, h);
            },
            s, h);
    return r;
}

void check_domain(const Immersion& f, double s, double t, double h) {
    if (!f.domain) return;
    const double off[7] = {0.0, -2 * h, -h, -h / 2, h / 2, h, 2 * h};
    for (double a : off)
        for (double b : off)
            if (!f.domain(s + a, t + b))
                throw std::domain_error(f.name + ": stencil leaves the chart domain");
}

Tangent left_translate(const NKPoint& p, const Mat2& DA, const Mat2& DB, double* worst) {
    Mat2 a = inverse(p.A.m) * DA;
    Mat2 b = inverse(p.B.m) * DB;
    double tr = std::max(std::fabs(a.trace().to_double()), std::fabs(b.trace().to_double()));
    if (worst && tr > *worst) *worst = tr;
    return {p, TraceZero::from_mat(a), TraceZero::from_mat(b)};
}

std::array<double, 2> solve2(double g11, double g12, double g22, double r1, double r2) {
    double det = g11 * g22 - g12 * g12;
    if (std::fabs(det) < 1e-14) throw std::runtime_error("degenerate induced metric");
    return {(r1 * g22 - r2 * g12) / det, (g11 * r2 - g12 * r1) / det};
}

struct PlaneSplit {
    Tangent tangential, normal;
};

PlaneSplit split_on_plane(const Tangent& v, const SurfaceJet& j) {
    double g11 = nk_metric(j.Fs, j.Fs).to_double();
    double g12 = nk_metric(j.Fs, j.Ft).to_double();
    double g22 = nk_metric(j.Ft, j.Ft).to_double();
    auto c = solve2(g11, g12, g22, nk_metric(v, j.Fs).to_double(),
                    nk_metric(v, j.Ft).to_double());
    Tangent tang = t_add(t_scale(Scalar::approx(c[0]), j.Fs),
                         t_scale(Scalar::approx(c[1]), j.Ft));
    return {tang, t_sub(v, tang)};
}

} // namespace

SurfaceJet numeric_jet(const Immersion& f, double s, double t, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
    check_domain(f, s, t, step);
    SurfaceJet j;
    j.p = f.eval(s, t);
    j.step = step;
    MatFn FA = [&f](double u, double v) { return to4(f.eval(u, v).A.m); };
    MatFn FB = [&f](double u, double v) { return to4(f.eval(u, v).B.m); };
    double worst = 0.0;
    Mat2 As = from4(mat_d1s(FA, s, t, step));
    Mat2 At = from4(mat_d1t(FA, s, t, step));
    Mat2 Bs = from4(mat_d1s(FB, s, t, step));
    Mat2 Bt = from4(mat_d1t(FB, s, t, step));
    j.Fs = left_translate(j.p, As, Bs, &worst);
    j.Ft = left_translate(j.p, At, Bt, &worst);
    j.Ass = from4(mat_d2s(FA, s, t, step));
    j.Ast = from4(mat_mixed(FA, s, t, step));
    j.Att = from4(mat_d2t(FA, s, t, step));
    j.Bss = from4(mat_d2s(FB, s, t, step));
    j.Bst = from4(mat_mixed(FB, s, t, step));
    j.Btt = from4(mat_d2t(FB, s, t, step));
    j.trace_residual = worst;
    return j;
}

SurfaceJet jet(const Immersion& f, double s, double t, double step) {
    SurfaceJet j = numeric_jet(f, s, t, step);
    if (f.first) {
        FirstDerivs fd = f.first(s, t);
        j.Fs = Tangent{j.p, fd.alpha, fd.gamma};
        j.Ft = Tangent{j.p, fd.beta, fd.delta};
        j.trace_residual = 0.0;
    }
    return j;
}

double almost_complex_residual(const SurfaceJet& j) {
    return tangent_norm(t_sub(j.Ft, apply_J(j.Fs)));
}

double span_j_invariance_residual(const SurfaceJet& j) {
    double a = tangent_norm(split_on_plane(apply_J(j.Fs), j).normal);
    double b = tangent_norm(split_on_plane(apply_J(j.Ft), j).normal);
    return std::max(a, b);
}

PTangencyReport p_tangency(const SurfaceJet& j, double tol) {
    PTangencyReport rep;
    for (const Tangent* v : {&j.Fs, &j.Ft}) {
        PlaneSplit sp = split_on_plane(apply_P(*v), j);
        rep.tangent_residual = std::max(rep.tangent_residual, tangent_norm(sp.normal));
        rep.normal_residual = std::max(rep.normal_residual, tangent_norm(sp.tangential));
    }
    if (rep.tangent_residual <= tol)
        rep.kind = PTangency::tangent;
    else if (rep.normal_residual <= tol)
        rep.kind = PTangency::normal;
    else
        rep.kind = PTangency::mixed;
    return rep;
}

InducedMetric induced_metric(const SurfaceJet& j, double tol) {
    InducedMetric m;
    m.g11 = nk_metric(j.Fs, j.Fs).to_double();
    m.g12 = nk_metric(j.Fs, j.Ft).to_double();
    m.g22 = nk_metric(j.Ft, j.Ft).to_double();
    double scale = std::max(1.0, std::fabs(m.g11));
    m.conformal = std::fabs(m.g11 - m.g22) <= tol * scale &&
                  std::fabs(m.g12) <= tol * scale && m.g11 > 0.0;
    if (m.conformal) m.omega = 0.5 * std::log(m.g11);
    return m;
}

SecondFundamentalForm second_fundamental_form(const SurfaceJet& j) {
    SecondFundamentalForm out;
    double g11 = nk_metric(j.Fs, j.Fs).to_double();
    double g12 = nk_metric(j.Fs, j.Ft).to_double();
    double g22 = nk_metric(j.Ft, j.Ft).to_double();
    double worst = 0.0;
    auto reduce = [&](const Mat2& DA, const Mat2& DB, const Tangent& X, const Tangent& Y) {
        double tr = 0.0;
        Tangent nab = ambient_to_nk(DA, DB, X, Y, &tr);
        worst = std::max(worst, tr);
        auto c = solve2(g11, g12, g22, nk_metric(nab, j.Fs).to_double(),
                        nk_metric(nab, j.Ft).to_double());
        Tangent tang = t_add(t_scale(Scalar::approx(c[0]), j.Fs),
                             t_scale(Scalar::approx(c[1]), j.Ft));
        return t_sub(nab, tang);
    };
    out.h_ss = reduce(j.Ass, j.Bss, j.Fs, j.Fs);
    out.h_st = reduce(j.Ast, j.Bst, j.Fs, j.Ft);
    out.h_tt = reduce(j.Att, j.Btt, j.Ft, j.Ft);
    out.trace_residual = worst;
    return out;
}

std::array<std::array<double, 2>, 2> shape_operator(const SecondFundamentalForm& h,
                                                    const Tangent& xi,
                                                    const SurfaceJet& j) {
    double g11 = nk_metric(j.Fs, j.Fs).to_double();
    double g12 = nk_metric(j.Fs, j.Ft).to_double();
    double g22 = nk_metric(j.Ft, j.Ft).to_double();
    double H11 = nk_metric(h.h_ss, xi).to_double();
    double H12 = nk_metric(h.h_st, xi).to_double();
    double H22 = nk_metric(h.h_tt, xi).to_double();
    auto c1 = solve2(g11, g12, g22, H11, H12);  // image of Fs
    auto c2 = solve2(g11, g12, g22, H12, H22);  // image of Ft
    return {{{c1[0], c2[0]}, {c1[1], c2[1]}}};
}

namespace {

struct EFG {
    double E, F, G;
};

EFG metric_at(const Immersion& f, double s, double t, double step) {
    if (f.first) {
        FirstDerivs fd = f.first(s, t);
        NKPoint id = NKPoint::identity();
        Tangent Fs{id, fd.alpha, fd.gamma};
        Tangent Ft{id, fd.beta, fd.delta};
        return {nk_metric(Fs, Fs).to_double(), nk_metric(Fs, Ft).to_double(),
                nk_metric(Ft, Ft).to_double()};
    }
    SurfaceJet j = numeric_jet(f, s, t, step);
    return {nk_metric(j.Fs, j.Fs).to_double(), nk_metric(j.Fs, j.Ft).to_double(),
            nk_metric(j.Ft, j.Ft).to_double()};
}

double det3(const double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

double gauss_curvature(const Immersion& f, double s, double t, double step,
                       bool force_general) {
    const double H = 5.0 * step;  // outer stencil for metric derivatives
    auto E = [&](double u, double v) { return metric_at(f, u, v, step).E; };
    auto Ff = [&](double u, double v) { return metric_at(f, u, v, step).F; };
    auto G = [&](double u, double v) { return metric_at(f, u, v, step).G; };
    EFG c = metric_at(f, s, t, step);
    double scale = std::max({1.0, std::fabs(c.E), std::fabs(c.G)});
    // A chart can look isothermal at one symmetric point; require the
    // condition across the whole derivative stencil before shortcutting.
    auto isothermal_at = [&](double u, double v) {
        EFG m = metric_at(f, u, v, step);
        return std::fabs(m.E - m.G) <= 1e-6 * scale &&
               std::fabs(m.F) <= 1e-6 * scale && m.E > 0.0;
    };
    bool conformal = isothermal_at(s, t) && isothermal_at(s - 2.0 * H, t) &&
                     isothermal_at(s + 2.0 * H, t) && isothermal_at(s, t - 2.0 * H) &&
                     isothermal_at(s, t + 2.0 * H);
    if (conformal && !force_general) {
        // K = -e^{-2w} (w_ss + w_tt) for g = e^{2w} (ds^2 + dt^2)
        auto omega = [&](double u, double v) { return 0.5 * std::log(E(u, v)); };
        double lap = d2r([&](double u) { return omega(u, t); }, s, H) +
                     d2r([&](double v) { return omega(s, v); }, t, H);
        return -std::exp(-2.0 * omega(s, t)) * lap;
    }
    double Es = d1r([&](double u) { return E(u, t); }, s, H);
    double Et = d1r([&](double v) { return E(s, v); }, t, H);
    double Gs = d1r([&](double u) { return G(u, t); }, s, H);
    double Gt = d1r([&](double v) { return G(s, v); }, t, H);
    double Fs_ = d1r([&](double u) { return Ff(u, t); }, s, H);
    double Ft_ = d1r([&](double v) { return Ff(s, v); }, t, H);
    double Ett = d2r([&](double v) { return E(s, v); }, t, H);
    double Gss = d2r([&](double u) { return G(u, t); }, s, H);
    double Fst = d1r(
        [&](double u) {
            return d1r([&](double v) { return Ff(u, v); }, t, H);
        },
        s, H);
    double m1[3][3] = {{-0.5 * Ett + Fst - 0.5 * Gss, 0.5 * Es, Fs_ - 0.5 * Et},
                       {Ft_ - 0.5 * Gs, c.E, c.F},
                       {0.5 * Gt, c.F, c.G}};
    double m2[3][3] = {{0.0, 0.5 * Et, 0.5 * Gs},
                       {0.5 * Et, c.E, c.F},
                       {0.5 * Gs, c.F, c.G}};
    double den = c.E * c.G - c.F * c.F;
    return (det3(m1) - det3(m2)) / (den * den);
}

std::array<double, 2> integrability_residual(const Immersion& f, double s, double t,
                                             double step) {
    const double H = 5.0 * step;
    auto fd = [&](double u, double v) -> FirstDerivs {
        if (f.first) return f.first(u, v);
        SurfaceJet j = numeric_jet(f, u, v, step);
        return {j.Fs.alpha, j.Ft.alpha, j.Fs.beta, j.Ft.beta};
    };
    auto comp = [&](int part, int which, double u, double v) -> double {
        FirstDerivs d = fd(u, v);
        const TraceZero& w = (part == 0) ? d.alpha : d.beta;
        const Scalar* cc[3] = {&w.c1, &w.c2, &w.c3};
        return cc[which]->to_double();
    };
    FirstDerivs d0 = fd(s, t);
    TraceZero cr = cross(d0.alpha, d0.beta);
    double crv[3] = {cr.c1.to_double(), cr.c2.to_double(), cr.c3.to_double()};
    double r1 = 0.0, r2 = 0.0;
    for (int k = 0; k < 3; ++k) {
        double at = d1r([&](double v) { return comp(0, k, s, v); }, t, H);
        double bs = d1r([&](double u) { return comp(1, k, u, t); }, s, H);
        double as = d1r([&](double u) { return comp(0, k, u, t); }, s, H);
        double bt = d1r([&](double v) { return comp(1, k, s, v); }, t, H);
        double e1 = at - bs - 2.0 * crv[k];
        double e2 = as + bt + (2.0 / kS3) * crv[k];
        r1 += e1 * e1;
        r2 += e2 * e2;
    }
    return {std::sqrt(r1), std::sqrt(r2)};
}

namespace {

using V3 = std::array<double, 3>;

double inner3(const V3& x, const V3& y) { return x[0] * y[0] + x[1] * y[1] - x[2] * y[2]; }
V3 cross3(const V3& x, const V3& y) {
    return {-(x[1] * y[2] - x[2] * y[1]), -(x[2] * y[0] - x[0] * y[2]),
            x[0] * y[1] - x[1] * y[0]};
}
V3 add3(const V3& x, const V3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
V3 sub3(const V3& x, const V3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
V3 scale3(double c, const V3& x) { return {c * x[0], c * x[1], c * x[2]}; }
double norm3(const V3& x) {
    return std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
}

V3 eps_fn(double s, double t) {
    double D = s * s + t * t - 1.0;
    return {-kS3 * s / D, -kS3 * t / D, 0.5 * kS3 * (s * s + t * t + 1.0) / D};
}

} // namespace

EpsilonReport epsilon_surface_check(double s, double t, double step) {
    if (s * s + t * t >= 0.64)
        throw std::domain_error("support-map check requires s^2 + t^2 < 0.64");
    EpsilonReport rep;
    double D = s * s + t * t - 1.0;
    V3 e = eps_fn(s, t);
    rep.quadric_residual = std::fabs(inner3(e, e) + 0.75);
    V3 es, et, ess, est, ett;
    for (int k = 0; k < 3; ++k) {
        es[k] = d1r([&](double u) { return eps_fn(u, t)[k]; }, s, step);
        et[k] = d1r([&](double v) { return eps_fn(s, v)[k]; }, t, step);
        ess[k] = d2r([&](double u) { return eps_fn(u, t)[k]; }, s, step);
        ett[k] = d2r([&](double v) { return eps_fn(s, v)[k]; }, t, step);
        est[k] = d1r(
            [&](double u) {
                return d1r([&](double v) { return eps_fn(u, v)[k]; }, t, step);
            },
            s, step);
    }
    // the support map integrates the rotated first derivatives of the chart
    FirstDerivs fd = example_hyperbolic_st().first(s, t);
    auto tz3 = [](const TraceZero& z) -> V3 {
        return {z.c1.to_double(), z.c2.to_double(), z.c3.to_double()};
    };
    V3 a = tz3(fd.alpha), b = tz3(fd.beta);
    V3 arot = add3(scale3(0.5, a), scale3(0.5 * kS3, b));
    V3 brot = add3(scale3(-0.5 * kS3, a), scale3(0.5, b));
    rep.deriv_match = std::max(norm3(sub3(es, arot)), norm3(sub3(et, brot)));
    double ws = -2.0 * s / D, wt = -2.0 * t / D, e2w = 3.0 / (D * D);
    const double q = 2.0 / kS3;
    V3 cst = cross3(es, et);
    V3 rhs1 = add3(sub3(scale3(ws, es), scale3(wt, et)), scale3(-q, cst));
    V3 rhs2 = add3(scale3(wt, es), scale3(ws, et));
    V3 rhs3 = add3(sub3(scale3(wt, et), scale3(ws, es)), scale3(-q, cst));
    rep.pde_residual = std::max({norm3(sub3(ess, rhs1)), norm3(sub3(est, rhs2)),
                                 norm3(sub3(ett, rhs3))});
    V3 xi = scale3(-1.0 / e2w, cst);
    rep.xi_vs_eps = norm3(sub3(xi, scale3(q, e)));
    double g11 = inner3(es, es), g12 = inner3(es, et), g22 = inner3(et, et);
    auto tang_sub = [&](const V3& w) {
        auto c = solve2(g11, g12, g22, inner3(w, es), inner3(w, et));
        return sub3(w, add3(scale3(c[0], es), scale3(c[1], et)));
    };
    V3 hss = tang_sub(ess), hst = tang_sub(est), htt = tang_sub(ett);
    rep.umbilic_offdiag = norm3(hst);
    V3 target = scale3(q * e2w, xi);
    rep.umbilic_match = std::max(norm3(sub3(hss, target)), norm3(sub3(htt, target)));
    double H11 = inner3(hss, xi), H12 = inner3(hst, xi), H22 = inner3(htt, xi);
    auto c1 = solve2(g11, g12, g22, H11, H12);
    auto c2 = solve2(g11, g12, g22, H12, H22);
    double sgn = (c1[0] < 0.0) ? -1.0 : 1.0;
    rep.shape_sign = static_cast<int>(sgn);
    rep.shape_deviation = std::max({std::fabs(c1[0] - sgn * q), std::fabs(c2[1] - sgn * q),
                                    std::fabs(c1[1]), std::fabs(c2[0])});
    rep.center_residual = norm3(sub3(e, scale3(0.5 * kS3, xi)));
    return rep;
}

namespace {

Mat2 mat4(double a, double b, double c, double d) {
    return {Scalar::approx(a), Scalar::approx(b), Scalar::approx(c), Scalar::approx(d)};
}
TraceZero tz(double c1, double c2, double c3) {
    return {Scalar::approx(c1), Scalar::approx(c2), Scalar::approx(c3)};
}

// A = 1/2 Id + (sqrt3/2) Y with Y = y1 e1 + y2 e2 + y3 e3, B its mirror
NKPoint point_from_quadric(double y1, double y2, double y3) {
    const double h3 = 0.5 * kS3;
    Mat2 A = mat4(0.5 + h3 * y1, h3 * (y2 + y3), h3 * (y2 - y3), 0.5 - h3 * y1);
    Mat2 B = mat4(0.5 - h3 * y1, -h3 * (y2 + y3), -h3 * (y2 - y3), 0.5 + h3 * y1);
    return {Sl2Point{A}, Sl2Point{B}};
}

} // namespace

const Immersion& example_flat_positive() {
    static const Immersion im = [] {
        Immersion f;
        f.name = "flat-positive";
        f.eval = [](double s, double t) -> NKPoint {
            double x = (kS3 * s - t) / kS2;
            double y = (kS3 * s + t) / kS2;
            return {Sl2Point{mat4(std::exp(x), 0.0, 0.0, std::exp(-x))},
                    Sl2Point{mat4(std::exp(y), 0.0, 0.0, std::exp(-y))}};
        };
        f.first = [](double, double) -> FirstDerivs {
            double a = kS3 / kS2, b = 1.0 / kS2;
            return {tz(a, 0, 0), tz(-b, 0, 0), tz(a, 0, 0), tz(b, 0, 0)};
        };
        return f;
    }();
    return im;
}

const Immersion& example_flat_negative() {
    static const Immersion im = [] {
        Immersion f;
        f.name = "flat-negative";
        f.eval = [](double s, double t) -> NKPoint {
            double x = (kS3 * s - t) / kS2;
            double y = (kS3 * s + t) / kS2;
            return {Sl2Point{mat4(std::cos(x), std::sin(x), -std::sin(x), std::cos(x))},
                    Sl2Point{mat4(std::cos(y), std::sin(y), -std::sin(y), std::cos(y))}};
        };
        f.first = [](double, double) -> FirstDerivs {
            double a = kS3 / kS2, b = 1.0 / kS2;
            return {tz(0, 0, a), tz(0, 0, -b), tz(0, 0, a), tz(0, 0, b)};
        };
        return f;
    }();
    return im;
}

const Immersion& example_hyperbolic_st() {
    static const Immersion im = [] {
        Immersion f;
        f.name = "hyperbolic-st";
        f.domain = [](double s, double t) {
            return std::fabs(s * s + t * t - 1.0) >= 0.05;
        };
        f.eval = [](double s, double t) -> NKPoint {
            double D = s * s + t * t - 1.0;
            return point_from_quadric(-2.0 * s / D, -2.0 * t / D,
                                      (s * s + t * t + 1.0) / D);
        };
        f.first = [](double s, double t) -> FirstDerivs {
            double D = s * s + t * t - 1.0;
            double d2 = 2.0 * D * D;
            double a11 = (kS3 * s * s - 6.0 * s * t - kS3 * (t * t - 1.0)) / d2;
            double a12 = (3.0 * s * s + 2.0 * kS3 * s * (t - 1.0) - 3.0 * (t - 1.0) * (t - 1.0)) / d2;
            double a21 = (3.0 * s * s + 2.0 * kS3 * s * (t + 1.0) - 3.0 * (t + 1.0) * (t + 1.0)) / d2;
            double b11 = (3.0 * s * s + 2.0 * kS3 * s * t - 3.0 * t * t + 3.0) / d2;
            double b12 = (-kS3 * s * s + 6.0 * s * (t - 1.0) + kS3 * (t - 1.0) * (t - 1.0)) / d2;
            double b21 = (-kS3 * s * s + 6.0 * s * (t + 1.0) + kS3 * (t + 1.0) * (t + 1.0)) / d2;
            TraceZero alpha = tz(a11, 0.5 * (a12 + a21), 0.5 * (a12 - a21));
            TraceZero beta = tz(b11, 0.5 * (b12 + b21), 0.5 * (b12 - b21));
            Scalar half = Scalar::approx(0.5);
            Scalar h3 = Scalar::approx(0.5 * kS3);
            TraceZero gamma = half * alpha - h3 * beta;
            TraceZero delta = h3 * alpha + half * beta;
            return {alpha, beta, gamma, delta};
        };
        return f;
    }();
    return im;
}

const Immersion& example_hyperbolic_quadric() {
    static const Immersion im = [] {
        Immersion f;
        f.name = "hyperbolic-quadric";
        f.eval = [](double u, double v) -> NKPoint {
            double w = std::sqrt(1.0 + u * u + v * v);
            return point_from_quadric(u, v, -w);
        };
        f.first = [](double u, double v) -> FirstDerivs {
            double w = std::sqrt(1.0 + u * u + v * v);
            const double h3 = 0.5 * kS3;
            NKPoint p = point_from_quadric(u, v, -w);
            Mat2 Au = mat4(h3, -h3 * u / w, h3 * u / w, -h3);
            Mat2 Av = mat4(0.0, h3 * (1.0 - v / w), h3 * (1.0 + v / w), 0.0);
            TraceZero alpha = TraceZero::from_mat(inverse(p.A.m) * Au);
            TraceZero beta = TraceZero::from_mat(inverse(p.A.m) * Av);
            TraceZero gamma = TraceZero::from_mat(inverse(p.B.m) * (-Au));
            TraceZero delta = TraceZero::from_mat(inverse(p.B.m) * (-Av));
            return {alpha, beta, gamma, delta};
        };
        return f;
    }();
    return im;
}

const std::vector<std::string>& surface_registry() {
    static const std::vector<std::string> names = {"flat-positive", "flat-negative",
                                                   "hyperbolic-st", "hyperbolic-quadric"};
    return names;
}

const Immersion& surface_by_name(const std::string& name) {
    if (name == "flat-positive") return example_flat_positive();
    if (name == "flat-negative") return example_flat_negative();
    if (name == "hyperbolic-st") return example_hyperbolic_st();
    if (name == "hyperbolic-quadric") return example_hyperbolic_quadric();
    throw std::invalid_argument("unknown surface '" + name + "'");
}

const SurfaceExpectation& surface_expectation(const std::string& name) {
    static const std::map<std::string, SurfaceExpectation> table = [] {
        std::map<std::string, SurfaceExpectation> m;
        m["flat-positive"] = {0.0,  PTangency::tangent, +1, true, 1.0,
                              1e-6, 1e-6,               1e-8, false, false};
        m["flat-negative"] = {0.0,  PTangency::tangent, -1, true, 1.0,
                              1e-6, 1e-6,               1e-8, false, false};
        m["hyperbolic-st"] = {-4.0 / 3.0, PTangency::normal, +1, true, 0.56,
                              1e-5,       1e-4,              1e-5, true, false};
        m["hyperbolic-quadric"] = {-4.0 / 3.0, PTangency::normal, +1, false, 1.0,
                                   1e-5,       1e-4,              -1.0, false, true};
        return m;
    }();
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown surface '" + name + "'");
    return it->second;
}

double chart_agreement_max_residual() {
    static const double pts[10][2] = {{0.0, 0.0},    {0.3, 0.0},   {0.0, 0.3},
                                      {-0.25, 0.15}, {0.5, 0.2},   {-0.4, -0.35},
                                      {0.15, -0.55}, {0.6, -0.1},  {-0.2, 0.45},
                                      {0.35, 0.35}};
    const Immersion& st = example_hyperbolic_st();
    const Immersion& qd = example_hyperbolic_quadric();
    double worst = 0.0;
    for (const auto& p : pts) {
        double s = p[0], t = p[1];
        double D = s * s + t * t - 1.0;
        NKPoint a = st.eval(s, t);
        NKPoint b = qd.eval(-2.0 * s / D, -2.0 * t / D);
        Arr4 aa = to4(a.A.m), ab = to4(b.A.m), ba = to4(a.B.m), bb = to4(b.B.m);
        for (int k = 0; k < 4; ++k) {
            worst = std::max(worst, std::fabs(aa[k] - ab[k]));
            worst = std::max(worst, std::fabs(ba[k] - bb[k]));
        }
    }
    return worst;
}

} // namespace nksl2
