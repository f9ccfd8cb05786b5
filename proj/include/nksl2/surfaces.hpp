#pragma once
// Surface laboratory: concrete immersions into the product group, numeric
// jets with Richardson-extrapolated stencils, induced metric, second
// fundamental form, Gauss curvature, and the specialised checks for the
// catalogued example surfaces.

#include "nksl2/manifold.hpp"

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace nksl2 {

// left-translated first derivatives of an immersion (s,t) -> (A,B):
// A_s = A*alpha, A_t = A*beta, B_s = B*gamma, B_t = B*delta
struct FirstDerivs {
    TraceZero alpha, beta, gamma, delta;
};

struct Immersion {
    std::string name;
    std::function<NKPoint(double, double)> eval;
    std::function<FirstDerivs(double, double)> first;  // empty: numeric only
    std::function<bool(double, double)> domain;        // empty: everywhere
};

// second-order jet of an immersion at a point
struct SurfaceJet {
    NKPoint p;
    Tangent Fs, Ft;                      // coordinate tangent fields
    Mat2 Ass, Ast, Att, Bss, Bst, Btt;   // raw matrix-space second derivatives
    double step = 0.0;
    double trace_residual = 0.0;  // worst |trace| seen when reading Fs, Ft
};

// pure finite differences: 5-point first/second stencils, one Richardson level
SurfaceJet numeric_jet(const Immersion& f, double s, double t, double step);
// same, with Fs/Ft replaced by the analytic first derivatives when available
SurfaceJet jet(const Immersion& f, double s, double t, double step);

// |Ft - J Fs| in frame coefficients; zero for holomorphic parametrisations
double almost_complex_residual(const SurfaceJet& j);
// distance of J(tangent plane) from the tangent plane; chart independent
double span_j_invariance_residual(const SurfaceJet& j);

enum class PTangency { tangent, normal, mixed };
struct PTangencyReport {
    PTangency kind = PTangency::mixed;
    double tangent_residual = 0.0;  // normal part of P(plane): zero if P-tangent
    double normal_residual = 0.0;   // tangent part of P(plane): zero if P-normal
};
PTangencyReport p_tangency(const SurfaceJet& j, double tol);

struct InducedMetric {
    double g11 = 0.0, g12 = 0.0, g22 = 0.0;
    bool conformal = false;  // g11 == g22 > 0 and g12 == 0 within tolerance
    double omega = 0.0;      // conformal factor exponent, log(g11)/2
};
InducedMetric induced_metric(const SurfaceJet& j, double tol);

struct SecondFundamentalForm {
    Tangent h_ss, h_st, h_tt;    // normal parts of the ambient derivatives
    double trace_residual = 0.0; // diagnostic from the ambient reduction
};
SecondFundamentalForm second_fundamental_form(const SurfaceJet& j);

// shape operator of a normal field xi in the (Fs, Ft) basis:
// solves g(S X_a, X_b) = g(h(X_a, X_b), xi)
std::array<std::array<double, 2>, 2> shape_operator(const SecondFundamentalForm& h,
                                                    const Tangent& xi,
                                                    const SurfaceJet& j);

// intrinsic Gauss curvature of the induced metric; conformal shortcut when the
// metric is conformal, general determinant formula otherwise (force_general
// bypasses the shortcut so the two routes can be compared)
double gauss_curvature(const Immersion& f, double s, double t, double step,
                       bool force_general = false);

// residuals of the two first-order compatibility identities satisfied by the
// left-translated derivatives (alpha, beta) of the A factor:
//   alpha_t - beta_s = 2 alpha x beta
//   alpha_s + beta_t = -(2/sqrt3) alpha x beta   (holomorphic isothermal case)
std::array<double, 2> integrability_residual(const Immersion& f, double s,
                                             double t, double step);

// checks for the support map epsilon of the curvature -4/3 example, viewed as
// a surface in the flat metric vector space of trace-free matrices
struct EpsilonReport {
    double quadric_residual = 0.0;  // |<eps,eps> + 3/4|
    double deriv_match = 0.0;       // eps_s, eps_t vs rotated first derivatives
    double pde_residual = 0.0;      // worst of the three second-order identities
    double xi_vs_eps = 0.0;         // |xi - (2/sqrt3) eps|
    double umbilic_offdiag = 0.0;   // |h(eps_s, eps_t)|
    double umbilic_match = 0.0;     // |h(eps_a,eps_a) - (2/sqrt3) e^{2w} xi|
    double shape_deviation = 0.0;   // |S - sign*(2/sqrt3) Id|
    int shape_sign = 0;             // computed sign of S against +(2/sqrt3) Id
    double center_residual = 0.0;   // |eps - (sqrt3/2) xi|, the fixed center
};
EpsilonReport epsilon_surface_check(double s, double t, double step);

// catalogued example surfaces
const Immersion& example_flat_positive();
const Immersion& example_flat_negative();
const Immersion& example_hyperbolic_st();
const Immersion& example_hyperbolic_quadric();

const std::vector<std::string>& surface_registry();
const Immersion& surface_by_name(const std::string& name);  // throws on unknown

// analytic data the harness checks each registered surface against
struct SurfaceExpectation {
    double K = 0.0;
    PTangency tangency = PTangency::mixed;
    int metric_sign = 1;            // +1 positive definite, -1 negative definite
    bool holomorphic_chart = true;  // Ft = J Fs in this parametrisation
    double grid_half_extent = 1.0;  // harness samples [-a, a]^2
    double h_tol = 1e-6;
    double k_tol = 1e-6;
    double integr_tol = 1e-8;       // < 0: skip the record
    bool epsilon_quadric = false;   // run the support-map record
    bool chart_agreement = false;   // run the two-chart matching record
};
const SurfaceExpectation& surface_expectation(const std::string& name);

// worst entrywise gap between the two parametrisations of the curvature -4/3
// example over a fixed list of matched points
double chart_agreement_max_residual();

} // namespace nksl2
