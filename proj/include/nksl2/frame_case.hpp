#pragma once

// Moving-frame analysis for almost complex surfaces whose product
// structure P maps the tangent plane into the normal space. The adapted
// frame is
//   e1 = V, e2 = JV, e3 = PV, e4 = JPV, e5 = G(V,PV), e6 = -G(JV,PV)
// with V a unit tangent; squared lengths are 1,1,1,1,-2/3,-2/3. The
// connection along the surface directions e1, e2 is determined by four
// unknown functions a1, a2, a3, b1, and the whole case reduces to exact
// polynomial algebra in those functions and their e1/e2-derivatives.

#include "nksl2/poly.hpp"
#include "nksl2/scalar.hpp"

#include <array>
#include <string>
#include <vector>

namespace nksl2 {

using AdaptedVec = std::array<Rational, 6>;
using AdaptedPolyVec = std::array<Poly, 6>;

Rational adapted_length(int i);

AdaptedVec adapted_J(const AdaptedVec& v);
AdaptedVec adapted_P(const AdaptedVec& v);
Rational adapted_metric(const AdaptedVec& u, const AdaptedVec& v);

// G(e_i, e_j). The catalogued table is reproduced except at (e3,e5),
// where the closed-form contraction identity forces the opposite sign;
// g_table_discrepancy() documents that one entry.
AdaptedVec g_mult_table(int i, int j);
AdaptedVec g_mult(int i, const AdaptedVec& v);
std::string g_table_discrepancy();

// nabla_{e_i} e_j for i in {0,1}: affine polynomials in a1,a2,a3,b1
AdaptedPolyVec frame_connection_table(int i, int j);

// the e1-/e2-derivation maps on the polynomial variables, for Poly::derive
std::array<int, kPolyVars> adapted_derivation(int i);

struct FrameConnection {
    Scalar a1, a2, a3, b1;
};
struct ConnectionDerivs {
    Scalar e1_a1, e1_a2, e1_a3, e1_b1;
    Scalar e2_a1, e2_a2, e2_a3, e2_b1;
};

// Gauss equation solved for a2^2 + a3^2: (K + 4/3) * 3/4
Rational gauss_constraint(const Rational& K);

// the three consistency equations obtained by expanding R(e1,e2) along
// the frame, evaluated at concrete values
std::array<Scalar, 3> curvature_consistency(const FrameConnection& c,
                                            const ConnectionDerivs& d);

// the same equations (and friends) as exact polynomials
Poly consistency_poly(int k);   // k = 0,1,2
Poly gauss_residual_poly();     // a2^2 + a3^2 - 7/12
Poly parallel_poly(int k);      // k = 0..3, the nabla h = 0 system

// R(e1,e2)e_j two ways: table/bracket expansion vs the closed form
AdaptedPolyVec curvature_table_path(int j);
AdaptedVec curvature_closed_path(int j);

// algebraic part {p1 = p2 = 0} of the parallel system, exact residuals
std::array<Scalar, 2> parallel_algebraic_residual(const Scalar& a2, const Scalar& a3);

struct ParallelSolution {
    Q3 a2;
    Q3 a3;
    Rational norm;     // a2^2 + a3^2
    std::string note;  // branch provenance and what p3, p4 force on a1
};
struct SolutionSet {
    std::vector<ParallelSolution> solutions;
};

// exact solution set by factoring p2 = 1/3 a2 (4 a3 + 1) (the
// factorisation itself is asserted as a polynomial identity)
SolutionSet parallel_system_solutions();
// independent route eliminating a2 with a Sylvester resultant in a3
SolutionSet parallel_system_solutions_resultant();

struct Certificate {
    SolutionSet solutions;
    Rational required_norm;          // 7/12 from gauss_constraint(-5/9)
    std::vector<Rational> attained;  // distinct a2^2 + a3^2 over solutions
    bool disjoint;
    std::string catalogued_claim;    // the catalogued wording about the set
};
Certificate nonexistence_certificate();

} // namespace nksl2
