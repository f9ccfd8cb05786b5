// Acceptance gate: the seven headline requirements, each checked at its
// stated tolerance and reported on one line.

#include "nksl2/frame_case.hpp"
#include "nksl2/manifold.hpp"
#include "nksl2/report.hpp"
#include "nksl2/surfaces.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace nksl2;

namespace {

// Always-on requirement: never compiled out in Release.
#define REQUIRE(cond, msg)                                                      \
    do {                                                                        \
        if (!(cond)) {                                                          \
            std::cerr << "[FAIL] " << __FILE__ << ":" << __LINE__ << " " << msg \
                      << "\n";                                                  \
            std::exit(1);                                                       \
        }                                                                       \
    } while (0)

double now_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                     t0)
        .count();
}

void pass(int k, const std::string& what) {
    std::cout << "[PASS] criterion " << k << ": " << what << "\n";
}

const NKPoint kId = NKPoint::identity();

double gap(const Tangent& a, const Tangent& b) { return tangent_norm(t_sub(a, b)); }

NKPoint random_point(std::mt19937_64& rng) {
    return {sl2_exp(random_trace_zero(rng, 1.0)), sl2_exp(random_trace_zero(rng, 1.0))};
}

std::vector<double> grid_axis(double a) {
    std::vector<double> xs;
    for (int i = 0; i < 5; ++i) xs.push_back(a * (2.0 * i / 4.0 - 1.0));
    return xs;
}

double h_norm(const SecondFundamentalForm& h) {
    return std::max({tangent_norm(h.h_ss), tangent_norm(h.h_st), tangent_norm(h.h_tt)});
}

double membership_gap(const NKPoint& p) {
    double a = std::fabs(minkowski_inner(p.A.m, p.A.m).to_double() + 1.0);
    double b = std::fabs(minkowski_inner(p.B.m, p.B.m).to_double() + 1.0);
    return std::max(a, b);
}

void criterion_1_connection_tables() {
    auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) {
            REQUIRE((koszul_connection(i, j) - levi_civita_frame(i, j)).exact_zero(),
                    "Koszul route differs from the stored connection at (" << i << ","
                                                                           << j << ")");
            auto ref = reference_nabla_J(i, j);
            if (ref) {
                REQUIRE((nabla_J_frame(i, j) - *ref).exact_zero(),
                        "derived nabla-J differs from the catalogued entry at ("
                            << i << "," << j << ")");
            } else {
                REQUIRE(i == 0 && j == 3, "unexpected blank nabla-J entry");
                REQUIRE(nabla_J_frame(i, j).exact_zero(),
                        "the blank nabla-J entry does not derive to zero");
            }
        }
    double ms = now_ms(t0);
    REQUIRE(ms < 1000.0, "connection-table verification took " << ms << " ms");
    pass(1, "both 36-entry tables reproduced exactly by the independent route (" +
                format_double(ms) + " ms)");
}

void criterion_2_structure_identities() {
    // exact on the frame
    for (int i = 0; i < 6; ++i) {
        Tangent x = frame_field(i, kId);
        REQUIRE(tangent_to_coeffs(tensor_G(x, x)).exact_zero(),
                "G(X,X) != 0 on the frame");
        REQUIRE(tangent_to_coeffs(t_add(apply_P(apply_J(x)), apply_J(apply_P(x))))
                    .exact_zero(),
                "PJ != -JP on the frame");
        REQUIRE(tangent_to_coeffs(t_sub(apply_P(apply_P(x)), x)).exact_zero(),
                "P^2 != Id on the frame");
        REQUIRE(tangent_to_coeffs(t_sub(apply_Q(apply_Q(x)), x)).exact_zero(),
                "Q^2 != Id on the frame");
        Tangent q = t_scale(Scalar(-1) / Scalar::sqrt3(),
                            t_sub(t_scale(Scalar(2), apply_P(apply_J(x))), apply_J(x)));
        REQUIRE(tangent_to_coeffs(t_sub(apply_Q(x), q)).exact_zero(),
                "Q conversion fails on the frame");
        for (int j = 0; j < 6; ++j) {
            Tangent y = frame_field(j, kId);
            REQUIRE(tangent_to_coeffs(t_add(tensor_G(x, y), tensor_G(y, x))).exact_zero(),
                    "G is not skew on the frame");
            REQUIRE(tangent_to_coeffs(t_add(tensor_G(x, apply_J(y)),
                                            apply_J(tensor_G(x, y))))
                        .exact_zero(),
                    "G(X,JY) + J G(X,Y) != 0 on the frame");
            REQUIRE((product_metric(x, y) - Scalar(2) * nk_metric(x, y) -
                     nk_metric(x, apply_P(y)))
                        .is_zero(),
                    "product/nk metric conversion fails on the frame");
            REQUIRE((Scalar(4) * nk_metric(x, y) - product_metric(x, y) -
                     product_metric(apply_J(x), apply_J(y)))
                        .is_zero(),
                    "averaged metric conversion fails on the frame");
            for (int k = 0; k < 6; ++k) {
                Tangent z = frame_field(k, kId);
                REQUIRE((nk_metric(tensor_G(x, y), z) + nk_metric(y, tensor_G(x, z)))
                            .is_zero(),
                        "G is not skew-adjoint on the frame");
            }
        }
    }
    // 200 seeded random configurations at 1e-12
    std::mt19937_64 rng(424242);
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
        NKPoint p = random_point(rng);
        Tangent x = random_tangent(rng, p);
        Tangent y = random_tangent(rng, p);
        Tangent z = random_tangent(rng, p);
        worst = std::max(worst, tangent_norm(tensor_G(x, x)));
        worst = std::max(worst,
                         gap(tensor_G(x, y), t_scale(Scalar(-1), tensor_G(y, x))));
        worst = std::max(worst, gap(tensor_G(x, apply_J(y)),
                                    t_scale(Scalar(-1), apply_J(tensor_G(x, y)))));
        worst = std::max(worst,
                         std::fabs(nk_metric(tensor_G(x, y), z).to_double() +
                                   nk_metric(y, tensor_G(x, z)).to_double()));
        worst = std::max(worst, gap(apply_P(apply_J(x)),
                                    t_scale(Scalar(-1), apply_J(apply_P(x)))));
        worst = std::max(worst, gap(apply_P(apply_P(x)), x));
        worst = std::max(worst, gap(apply_Q(apply_Q(x)), x));
        Tangent q = t_scale(Scalar(-1) / Scalar::sqrt3(),
                            t_sub(t_scale(Scalar(2), apply_P(apply_J(x))), apply_J(x)));
        worst = std::max(worst, gap(apply_Q(x), q));
        worst = std::max(worst,
                         std::fabs(product_metric(x, y).to_double() -
                                   2.0 * nk_metric(x, y).to_double() -
                                   nk_metric(x, apply_P(y)).to_double()));
        worst = std::max(worst,
                         std::fabs(4.0 * nk_metric(x, y).to_double() -
                                   product_metric(x, y).to_double() -
                                   product_metric(apply_J(x), apply_J(y)).to_double()));
    }
    REQUIRE(worst <= 1e-12,
            "sampled structure identities reach residual " << worst);
    pass(2, "structure identities exact on the frame and within 1e-12 on 200 samples "
            "(worst " +
                format_double(worst) + ")");
}

void criterion_3_curvature() {
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            for (int k = 0; k < 6; ++k) {
                Tangent closed = curvature(frame_field(i, kId), frame_field(j, kId),
                                           frame_field(k, kId));
                REQUIRE((tangent_to_coeffs(closed) - frame_curvature(i, j, k))
                            .exact_zero(),
                        "closed-form curvature differs from the table route at ("
                            << i << "," << j << "," << k << ")");
            }
    std::mt19937_64 rng(535353);
    double worst = 0.0;
    for (int n = 0; n < 200; ++n) {
        NKPoint p = random_point(rng);
        Tangent x = random_tangent(rng, p);
        Tangent y = random_tangent(rng, p);
        Tangent z = random_tangent(rng, p);
        Tangent w = random_tangent(rng, p);
        FrameCoeffs cx = tangent_to_coeffs(x);
        FrameCoeffs cy = tangent_to_coeffs(y);
        FrameCoeffs cz = tangent_to_coeffs(z);
        FrameCoeffs nsum = FrameCoeffs::zero();
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                for (int k = 0; k < 6; ++k)
                    nsum = nsum + (cx.c[i] * cy.c[j] * cz.c[k]) * frame_nabla_G(i, j, k);
        worst = std::max(worst, gap(nabla_G(x, y, z), coeffs_to_tangent(nsum, p)));
        worst = std::max(worst,
                         std::fabs(g_GG(x, y, z, w).to_double() -
                                   nk_metric(tensor_G(x, y), tensor_G(z, w)).to_double()));
        worst = std::max(worst, gap(G_of_G(x, y, z), tensor_G(x, tensor_G(y, z))));
    }
    REQUIRE(worst <= 1e-12, "sampled derived tensors reach residual " << worst);
    pass(3, "curvature table exact on all frame triples; derived tensors within 1e-12 "
            "on 200 samples (worst " +
                format_double(worst) + ")");
}

void criterion_4_flat_surfaces() {
    auto t0 = std::chrono::steady_clock::now();
    for (const char* name : {"flat-positive", "flat-negative"}) {
        const Immersion& f = surface_by_name(name);
        for (double s : grid_axis(1.0))
            for (double t : grid_axis(1.0)) {
                SurfaceJet j = jet(f, s, t, 1e-3);
                REQUIRE(membership_gap(j.p) <= 1e-10,
                        name << ": factor leaves the quadric at (" << s << "," << t
                             << ")");
                REQUIRE(almost_complex_residual(j) <= 1e-8,
                        name << ": Ft != J Fs at (" << s << "," << t << ")");
                REQUIRE(tangent_norm(t_sub(apply_P(j.Fs), j.Fs)) <= 1e-8,
                        name << ": P does not fix Fs");
                REQUIRE(tangent_norm(t_add(apply_P(apply_J(j.Fs)), apply_J(j.Fs))) <=
                            1e-8,
                        name << ": P does not flip J Fs");
                REQUIRE(p_tangency(j, 1e-6).kind == PTangency::tangent,
                        name << ": not P-tangent at (" << s << "," << t << ")");
                REQUIRE(h_norm(second_fundamental_form(j)) <= 1e-6,
                        name << ": second fundamental form above 1e-6");
                REQUIRE(std::fabs(gauss_curvature(f, s, t, 1e-3)) <= 1e-6,
                        name << ": Gauss curvature above 1e-6");
            }
    }
    double ms = now_ms(t0);
    REQUIRE(ms < 2000.0, "flat-surface verification took " << ms << " ms");
    pass(4, std::string("flat examples: on the quadric, holomorphic, P-tangent, "
                        "totally geodesic, flat (") +
                format_double(ms) + " ms)");
}

void criterion_5_hyperbolic_surfaces() {
    const Immersion& f = example_hyperbolic_st();
    for (double s : grid_axis(0.56))
        for (double t : grid_axis(0.56)) {
            SurfaceJet j = jet(f, s, t, 1e-3);
            REQUIRE(p_tangency(j, 1e-6).kind == PTangency::normal,
                    "strip chart: not P-normal at (" << s << "," << t << ")");
            REQUIRE(h_norm(second_fundamental_form(j)) <= 1e-5,
                    "strip chart: second fundamental form above 1e-5");
            REQUIRE(std::fabs(gauss_curvature(f, s, t, 1e-3) + 4.0 / 3.0) <= 1e-4,
                    "strip chart: K + 4/3 above 1e-4");
            double rr = std::hypot(s, t);
            if (rr < 0.55) {
                EpsilonReport r = epsilon_surface_check(s, t, 1e-3);
                REQUIRE(r.quadric_residual <= 1e-10,
                        "support map leaves its quadric at (" << s << "," << t << ")");
            }
        }
    REQUIRE(chart_agreement_max_residual() <= 1e-10,
            "disk chart and strip chart disagree at matched points");
    pass(5, "hyperbolic example: P-normal, totally geodesic, K = -4/3, support map on "
            "its quadric, charts agree at 10 matched points");
}

void criterion_6_nonexistence_certificate() {
    auto t0 = std::chrono::steady_clock::now();
    Certificate c = nonexistence_certificate();
    SolutionSet res = parallel_system_solutions_resultant();
    REQUIRE(c.solutions.solutions.size() == 4, "solution set does not have 4 points");
    REQUIRE(res.solutions.size() == 4, "resultant route does not have 4 points");
    for (int k = 0; k < 4; ++k) {
        REQUIRE(c.solutions.solutions[k].a2 == res.solutions[k].a2 &&
                    c.solutions.solutions[k].a3 == res.solutions[k].a3,
                "factoring and resultant routes disagree at solution " << k);
    }
    Rational q(1, 4);
    const auto& s = c.solutions.solutions;
    REQUIRE(s[0].a2 == Q3(Rational(0), -q) && s[0].a3 == Q3(-q),
            "missing solution (-sqrt3/4, -1/4)");
    REQUIRE(s[1].a2 == Q3(Rational(0), q) && s[1].a3 == Q3(-q),
            "missing solution (sqrt3/4, -1/4)");
    REQUIRE(s[2].a2 == Q3() && s[2].a3 == Q3(), "missing solution (0, 0)");
    REQUIRE(s[3].a2 == Q3() && s[3].a3 == Q3(Rational(1, 2)),
            "missing solution (0, 1/2)");
    REQUIRE(c.required_norm == Rational(7, 12), "required norm is not 7/12");
    bool has_zero = false, has_quarter = false;
    for (const auto& n : c.attained) {
        has_zero = has_zero || n == Rational(0);
        has_quarter = has_quarter || n == Rational(1, 4);
    }
    REQUIRE(c.attained.size() == 2 && has_zero && has_quarter,
            "attained norms are not {0, 1/4}");
    REQUIRE(c.disjoint, "required norm not disjoint from the attained set");
    double ms = now_ms(t0);
    REQUIRE(ms < 100.0, "certificate took " << ms << " ms");
    pass(6, "parallel case: exact solution set of 4 points, squared norms {0, 1/4} "
            "miss 7/12, so parallel forces totally geodesic (" +
                format_double(ms) + " ms)");
}

void criterion_7_discrepancy_records() {
    SuiteConfig cfg;
    SuiteResult structure = run_structure_suite(cfg);
    SuiteResult frame = run_frame_case_suite(cfg);
    auto find = [](const SuiteResult& r, const std::string& name) -> const CheckRecord* {
        for (const auto& c : r.checks)
            if (c.name == name) return &c;
        return nullptr;
    };
    const CheckRecord* bracket = find(structure, "bracket-line-e2e3");
    REQUIRE(bracket && bracket->informational && !bracket->witness.empty(),
            "bracket-line record missing");
    REQUIRE(lie_bracket(1, 2).c[0] == Scalar(-2) && lie_bracket(1, 2).c[2].is_zero(),
            "commutator witness is not -2 E1");
    REQUIRE(reference_bracket(1, 2).c[2] == Scalar(-2),
            "catalogued bracket line is not -2 E3");
    const CheckRecord* blank = find(structure, "nabla-j-blank-e1f1");
    REQUIRE(blank && blank->informational && !blank->witness.empty(),
            "blank nabla-J record missing");
    REQUIRE(!reference_nabla_J(0, 3).has_value() && nabla_J_frame(0, 3).exact_zero(),
            "blank nabla-J witness is wrong");
    const CheckRecord* wording = find(frame, "parallel-solution-wording");
    REQUIRE(wording && wording->informational, "solution-wording record missing");
    REQUIRE(wording->witness.find("unique") != std::string::npos &&
                wording->witness.find("four") != std::string::npos,
            "solution-wording witness lacks the count comparison");
    const CheckRecord* gline = find(frame, "g-table-line-e3e5");
    REQUIRE(gline && gline->informational && gline->witness.find("-2/3") !=
                                                 std::string::npos,
            "G-table sign record missing");
    pass(7, "catalogued discrepancies surfaced as informational records with exact "
            "witnesses");
}

} // namespace

int main() {
    criterion_1_connection_tables();
    criterion_2_structure_identities();
    criterion_3_curvature();
    criterion_4_flat_surfaces();
    criterion_5_hyperbolic_surfaces();
    criterion_6_nonexistence_certificate();
    criterion_7_discrepancy_records();
    std::cout << "acceptance: 7/7 criteria satisfied\n";
    return 0;
}
