#include "nksl2/frame_case.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>

namespace nksl2 {

namespace {

const Rational kTwoThirds(2, 3);

AdaptedVec av_zero() { return {}; }

AdaptedVec av_axis(int i, Rational v) {
    AdaptedVec a{};
    a[i] = v;
    return a;
}

AdaptedVec av_add(const AdaptedVec& x, const AdaptedVec& y) {
    AdaptedVec r;
    for (int i = 0; i < 6; ++i) r[i] = x[i] + y[i];
    return r;
}
AdaptedVec av_sub(const AdaptedVec& x, const AdaptedVec& y) {
    AdaptedVec r;
    for (int i = 0; i < 6; ++i) r[i] = x[i] - y[i];
    return r;
}
AdaptedVec av_scale(const Rational& s, const AdaptedVec& x) {
    AdaptedVec r;
    for (int i = 0; i < 6; ++i) r[i] = s * x[i];
    return r;
}

} // namespace

Rational adapted_length(int i) {
    if (i < 0 || i >= 6) throw std::invalid_argument("adapted frame index out of range");
    return i < 4 ? Rational(1) : Rational(-2, 3);
}

// J e1 = e2, J e3 = e4, J e5 = e6 (and J^2 = -Id)
AdaptedVec adapted_J(const AdaptedVec& v) {
    AdaptedVec r{};
    r[1] = v[0];
    r[0] = -v[1];
    r[3] = v[2];
    r[2] = -v[3];
    r[5] = v[4];
    r[4] = -v[5];
    return r;
}

// P e1 = e3, P e2 = -e4, P e5 = e5, P e6 = -e6 (and P^2 = Id)
AdaptedVec adapted_P(const AdaptedVec& v) {
    AdaptedVec r{};
    r[2] = v[0];
    r[0] = v[2];
    r[3] = -v[1];
    r[1] = -v[3];
    r[4] = v[4];
    r[5] = -v[5];
    return r;
}

Rational adapted_metric(const AdaptedVec& u, const AdaptedVec& v) {
    Rational s;
    for (int i = 0; i < 6; ++i) s += u[i] * v[i] * adapted_length(i);
    return s;
}

namespace {

const std::array<std::array<AdaptedVec, 6>, 6>& g_table() {
    static const auto t = [] {
        std::array<std::array<AdaptedVec, 6>, 6> v{};
        const Rational tt(2, 3);
        v[0][2] = av_axis(4, Rational(1));
        v[0][3] = av_axis(5, Rational(-1));
        v[0][4] = av_axis(2, tt);
        v[0][5] = av_axis(3, -tt);
        v[1][2] = av_axis(5, Rational(-1));
        v[1][3] = av_axis(4, Rational(-1));
        v[1][4] = av_axis(3, -tt);
        v[1][5] = av_axis(2, -tt);
        v[2][4] = av_axis(0, -tt);  // derived sign; catalogued as +2/3 e1
        v[2][5] = av_axis(1, tt);
        v[3][4] = av_axis(1, tt);
        v[3][5] = av_axis(0, tt);
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < a; ++b) v[a][b] = av_sub(av_zero(), v[b][a]);
        return v;
    }();
    return t;
}

} // namespace

AdaptedVec g_mult_table(int i, int j) {
    if (i < 0 || i >= 6 || j < 0 || j >= 6)
        throw std::invalid_argument("adapted frame index out of range");
    return g_table()[i][j];
}

AdaptedVec g_mult(int i, const AdaptedVec& v) {
    AdaptedVec r{};
    for (int j = 0; j < 6; ++j) {
        if (v[j].is_zero()) continue;
        r = av_add(r, av_scale(v[j], g_mult_table(i, j)));
    }
    return r;
}

std::string g_table_discrepancy() {
    return "catalogued: G(e3,e5) = 2/3 e1; closed-form contraction and skew "
           "pairing give G(e3,e5) = -2/3 e1";
}

namespace {

Poly pc(Rational c) { return Poly(c); }

// variables: 0..3 -> a1,a2,a3,b1
const Poly& pa1() { static const Poly p = Poly::var(0); return p; }
const Poly& pa2() { static const Poly p = Poly::var(1); return p; }
const Poly& pa3() { static const Poly p = Poly::var(2); return p; }
const Poly& pb1() { static const Poly p = Poly::var(3); return p; }

AdaptedPolyVec apv_zero() { return {}; }

AdaptedPolyVec apv_add(const AdaptedPolyVec& x, const AdaptedPolyVec& y) {
    AdaptedPolyVec r;
    for (int i = 0; i < 6; ++i) r[i] = x[i] + y[i];
    return r;
}
AdaptedPolyVec apv_sub(const AdaptedPolyVec& x, const AdaptedPolyVec& y) {
    AdaptedPolyVec r;
    for (int i = 0; i < 6; ++i) r[i] = x[i] - y[i];
    return r;
}
AdaptedPolyVec apv_scale(const Poly& s, const AdaptedPolyVec& x) {
    AdaptedPolyVec r;
    for (int i = 0; i < 6; ++i) r[i] = s * x[i];
    return r;
}

const std::array<std::array<AdaptedPolyVec, 6>, 2>& conn_table() {
    static const auto t = [] {
        std::array<std::array<AdaptedPolyVec, 6>, 2> v{};
        const Poly half = pc(Rational(1, 2));
        const Rational tt(2, 3);
        auto set = [](AdaptedPolyVec& row, int i, Poly p) { row[i] = std::move(p); };

        set(v[0][0], 1, pa1());
        set(v[0][0], 4, pa2());
        set(v[0][0], 5, pa3());

        set(v[0][1], 0, -pa1());
        set(v[0][1], 4, -pa3());
        set(v[0][1], 5, pa2());

        set(v[0][2], 3, -pa1());
        set(v[0][2], 4, pa2());
        set(v[0][2], 5, half - pa3());

        set(v[0][3], 2, pa1());
        set(v[0][3], 4, half + pa3());
        set(v[0][3], 5, pa2());

        set(v[0][4], 0, tt * pa2());
        set(v[0][4], 1, -(tt * pa3()));
        set(v[0][4], 2, tt * pa2());
        set(v[0][4], 3, tt * (half + pa3()));

        set(v[0][5], 0, tt * pa3());
        set(v[0][5], 1, tt * pa2());
        set(v[0][5], 2, tt * (half - pa3()));
        set(v[0][5], 3, tt * pa2());

        set(v[1][0], 1, pb1());
        set(v[1][0], 4, -pa3());
        set(v[1][0], 5, pa2());

        set(v[1][1], 0, -pb1());
        set(v[1][1], 4, -pa2());
        set(v[1][1], 5, -pa3());

        set(v[1][2], 3, -pb1());
        set(v[1][2], 4, half - pa3());
        set(v[1][2], 5, -pa2());

        set(v[1][3], 2, pb1());
        set(v[1][3], 4, pa2());
        set(v[1][3], 5, -(half + pa3()));

        set(v[1][4], 0, -(tt * pa3()));
        set(v[1][4], 1, -(tt * pa2()));
        set(v[1][4], 2, tt * (half - pa3()));
        set(v[1][4], 3, tt * pa2());

        set(v[1][5], 0, tt * pa2());
        set(v[1][5], 1, -(tt * pa3()));
        set(v[1][5], 2, -(tt * pa2()));
        set(v[1][5], 3, -(tt * (half + pa3())));

        return v;
    }();
    return t;
}

// e1- and e2-derivations on affine polynomials in a1,a2,a3,b1
const std::array<int, kPolyVars>& d_map(int i) {
    static const std::array<int, kPolyVars> d1 = {4, 5, 6, 7, -1, -1, -1, -1, -1, -1, -1, -1};
    static const std::array<int, kPolyVars> d2 = {8, 9, 10, 11, -1, -1, -1, -1, -1, -1, -1, -1};
    return i == 0 ? d1 : d2;
}

// nabla_{e_i} applied to a polynomial frame combination
AdaptedPolyVec cov_adapted(int i, const AdaptedPolyVec& v) {
    AdaptedPolyVec r = apv_zero();
    for (int k = 0; k < 6; ++k) {
        r[k] = r[k] + v[k].derive(d_map(i));
        if (v[k].is_zero()) continue;
        r = apv_add(r, apv_scale(v[k], conn_table()[i][k]));
    }
    return r;
}

} // namespace

AdaptedPolyVec frame_connection_table(int i, int j) {
    if (i < 0 || i > 1 || j < 0 || j >= 6)
        throw std::invalid_argument("connection table index out of range");
    return conn_table()[i][j];
}

std::array<int, kPolyVars> adapted_derivation(int i) {
    if (i < 0 || i > 1) throw std::invalid_argument("derivation index out of range");
    return d_map(i);
}

Rational gauss_constraint(const Rational& K) {
    return (K + Rational(4, 3)) * Rational(3, 4);
}

std::array<Scalar, 3> curvature_consistency(const FrameConnection& c,
                                            const ConnectionDerivs& d) {
    Scalar r1 = Scalar(-3) * (c.a1 * c.a1 + c.b1 * c.b1 - d.e2_a1 + d.e1_b1) +
                Scalar(Rational(5, 3));
    Scalar r2 = Scalar(2) * (c.a1 * c.a3 + c.a2 * c.b1) + d.e1_a2 - d.e2_a3;
    Scalar r3 = Scalar(2) * (c.a1 * c.a2 - c.a3 * c.b1) - d.e2_a2 - d.e1_a3;
    return {r1, r2, r3};
}

Poly consistency_poly(int k) {
    const Poly e2a1 = Poly::var(8), e1b1 = Poly::var(7);
    const Poly e1a2 = Poly::var(5), e2a3 = Poly::var(10);
    const Poly e2a2 = Poly::var(9), e1a3 = Poly::var(6);
    switch (k) {
        case 0:
            return Rational(-3) * (pa1() * pa1() + pb1() * pb1() - e2a1 + e1b1) +
                   pc(Rational(5, 3));
        case 1:
            return Rational(2) * (pa1() * pa3() + pa2() * pb1()) + e1a2 - e2a3;
        case 2:
            return Rational(2) * (pa1() * pa2() - pa3() * pb1()) - e2a2 - e1a3;
    }
    throw std::invalid_argument("consistency equation index out of range");
}

Poly gauss_residual_poly() {
    return pa2() * pa2() + pa3() * pa3() - pc(Rational(7, 12));
}

Poly parallel_poly(int k) {
    const Poly e1a2 = Poly::var(5), e1a3 = Poly::var(6);
    switch (k) {
        case 0:
            return kTwoThirds * (pa2() * pa2()) +
                   Rational(1, 3) * ((pc(Rational(1)) - Rational(2) * pa3()) * pa3());
        case 1:
            return kTwoThirds * (pa2() * pa3()) +
                   Rational(1, 3) * ((pc(Rational(1)) + Rational(2) * pa3()) * pa2());
        case 2:
            return Rational(2) * (pa1() * pa3()) + e1a2;
        case 3:
            return Rational(-2) * (pa1() * pa2()) + e1a3;
    }
    throw std::invalid_argument("parallel equation index out of range");
}

AdaptedPolyVec curvature_table_path(int j) {
    if (j < 0 || j >= 6) throw std::invalid_argument("adapted frame index out of range");
    const auto& t = conn_table();
    // [e1,e2] = -a1 e1 - b1 e2, so the bracket term contributes
    // +a1 nabla_{e1} e_j + b1 nabla_{e2} e_j after moving it across
    AdaptedPolyVec r = apv_sub(cov_adapted(0, t[1][j]), cov_adapted(1, t[0][j]));
    r = apv_add(r, apv_scale(pa1(), t[0][j]));
    r = apv_add(r, apv_scale(pb1(), t[1][j]));
    return r;
}

AdaptedVec curvature_closed_path(int j) {
    if (j < 0 || j >= 6) throw std::invalid_argument("adapted frame index out of range");
    AdaptedVec U = av_axis(0, Rational(1));
    AdaptedVec V = av_axis(1, Rational(1));
    AdaptedVec W = av_axis(j, Rational(1));
    AdaptedVec JU = adapted_J(U), JV = adapted_J(V), JW = adapted_J(W);
    AdaptedVec PU = adapted_P(U), PV = adapted_P(V);
    AdaptedVec JPU = adapted_J(PU), JPV = adapted_J(PV);

    AdaptedVec t1 = av_sub(av_scale(adapted_metric(V, W), U),
                           av_scale(adapted_metric(U, W), V));
    AdaptedVec t2 = av_sub(av_scale(adapted_metric(JV, W), JU),
                           av_scale(adapted_metric(JU, W), JV));
    t2 = av_sub(t2, av_scale(Rational(2) * adapted_metric(JU, V), JW));
    AdaptedVec t3 = av_sub(av_scale(adapted_metric(PV, W), PU),
                           av_scale(adapted_metric(PU, W), PV));
    t3 = av_add(t3, av_sub(av_scale(adapted_metric(JPV, W), JPU),
                           av_scale(adapted_metric(JPU, W), JPV)));

    AdaptedVec out = av_scale(Rational(-5, 6), t1);
    out = av_add(out, av_scale(Rational(-1, 6), t2));
    out = av_add(out, av_scale(Rational(-2, 3), t3));
    return out;
}

std::array<Scalar, 2> parallel_algebraic_residual(const Scalar& a2, const Scalar& a3) {
    Scalar p1 = Scalar(Rational(2, 3)) * a2 * a2 +
                Scalar(Rational(1, 3)) * (Scalar(1) - Scalar(2) * a3) * a3;
    Scalar p2 = Scalar(Rational(2, 3)) * a2 * a3 +
                Scalar(Rational(1, 3)) * (Scalar(1) + Scalar(2) * a3) * a2;
    return {p1, p2};
}

namespace {

Rational q3_norm2(const Q3& x) { return x.a * x.a + Rational(3) * x.b * x.b; }

void sort_solutions(std::vector<ParallelSolution>& v) {
    std::sort(v.begin(), v.end(), [](const ParallelSolution& x, const ParallelSolution& y) {
        double ax = x.a3.to_double(), ay = y.a3.to_double();
        if (ax != ay) return ax < ay;
        return x.a2.to_double() < y.a2.to_double();
    });
}

// sqrt of a nonnegative rational inside Q(sqrt3): either r = s^2 or r = 3 s^2
std::optional<Q3> sqrt_in_q3(const Rational& r) {
    if (r < Rational(0)) return std::nullopt;
    if (r.is_zero()) return Q3();
    auto perfect = [](std::int64_t v) -> std::optional<std::int64_t> {
        if (v < 0) return std::nullopt;
        auto s = static_cast<std::int64_t>(std::llround(std::sqrt(double(v))));
        for (std::int64_t c = s > 1 ? s - 1 : 0; c <= s + 1; ++c)
            if (c * c == v) return c;
        return std::nullopt;
    };
    if (auto n = perfect(r.num())) {
        if (auto d = perfect(r.den())) return Q3(Rational(*n, *d));
    }
    Rational r3 = r / Rational(3);
    if (auto n = perfect(r3.num())) {
        if (auto d = perfect(r3.den())) return Q3(Rational(0), Rational(*n, *d));
    }
    return std::nullopt;
}

ParallelSolution make_solution(Q3 a2, Q3 a3, std::string note) {
    ParallelSolution s;
    s.a2 = a2;
    s.a3 = a3;
    s.norm = q3_norm2(a2) + q3_norm2(a3);  // valid: both have a single component
    s.note = std::move(note);
    return s;
}

} // namespace

SolutionSet parallel_system_solutions() {
    // p2 factors exactly as 1/3 a2 (4 a3 + 1); assert it before branching
    Poly factored = Rational(1, 3) *
                    (pa2() * (Rational(4) * pa3() + pc(Rational(1))));
    if (!(factored == parallel_poly(1)))
        throw std::logic_error("p2 does not factor as recorded");

    // p1 with a2 = 0 collapses to 1/3 a3 (1 - 2 a3); assert that too
    Poly collapsed = parallel_poly(0) - kTwoThirds * (pa2() * pa2());
    Poly expect = Rational(1, 3) * (pa3() * (pc(Rational(1)) - Rational(2) * pa3()));
    if (!(collapsed == expect))
        throw std::logic_error("p1 branch collapse does not match");

    SolutionSet out;
    // branch a2 = 0: a3 in {0, 1/2}
    out.solutions.push_back(make_solution(
        Q3(), Q3(), "branch a2=0; p3,p4 hold identically, a1 unconstrained"));
    out.solutions.push_back(make_solution(
        Q3(), Q3(Rational(1, 2)), "branch a2=0; p3 forces a1 = 0"));
    // branch 4 a3 + 1 = 0: p1 becomes 2/3 a2^2 - 1/8, so a2^2 = 3/16
    Rational c0 = Rational(1, 3) * Rational(-1, 4) - kTwoThirds * Rational(1, 16);
    Rational a2sq = -c0 / kTwoThirds;
    auto root = sqrt_in_q3(a2sq);
    if (!root) throw std::logic_error("branch value is not a Q(sqrt3) square");
    out.solutions.push_back(make_solution(
        -*root, Q3(Rational(-1, 4)), "branch a3=-1/4; p3,p4 force a1 = 0"));
    out.solutions.push_back(make_solution(
        *root, Q3(Rational(-1, 4)), "branch a3=-1/4; p3,p4 force a1 = 0"));

    // every listed pair must kill p1 and p2 exactly
    for (const auto& s : out.solutions) {
        auto res = parallel_algebraic_residual(Scalar(s.a2), Scalar(s.a3));
        if (!res[0].is_zero() || !res[1].is_zero())
            throw std::logic_error("listed solution has nonzero residual");
    }
    sort_solutions(out.solutions);
    return out;
}

namespace {

// univariate helpers over Q for the resultant route (vectors indexed by degree)
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly uni_mul(const UniPoly& x, const UniPoly& y) {
    if (x.empty() || y.empty()) return {};
    UniPoly r(x.size() + y.size() - 1, Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j) r[i + j] += x[i] * y[j];
    uni_trim(r);
    return r;
}

UniPoly uni_sub(UniPoly x, const UniPoly& y) {
    if (x.size() < y.size()) x.resize(y.size(), Rational(0));
    for (std::size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
    uni_trim(x);
    return x;
}

Rational uni_eval(const UniPoly& p, const Rational& x) {
    Rational r;
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

// exact synthetic division by (t - root); remainder must vanish
UniPoly uni_deflate(const UniPoly& p, const Rational& root) {
    UniPoly q(p.size() - 1, Rational(0));
    Rational carry = p.back();
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        q[i] = carry;
        carry = p[i] + carry * root;
    }
    if (!carry.is_zero()) throw std::logic_error("deflation by a non-root");
    return q;
}

std::vector<std::int64_t> divisors(std::int64_t v) {
    if (v < 0) v = -v;
    std::vector<std::int64_t> out;
    for (std::int64_t d = 1; d * d <= v; ++d) {
        if (v % d) continue;
        out.push_back(d);
        if (d != v / d) out.push_back(v / d);
    }
    return out;
}

// all rational roots with multiplicity, by the rational root theorem
std::vector<Rational> uni_rational_roots(UniPoly p) {
    std::vector<Rational> roots;
    uni_trim(p);
    if (p.empty()) throw std::logic_error("zero polynomial has every root");
    // factor out powers of t
    while (p.size() > 1 && p.front().is_zero()) {
        roots.push_back(Rational(0));
        p.erase(p.begin());
    }
    for (;;) {
        if (p.size() <= 1) break;
        // clear denominators to integers
        std::int64_t lcm = 1;
        for (const auto& c : p) lcm = std::lcm(lcm, c.den());
        std::vector<std::int64_t> ip;
        ip.reserve(p.size());
        for (const auto& c : p) ip.push_back(c.num() * (lcm / c.den()));
        bool found = false;
        for (auto q : divisors(ip.back())) {
            for (auto n : divisors(ip.front())) {
                for (int sgn = 0; sgn < 2 && !found; ++sgn) {
                    Rational cand(sgn ? -n : n, q);
                    if (uni_eval(p, cand).is_zero()) {
                        roots.push_back(cand);
                        p = uni_deflate(p, cand);
                        found = true;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;  // remaining factor has no rational roots
    }
    if (p.size() > 1)
        throw std::logic_error("resultant kept an unresolved factor: " +
                               std::to_string(p.size() - 1));
    return roots;
}

// coefficient of a2^k in a poly of the two frame-case unknowns, as a
// univariate polynomial in a3
UniPoly coeff_in_a2(const Poly& p, int k) {
    UniPoly out;
    for (const auto& [m, c] : p.terms()) {
        for (int v = 0; v < kPolyVars; ++v)
            if (v != 1 && v != 2 && m[v] != 0)
                throw std::logic_error("unexpected variable in algebraic system");
        if (m[1] != k) continue;
        std::size_t deg = m[2];
        if (out.size() <= deg) out.resize(deg + 1, Rational(0));
        out[deg] += c;
    }
    uni_trim(out);
    return out;
}

} // namespace

SolutionSet parallel_system_solutions_resultant() {
    const Poly p1 = parallel_poly(0), p2 = parallel_poly(1);
    // p1 = A2 t^2 + A1 t + A0 and p2 = B1 t + B0 in t = a2; the Sylvester
    // determinant is A2 B0^2 - A1 B1 B0 + A0 B1^2
    UniPoly A2 = coeff_in_a2(p1, 2), A1 = coeff_in_a2(p1, 1), A0 = coeff_in_a2(p1, 0);
    UniPoly B1 = coeff_in_a2(p2, 1), B0 = coeff_in_a2(p2, 0);
    UniPoly res = uni_sub(uni_mul(A2, uni_mul(B0, B0)), uni_mul(A1, uni_mul(B1, B0)));
    res = uni_sub(uni_mul(A0, uni_mul(B1, B1)), uni_sub(UniPoly{}, res));
    // res = A0 B1^2 - (0 - (A2 B0^2 - A1 B1 B0)) = A2 B0^2 - A1 B1 B0 + A0 B1^2

    std::vector<Rational> roots = uni_rational_roots(res);
    SolutionSet out;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        bool dup = false;
        for (std::size_t j = 0; j < i; ++j) dup = dup || roots[j] == roots[i];
        if (dup) continue;
        const Rational& a3 = roots[i];
        Rational b1v = uni_eval(B1, a3), b0v = uni_eval(B0, a3);
        if (!b1v.is_zero()) {
            Rational a2v = -b0v / b1v;
            // accept only if p1 also vanishes there
            Rational p1v = uni_eval(A2, a3) * a2v * a2v + uni_eval(A1, a3) * a2v +
                           uni_eval(A0, a3);
            if (p1v.is_zero())
                out.solutions.push_back(make_solution(Q3(a2v), Q3(a3), "resultant route"));
            continue;
        }
        // p2 vanishes identically at this a3: solve the quadratic p1
        Rational a2sq = -uni_eval(A0, a3) / uni_eval(A2, a3);
        auto root = sqrt_in_q3(a2sq);
        if (!root) throw std::logic_error("a2^2 is not a Q(sqrt3) square");
        out.solutions.push_back(make_solution(-*root, Q3(a3), "resultant route"));
        if (!root->is_zero())
            out.solutions.push_back(make_solution(*root, Q3(a3), "resultant route"));
    }
    sort_solutions(out.solutions);
    return out;
}

Certificate nonexistence_certificate() {
    Certificate c;
    c.solutions = parallel_system_solutions();
    c.required_norm = gauss_constraint(Rational(-5, 9));
    for (const auto& s : c.solutions.solutions) {
        bool seen = false;
        for (const auto& n : c.attained) seen = seen || n == s.norm;
        if (!seen) c.attained.push_back(s.norm);
    }
    c.disjoint = true;
    for (const auto& n : c.attained) c.disjoint = c.disjoint && n != c.required_norm;
    c.catalogued_claim =
        "the catalogued remark calls the vanishing solution unique; the exact "
        "solution set has four points, one of them the vanishing one";
    return c;
}

} // namespace nksl2
