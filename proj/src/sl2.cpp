#include "nksl2/sl2.hpp"

namespace nksl2 {

// With d = det(x): x^2 = -d I, so the exponential series collapses to
//   exp(x) = cos(sqrt d) I + sin(sqrt d)/sqrt d x        (d > 0)
//   exp(x) = cosh(sqrt -d) I + sinh(sqrt -d)/sqrt -d x   (d < 0)
// and for |d| below threshold we use the even/odd series in d directly,
// which also covers the nilpotent case d = 0.
Sl2Point sl2_exp(const TraceZero& x) {
    Mat2 xm = x.to_mat();
    double d = xm.det().to_double();
    double c, s;
    if (std::fabs(d) < 1e-12) {
        c = 1.0 - d / 2.0 + d * d / 24.0;
        s = 1.0 - d / 6.0 + d * d / 120.0;
    } else if (d > 0.0) {
        double r = std::sqrt(d);
        c = std::cos(r);
        s = std::sin(r) / r;
    } else {
        double r = std::sqrt(-d);
        c = std::cosh(r);
        s = std::sinh(r) / r;
    }
    Scalar cs = Scalar::approx(c), ss = Scalar::approx(s);
    Mat2 out = {cs + ss * xm.m11, ss * xm.m12, ss * xm.m21, cs + ss * xm.m22};
    return {out};
}

TraceZero random_trace_zero(std::mt19937_64& rng, double lim) {
    std::uniform_real_distribution<double> u(-lim, lim);
    return {Scalar::approx(u(rng)), Scalar::approx(u(rng)), Scalar::approx(u(rng))};
}

} // namespace nksl2
