#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "nksl2/scalar.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

using namespace nksl2;

TEST_CASE("rational normalization") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).num() == 2);
    CHECK(Rational(6, 3).den() == 1);
    CHECK(Rational(7, 2).str() == "7/2");
    CHECK(Rational(-4).str() == "-4");
}

TEST_CASE("rational field arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(5, 10) == Rational(-1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
}

TEST_CASE("rational guards") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
    Rational big(INT64_MAX / 2);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(Rational::from_double(std::nan("")), std::domain_error);
}

TEST_CASE("rational from_double is exact on representable values") {
    CHECK(Rational::from_double(0.375) == Rational(3, 8));
    CHECK(Rational::from_double(-2.5) == Rational(-5, 2));
    CHECK(Rational::from_double(0.0) == Rational(0));
    // 0.1 is not 1/10 in binary; the conversion must capture the actual bits
    double v = 0.1;
    CHECK(Rational::from_double(v).to_double() == v);
    CHECK(Rational::from_double(v) != Rational(1, 10));
}

TEST_CASE("Q(sqrt3) multiplication and conjugate division") {
    Q3 u(Rational(1), Rational(1));   // 1 + sqrt3
    Q3 w(Rational(1), Rational(-1));  // 1 - sqrt3
    CHECK(u * w == Q3(Rational(-2)));
    Q3 r = u / w;  // (1+sqrt3)^2 / (1-3) = -(2 + sqrt3)
    CHECK(r == Q3(Rational(-2), Rational(-1)));
    CHECK(r * w == u);
    Q3 s(Rational(0), Rational(1));
    CHECK(s * s == Q3(Rational(3)));
    CHECK(u + w == Q3(Rational(2)));
    CHECK(u - w == Q3(Rational(0), Rational(2)));
    CHECK_THROWS_AS(u / Q3(), std::domain_error);
}

TEST_CASE("scalar exact arithmetic stays exact") {
    Scalar a = Scalar::ratio(2, 3) + Scalar::ratio(1, 3) * Scalar::sqrt3();
    REQUIRE(a.exact());
    Scalar b = a * a;  // 4/9 + 1/3 + (4/9) sqrt3
    CHECK(b.exact());
    CHECK(b.q3() == Q3(Rational(7, 9), Rational(4, 9)));
    CHECK(Scalar::sqrt3() * Scalar::sqrt3() == Scalar(3));
    // 1/sqrt3 rationalizes to sqrt3/3
    CHECK((Scalar(1) / Scalar::sqrt3() - Scalar::sqrt3() / Scalar(3)).is_zero());
    CHECK((a - a).is_zero());
    CHECK((-a + a).is_zero());
}

TEST_CASE("scalar demotes to float on contact with approx values") {
    Scalar f = Scalar::approx(0.25);
    CHECK(!f.exact());
    Scalar mixed = Scalar::ratio(1, 2) + f;
    CHECK(!mixed.exact());
    CHECK(mixed.to_double() == 0.75);
    CHECK_THROWS_AS(mixed.q3(), std::logic_error);
    CHECK((Scalar::sqrt3() * f).exact() == false);
    CHECK(Scalar::approx(0.0).is_zero());
}

TEST_CASE("scalar division guards") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
    CHECK_THROWS_AS(Scalar::approx(1.0) / Scalar::approx(0.0), std::domain_error);
}

TEST_CASE("exact_from_double promotes dyadic doubles") {
    Scalar e = Scalar::exact_from_double(1.5);
    CHECK(e.exact());
    CHECK(e == Scalar::ratio(3, 2));
    CHECK(Scalar::exact_from_double(-0.125) == Scalar::ratio(-1, 8));
}

TEST_CASE("scalar to_double agrees with the exact value") {
    Scalar a = Scalar::ratio(1, 4) + Scalar::ratio(1, 2) * Scalar::sqrt3();
    CHECK(a.to_double() == doctest::Approx(0.25 + 0.5 * std::sqrt(3.0)).epsilon(1e-15));
    CHECK(fabs_s(Scalar(-2)) == 2.0);
    CHECK(fabs_s(Scalar::approx(-0.5)) == 0.5);
}
