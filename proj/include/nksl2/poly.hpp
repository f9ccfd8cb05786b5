#pragma once

// Sparse multivariate polynomials with rational coefficients over a fixed
// set of twelve variables: the frame-case connection functions and their
// first derivatives,
//   0..3  -> a1, a2, a3, b1
//   4..7  -> e1(a1), e1(a2), e1(a3), e1(b1)
//   8..11 -> e2(a1), e2(a2), e2(a3), e2(b1)
// Everything the frame case needs is degree <= 2, but the arithmetic
// itself is general.

#include "nksl2/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nksl2 {

constexpr int kPolyVars = 12;
using Monomial = std::array<std::uint8_t, kPolyVars>;

extern const std::array<const char*, kPolyVars> kPolyVarNames;

class Poly {
public:
    Poly() = default;
    explicit Poly(Rational c);
    static Poly var(int i);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;

    friend Poly operator+(const Poly& x, const Poly& y);
    friend Poly operator-(const Poly& x, const Poly& y);
    friend Poly operator*(const Poly& x, const Poly& y);
    friend Poly operator*(const Rational& c, const Poly& x);
    Poly operator-() const;
    friend bool operator==(const Poly& x, const Poly& y) { return x.terms_ == y.terms_; }

    Rational eval(const std::array<Rational, kPolyVars>& v) const;
    double eval(const std::array<double, kPolyVars>& v) const;

    // apply the derivation sending var i to var map[i] (map[i] < 0 kills it)
    // through the Leibniz rule; constants die
    Poly derive(const std::array<int, kPolyVars>& map) const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c);
    std::map<Monomial, Rational> terms_;
};

// exact membership of target in the rational span of basis; fills coeffs
// (aligned with basis) on success
bool in_rational_span(const Poly& target, const std::vector<Poly>& basis,
                      std::vector<Rational>* coeffs);

} // namespace nksl2
