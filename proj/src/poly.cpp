#include "nksl2/poly.hpp"

#include <stdexcept>

namespace nksl2 {

const std::array<const char*, kPolyVars> kPolyVarNames = {
    "a1", "a2", "a3", "b1",
    "e1(a1)", "e1(a2)", "e1(a3)", "e1(b1)",
    "e2(a1)", "e2(a2)", "e2(a3)", "e2(b1)"};

Poly::Poly(Rational c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
}

Poly Poly::var(int i) {
    if (i < 0 || i >= kPolyVars) throw std::invalid_argument("poly variable out of range");
    Poly p;
    Monomial m{};
    m[i] = 1;
    p.terms_[m] = Rational(1);
    return p;
}

int Poly::degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) {
        int s = 0;
        for (auto e : m) s += e;
        if (s > d) d = s;
    }
    return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_[m] = c;
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly operator+(const Poly& x, const Poly& y) {
    Poly r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, c);
    return r;
}

Poly operator-(const Poly& x, const Poly& y) {
    Poly r = x;
    for (const auto& [m, c] : y.terms_) r.add_term(m, -c);
    return r;
}

Poly operator*(const Poly& x, const Poly& y) {
    Poly r;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            Monomial m;
            for (int i = 0; i < kPolyVars; ++i)
                m[i] = static_cast<std::uint8_t>(mx[i] + my[i]);
            r.add_term(m, cx * cy);
        }
    }
    return r;
}

Poly operator*(const Rational& c, const Poly& x) {
    Poly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : x.terms_) r.terms_[m] = c * v;
    return r;
}

Poly Poly::operator-() const { return Rational(-1) * *this; }

Rational Poly::eval(const std::array<Rational, kPolyVars>& v) const {
    Rational out;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < kPolyVars; ++i)
            for (int e = 0; e < m[i]; ++e) t *= v[i];
        out += t;
    }
    return out;
}

double Poly::eval(const std::array<double, kPolyVars>& v) const {
    double out = 0.0;
    for (const auto& [m, c] : terms_) {
        double t = c.to_double();
        for (int i = 0; i < kPolyVars; ++i)
            for (int e = 0; e < m[i]; ++e) t *= v[i];
        out += t;
    }
    return out;
}

Poly Poly::derive(const std::array<int, kPolyVars>& map) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        for (int i = 0; i < kPolyVars; ++i) {
            if (m[i] == 0 || map[i] < 0) continue;
            Monomial mm = m;
            mm[i] = static_cast<std::uint8_t>(mm[i] - 1);
            mm[map[i]] = static_cast<std::uint8_t>(mm[map[i]] + 1);
            r.add_term(mm, c * Rational(m[i]));
        }
    }
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += c.str();
        for (int i = 0; i < kPolyVars; ++i) {
            for (int e = 0; e < m[i]; ++e) {
                out += "*";
                out += kPolyVarNames[i];
            }
        }
    }
    return out;
}

bool in_rational_span(const Poly& target, const std::vector<Poly>& basis,
                      std::vector<Rational>* coeffs) {
    // collect the union of monomial supports as equation rows
    std::map<Monomial, std::size_t> rows;
    auto note = [&rows](const Poly& p) {
        for (const auto& [m, c] : p.terms()) {
            (void)c;
            if (!rows.count(m)) {
                std::size_t next = rows.size();
                rows[m] = next;
            }
        }
    };
    note(target);
    for (const auto& b : basis) note(b);

    std::size_t nr = rows.size(), nc = basis.size();
    std::vector<std::vector<Rational>> m(nr, std::vector<Rational>(nc + 1));
    for (std::size_t j = 0; j < nc; ++j)
        for (const auto& [mono, c] : basis[j].terms()) m[rows[mono]][j] = c;
    for (const auto& [mono, c] : target.terms()) m[rows[mono]][nc] = c;

    // exact Gauss elimination on the augmented matrix
    std::size_t rank = 0;
    std::vector<int> pivot_col(nr, -1);
    for (std::size_t col = 0; col < nc && rank < nr; ++col) {
        std::size_t piv = rank;
        while (piv < nr && m[piv][col].is_zero()) ++piv;
        if (piv == nr) continue;
        std::swap(m[piv], m[rank]);
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == rank || m[r][col].is_zero()) continue;
            Rational f = m[r][col] / m[rank][col];
            for (std::size_t c2 = col; c2 <= nc; ++c2) m[r][c2] -= f * m[rank][c2];
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    for (std::size_t r = rank; r < nr; ++r)
        if (!m[r][nc].is_zero()) return false;  // inconsistent: not in span

    if (coeffs) {
        coeffs->assign(nc, Rational(0));
        for (std::size_t r = 0; r < rank; ++r)
            (*coeffs)[pivot_col[r]] = m[r][nc] / m[r][pivot_col[r]];
    }
    return true;
}

} // namespace nksl2
