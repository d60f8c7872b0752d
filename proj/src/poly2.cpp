#include "mc/poly2.hpp"

#include <algorithm>
#include <sstream>

namespace mc {

void Poly2::add_term(int du, int dv, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find({du, dv});
    if (it == terms_.end()) {
        terms_.emplace(Key{du, dv}, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly2 Poly2::constant(const Rational& c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int du, int dv, const Rational& c) {
    Poly2 p;
    p.add_term(du, dv, c);
    return p;
}

Poly2 Poly2::var_u() { return monomial(1, 0, 1); }
Poly2 Poly2::var_v() { return monomial(0, 1, 1); }

Poly2 Poly2::from_poly_u(const Poly& p) {
    Poly2 out;
    for (int i = 0; i <= p.degree(); ++i) out.add_term(i, 0, p.coeff(i));
    return out;
}

Poly2 Poly2::from_poly_v(const Poly& p) {
    Poly2 out;
    for (int i = 0; i <= p.degree(); ++i) out.add_term(0, i, p.coeff(i));
    return out;
}

Rational Poly2::coeff(int du, int dv) const {
    auto it = terms_.find({du, dv});
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

int Poly2::degree_u() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int Poly2::degree_v() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

Poly2 Poly2::operator-() const {
    Poly2 out = *this;
    for (auto& [k, c] : out.terms_) c = -c;
    return out;
}

Poly2 Poly2::operator+(const Poly2& o) const {
    Poly2 out = *this;
    for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
    return out;
}

Poly2 Poly2::operator-(const Poly2& o) const { return *this + (-o); }

Poly2 Poly2::operator*(const Poly2& o) const {
    Poly2 out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

Poly2 Poly2::operator*(const Rational& a) const {
    if (a == 0) return Poly2();
    Poly2 out = *this;
    for (auto& [k, c] : out.terms_) c *= a;
    return out;
}

Poly2 operator*(const Rational& a, const Poly2& p) { return p * a; }

Poly2 Poly2::pow(unsigned e) const {
    Poly2 acc = Poly2::constant(1), base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Poly2 Poly2::transpose() const {
    Poly2 out;
    for (const auto& [k, c] : terms_) out.add_term(k.second, k.first, c);
    return out;
}

bool Poly2::is_symmetric() const { return *this == transpose(); }

Poly2 Poly2::derivative_u() const {
    Poly2 out;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) out.add_term(k.first - 1, k.second, c * Rational(k.first));
    return out;
}

Poly2 Poly2::derivative_v() const {
    Poly2 out;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) out.add_term(k.first, k.second - 1, c * Rational(k.second));
    return out;
}

Rational Poly2::operator()(const Rational& u, const Rational& v) const {
    // group by v-degree, Horner in v of Horner-in-u rows
    Rational acc = 0;
    int dv = degree_v();
    for (int j = dv; j >= 0; --j) {
        Rational row = 0;
        int du = degree_u();
        for (int i = du; i >= 0; --i) {
            row = row * u + coeff(i, j);
        }
        acc = acc * v + row;
    }
    return acc;
}

Poly Poly2::eval_u(const Rational& u) const {
    std::vector<Rational> out(std::max(0, degree_v() + 1), Rational(0));
    for (const auto& [k, c] : terms_) out[k.second] += c * pow_rat(u, k.first);
    return Poly(std::move(out));
}

Poly Poly2::eval_v(const Rational& v) const {
    std::vector<Rational> out(std::max(0, degree_u() + 1), Rational(0));
    for (const auto& [k, c] : terms_) out[k.first] += c * pow_rat(v, k.second);
    return Poly(std::move(out));
}

Poly Poly2::substitute_v_affine(const Rational& a, const Rational& b) const {
    Poly lin = Poly::linear(a, b);
    // Horner in v with Poly-in-u coefficients
    Poly acc;
    int dv = degree_v();
    for (int j = dv; j >= 0; --j) {
        std::vector<Rational> row(std::max(0, degree_u() + 1), Rational(0));
        for (const auto& [k, c] : terms_)
            if (k.second == j) row[k.first] = c;
        acc = acc * lin + Poly(std::move(row));
    }
    return acc;
}

RatFun Poly2::substitute_v_ratfun(const RatFun& f) const {
    int dv = degree_v();
    if (dv < 0) return RatFun();
    // sum_j row_j(u) N(u)^j D(u)^(dv-j) / D(u)^dv
    Poly numacc;
    std::vector<Poly> npow(dv + 1), dpow(dv + 1);
    npow[0] = Poly::constant(1);
    dpow[0] = Poly::constant(1);
    for (int j = 1; j <= dv; ++j) {
        npow[j] = npow[j - 1] * f.num();
        dpow[j] = dpow[j - 1] * f.den();
    }
    for (int j = 0; j <= dv; ++j) {
        std::vector<Rational> row(std::max(0, degree_u() + 1), Rational(0));
        for (const auto& [k, c] : terms_)
            if (k.second == j) row[k.first] = c;
        Poly rowp(std::move(row));
        if (rowp.is_zero()) continue;
        numacc = numacc + rowp * npow[j] * dpow[dv - j];
    }
    return RatFun(numacc, dpow[dv]);
}

Poly2 Poly2::shift(const Rational& du, const Rational& dv) const {
    // substitute u -> u + du then v -> v + dv via per-variable Horner
    // first: treat as polynomial in u with Poly2-in-v coefficients
    Poly2 acc;
    int DU = degree_u();
    Poly2 lin_u = Poly2::var_u() + Poly2::constant(du);
    for (int i = DU; i >= 0; --i) {
        Poly2 row;
        for (const auto& [k, c] : terms_)
            if (k.first == i) row.add_term(0, k.second, c);
        acc = acc * lin_u + row;
    }
    Poly2 acc2;
    int DV = acc.degree_v();
    Poly2 lin_v = Poly2::var_v() + Poly2::constant(dv);
    for (int j = DV; j >= 0; --j) {
        Poly2 row;
        for (const auto& [k, c] : acc.terms_)
            if (k.second == j) row.add_term(k.first, 0, c);
        acc2 = acc2 * lin_v + row;
    }
    return acc2;
}

Poly2 Poly2::mobius_both_cleared() const {
    int DU = degree_u(), DV = degree_v();
    Poly2 out;
    Poly2 um1 = Poly2::var_u() - Poly2::constant(1);
    Poly2 vm1 = Poly2::var_v() - Poly2::constant(1);
    // cache powers
    std::vector<Poly2> up(DU + 1), vp(DV + 1);
    up[0] = Poly2::constant(1);
    for (int i = 1; i <= DU; ++i) up[i] = up[i - 1] * um1;
    vp[0] = Poly2::constant(1);
    for (int j = 1; j <= DV; ++j) vp[j] = vp[j - 1] * vm1;
    for (const auto& [k, c] : terms_) {
        Poly2 term = Poly2::monomial(k.first, k.second, c);
        out = out + term * up[DU - k.first] * vp[DV - k.second];
    }
    return out;
}

std::string Poly2::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        Rational a = c;
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            if (sgn(c) < 0) a = -c;
        } else if (sgn(c) < 0) {
            os << "-";
            a = -c;
        }
        first = false;
        bool unit = (a == 1) && (k.first + k.second > 0);
        if (!unit) os << mc::to_string(a);
        if (k.first > 0) {
            if (!unit) os << "*";
            os << "u";
            if (k.first > 1) os << "^" << k.first;
            unit = false;
        }
        if (k.second > 0) {
            if (!unit || k.first > 0) os << "*";
            os << "v";
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

Poly2 div_exact(const Poly2& num, const Poly2& den) {
    if (den.is_zero()) fail(ErrorKind::ZeroPolynomial, "bivariate division by zero");
    // graded-lex leading term of the divisor
    auto grlex_less = [](const Poly2::Key& a, const Poly2::Key& b) {
        int ta = a.first + a.second, tb = b.first + b.second;
        if (ta != tb) return ta < tb;
        return a < b;
    };
    Poly2::Key dlead{-1, -1};
    for (const auto& [k, c] : den.terms())
        if (dlead.first < 0 || grlex_less(dlead, k)) dlead = k;
    Rational dcoef = den.coeff(dlead.first, dlead.second);

    Poly2 rem = num, quot;
    while (!rem.is_zero()) {
        Poly2::Key rlead{-1, -1};
        for (const auto& [k, c] : rem.terms())
            if (rlead.first < 0 || grlex_less(rlead, k)) rlead = k;
        if (rlead.first < dlead.first || rlead.second < dlead.second)
            fail(ErrorKind::Internal, "inexact bivariate division");
        Poly2 mono = Poly2::monomial(rlead.first - dlead.first, rlead.second - dlead.second,
                                     rem.coeff(rlead.first, rlead.second) / dcoef);
        quot = quot + mono;
        rem = rem - mono * den;
    }
    return quot;
}

}  // namespace mc
