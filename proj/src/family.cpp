#include "mc/family.hpp"

#include <array>

#include "mc/parallel.hpp"

namespace mc {

Integer binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Rational catalan_sigma0(int m, bool allow_zero) {
    if (m == 0 && allow_zero) return rat(-1, 2);
    if (m < 1) fail(ErrorKind::BadDimension, "sigma0 needs m >= 1");
    return Rational(binomial(2L * m - 2, m - 1)) / Rational(m);
}

Poly2 theta(int k) {
    if (k < 2) fail(ErrorKind::BadIndex, "theta needs k >= 2");
    Poly2 out;
    for (int j = 1; j <= k - 1; ++j)
        out = out + Poly2::monomial(j - 1, k - j - 1, Rational(static_cast<long>(j) * (k - j)));
    return out;
}

namespace {

Poly sigma_poly(int m) {
    std::vector<Rational> c(m, Rational(0));
    for (int j = 1; j <= m; ++j)
        c[j - 1] = Rational(j) / Rational(m) * Rational(binomial(2L * m - j - 1, m - 1));
    return Poly(std::move(c));
}

Poly2 closed_form_T(int m) {
    if (m == 2) return Poly2::constant(1);
    Poly2 acc;
    for (int k = m; k <= 2 * m - 2; ++k) {
        Rational c = Rational(binomial(2L * m - 1, k + 1)) * Rational(binomial(k - 2, m - 2));
        if (((m + k) & 1) != 0) c = -c;
        acc = acc + Poly2::monomial(2 * m - k - 2, 2 * m - k - 2, c) * theta(k);
    }
    return acc * (Rational(1) / Rational(m - 1));
}

}  // namespace

Rational FamilyBasis::c_T() const { return Rational(2 * m - 1) * sigma0; }

FamilyBasis build_basis(int m) {
    if (m < 2) fail(ErrorKind::BadDimension, "basis needs m >= 2");
    FamilyBasis fb;
    fb.m = m;
    fb.Sigma = sigma_poly(m);
    fb.sigma0 = fb.Sigma(0);
    Poly tm1({-1, 1});
    fb.E = tm1 * fb.Sigma;
    Poly fnum = Poly({-2, 1}) * Poly::monomial(2 * m - 1, 1);
    fb.F = RatFun(fnum, tm1.pow(m));
    fb.G = RatFun::from_poly(fb.E) - fb.F * rat(1, 2);
    fb.Lambda = Poly({2 * (2 * m - 1), -2 * (2 * m - 1), m});
    fb.D = tm1.pow(m) * fb.E - fnum;
    fb.W = Poly::linear(m - 1, -(2 * m - 1)) * fb.Sigma + Poly::constant(Rational(2 * m - 1) * fb.sigma0);
    fb.S = RatFun::from_poly(Poly({2 * (2 * m - 1), -2 * (2 * m - 1), m - 1})) * fb.G +
           RatFun::from_poly(Poly({2, -2, 1}) * (Rational(2 * m - 1) * fb.sigma0));
    fb.T = closed_form_T(m);
    fb.P = build_P(m);

    // structural invariants
    if (fb.Sigma.degree() != m - 1) fail(ErrorKind::Internal, "sigma degree mismatch");
    for (int i = 0; i <= fb.Sigma.degree(); ++i)
        if (sgn(fb.Sigma.coeff(i)) <= 0) fail(ErrorKind::Internal, "sigma coefficient not positive");
    if (m > 2 && fb.T.total_degree() != 3 * (m - 2)) fail(ErrorKind::Internal, "T degree mismatch");
    if (!fb.T.is_symmetric()) fail(ErrorKind::Internal, "T not symmetric");
    return fb;
}

RatFun build_P(int m) {
    if (m < 2) fail(ErrorKind::BadDimension, "P needs m >= 2");
    Poly tm1({-1, 1});
    Poly fnum = Poly({-2, 1}) * Poly::monomial(2 * m - 1, 1);
    Poly sig = sigma_poly(m);
    Rational s0 = sig(0);
    RatFun G = RatFun::from_poly(tm1 * sig) - RatFun(fnum, tm1.pow(m)) * rat(1, 2);
    RatFun one = RatFun::constant(1);
    RatFun lhs = rat(2) * (rat(2) - Rational(1) / Rational(m)) * RatFun::from_poly(tm1) *
                     (one + RatFun::constant(s0) / G) -
                 RatFun::from_poly(Poly::monomial(2, 1));
    RatFun P = lhs / RatFun::from_poly(Poly({0, -2, 1}));  // u(u-2) = u^2 - 2u
    // removable singularities at 0 and 2 must cancel in reduced form
    if (P.den()(0) == 0 || P.den()(2) == 0) fail(ErrorKind::Internal, "P kept a pole at 0 or 2");
    return P;
}

Poly2 family_phi() { return Poly2::var_u() + Poly2::var_v() - Poly2::constant(2); }

Poly2 family_f(int m) {
    return Rational(m) * Poly2::var_u() * Poly2::var_v() - Rational(2 * m - 1) * family_phi();
}

namespace {

// separable product p(u) * q(v)
Poly2 sep(const Poly& pu, const Poly& qv) { return Poly2::from_poly_u(pu) * Poly2::from_poly_v(qv); }

}  // namespace

Poly2 family_alpha(const FamilyBasis& fb) {
    int m = fb.m;
    Poly tm1({-1, 1});
    Poly fnum = Poly({-2, 1}) * Poly::monomial(2 * m - 1, 1);
    return sep(tm1.pow(m) * fb.E, fnum) - sep(fnum, tm1.pow(m) * fb.E);
}

Poly2 family_beta(const FamilyBasis& fb) {
    int m = fb.m;
    Poly tm1({-1, 1});
    Poly fnum = Poly({-2, 1}) * Poly::monomial(2 * m - 1, 1);
    return sep(fnum, tm1.pow(m)) - sep(tm1.pow(m), fnum);
}

std::array<Poly, 3> coefficient_vector(const FamilyBasis& fb) {
    Poly tm1({-1, 1});
    Poly fnum = Poly({-2, 1}) * Poly::monomial(2 * fb.m - 1, 1);
    return {tm1.pow(fb.m), tm1.pow(fb.m) * fb.E, fnum};
}

Poly2 family_T_from_quotient(const FamilyBasis& fb) {
    int m = fb.m;
    Poly tm1({-1, 1});
    Poly fnum = Poly({-2, 1}) * Poly::monomial(2 * m - 1, 1);
    Poly Edot = fb.E.derivative();
    Poly lam_v = fb.Lambda;

    // (u-1)^m (v-1)^m Pi(u,v) expanded into separable blocks:
    Poly2 pi = sep(tm1.pow(m), tm1 * fnum * Edot)            // F(v) Edot(v) block
               - sep(fnum, tm1.pow(m + 1) * Edot)            // -F(u) Edot(v)
               - sep(tm1.pow(m), Poly::monomial(2 * m - 2, 1) * lam_v * fb.E)  // -E(v) Fdot(v)
               + sep(tm1.pow(m) * fb.E, Poly::monomial(2 * m - 2, 1) * lam_v); // +E(u) Fdot(v)
    Poly2 lhs = pi - pi.transpose();

    Poly2 vmu = Poly2::var_v() - Poly2::var_u();
    Poly2 hyp = Poly2::var_u() * Poly2::var_v() - Poly2::var_u() - Poly2::var_v();
    Poly2 q = div_exact(lhs, hyp);
    q = div_exact(q, vmu);
    q = div_exact(q, vmu);
    q = div_exact(q, vmu);
    return q * rat(1, 2);
}

bool IdentityReport::all_pass() const {
    for (const auto& e : entries)
        if (!e.pass) return false;
    return true;
}

namespace {

struct Check {
    std::string name, anchor;
    std::function<std::optional<std::string>()> run;  // witness on failure
};

std::optional<std::string> expect_ratfun_eq(const RatFun& a, const RatFun& b) {
    if (a == b) return std::nullopt;
    return "lhs = " + a.to_string() + " ; rhs = " + b.to_string();
}

std::optional<std::string> expect_poly_eq(const Poly& a, const Poly& b) {
    if (a == b) return std::nullopt;
    return "lhs = " + a.to_string() + " ; rhs = " + b.to_string();
}

std::optional<std::string> expect_poly2_eq(const Poly2& a, const Poly2& b) {
    if (a == b) return std::nullopt;
    return "lhs = " + a.to_string() + " ; rhs = " + b.to_string();
}

std::optional<std::string> expect_rat_eq(const Rational& a, const Rational& b, const char* what) {
    if (a == b) return std::nullopt;
    return std::string(what) + ": " + to_string(a) + " != " + to_string(b);
}

RatFun G_of(int m) {
    Poly tm1({-1, 1});
    Poly fnum = Poly({-2, 1}) * Poly::monomial(2 * m - 1, 1);
    return RatFun::from_poly(tm1 * sigma_poly(m)) - RatFun(fnum, tm1.pow(m)) * rat(1, 2);
}

}  // namespace

IdentityReport verify_identities_on(const FamilyBasis& fb) {
    const int m = fb.m;
    const Rational s0 = fb.sigma0;
    const Rational cT = fb.c_T();
    const Poly t_poly = Poly::identity();
    const Poly tm1({-1, 1});
    const Poly tm2({-2, 1});
    const RatFun E_rf = RatFun::from_poly(fb.E);
    const RatFun lam_rf = RatFun::from_poly(fb.Lambda);
    const RatFun mover = RatFun::from_poly(t_poly * tm1 * tm2);  // t(t-1)(t-2)

    std::vector<Check> checks;

    checks.push_back({"quotient-derivative", "basis/ef-dq", [&]() {
        RatFun lhs = (E_rf / fb.F).derivative();
        RatFun rhs = RatFun(tm1.pow(m) * Rational(-binomial(2L * m, m)), tm2 * tm2 * Poly::monomial(2 * m, 1));
        return expect_ratfun_eq(lhs, rhs);
    }});

    checks.push_back({"f-ode", "basis/f-ode", [&]() {
        return expect_ratfun_eq(mover * fb.F.derivative(), lam_rf * fb.F);
    }});

    checks.push_back({"e-ode", "basis/e-ode", [&]() {
        RatFun rhs = lam_rf * E_rf - RatFun::from_poly(tm1 * (Rational(2 * (2 * m - 1)) * s0));
        return expect_ratfun_eq(mover * RatFun::from_poly(fb.E.derivative()), rhs);
    }});

    checks.push_back({"sigma-at-zero", "basis/sigma0", [&]() -> std::optional<std::string> {
        if (auto w = expect_rat_eq(fb.Sigma(0), catalan_sigma0(m), "Sigma(0)")) return w;
        if (auto w = expect_rat_eq(fb.Sigma.derivative()(0), catalan_sigma0(m), "dSigma(0)")) return w;
        if (auto w = expect_rat_eq(fb.E(0), -s0, "E(0)")) return w;
        if (auto w = expect_rat_eq(fb.E.derivative()(0), rat(0), "dE(0)")) return w;
        return std::nullopt;
    }});

    checks.push_back({"derivative-ratio-convexity", "basis/convexity", [&]() {
        RatFun lhs = (RatFun::from_poly(fb.E.derivative()) / fb.F.derivative()).derivative();
        RatFun rhs = RatFun(tm1.pow(m) * (Rational(m) * Rational(binomial(2L * m, m))),
                            fb.Lambda * fb.Lambda * Poly::monomial(2 * m - 2, 1));
        return expect_ratfun_eq(lhs, rhs);
    }});

    checks.push_back({"lambda-positive", "basis/lambda", [&]() -> std::optional<std::string> {
        Rational disc = pow_rat(fb.Lambda.coeff(1), 2) - 4 * fb.Lambda.coeff(2) * fb.Lambda.coeff(0);
        if (sgn(disc) < 0 && sgn(fb.Lambda.coeff(2)) > 0) return std::nullopt;
        return "discriminant " + to_string(disc);
    }});

    checks.push_back({"mobius-F", "mobius/F", [&]() {
        return expect_ratfun_eq(fb.F.mobius_substitute(), -fb.F);
    }});

    checks.push_back({"mobius-E", "mobius/E", [&]() {
        return expect_ratfun_eq(E_rf.mobius_substitute(), E_rf - fb.F);
    }});

    checks.push_back({"mobius-G", "mobius/G", [&]() {
        return expect_ratfun_eq(fb.G.mobius_substitute(), fb.G);
    }});

    checks.push_back({"mobius-dG-dF-ratio", "mobius/dG-dF", [&]() {
        RatFun ratio = fb.G.derivative() / fb.F.derivative();
        return expect_ratfun_eq(ratio.mobius_substitute(), -ratio);
    }});

    checks.push_back({"g-ode", "basis/g-ode", [&]() {
        RatFun rhs = lam_rf * fb.G - RatFun::from_poly(tm1 * (Rational(2 * (2 * m - 1)) * s0));
        return expect_ratfun_eq(mover * fb.G.derivative(), rhs);
    }});

    checks.push_back({"g-values", "basis/g-values", [&]() -> std::optional<std::string> {
        if (auto w = expect_rat_eq(fb.G(rat(0)), -s0, "G(0)")) return w;
        if (auto w = expect_rat_eq(fb.G.derivative()(rat(0)), rat(0), "dG(0)")) return w;
        Rational gpp0 = fb.G.derivative().derivative()(rat(0));
        if (auto w = expect_rat_eq(Rational(2 * m - 3) * gpp0, Rational(m) * s0, "(2m-3)G''(0)")) return w;
        if (auto w = expect_rat_eq(fb.G(rat(2)), Rational(2 * m - 1) * s0, "G(2)")) return w;
        if (auto w = expect_rat_eq(fb.G.derivative()(rat(2)), rat(0), "dG(2)")) return w;
        return std::nullopt;
    }});

    checks.push_back({"coefficient-cross-product", "qfun/coefficient-vector", [&]() -> std::optional<std::string> {
        auto r = coefficient_vector(fb);
        // components of r(u) x r(v)
        Poly2 c0 = sep(r[1], r[2]) - sep(r[2], r[1]);
        Poly2 c1 = sep(r[2], r[0]) - sep(r[0], r[2]);
        Poly2 c2 = sep(r[0], r[1]) - sep(r[1], r[0]);
        Poly2 a = family_alpha(fb), b = family_beta(fb);
        if (auto w = expect_poly2_eq(c0, a)) return w;
        if (auto w = expect_poly2_eq(c1, b)) return w;
        Poly tm1m = tm1.pow(m);
        Poly2 cexp = sep(tm1m, tm1m * fb.E) - sep(tm1m * fb.E, tm1m);
        return expect_poly2_eq(c2, cexp);
    }});

    checks.push_back({"coefficients-vanish-at-endpoints", "qfun/vanish-at-endpoints", [&]() -> std::optional<std::string> {
        // alpha + beta E(u) + [(v-1)^m (E(v)-E(u))] (u-2) u^(2m-1) == 0
        Poly2 a = family_alpha(fb), b = family_beta(fb);
        Poly fnum = tm2 * Poly::monomial(2 * m - 1, 1);
        Poly2 cu = sep(fnum, tm1.pow(m) * fb.E) - sep(fnum * fb.E, tm1.pow(m));
        Poly2 lhs = a + b * Poly2::from_poly_u(fb.E) + cu;
        if (!lhs.is_zero()) return std::optional<std::string>("nonzero residue at lower endpoint");
        Poly2 cv = sep(tm1.pow(m), fnum) * Poly2::from_poly_v(fb.E) * Rational(-1) +
                   sep(tm1.pow(m) * fb.E, fnum);
        Poly2 lhs2 = a + b * Poly2::from_poly_v(fb.E) - cv;
        if (!lhs2.is_zero()) return std::optional<std::string>("nonzero residue at upper endpoint");
        return std::nullopt;
    }});

    checks.push_back({"t-quotient-construction", "T/factorization", [&]() {
        return expect_poly2_eq(family_T_from_quotient(fb), fb.T);
    }});

    checks.push_back({"t-block-decomposition", "T/fa-decomposition", [&]() {
        Poly2 vmu = Poly2::var_v() - Poly2::var_u();
        Poly2 uu = Poly2::from_poly_u(Poly({0, -2, 1}));  // u(u-2)
        Poly2 vv = Poly2::from_poly_v(Poly({0, -2, 1}));
        Poly2 lhs = vmu.pow(3) * uu * vv * fb.T;
        Poly2 rhs = family_f(m) * family_alpha(fb) + cT * family_beta(fb) * family_phi();
        return expect_poly2_eq(lhs, rhs);
    }});

    checks.push_back({"t-on-upper-boundary", "T/on-v-equals-1", [&]() {
        Poly lhs = Poly({0, -2, 1}) * fb.T.eval_v(rat(1));
        Poly rhs = tm1.pow(m - 2) * fb.W;
        return expect_poly_eq(lhs, rhs);
    }});

    checks.push_back({"t-on-hyperbola", "T/on-hyperbola", [&]() {
        RatFun tuu = fb.T.substitute_v_ratfun(RatFun(Poly::identity(), tm1));
        RatFun lhs = RatFun::from_poly((Poly::identity() * tm2).pow(5)) * tuu;
        RatFun rhs = rat(2) * RatFun::from_poly(tm1.pow(4)) * fb.F * fb.S;
        return expect_ratfun_eq(lhs, rhs);
    }});

    checks.push_back({"t-on-lower-boundary", "T/at-u-zero", [&]() {
        Poly lhs = fb.T.eval_u(rat(0)) * rat(2);
        Rational c = Rational(m) * s0;
        if ((m & 1) != 0) c = -c;
        Poly rhs = (2 * m - 4 >= 0) ? Poly::monomial(2 * m - 4, c) : Poly::constant(c);
        return expect_poly_eq(lhs, rhs);
    }});

    checks.push_back({"e-tail-expansion", "basis/e-tail", [&]() -> std::optional<std::string> {
        Poly fnum = tm2 * Poly::monomial(2 * m - 1, 1);
        if (auto w = expect_poly_eq(tm1.pow(m) * fb.E, fnum + fb.D)) return w;
        Poly rhs;
        for (int j = 0; j <= m - 1; ++j) {
            Rational c = Rational(binomial(2L * m - 1, j)) * Rational(binomial(2L * m - j - 2, m - 1));
            if (((m + j) & 1) != 0) c = -c;
            rhs = rhs + Poly::monomial(j, c);
        }
        return expect_poly_eq(fb.D - tm1.pow(m) * cT, tm2 * rhs);
    }});

    checks.push_back({"e-shift-expansion", "basis/e-shift", [&]() {
        Poly lhs = fb.E.shift(1);
        Poly rhs;
        for (int j = 1; j <= m; ++j) {
            Rational c = rat(2) * Rational(j) / Rational(m + j) * Rational(binomial(2L * m - 1, m - j));
            rhs = rhs + Poly::monomial(j, c);
        }
        return expect_poly_eq(lhs, rhs);
    }});

    checks.push_back({"el-shift-expansion", "T/el-shift", [&]() {
        Poly2 L = Poly2::from_poly_u(fb.E) * family_f(m) - cT * family_phi();
        Poly2 lhs = L.shift(1, 1);
        Poly2 rhs;
        for (int j = 1; j <= m; ++j) {
            Rational g = Rational(binomial(2L * m - 1, m - j));
            Poly2 factor = Rational(j) * Poly2::var_v() + Poly2::constant(Rational(1 - j));
            rhs = rhs + Poly2::monomial(j - 1, 0, g) * factor;
        }
        rhs = (Poly2::from_poly_u(Poly({-1, 0, 1}))) * rhs;  // (u^2 - 1)
        return expect_poly2_eq(lhs, rhs);
    }});

    checks.push_back({"t-shift-expansion", "T/shift-basis", [&]() {
        Poly2 lhs = fb.T.shift(1, 1);
        Poly2 rhs;
        for (int j = 0; j <= m - 2; ++j) {
            for (int k = m - j; k <= 2 * m - j - 2; ++k) {
                Rational c = Rational(2 * m - 1) * Rational(m - j - 1) * Rational(k - m + j + 1);
                c /= Rational(m - 1) * Rational(static_cast<long>(k) * k - 1);
                c *= Rational(binomial(2L * m - 2, j)) * Rational(binomial(2L * m - 2, k + j));
                if (c == 0) continue;
                rhs = rhs + Poly2::monomial(j, j, c) * theta(k);
            }
        }
        return expect_poly2_eq(lhs, rhs);
    }});

    checks.push_back({"t-mobius-invariance", "T/mobius", [&]() {
        return expect_poly2_eq(fb.T.mobius_both_cleared(), fb.T);
    }});

    checks.push_back({"p-ode", "P/ode", [&]() {
        RatFun u_rf = RatFun::from_poly(Poly::identity());
        RatFun lhs = RatFun::from_poly(Poly::identity() * tm1) * fb.P.derivative();
        RatFun rhs = Rational(m) * u_rf * fb.P * fb.P +
                     Rational(m - 1) * RatFun::from_poly(tm2) * fb.P - u_rf;
        return expect_ratfun_eq(lhs, rhs);
    }});

    checks.push_back({"p-values", "P/values", [&]() -> std::optional<std::string> {
        if (auto w = expect_rat_eq(fb.P(rat(0)), rat(0), "P(0)")) return w;
        if (auto w = expect_rat_eq(fb.P(rat(2)), rat(0), "P(2)")) return w;
        if (auto w = expect_rat_eq(fb.P(rat(1)), rat(1), "P(1)")) return w;
        if (auto w = expect_rat_eq(fb.P.derivative()(rat(0)), Rational(1) / Rational(3 - 2 * m), "P'(0)")) return w;
        if (auto w = expect_rat_eq(fb.P.derivative()(rat(1)), Rational(2 * (1 - m)) / Rational(m), "P'(1)")) return w;
        return std::nullopt;
    }});

    checks.push_back({"p-mobius-antisymmetry", "P/mobius", [&]() {
        return expect_ratfun_eq(fb.P.mobius_substitute(), -fb.P);
    }});

    checks.push_back({"sigma0-recursion", "seq/sigma0-recursion", [&]() -> std::optional<std::string> {
        if (auto w = expect_rat_eq(catalan_sigma0(1), rat(1), "sigma0(1)")) return w;
        for (int k = 2; k <= m; ++k) {
            Rational lhs = catalan_sigma0(k);
            Rational rhs = (rat(4) - Rational(6) / Rational(k)) * catalan_sigma0(k - 1);
            if (auto w = expect_rat_eq(lhs, rhs, "sigma0 recursion")) return w;
        }
        return std::nullopt;
    }});

    checks.push_back({"ratio-recursion", "seq/ratio-recursion", [&]() -> std::optional<std::string> {
        RatFun sigma_sub = RatFun(Poly::monomial(2, 1), Poly({1, -1}));  // t^2/(1-t)
        RatFun R1 = -G_of(1) / catalan_sigma0(1);
        if (auto w = expect_ratfun_eq(R1, RatFun::constant(1) + sigma_sub * rat(1, 2))) return w;
        RatFun Rm = -G_of(m) / RatFun::constant(catalan_sigma0(m));
        RatFun Rm1 = -G_of(m - 1) / RatFun::constant(catalan_sigma0(m - 1));
        RatFun rhs = RatFun::constant(1) - Rational(m) / Rational(4 * m - 6) * sigma_sub * Rm1;
        return expect_ratfun_eq(Rm, rhs);
    }});

    checks.push_back({"ratio-series", "seq/ratio-series", [&]() {
        RatFun sigma_sub = RatFun(Poly::monomial(2, 1), Poly({1, -1}));
        RatFun lhs = -G_of(m);
        RatFun rhs;
        RatFun spow = RatFun::constant(1);
        for (int j = 0; j <= m; ++j) {
            Rational c = catalan_sigma0(m - j, true);
            if ((j & 1) != 0) c = -c;
            rhs = rhs + RatFun::constant(c) * spow;
            spow = spow * sigma_sub;
        }
        return expect_ratfun_eq(lhs, rhs);
    }});

    checks.push_back({"series-ode", "seq/series-ode", [&]() {
        std::vector<Rational> c(m + 1);
        for (int j = 0; j <= m; ++j) {
            c[j] = catalan_sigma0(j, true);
            if ((j & 1) != 0) c[j] = -c[j];
        }
        Poly psi(std::move(c));
        Poly lhs = Poly({rat(1, 2), 2}) * psi.derivative();
        Rational tail = Rational(2 * m - 1) * catalan_sigma0(m);
        if ((m & 1) != 0) tail = -tail;
        Poly rhs = psi + Poly::monomial(m, tail);
        return expect_poly_eq(lhs, rhs);
    }});

    checks.push_back({"series-limit-taylor", "seq/series-limit", [&]() -> std::optional<std::string> {
        // Taylor coefficients of -(1/2) (1+4r)^(1/2)
        Rational binom_half = 1;  // C(1/2, j) accumulated
        for (int j = 0; j <= m; ++j) {
            Rational coeff = rat(-1, 2) * binom_half * pow_rat(rat(4), j);
            Rational expect = catalan_sigma0(j, true);
            if ((j & 1) != 0) expect = -expect;
            if (auto w = expect_rat_eq(coeff, expect, "series coefficient")) return w;
            binom_half *= (rat(1, 2) - Rational(j)) / Rational(j + 1);
        }
        return std::nullopt;
    }});

    checks.push_back({"normalized-sequence-decreasing", "seq/am-decreasing", [&]() -> std::optional<std::string> {
        // a_k = k^(3/2) 4^(1-k) sigma0(k): compare squares
        int top = std::max(m, 12);
        Rational prev;
        for (int k = 1; k <= top; ++k) {
            Rational ak2 = pow_rat(Rational(k), 3) * pow_rat(rat(1, 4), 2 * (k - 1)) *
                           pow_rat(catalan_sigma0(k), 2);
            if (k > 1 && !(ak2 < prev))
                return std::optional<std::string>("not decreasing at k=" + std::to_string(k));
            prev = ak2;
        }
        return std::nullopt;
    }});

    checks.push_back({"t-degree", "T/degree", [&]() -> std::optional<std::string> {
        if (m == 2) {
            if (fb.T == Poly2::constant(1)) return std::nullopt;
            return std::optional<std::string>("T != 1 for m = 2");
        }
        if (fb.T.total_degree() != 3 * (m - 2))
            return std::optional<std::string>("deg T = " + std::to_string(fb.T.total_degree()));
        if (!fb.T.is_symmetric()) return std::optional<std::string>("T not symmetric");
        return std::nullopt;
    }});

    IdentityReport report;
    report.m = m;
    report.entries.resize(checks.size());
    par::parallel_for(static_cast<long>(checks.size()), [&](long i) {
        IdentityEntry e;
        e.name = checks[i].name;
        e.anchor = checks[i].anchor;
        try {
            auto w = checks[i].run();
            e.pass = !w.has_value();
            if (w) e.witness = *w;
        } catch (const std::exception& ex) {
            e.pass = false;
            e.witness = std::string("exception: ") + ex.what();
        }
        report.entries[i] = std::move(e);
    });
    return report;
}

IdentityReport verify_identities(int m, int m_cap) {
    if (m < 2 || m > m_cap)
        fail(ErrorKind::BadDimension, "identity suite supports 2 <= m <= " + std::to_string(m_cap));
    return verify_identities_on(build_basis(m));
}

}  // namespace mc
