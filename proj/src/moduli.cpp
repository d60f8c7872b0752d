#include "mc/moduli.hpp"

#include <algorithm>

namespace mc {

namespace {

bool value_eq_rat(const Value& v, const Rational& r) { return value_compare(v, r) == 0; }

bool is_one(const Value& v) { return value_eq_rat(v, rat(1)); }

// strict u < v assumed; a rational strictly between the two values
Rational interior_rational(const Value& u, const Value& v) {
    AlgebraicNumber a = value_as_algebraic(u), b = value_as_algebraic(v);
    while (!(a.hi() < b.lo())) {
        a = a.refined(a.width() / 2);
        b = b.refined(b.width() / 2);
        if (a.is_point() && b.is_point() && !(a.lo() < b.lo()))
            fail(ErrorKind::DegenerateInterval, "interval endpoints not ordered");
    }
    return simplest_rational_between(a.hi(), b.lo());
}

int sign_of_ratfun_at(const RatFun& f, const Value& v) {
    int sd = sign_at_value(f.den(), v);
    if (sd == 0) fail(ErrorKind::PoleAtPoint, "pole while evaluating sign");
    return sign_at_value(f.num(), v) * sd;
}

Value eval_ratfun_value(const RatFun& f, const Value& v) { return f.eval_value(v); }

std::pair<Rational, Rational> interval_mul(const std::pair<Rational, Rational>& a,
                                           const std::pair<Rational, Rational>& b) {
    Rational p1 = a.first * b.first, p2 = a.first * b.second;
    Rational p3 = a.second * b.first, p4 = a.second * b.second;
    return {std::min(std::min(p1, p2), std::min(p3, p4)), std::max(std::max(p1, p2), std::max(p3, p4))};
}

std::pair<Rational, Rational> eval_interval2(const Poly2& P, const Rational& ulo, const Rational& uhi,
                                             const Rational& vlo, const Rational& vhi) {
    // Horner in v over interval rows in u
    int dv = P.degree_v();
    std::pair<Rational, Rational> acc{0, 0};
    for (int j = dv; j >= 0; --j) {
        std::vector<Rational> row(std::max(0, P.degree_u() + 1), Rational(0));
        for (const auto& [k, c] : P.terms())
            if (k.second == j) row[k.first] = c;
        auto rowiv = Poly(std::move(row)).eval_interval(ulo, uhi);
        acc = interval_mul(acc, {vlo, vhi});
        acc.first += rowiv.first;
        acc.second += rowiv.second;
    }
    return acc;
}

// Candidate polynomial R(s) = Res_y(pv(y), Res_t(pu(t), s*D(t,y) - N(t,y))).
Poly joint_candidates(const Poly2& N, const Poly2& D, const Poly& pu, const Poly& pv) {
    const int DT = std::max(N.degree_u(), D.degree_u());
    const int DYB = std::max(1, pu.degree() * std::max({N.degree_v(), D.degree_v(), 0}));
    const int DSB = pu.degree() * pv.degree();
    if ((static_cast<long>(DSB) + 1) * (DYB + 1) > 40000)
        fail(ErrorKind::AmbiguousNumeric, "joint certification budget exceeded");

    // top t-coefficients as polynomials in y
    auto top_in_y = [&](const Poly2& P) {
        std::vector<Rational> c(std::max(0, P.degree_v() + 1), Rational(0));
        for (const auto& [k, q] : P.terms())
            if (k.first == DT) c[k.second] = q;
        return Poly(std::move(c));
    };
    Poly n_top = top_in_y(N), d_top = top_in_y(D);

    auto inner_res_at = [&](const Rational& s, const Rational& y) -> std::optional<Rational> {
        Rational lead = s * d_top(y) - n_top(y);
        if (lead == 0) return std::nullopt;  // t-degree would drop
        Poly h = D.eval_v(y) * s - N.eval_v(y);
        return resultant(pu, h);
    };

    auto lagrange = [](const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
        Poly acc;
        for (size_t i = 0; i < xs.size(); ++i) {
            Poly basis = Poly::constant(1);
            Rational den = 1;
            for (size_t j = 0; j < xs.size(); ++j) {
                if (i == j) continue;
                basis = basis * Poly({-xs[j], 1});
                den *= xs[i] - xs[j];
            }
            acc = acc + basis * (ys[i] / den);
        }
        return acc;
    };

    // R1(s_i, .) interpolated in y, then Res_y against pv; keep only samples
    // where the y-degree attains the generic maximum.
    struct Sample {
        Rational s;
        Poly r1;  // in y
        Rational val;
    };
    std::vector<Sample> samples;
    int generic_deg = -2;
    long sc = 0;
    int attempts = 0;
    while (static_cast<int>(samples.size()) < DSB + 1) {
        if (++attempts > 20 * (DSB + 2))
            fail(ErrorKind::AmbiguousNumeric, "joint certification could not stabilize");
        Rational s(sc);
        sc = sc > 0 ? -sc : -sc + 1;
        std::vector<Rational> ys, vals;
        long yc = 0;
        int ytries = 0;
        bool ok = true;
        while (static_cast<int>(ys.size()) < DYB + 1) {
            if (++ytries > 20 * (DYB + 2)) {
                ok = false;
                break;
            }
            Rational y(yc);
            yc = yc > 0 ? -yc : -yc + 1;
            auto v = inner_res_at(s, y);
            if (!v) continue;
            ys.push_back(y);
            vals.push_back(*v);
        }
        if (!ok) continue;
        Poly r1 = lagrange(ys, vals);
        if (r1.degree() > generic_deg) {
            generic_deg = r1.degree();
            // discard stale lower-degree samples
            std::vector<Sample> keep;
            for (auto& smp : samples)
                if (smp.r1.degree() == generic_deg) keep.push_back(smp);
            samples = std::move(keep);
        }
        if (r1.degree() < generic_deg) continue;
        samples.push_back({s, r1, resultant(pv, r1)});
    }
    std::vector<Rational> xs, ys;
    for (auto& smp : samples) {
        xs.push_back(smp.s);
        ys.push_back(smp.val);
    }
    return lagrange(xs, ys);
}

// N(t) with Res_s(pbeta(s), H2(t, s)) at each sample, interpolated in t.
// Samples where the s-degree of the section drops below the generic degree
// are discarded.
Poly conjugate_candidates(const Poly2& H2, const Poly& pbeta) {
    const int DB = std::max(1, pbeta.degree() * std::max(H2.degree_u(), 1));
    struct Sample {
        Rational t;
        int sec_deg;
        Rational val;
    };
    std::vector<Sample> samples;
    int generic_deg = -2;
    long tc = 0;
    int attempts = 0;
    while (static_cast<int>(samples.size()) < DB + 1) {
        if (++attempts > 20 * (DB + 2))
            fail(ErrorKind::AmbiguousNumeric, "candidate interpolation could not stabilize");
        Rational t(tc);
        tc = tc > 0 ? -tc : -tc + 1;
        Poly section = H2.eval_u(t);  // polynomial in s
        int d = section.degree();
        if (d > generic_deg) {
            generic_deg = d;
            std::vector<Sample> keep;
            for (auto& s : samples)
                if (s.sec_deg == generic_deg) keep.push_back(s);
            samples = std::move(keep);
        }
        if (d < generic_deg) continue;
        samples.push_back({t, d, resultant(pbeta, section)});
    }
    Poly acc;
    for (size_t i = 0; i < samples.size(); ++i) {
        Poly basis = Poly::constant(1);
        Rational den = 1;
        for (size_t j = 0; j < samples.size(); ++j) {
            if (i == j) continue;
            basis = basis * Poly({-samples[j].t, 1});
            den *= samples[i].t - samples[j].t;
        }
        acc = acc + basis * (samples[i].val / den);
    }
    return acc;
}

// Attempts to certify v = a*u + b for rationals (a, b) recovered from the
// projection (v - u)/(u + v - 2); exact verification before use, so a failed
// guess is harmless. Covers every point produced by the curve pipeline
// (whose projection values are rational by construction).
std::optional<std::pair<Rational, Rational>> affine_link(const AlgebraicNumber& u,
                                                         const AlgebraicNumber& v) {
    AlgebraicNumber ur = u.refined(pow_rat(rat(1, 10), 24));
    AlgebraicNumber vr = v.refined(pow_rat(rat(1, 10), 24));
    // q enclosure; the denominator u + v - 2 must stay sign-definite
    Rational dlo = ur.lo() + vr.lo() - 2, dhi = ur.hi() + vr.hi() - 2;
    if (sgn(dlo) * sgn(dhi) <= 0) return std::nullopt;
    Rational nlo = vr.lo() - ur.hi(), nhi = vr.hi() - ur.lo();
    Rational c1 = nlo / dlo, c2 = nlo / dhi, c3 = nhi / dlo, c4 = nhi / dhi;
    Rational qlo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rational qhi = std::max(std::max(c1, c2), std::max(c3, c4));
    if (!(qlo < qhi)) return std::nullopt;
    Rational q = simplest_rational_between(qlo, qhi);
    if (q.get_den() > 1000000 || q == 1) return std::nullopt;
    Rational a = (1 + q) / (1 - q), b = -2 * q / (1 - q);
    AlgebraicNumber expect = u.scaled(a).shifted(b);
    if (compare(v, expect) != 0) return std::nullopt;
    return std::make_pair(a, b);
}

}  // namespace

int sign_poly2_at_values(const Poly2& T, const Value& u, const Value& v) {
    if (auto ru = value_rational(u)) {
        Poly pv = T.eval_u(*ru);
        if (pv.is_zero()) return 0;
        return sign_at_value(pv, v);
    }
    if (auto rv = value_rational(v)) {
        Poly pu = T.eval_v(*rv);
        if (pu.is_zero()) return 0;
        return sign_at_value(pu, u);
    }
    AlgebraicNumber a = std::get<AlgebraicNumber>(u), b = std::get<AlgebraicNumber>(v);
    // interval-only fast path for values away from zero
    for (int round = 0; round < 48; ++round) {
        auto w = eval_interval2(T, a.lo(), a.hi(), b.lo(), b.hi());
        if (sgn(w.first) > 0) return 1;
        if (sgn(w.second) < 0) return -1;
        a = a.refined(a.width() / 2);
        b = b.refined(b.width() / 2);
    }
    // exact-zero certification through a rational affine linkage when present
    if (auto link = affine_link(a, b)) {
        Poly section = T.substitute_v_affine(link->first, link->second);
        if (section.is_zero()) return 0;
        return sign_at(section, a);
    }
    Poly R = joint_candidates(T, Poly2::constant(1), a.defining(), b.defining());
    if (R.is_zero()) fail(ErrorKind::AmbiguousNumeric, "degenerate candidate polynomial");
    Poly sf = square_free_part(R).primitive().first;
    SturmChain chain(sf);
    for (long guard = 0; guard < refinement_budget(); ++guard) {
        auto w = eval_interval2(T, a.lo(), a.hi(), b.lo(), b.hi());
        if (sgn(w.first) > 0) return 1;
        if (sgn(w.second) < 0) return -1;
        if (sf(0) == 0) {
            // 0 is a candidate; if it is the only candidate inside the
            // enclosure, the value is exactly 0.
            Rational pad = (w.second - w.first) / 4 + pow_rat(rat(1, 10), 9);
            Rational lo = w.first - pad, hi = w.second + pad;
            while (sf(lo) == 0 || sf(hi) == 0) {
                lo -= pad;
                hi += pad;
            }
            if (chain.count_half_open(lo, hi) == 1) return 0;
        }
        a = a.refined(a.width() / 2);
        b = b.refined(b.width() / 2);
    }
    fail(ErrorKind::BudgetExceeded, "joint sign refinement budget exhausted");
}

Value eval_poly2_ratio(const Poly2& N, const Poly2& D, const Value& u, const Value& v) {
    if (auto ru = value_rational(u)) {
        if (auto rv = value_rational(v)) {
            Rational den = D(*ru, *rv);
            if (den == 0) fail(ErrorKind::PoleAtPoint, "ratio pole");
            return Value(N(*ru, *rv) / den);
        }
        RatFun f(N.eval_u(*ru), D.eval_u(*ru));
        return f.eval_value(v);
    }
    if (auto rv = value_rational(v)) {
        RatFun f(N.eval_v(*rv), D.eval_v(*rv));
        return f.eval_value(u);
    }
    if (sign_poly2_at_values(D, u, v) == 0) fail(ErrorKind::PoleAtPoint, "ratio pole");
    AlgebraicNumber a = std::get<AlgebraicNumber>(u), b = std::get<AlgebraicNumber>(v);
    if (auto link = affine_link(a, b)) {
        RatFun section(N.substitute_v_affine(link->first, link->second),
                       D.substitute_v_affine(link->first, link->second));
        return section.eval_value(Value(a));
    }
    Poly R = joint_candidates(N, D, a.defining(), b.defining());
    if (R.is_zero()) fail(ErrorKind::AmbiguousNumeric, "degenerate candidate polynomial");
    Poly sf = square_free_part(R).primitive().first;
    SturmChain chain(sf);
    for (long guard = 0; guard < refinement_budget(); ++guard) {
        auto niv = eval_interval2(N, a.lo(), a.hi(), b.lo(), b.hi());
        auto div = eval_interval2(D, a.lo(), a.hi(), b.lo(), b.hi());
        if (sgn(div.first) * sgn(div.second) > 0) {
            Rational c1 = niv.first / div.first, c2 = niv.first / div.second;
            Rational c3 = niv.second / div.first, c4 = niv.second / div.second;
            Rational lo = std::min(std::min(c1, c2), std::min(c3, c4));
            Rational hi = std::max(std::max(c1, c2), std::max(c3, c4));
            Rational pad = (hi - lo) / 1024 + pow_rat(rat(1, 10), 12);
            while (sf(lo) == 0 || sf(hi) == 0) {
                lo -= pad;
                hi += pad;
            }
            if (chain.count_half_open(lo, hi) == 1) {
                AlgebraicNumber out = AlgebraicNumber::from_isolated(sf, lo, hi);
                if (auto r = out.rational_value()) return Value(*r);
                return Value(out);
            }
        }
        a = a.refined(a.width() / 2);
        b = b.refined(b.width() / 2);
    }
    fail(ErrorKind::BudgetExceeded, "joint evaluation refinement budget exhausted");
}

namespace {

bool on_hyperbola(const Value& u, const Value& v) {
    if (is_one(u) || is_one(v)) return false;
    return value_compare(v, value_mobius_star(u)) == 0;
}

}  // namespace

std::string component_name(Component c) {
    switch (c) {
        case Component::Origin: return "Origin";
        case Component::I: return "I";
        case Component::D: return "D";
        case Component::X_H: return "X_H";
        case Component::X_T: return "X_T";
        case Component::NotOnCurve: return "NotOnCurve";
    }
    return "?";
}

ModuliPoint classify(int m, const Value& u, const Value& v) {
    if (m < 2) fail(ErrorKind::BadDimension, "classification needs m >= 2");
    const FamilyBasis& fb = cached_basis(m);
    const ConstantSet& cs = cached_constants(m);
    const bool odd = (m % 2) != 0;

    ModuliPoint pt;
    pt.m = m;
    pt.u = u;
    pt.v = v;

    if (value_eq_rat(u, rat(0)) && value_eq_rat(v, rat(0))) {
        pt.component = Component::Origin;
        pt.delta = -1;
        pt.p_defined = true;
        pt.p_value = Value(rat(0));
        return pt;
    }
    if (value_compare(u, v) >= 0) {
        pt.component = Component::NotOnCurve;
        return pt;
    }

    if (on_hyperbola(u, v)) {
        int cmp_u1 = value_compare(u, rat(1));
        int cmp_u2 = value_compare(u, rat(2));
        int cmp_u0 = value_sign(u);
        if (cmp_u1 > 0 && cmp_u2 < 0) {
            pt.component = Component::I;
        } else if (!odd && cmp_u0 <= 0) {
            pt.component = Component::D;
        } else if (odd && cmp_u0 <= 0) {
            AlgebraicNumber z = *cs.z, w = *cs.w;
            if (compare(value_as_algebraic(u), z) < 0)
                pt.component = Component::X_H;
            else if (compare(value_as_algebraic(u), w) > 0)
                pt.component = Component::D;  // includes u == 0
            else
                pt.component = Component::NotOnCurve;
        } else {
            pt.component = Component::NotOnCurve;
        }
    } else if (odd && value_sign(u) < 0 && value_sign(v) > 0 && value_compare(v, rat(1)) < 0 &&
               sign_poly2_at_values(fb.T, u, v) == 0) {
        pt.component = Component::X_T;
    } else {
        pt.component = Component::NotOnCurve;
    }

    if (pt.component == Component::NotOnCurve) return pt;

    // delta
    switch (pt.component) {
        case Component::I:
        case Component::X_H:
        case Component::X_T: pt.delta = 1; break;
        case Component::D:
            if (odd)
                pt.delta = -1;
            else
                pt.delta = compare(*cs.z, value_as_algebraic(u));
            break;
        default: break;
    }

    // p
    if (!odd && pt.delta == 0) {
        pt.p_defined = false;  // distinguished even-m point
        return pt;
    }
    pt.p_defined = true;
    if (pt.component == Component::X_T) {
        Poly2 nq = Poly2::var_v() - Poly2::var_u();
        Poly2 dq = Poly2::var_u() + Poly2::var_v() - Poly2::constant(2);
        pt.p_value = eval_poly2_ratio(nq, dq, u, v);
    } else {
        pt.p_value = fb.P.eval_value(u);
    }
    return pt;
}

int delta_of(const ModuliPoint& pt) {
    if (!pt.delta) fail(ErrorKind::OffCurve, "delta undefined off the curve");
    return *pt.delta;
}

PResult eval_p(const ModuliPoint& pt) {
    if (pt.component == Component::NotOnCurve) fail(ErrorKind::OffCurve, "p undefined off the curve");
    PResult out;
    out.defined = pt.p_defined;
    if (pt.p_defined) out.value = pt.p_value;
    return out;
}

RationalityResult is_p_rational(const ModuliPoint& pt) {
    if (pt.component == Component::NotOnCurve) fail(ErrorKind::OffCurve, "not a curve point");
    RationalityResult res;
    int d = delta_of(pt);
    if (d == 0) {
        res.p_rational = true;
        res.reason = "delta = 0 at the distinguished point";
        return res;
    }
    if (!pt.p_defined || !pt.p_value) fail(ErrorKind::Internal, "curve point without p value");
    auto r = value_rational(*pt.p_value);
    if (d == -1) {
        res.p_rational = r.has_value();
        res.reason = r ? "delta = -1 and p = " + to_string(*r)
                       : "delta = -1 and p is irrational";
        return res;
    }
    // d == 1: needs denominator <= m
    if (!r) {
        res.p_rational = false;
        res.reason = "delta = 1 and p is irrational";
        return res;
    }
    Integer den = r->get_den();
    if (den <= pt.m) {
        res.p_rational = true;
        res.reason = "delta = 1 and p = " + to_string(*r) + " with denominator <= m";
    } else {
        res.p_rational = false;
        res.reason = "delta = 1 and p = " + to_string(*r) + " has denominator " + den.get_str() +
                     " > m = " + std::to_string(pt.m);
    }
    return res;
}

namespace {

// Number of solutions of E(t) = E(t0) strictly between 1 and t0, decided by
// the monotone decomposition of E (pieces split at the critical points).
bool level_crossing_free(const FamilyBasis& fb, const ConstantSet& cs, const Value& t0) {
    const bool odd = (fb.m % 2) != 0;
    // E is strictly increasing on (1, inf): no interior solution there.
    if (value_compare(t0, rat(1)) > 0) return true;
    // t0 < 1. Pieces on (t0, 1): split at the critical points of E that lie
    // inside: 0 always (E'(0) = 0), wtilde for odd m.
    struct Pt {
        Value at;
        Value level;  // E at the point
    };
    std::vector<Pt> cuts;
    Value e_t0 = RatFun::from_poly(fb.E).eval_value(t0);
    cuts.push_back({t0, e_t0});
    if (odd && value_compare(t0, Value(*cs.wtilde)) < 0) {
        AlgebraicNumber wt = *cs.wtilde;
        cuts.push_back({Value(wt), RatFun::from_poly(fb.E).eval_value(Value(wt))});
    }
    if (value_sign(t0) < 0) cuts.push_back({Value(rat(0)), Value(fb.E(rat(0)))});
    cuts.push_back({Value(rat(1)), Value(rat(0))});
    // count strictly-interior crossings piecewise (E strictly monotone on
    // each piece, so a crossing exists iff the target level is strictly
    // between the endpoint levels)
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Value& la = cuts[i].level;
        const Value& lb = cuts[i + 1].level;
        int ca = value_compare(e_t0, la), cb = value_compare(e_t0, lb);
        bool crossing_inside = (ca > 0 && cb < 0) || (ca < 0 && cb > 0);
        // the left endpoint of the first piece is t0 itself (level equal):
        // equality at a piece boundary other than t0 means the crossing sits
        // at the boundary point, which is interior to (t0, 1) for i >= 1.
        if (i >= 1 && ca == 0) return false;
        if (crossing_inside) return false;
    }
    return true;
}

QSpec make_endpoint_one(int m, const Value& u, const Value& v) {
    const FamilyBasis& fb = cached_basis(m);
    const ConstantSet& cs = cached_constants(m);
    QSpec qs;
    qs.m = m;
    qs.u = u;
    qs.v = v;
    Value t0 = is_one(u) ? v : u;
    RatFun E_rf = RatFun::from_poly(fb.E);
    qs.A = value_neg(E_rf.eval_value(t0));
    qs.B = Value(rat(1));
    qs.C = Value(rat(0));
    qs.cond_a = true;
    qs.cond_b = true;  // both endpoint values vanish by construction
    qs.cond_d = sign_at_value(fb.E, t0) != 0 && sign_at_value(fb.E.derivative(), t0) != 0;
    qs.cond_e = sign_at_value(fb.Sigma.derivative(), t0) == 0;
    qs.cond_c = level_crossing_free(fb, cs, t0);

    // normalization: Q(t_mid) = (t_mid - 1)(A + E(t_mid))
    Rational tmid = interior_rational(qs.u, qs.v);
    int s_mid = sgn(Rational(tmid - 1)) * (-sign_at_value(fb.E - Poly::constant(fb.E(tmid)), t0));
    bool want_positive = qs.cond_a && qs.cond_b && qs.cond_c && qs.cond_d;
    if (want_positive && s_mid < 0) {
        qs.A = value_neg(qs.A);
        qs.B = Value(rat(-1));
        qs.normalized = true;
    } else if (want_positive) {
        qs.normalized = true;
    } else if (value_sign(qs.A) < 0) {
        qs.A = value_neg(qs.A);
        qs.B = Value(rat(-1));
    }
    return qs;
}

}  // namespace

QSpec q_from_interval(int m, const Value& u, const Value& v) {
    if (m < 2) fail(ErrorKind::BadDimension, "Q construction needs m >= 2");
    if (value_compare(u, v) >= 0)
        fail(ErrorKind::DegenerateInterval, "Q construction needs u < v");
    const FamilyBasis& fb = cached_basis(m);
    const ConstantSet& cs = cached_constants(m);
    const bool odd = (m % 2) != 0;

    if (is_one(u) || is_one(v)) return make_endpoint_one(m, u, v);

    auto ru = value_rational(u), rv = value_rational(v);
    QSpec qs;
    qs.m = m;
    qs.u = u;
    qs.v = v;

    const Poly tm1({-1, 1});
    const Poly fnum = Poly({-2, 1}) * Poly::monomial(2 * m - 1, 1);

    if (ru && rv) {
        RatFun E_rf = RatFun::from_poly(fb.E);
        Rational Eu = fb.E(*ru), Ev = fb.E(*rv);
        Rational Fu = fb.F(*ru), Fv = fb.F(*rv);
        Rational A = Eu * Fv - Fu * Ev, B = Fu - Fv, C = Ev - Eu;
        // normalization below may flip all three
        Poly H = Poly::constant(A) * tm1.pow(m) + Poly::constant(B) * tm1.pow(m) * fb.E +
                 Poly::constant(C) * fnum;
        bool one_in = *ru < 1 && 1 < *rv;
        qs.cond_a = C == 0 || !(*ru <= 1 && 1 <= *rv);
        qs.cond_b = H(*ru) == 0 && H(*rv) == 0;
        Window win;
        win.lo = *ru;
        win.hi = *rv;
        qs.cond_c = H.is_zero() ? false : isolate_real_roots(H, win).empty();
        RatFun Q = RatFun::from_poly(tm1) *
                   (RatFun::constant(A) + RatFun::constant(B) * E_rf + RatFun::constant(C) * fb.F);
        RatFun Qd = Q.derivative();
        Rational qdu = Qd(*ru), qdv = Qd(*rv);
        qs.cond_d = qdu != 0 && qdv != 0;
        qs.cond_e = qdu + qdv == 0;
        (void)one_in;
        Rational tmid = simplest_rational_between(*ru, *rv);
        // Q = H / (t-1)^(m-1)
        int qmid_sign = sgn(H(tmid));
        if (((m - 1) & 1) != 0) qmid_sign *= sgn(Rational(tmid - 1));
        bool want_positive = qs.cond_a && qs.cond_b && qs.cond_c && qs.cond_d;
        int flip = 1;
        if (want_positive) {
            if (qmid_sign < 0) flip = -1;
            qs.normalized = true;
        } else {
            if (A != 0)
                flip = sgn(A);
            else if (B != 0)
                flip = sgn(B);
            else if (C != 0)
                flip = sgn(C);
        }
        qs.A = Value(A * flip);
        qs.B = Value(B * flip);
        qs.C = Value(C * flip);
        return qs;
    }

    // hyperbola-linked endpoints (v = u*): coefficients are univariate in u
    if (on_hyperbola(u, v)) {
        RatFun Arf = RatFun::constant(rat(-2)) * fb.F * fb.G;
        RatFun Brf = RatFun::constant(rat(2)) * fb.F;
        RatFun Crf = -fb.F;
        qs.A = eval_ratfun_value(Arf, u);
        qs.B = eval_ratfun_value(Brf, u);
        qs.C = eval_ratfun_value(Crf, u);
        qs.cond_a = true;   // 1 is never interior to [u, u*]
        qs.cond_b = true;   // identity of the coefficient formulas
        qs.cond_e = true;   // endpoint slopes are opposite on the hyperbola
        Poly g_num = (tm1.pow(m) * fb.E) * rat(2) - fnum;
        Poly gdot_num = g_num.derivative() * tm1 - g_num * Rational(m);
        qs.cond_d = sign_at_value(gdot_num, u) != 0;
        if (value_compare(u, rat(1)) > 0) {
            qs.cond_c = true;  // interval inside (1, infinity)
        } else if (!odd) {
            qs.cond_c = true;
        } else {
            qs.cond_c = compare(value_as_algebraic(u), *cs.z) < 0 ||
                        compare(value_as_algebraic(u), *cs.w) > 0;
        }
        // normalization sign: Q(t_mid) = (t_mid-1) F(u) [ -2G(u) + 2E(t_mid) - F(t_mid) ]
        Rational tmid = interior_rational(u, v);
        RatFun probe = (fb.G * rat(-2) + RatFun::constant(fb.E(tmid) * 2 - fb.F(tmid))) * fb.F *
                       RatFun::constant(tmid - 1);
        int s_mid = sign_of_ratfun_at(probe, u);
        bool want_positive = qs.cond_a && qs.cond_b && qs.cond_c && qs.cond_d;
        if (want_positive) {
            if (s_mid < 0) {
                qs.A = value_neg(qs.A);
                qs.B = value_neg(qs.B);
                qs.C = value_neg(qs.C);
            }
            qs.normalized = true;
        } else if (value_sign(qs.A) < 0) {
            qs.A = value_neg(qs.A);
            qs.B = value_neg(qs.B);
            qs.C = value_neg(qs.C);
        }
        return qs;
    }

    // mixed: one rational endpoint, one algebraic
    if (ru || rv) {
        Rational t0 = ru ? *ru : *rv;
        Value beta = ru ? v : u;
        Rational E0 = fb.E(t0), F0 = fb.F(t0);
        RatFun Arf = RatFun::constant(E0) * fb.F - RatFun::from_poly(fb.E) * F0;
        RatFun Brf = RatFun::constant(F0) - fb.F;
        RatFun Crf = RatFun::from_poly(fb.E) - RatFun::constant(E0);
        if (rv) {  // u algebraic: coefficients with arguments swapped
            Arf = -Arf;
            Brf = -Brf;
            Crf = -Crf;
        }
        qs.A = eval_ratfun_value(Arf, beta);
        qs.B = eval_ratfun_value(Brf, beta);
        qs.C = eval_ratfun_value(Crf, beta);
        bool one_inside = value_compare(u, rat(1)) < 0 && value_compare(v, rat(1)) > 0;
        qs.cond_a = value_sign(qs.C) == 0 || !one_inside;
        qs.cond_b = true;  // endpoint vanishing is an identity of the formulas
        // slope values: Qdot(t0) and Qdot(beta) as univariate values at beta
        RatFun Edot = RatFun::from_poly(fb.E.derivative());
        RatFun Fdot = fb.F.derivative();
        RatFun qdot_t0 = (Brf * fb.E.derivative()(t0) + Crf * Fdot(t0)) * (t0 - 1);
        RatFun qdot_beta = (Brf * Edot + Crf * Fdot) * RatFun::from_poly(tm1);
        int sd0 = sign_of_ratfun_at(qdot_t0, beta);
        int sd1 = sign_of_ratfun_at(qdot_beta, beta);
        qs.cond_d = sd0 != 0 && sd1 != 0;
        qs.cond_e = sign_of_ratfun_at(qdot_t0 + qdot_beta, beta) == 0;
        // interior zeros: candidate roots from the conjugates of beta, each
        // confirmed or rejected by a certified joint sign
        {
            Poly2 Et = Poly2::from_poly_u(tm1.pow(m) * fb.E), Ft = Poly2::from_poly_u(fnum);
            Poly2 Es = Poly2::from_poly_v(tm1.pow(m) * fb.E), Fs = Poly2::from_poly_v(fnum);
            Poly2 e0 = Poly2::constant(E0), f0 = Poly2::constant(F0);
            Poly2 su = Poly2::from_poly_u(tm1.pow(m)), sv = Poly2::from_poly_v(tm1.pow(m));
            // (t-1)^m (s-1)^m H(t; s), s the algebraic endpoint
            Poly2 H2 = e0 * su * Fs - f0 * su * Es + f0 * Et * sv - Et * Fs + Ft * Es - e0 * Ft * sv;
            qs.cond_c = true;
            Poly N = conjugate_candidates(H2, value_as_algebraic(beta).defining());
            if (N.is_zero()) fail(ErrorKind::AmbiguousNumeric, "degenerate interior-zero candidates");
            for (const auto& cand : isolate_real_roots(N)) {
                Value t(cand.root);
                if (auto r = cand.root.rational_value()) t = Value(*r);
                if (value_compare(t, qs.u) <= 0 || value_compare(t, qs.v) >= 0) continue;
                if (sign_poly2_at_values(H2, t, beta) == 0) {
                    qs.cond_c = false;
                    break;
                }
            }
        }
        return qs;
    }

    fail(ErrorKind::AmbiguousNumeric, "unsupported endpoint combination for Q construction");
}

PositivityResult positivity(int m, const Value& u, const Value& v) {
    if (m < 2) fail(ErrorKind::BadDimension, "positivity needs m >= 2");
    if (value_compare(u, v) >= 0) fail(ErrorKind::DegenerateInterval, "positivity needs u < v");
    const FamilyBasis& fb = cached_basis(m);
    const ConstantSet& cs = cached_constants(m);
    const bool odd = (m % 2) != 0;

    PositivityResult res;
    bool u0 = value_sign(u) == 0, v0 = value_sign(v) == 0;
    bool one_interior = value_compare(u, rat(1)) < 0 && value_compare(v, rat(1)) > 0;
    if (u0 || v0 || one_interior) {
        res.which = PositivityCase::BadContainment;
        res.holds = false;
        return res;
    }
    if (is_one(u) || is_one(v)) {
        res.which = PositivityCase::EndpointOne;
        const Value& t0 = is_one(u) ? v : u;
        AlgebraicNumber t0a = value_as_algebraic(t0);
        bool ok = value_sign(t0) > 0 || compare(t0a, *cs.ztilde) < 0;
        res.holds = ok;
        return res;
    }
    bool zero_interior = value_sign(u) < 0 && value_sign(v) > 0;
    if (!zero_interior) {
        res.which = PositivityCase::AwayFromZeroAndOne;
        res.holds = true;
        return res;
    }
    res.which = PositivityCase::ZeroInterior;

    // hyperbola shortcut
    if (on_hyperbola(u, v)) {
        if (!odd) {
            res.holds = true;
        } else {
            res.holds = compare(value_as_algebraic(u), *cs.z) < 0 ||
                        compare(value_as_algebraic(u), *cs.w) > 0;
        }
        return res;
    }

    auto ru = value_rational(u), rv = value_rational(v);
    if (ru && rv) {
        Rational Eu = fb.E(*ru), Ev = fb.E(*rv);
        Rational Fu = fb.F(*ru), Fv = fb.F(*rv);
        Rational A = Eu * Fv - Fu * Ev, B = Fu - Fv, C = Ev - Eu;
        if (B == 0) fail(ErrorKind::Internal, "slope coefficient vanished unexpectedly");
        // order endpoints so that (-1)^m (u' - v') > 0
        Rational up = *ru, vp = *rv;
        if (((m % 2 == 0) && up < vp) || ((m % 2 != 0) && up > vp)) std::swap(up, vp);
        RatFun Ed = RatFun::from_poly(fb.E.derivative());
        RatFun Fd = fb.F.derivative();
        Rational ratio_u = Ed(up) / Fd(up), ratio_v = Ed(vp) / Fd(vp);
        Rational target = -C / B;
        bool cond_i = ratio_u < target && target < ratio_v;
        bool cond_ii = A / B > -fb.E(rat(0));
        res.holds = cond_i || cond_ii;

        // independent cross-check by direct isolation
        const Poly tm1({-1, 1});
        const Poly fnum = Poly({-2, 1}) * Poly::monomial(2 * m - 1, 1);
        Poly H = Poly::constant(A) * tm1.pow(m) + Poly::constant(B) * tm1.pow(m) * fb.E +
                 Poly::constant(C) * fnum;
        Window win;
        win.lo = *ru;
        win.hi = *rv;
        bool no_interior_zero = isolate_real_roots(H, win).empty();
        RatFun Q = RatFun::from_poly(tm1) *
                   (RatFun::constant(A) + RatFun::constant(B) * RatFun::from_poly(fb.E) +
                    RatFun::constant(C) * fb.F);
        RatFun Qd = Q.derivative();
        bool slopes = Qd(*ru) != 0 && Qd(*rv) != 0;
        if (res.holds != (no_interior_zero && slopes))
            fail(ErrorKind::Internal, "positivity case analysis disagrees with direct isolation");
        return res;
    }

    // mixed rational/algebraic pair off the hyperbola
    if (ru || rv) {
        Rational t0 = ru ? *ru : *rv;
        Value beta = ru ? v : u;
        Rational E0 = fb.E(t0), F0 = fb.F(t0);
        RatFun Arf = RatFun::constant(E0) * fb.F - RatFun::from_poly(fb.E) * F0;
        RatFun Brf = RatFun::constant(F0) - fb.F;
        RatFun Crf = RatFun::from_poly(fb.E) - RatFun::constant(E0);
        if (rv) {
            Arf = -Arf;
            Brf = -Brf;
            Crf = -Crf;
        }
        RatFun Ed = RatFun::from_poly(fb.E.derivative());
        RatFun Fd = fb.F.derivative();
        // condition (ii): A/B + E(0) > 0
        int s_ii = sign_of_ratfun_at(Arf / Brf + RatFun::constant(fb.E(rat(0))), beta);
        bool cond_ii = s_ii > 0;
        // condition (i) with endpoints ordered by parity
        Value up = u, vp = v;
        bool swap_needed = (m % 2 == 0) ? (value_compare(up, vp) < 0) : (value_compare(up, vp) > 0);
        if (swap_needed) std::swap(up, vp);
        RatFun target = RatFun::constant(0) - Crf / Brf;
        auto ratio_minus_target_sign = [&](const Value& at) {
            // sign of Ed/Fd(at) - target(beta); both sides may share beta
            if (auto r = value_rational(at)) {
                Rational lhs = Ed(*r) / Fd(*r);
                return sign_of_ratfun_at(RatFun::constant(lhs) - target, beta);
            }
            // at == beta: fully univariate
            return sign_of_ratfun_at(Ed / Fd - target, beta);
        };
        bool cond_i = ratio_minus_target_sign(up) < 0 && ratio_minus_target_sign(vp) > 0;
        res.holds = cond_i || cond_ii;
        return res;
    }

    fail(ErrorKind::AmbiguousNumeric, "positivity with two independent algebraic endpoints");
}

std::pair<Value, Value> dual_point(const Value& u, const Value& v) {
    if (is_one(u) || is_one(v)) fail(ErrorKind::PoleAtOne, "duality undefined when a coordinate is 1");
    return {value_mobius_star(v), value_mobius_star(u)};
}

BoundaryData boundary_data(int m, const Value& u, const Value& v, const Rational& c) {
    if (c == 0) fail(ErrorKind::ZeroC, "the constant c must be nonzero");
    if (value_eq_rat(u, rat(0)) && value_eq_rat(v, rat(0)))
        fail(ErrorKind::ConditionsFail, "boundary data is not defined at the origin");
    ModuliPoint pt = classify(m, u, v);
    if (pt.component == Component::NotOnCurve)
        fail(ErrorKind::ConditionsFail, "(u, v) is not on the curve");
    QSpec qs = q_from_interval(m, u, v);
    if (!qs.all_conditions())
        fail(ErrorKind::ConditionsFail, "the five boundary conditions do not all hold");

    BoundaryData bd;
    bd.c = c;
    // interval lies on one side of 1
    bool below = value_compare(v, rat(1)) < 0;
    bd.epsilon = (below ? -1 : 1) * sgn(c);

    const FamilyBasis& fb = cached_basis(m);
    auto ru = value_rational(u);
    Value qdot_u = Rational(0);
    if (ru && value_rational(v)) {
        RatFun Q = RatFun::from_poly(Poly({-1, 1})) *
                   (RatFun::constant(*value_rational(qs.A)) +
                    RatFun::constant(*value_rational(qs.B)) * RatFun::from_poly(fb.E) +
                    RatFun::constant(*value_rational(qs.C)) * fb.F);
        qdot_u = Value(Q.derivative()(*ru));
    } else if (on_hyperbola(u, v)) {
        // Qdot(u) = s 2 (u-1) F(u) Gdot(u) where s is the normalization flip
        const Poly tm1({-1, 1});
        RatFun base = RatFun::from_poly(tm1) * fb.F * fb.G.derivative() * rat(2);
        int flip = value_sign(qs.B) * sign_of_ratfun_at(fb.F * rat(2), u);
        qdot_u = eval_ratfun_value(base * Rational(flip), u);
    } else {
        fail(ErrorKind::AmbiguousNumeric, "boundary data for this endpoint combination");
    }

    auto scale_value = [](const Value& val, const Rational& k) -> Value {
        if (auto r = value_rational(val)) return Value(Rational(*r * k));
        // k * alpha via the affine substitution t -> t/k
        AlgebraicNumber a = std::get<AlgebraicNumber>(val);
        Poly q = a.defining().compose_affine(Rational(1) / k, 0).primitive().first;
        Rational lo = a.lo() * k, hi = a.hi() * k;
        if (lo > hi) std::swap(lo, hi);
        return Value(AlgebraicNumber::from_isolated(q, lo, hi));
    };

    bd.a = scale_value(qdot_u, Rational(-1) / (2 * c));
    bd.kappa = scale_value(qs.A, Rational(bd.epsilon * m) / c);
    bd.delta = value_sign(bd.kappa);
    if (bd.delta != delta_of(pt))
        fail(ErrorKind::Internal, "kappa sign disagrees with the component sign function");

    if (value_sign(qs.A) != 0) {
        bd.p_defined = true;
        if (ru && value_rational(v)) {
            Rational p = *value_rational(qdot_u) / (Rational(m) * *value_rational(qs.A));
            bd.p = Value(p);
            // consistency: a == -eps p kappa / 2
            Rational lhs = *value_rational(bd.a);
            Rational rhs = -Rational(bd.epsilon) * p * *value_rational(bd.kappa) / 2;
            if (lhs != rhs) fail(ErrorKind::Internal, "boundary data consistency check failed");
        } else {
            // hyperbola: p = -(u-1) Gdot(u) / (m G(u)), independent of scaling
            RatFun prf = -(RatFun::from_poly(Poly({-1, 1})) * fb.G.derivative()) /
                         (fb.G * Rational(m));
            bd.p = eval_ratfun_value(prf, u);
        }
    } else {
        bd.p_defined = false;
    }

    // admissibility
    if (bd.delta == 0) {
        bd.admissible = true;
    } else if (!bd.p_defined) {
        bd.admissible = false;
    } else if (auto pr = value_rational(*bd.p)) {
        bd.admissible = bd.delta == -1 || pr->get_den() <= pt.m;
    } else {
        bd.admissible = false;
    }
    return bd;
}

}  // namespace mc
