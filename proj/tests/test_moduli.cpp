#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mc/moduli.hpp"

using namespace mc;

namespace {
Rational rand_rat(std::mt19937& rng, long span = 200, long den = 20) {
    return rat(static_cast<long>(rng() % (2 * span + 1)) - span, 1 + static_cast<long>(rng() % den));
}
}  // namespace

TEST_CASE("origin and simple hyperbola points classify per the component map") {
    auto origin = classify(3, Value(rat(0)), Value(rat(0)));
    CHECK(origin.component == Component::Origin);
    CHECK(*origin.delta == -1);
    CHECK(*value_rational(*origin.p_value) == rat(0));
    CHECK(is_p_rational(origin).p_rational);

    auto i_pt = classify(2, Value(rat(3, 2)), Value(rat(3)));
    CHECK(i_pt.component == Component::I);
    CHECK(*i_pt.delta == 1);

    auto excluded = classify(3, Value(rat(-1)), Value(rat(1, 2)));
    CHECK(excluded.component == Component::NotOnCurve);
    CHECK_THROWS_AS(delta_of(excluded), Error);
    CHECK_THROWS_AS(eval_p(excluded), Error);

    auto xh = classify(3, Value(rat(-2)), Value(rat(2, 3)));
    CHECK(xh.component == Component::X_H);
    CHECK(*xh.delta == 1);
    CHECK(*value_rational(*xh.p_value) == rat(-52, 49));
    auto rr = is_p_rational(xh);
    CHECK_FALSE(rr.p_rational);  // denominator 49 > 3
}

TEST_CASE("random hyperbola and perturbed probes reproduce the component map") {
    std::mt19937 rng(41);
    for (int parity = 0; parity < 2; ++parity) {
        int m = parity == 0 ? 4 : 5;
        const ConstantSet& cs = cached_constants(m);
        int on_checked = 0, off_checked = 0;
        for (int it = 0; it < 30000 && (on_checked < 500 || off_checked < 500); ++it) {
            Rational u = rand_rat(rng, 300, 60);
            if (u == 1 || u == 0) continue;
            bool perturb = (rng() & 1) != 0;
            Value uu{u};
            Value vv = value_mobius_star(uu);
            if (perturb) vv = Value(Rational(*value_rational(vv) + rat(1, 7)));
            if (value_compare(uu, vv) >= 0) continue;
            auto pt = classify(m, uu, vv);
            Component expect = Component::NotOnCurve;
            if (!perturb) {
                if (u > 1 && u < 2) {
                    expect = Component::I;
                } else if (u < 0) {
                    if (m % 2 == 0) {
                        expect = Component::D;
                    } else {
                        AlgebraicNumber ua = AlgebraicNumber::from_rational(u);
                        if (compare(ua, *cs.z) < 0)
                            expect = Component::X_H;
                        else if (compare(ua, *cs.w) > 0)
                            expect = Component::D;
                    }
                }
            } else if (m % 2 != 0 && u < 0 && value_sign(vv) > 0 && value_compare(vv, rat(1)) < 0 &&
                       pt.component == Component::X_T) {
                // a perturbed probe may legitimately land on the T-branch;
                // the classifier's exact answer is authoritative there
                expect = Component::X_T;
            }
            INFO("m = " << m << " u = " << to_string(u));
            CHECK(pt.component == expect);
            if (expect == Component::NotOnCurve)
                ++off_checked;
            else {
                ++on_checked;
                // every on-curve point except the origin sits entirely on one
                // side of 1
                bool below = value_compare(pt.u, rat(1)) < 0 && value_compare(pt.v, rat(1)) < 0;
                bool above = value_compare(pt.u, rat(1)) > 0 && value_compare(pt.v, rat(1)) > 0;
                CHECK((below || above));
            }
        }
        CHECK(on_checked >= 500);
        CHECK(off_checked >= 500);
    }
}

TEST_CASE("distinguished even-m point has delta 0 and undefined p") {
    const ConstantSet& cs = cached_constants(2);
    Value z{*cs.z};
    auto pt = classify(2, z, value_mobius_star(z));
    CHECK(pt.component == Component::D);
    CHECK(*pt.delta == 0);
    CHECK_FALSE(pt.p_defined);
    CHECK(is_p_rational(pt).p_rational);  // delta = 0 counts as rational
    // nearby even-m D points flip delta across z
    auto left = classify(2, Value(rat(-2)), Value(rat(2, 3)));
    CHECK(*left.delta == 1);  // u < z
    auto right = classify(2, Value(rat(-1)), Value(rat(1, 2)));
    CHECK(*right.delta == -1);  // z < u <= 0
}

TEST_CASE("delta matches the sign of (u-1) p at defined nonzero p") {
    std::mt19937 rng(43);
    for (int m : {4, 5}) {
        int checked = 0;
        for (int it = 0; it < 2000 && checked < 200; ++it) {
            Rational u = rand_rat(rng, 300, 60);
            if (u == 0 || u == 1) continue;
            Value uu{u}, vv = value_mobius_star(uu);
            if (value_compare(uu, vv) >= 0) continue;
            auto pt = classify(m, uu, vv);
            if (pt.component == Component::NotOnCurve || !pt.p_defined) continue;
            if (*pt.delta == 0) continue;
            auto p = *pt.p_value;
            if (value_sign(p) == 0) continue;
            int lhs = *pt.delta;
            int rhs = sgn(Rational(u - 1)) * value_sign(p);
            CHECK(lhs == rhs);
            ++checked;
        }
        CHECK(checked >= 200);
    }
}

TEST_CASE("the crossing point (x, x*) is never a rational-value point, m = 3..11") {
    for (int m = 3; m <= 11; m += 2) {
        const ConstantSet& cs = cached_constants(m);
        Value x{*cs.x};
        auto pt = classify(m, x, value_mobius_star(x));
        CHECK(pt.component == Component::X_H);  // on both arcs; the hyperbola test runs first
        REQUIRE(pt.p_defined);
        if (m == 3) CHECK(value_compare(*pt.p_value, Value(*cs.q_star)) == 0);
        CHECK_FALSE(is_p_rational(pt).p_rational);
        // the threshold-constant integrality route agrees: p-rationality here
        // would force the threshold to be an integer at most m
        auto r = cs.ell->rational_value();
        CHECK((!r || r->get_den() != 1 || *r > m));
    }
}

TEST_CASE("interior T-branch points classify as X_T with the projection value") {
    // m = 9 has fourth-family points with p = -8/9
    const int m = 9;
    Rational q = rat(-8, 9);
    const FamilyBasis& fb = cached_basis(m);
    Rational a = (1 + q) / (1 - q), b = -2 * q / (1 - q);
    Poly tq = fb.T.substitute_v_affine(a, b);
    Window win;
    win.hi = rat(0);
    auto roots = isolate_real_roots(tq, win);
    int classified = 0;
    for (const auto& r : roots) {
        Value u{r.root};
        Value v = Value(r.root.scaled(a).shifted(b));
        if (value_sign(v) <= 0 || value_compare(v, rat(1)) >= 0) continue;
        auto pt = classify(m, u, v);
        CHECK(pt.component == Component::X_T);
        CHECK(*pt.delta == 1);
        REQUIRE(pt.p_defined);
        CHECK(value_compare(*pt.p_value, q) == 0);
        CHECK(is_p_rational(pt).p_rational);
        ++classified;
    }
    CHECK(classified == 2);
}

TEST_CASE("Q construction at the worked interval") {
    auto qs = q_from_interval(3, Value(rat(-2)), Value(rat(2, 3)));
    CHECK(*value_rational(qs.A) == rat(-25088, 729));
    CHECK(*value_rational(qs.B) == rat(-256, 27));
    CHECK(*value_rational(qs.C) == rat(128, 27));
    CHECK(qs.all_conditions());
    CHECK(qs.normalized);
    CHECK_THROWS_AS(q_from_interval(3, Value(rat(1, 2)), Value(rat(1, 2))), Error);
}

TEST_CASE("endpoint-one interval keeps the boundary conditions but fails positivity") {
    for (int m : {3, 5}) {
        const ConstantSet& cs = cached_constants(m);
        Value s{*cs.s};
        auto qs = q_from_interval(m, s, Value(rat(1)));
        CHECK(qs.cond_b);
        CHECK(qs.cond_e);
        CHECK_FALSE(qs.cond_c);  // positivity cannot hold on [s, 1]
        auto pos = positivity(m, s, Value(rat(1)));
        CHECK(pos.which == PositivityCase::EndpointOne);
        CHECK_FALSE(pos.holds);
    }
}

TEST_CASE("positivity case analysis agrees with direct isolation on random intervals") {
    std::mt19937 rng(47);
    for (int m : {3, 4}) {
        int checked = 0;
        for (int it = 0; it < 1200 && checked < 250; ++it) {
            Rational u = rand_rat(rng, 40, 12), v = rand_rat(rng, 40, 12);
            if (u >= v) continue;
            auto pos = positivity(m, Value(u), Value(v));  // throws Internal on mismatch
            ++checked;
            if ((u < 0 && v > 0) || u == 0 || v == 0 || (u < 1 && v > 1)) {
                CHECK(pos.which != PositivityCase::AwayFromZeroAndOne);
            } else if (u != 1 && v != 1) {
                CHECK(pos.holds);  // case away from 0 and 1 always holds
            }
        }
        CHECK(checked >= 250);
    }
}

TEST_CASE("positivity of the four reference cases") {
    CHECK(positivity(3, Value(rat(5, 4)), Value(rat(7, 4))).holds);
    auto zero_end = positivity(3, Value(rat(0)), Value(rat(1, 2)));
    CHECK_FALSE(zero_end.holds);
    CHECK(zero_end.which == PositivityCase::BadContainment);
    auto one_end = positivity(3, Value(rat(-1)), Value(rat(1)));
    CHECK_FALSE(one_end.holds);
    CHECK(one_end.which == PositivityCase::EndpointOne);
    // endpoint 1 with the other endpoint positive: holds
    CHECK(positivity(3, Value(rat(1)), Value(rat(3, 2))).holds);
    // hyperbola interval with 0 interior for odd m: holds iff u outside [z, w]
    CHECK(positivity(3, Value(rat(-2)), Value(rat(2, 3))).holds);
    CHECK_FALSE(positivity(3, Value(rat(-1)), Value(rat(1, 2))).holds);
}

TEST_CASE("conditions re-verified independently where they all hold") {
    std::mt19937 rng(53);
    const FamilyBasis& fb = cached_basis(3);
    int confirmed = 0;
    for (int it = 0; it < 600 && confirmed < 60; ++it) {
        Rational u = rand_rat(rng, 60, 12);
        if (u >= 1 || u == 0) continue;
        Value uu{u}, vv = value_mobius_star(uu);
        if (value_compare(uu, vv) >= 0) continue;
        auto qs = q_from_interval(3, uu, vv);
        if (!qs.all_conditions()) continue;
        ++confirmed;
        // rebuild Q from the reported coefficients and isolate directly
        Rational A = *value_rational(qs.A), B = *value_rational(qs.B), C = *value_rational(qs.C);
        Poly tm1({-1, 1});
        Poly H = Poly::constant(A) * tm1.pow(3) + Poly::constant(B) * tm1.pow(3) * fb.E +
                 Poly::constant(C) * Poly({-2, 1}) * Poly::monomial(5, 1);
        Rational v = *value_rational(vv);
        auto interior = isolate_real_roots(H, Window{u, v});
        CHECK(interior.empty());
        RatFun Q = RatFun::from_poly(tm1) *
                   (RatFun::constant(A) + RatFun::constant(B) * RatFun::from_poly(fb.E) +
                    RatFun::constant(C) * fb.F);
        RatFun Qd = Q.derivative();
        CHECK(Qd(u) != 0);
        CHECK(Qd(u) == -Qd(v));
    }
    CHECK(confirmed >= 60);
}

TEST_CASE("duality fixes the hyperbola pointwise and is an involution") {
    std::mt19937 rng(59);
    const FamilyBasis& fb = cached_basis(5);
    for (int it = 0; it < 100; ++it) {
        Rational u = rand_rat(rng, 100, 20);
        if (u == 1) continue;
        Value uu{u}, vv = value_mobius_star(uu);
        auto [du, dv] = dual_point(uu, vv);
        CHECK(value_compare(du, uu) == 0);
        CHECK(value_compare(dv, vv) == 0);
    }
    int checked = 0;
    for (int it = 0; it < 400 && checked < 300; ++it) {
        Rational u = rand_rat(rng, 60, 12), v = rand_rat(rng, 60, 12);
        if (u == 1 || v == 1) continue;
        ++checked;
        auto [du, dv] = dual_point(Value(u), Value(v));
        auto [ddu, ddv] = dual_point(du, dv);
        CHECK(value_compare(ddu, Value(u)) == 0);
        CHECK(value_compare(ddv, Value(v)) == 0);
        // sgn T is invariant under the involution
        CHECK(sgn(fb.T(u, v)) == sgn(fb.T(*value_rational(du), *value_rational(dv))));
    }
    CHECK(checked >= 300);
    CHECK_THROWS_AS(dual_point(Value(rat(1)), Value(rat(2))), Error);
}

TEST_CASE("boundary data at the worked point") {
    auto bd = boundary_data(3, Value(rat(-2)), Value(rat(2, 3)), rat(-1));
    CHECK(bd.epsilon == 1);
    CHECK(bd.delta == 1);
    REQUIRE(bd.p_defined);
    CHECK(*value_rational(*bd.p) == rat(-52, 49));
    CHECK_FALSE(bd.admissible);  // denominator 49 > 3
    auto bd2 = boundary_data(3, Value(rat(-2)), Value(rat(2, 3)), rat(1));
    CHECK(bd2.epsilon == -1);
    CHECK(bd2.delta == 1);  // sign of kappa is normalization independent
    CHECK_THROWS_AS(boundary_data(3, Value(rat(-2)), Value(rat(2, 3)), rat(0)), Error);
    CHECK_THROWS_AS(boundary_data(3, Value(rat(0)), Value(rat(0)), rat(1)), Error);
    CHECK_THROWS_AS(boundary_data(3, Value(rat(-1)), Value(rat(1, 2)), rat(1)), Error);
    // an admissible case: the I-component point for m = 2 carries p = 1/2
    auto i_bd = boundary_data(2, Value(rat(3, 2)), Value(rat(3)), rat(1));
    CHECK(i_bd.delta == 1);
}

TEST_CASE("joint algebraic sign certification") {
    const FamilyBasis& fb = cached_basis(3);
    AlgebraicNumber sqrt2 = isolate_real_roots(Poly({-2, 0, 1}), Window{rat(0), {}}).front().root;
    // T(-sqrt2, 1/2) has a certified sign equal to the rational evaluation route
    Value a{sqrt2.negated()}, b{rat(1, 2)};
    int s1 = sign_poly2_at_values(fb.T, a, b);
    Poly section = fb.T.eval_v(rat(1, 2));
    CHECK(s1 == sign_at(section, sqrt2.negated()));
    // joint-joint: T(-sqrt2, sqrt3/4)
    AlgebraicNumber sqrt3 = isolate_real_roots(Poly({-3, 0, 1}), Window{rat(0), {}}).front().root;
    Value c{sqrt3.scaled(rat(1, 4))};
    int s2 = sign_poly2_at_values(fb.T, a, c);
    // compare against interval arithmetic at high precision
    AlgebraicNumber af = sqrt2.negated().refined_digits(20);
    AlgebraicNumber cf = sqrt3.scaled(rat(1, 4)).refined_digits(20);
    Rational mid = fb.T((af.lo() + af.hi()) / 2, (cf.lo() + cf.hi()) / 2);
    CHECK(s2 == sgn(mid));
    // exact zero on the curve: (x, x*) for m = 3
    const ConstantSet& cs = cached_constants(3);
    Value x{*cs.x}, xs = value_mobius_star(x);
    CHECK(sign_poly2_at_values(fb.T, x, xs) == 0);
}
