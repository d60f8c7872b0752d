#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mc/family.hpp"

using namespace mc;

TEST_CASE("basis members for m = 3 match the worked example") {
    auto fb = build_basis(3);
    CHECK(fb.Sigma == Poly({2, 2, 1}));
    CHECK(fb.E == Poly({-2, 0, 1, 1}));
    CHECK(fb.sigma0 == rat(2));
    // T(u,v) = 5(uv^2 + u^2 v) - 3u^2 - 4uv - 3v^2
    Poly2 expect = rat(5) * (Poly2::monomial(1, 2, 1) + Poly2::monomial(2, 1, 1)) -
                   Poly2::monomial(2, 0, 3) - Poly2::monomial(1, 1, 4) - Poly2::monomial(0, 2, 3);
    CHECK(fb.T == expect);
    CHECK(fb.P(rat(-2)) == rat(-52, 49));
    CHECK(fb.P(rat(2, 3)) == rat(52, 49));
    CHECK(fb.P(rat(0)) == rat(0));
    CHECK(fb.P(rat(1)) == rat(1));
    CHECK(fb.P(rat(2)) == rat(0));
    CHECK(fb.P.derivative()(rat(0)) == rat(-1, 3));
    // worked evaluations feeding the boundary-value coefficients
    CHECK(fb.F(rat(-2)) == rat(-128, 27));
    CHECK(fb.G(rat(-2)) == rat(-98, 27));
    CHECK(-fb.G(rat(-2)) / fb.sigma0 == rat(49, 27));
}

TEST_CASE("basis guards") {
    CHECK_THROWS_AS(build_basis(1), Error);
    CHECK_THROWS_AS(theta(1), Error);
    CHECK_THROWS_AS(catalan_sigma0(0), Error);
    CHECK(catalan_sigma0(0, true) == rat(-1, 2));
}

TEST_CASE("T is the constant 1 for m = 2") {
    auto fb = build_basis(2);
    CHECK(fb.T == Poly2::constant(1));
}

TEST_CASE("catalan constants and their recursion") {
    const long expect[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796,
                           58786, 208012, 742900, 2674440, 9694845};
    for (int m = 1; m <= 16; ++m) CHECK(catalan_sigma0(m) == Rational(expect[m - 1]));
    CHECK((rat(4) - rat(6, 4)) * catalan_sigma0(3) == catalan_sigma0(4));
}

TEST_CASE("theta kernels") {
    CHECK(theta(2) == Poly2::constant(1));
    CHECK(theta(3) == rat(2) * Poly2::var_u() + rat(2) * Poly2::var_v());
    CHECK(theta(4) == rat(3) * Poly2::monomial(2, 0, 1) + rat(4) * Poly2::monomial(1, 1, 1) +
                          rat(3) * Poly2::monomial(0, 2, 1));
    for (int k = 2; k <= 9; ++k) {
        Poly2 th = theta(k);
        CHECK(th.is_symmetric());
        CHECK(th.total_degree() == k - 2);
    }
}

TEST_CASE("theta sign behavior at random nonzero points") {
    std::mt19937 rng(17);
    auto rand_rat = [&]() {
        return rat(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 9));
    };
    for (int k = 2; k <= 8; ++k) {
        Poly2 th = theta(k);
        for (int it = 0; it < 60; ++it) {
            Rational u = rand_rat(), v = rand_rat();
            if (u == 0 && v == 0) continue;
            Rational val = th(u, v);
            if (k % 2 == 0) {
                CHECK(sgn(val) > 0);
            } else {
                CHECK(sgn(val) == sgn(Rational(u + v)));
            }
        }
    }
}

TEST_CASE("identity catalog passes for every dimension in range") {
    for (int m = 2; m <= 8; ++m) {
        auto rep = verify_identities(m);
        for (const auto& e : rep.entries) {
            INFO("m = " << m << ", entry " << e.name << ": " << e.witness);
            CHECK(e.pass);
        }
    }
    CHECK_THROWS_AS(verify_identities(1), Error);
    CHECK_THROWS_AS(verify_identities(13, 12), Error);
}

TEST_CASE("fault injection: corrupted Sigma breaks the E-recursion identity") {
    auto fb = build_basis(3);
    fb.Sigma = fb.Sigma + Poly({0, 1});  // corrupt one coefficient
    fb.E = Poly({-1, 1}) * fb.Sigma;
    auto rep = verify_identities_on(fb);
    bool e_ode_failed = false;
    for (const auto& e : rep.entries)
        if (e.name == "e-ode" && !e.pass) e_ode_failed = !e.witness.empty();
    CHECK(e_ode_failed);
}

TEST_CASE("all real roots of Sigma and its derivative are negative") {
    for (int m = 2; m <= 12; ++m) {
        auto fb = build_basis(m);
        for (const auto& r : isolate_real_roots(fb.Sigma)) CHECK(r.root.sign() < 0);
        if (fb.Sigma.derivative().degree() >= 1)
            for (const auto& r : isolate_real_roots(fb.Sigma.derivative())) CHECK(r.root.sign() < 0);
    }
}

TEST_CASE("derivative root counts match the monotonicity tables") {
    for (int m = 2; m <= 9; ++m) {
        auto fb = build_basis(m);
        // Lambda has no real roots
        CHECK(isolate_real_roots(fb.Lambda).empty());
        // F' vanishes only at 0
        Poly fdot_num = fb.F.derivative().num();
        auto fr = isolate_real_roots(fdot_num);
        REQUIRE(fr.size() == 1);
        CHECK(compare(fr[0].root, rat(0)) == 0);
        // (E/F)' has 1 as the only real zero of its numerator
        Poly efd = (RatFun::from_poly(fb.E) / fb.F).derivative().num();
        for (const auto& r : isolate_real_roots(efd)) CHECK(compare(r.root, rat(1)) == 0);
        // E' root pattern by parity: {0} for even m, {negative, 0} for odd
        auto er = isolate_real_roots(fb.E.derivative());
        if (m % 2 == 0) {
            REQUIRE(er.size() == 1);
            CHECK(compare(er[0].root, rat(0)) == 0);
        } else {
            REQUIRE(er.size() == 2);
            CHECK(er[0].root.sign() < 0);
            CHECK(compare(er[1].root, rat(0)) == 0);
        }
    }
}

TEST_CASE("sign inequalities of the basis on random points") {
    std::mt19937 rng(23);
    auto rand_in = [&](const Rational& lo, const Rational& hi) -> Rational {
        Rational t = rat(static_cast<long>(rng() % 1000), 1000);
        return lo + (hi - lo) * t;
    };
    for (int m : {2, 3, 4, 5}) {
        auto fb = build_basis(m);
        RatFun E = RatFun::from_poly(fb.E);
        for (int it = 0; it < 100; ++it) {
            Rational neg = rand_in(rat(-8), rat(0));
            CHECK(E(neg) < fb.F(neg));  // E < F on (-inf, 0]
            Rational pos = rand_in(rat(1), rat(9));
            if (pos == 1) continue;
            CHECK(E(pos) > rat(0));  // E > 0 on (1, inf)
            CHECK(E(pos) > fb.F(pos));
            if (m % 2 != 0) {
                Rational below = rand_in(rat(-8), rat(1));
                if (below != 1) CHECK(E(below) < rat(0));
            }
        }
    }
}

TEST_CASE("endpoint coefficient vectors are independent at random pairs") {
    std::mt19937 rng(29);
    for (int m : {2, 3, 5}) {
        auto fb = build_basis(m);
        auto r = coefficient_vector(fb);
        int tested = 0;
        for (int it = 0; tested < 200 && it < 400; ++it) {
            Rational u = rat(static_cast<long>(rng() % 401) - 200, 1 + static_cast<long>(rng() % 20));
            Rational v = rat(static_cast<long>(rng() % 401) - 200, 1 + static_cast<long>(rng() % 20));
            if (u == v) continue;
            ++tested;
            Rational r0u = r[0](u), r1u = r[1](u), r2u = r[2](u);
            Rational r0v = r[0](v), r1v = r[1](v), r2v = r[2](v);
            bool nonzero_minor = (r0u * r1v - r1u * r0v) != 0 || (r0u * r2v - r2u * r0v) != 0 ||
                                 (r1u * r2v - r2u * r1v) != 0;
            CHECK(nonzero_minor);
        }
        CHECK(tested == 200);
    }
}

TEST_CASE("sign regions of T") {
    std::mt19937 rng(31);
    auto rand_rat = [&](long lo, long hi) -> Rational {
        return rat(lo * 10 + static_cast<long>(rng() % ((hi - lo) * 10 + 1)), 10);
    };
    for (int m : {3, 4, 5}) {
        auto fb = build_basis(m);
        int sgn_expected = (m % 2 == 0) ? 1 : -1;
        int done = 0;
        for (int it = 0; done < 300 && it < 3000; ++it) {
            // region (u+v) u v <= 0, (u,v) != 0
            Rational u = rand_rat(-3, 3), v = rand_rat(-3, 3);
            if (u == 0 && v == 0) continue;
            if (sgn(Rational((u + v) * u * v)) > 0) continue;
            CHECK(sgn(fb.T(u, v)) == sgn_expected);
            ++done;
        }
        for (int it = 0; it < 300; ++it) {
            // [0,1)^2 minus the corners
            Rational u = rat(static_cast<long>(rng() % 100), 101);
            Rational v = rat(static_cast<long>(rng() % 100), 101);
            if (!(u == 0 && v == 0)) CHECK(sgn(fb.T(u, v)) == sgn_expected);
            // (-inf, 0]^2 minus the origin
            Rational un = -u, vn = -v;
            if (!(un == 0 && vn == 0)) CHECK(sgn(fb.T(un, vn)) == sgn_expected);
            // [1, inf)^2 minus (1,1): sign +1 for m >= 3
            Rational up = u + 1, vp = v + 1;
            if (!(up == 1 && vp == 1)) CHECK(sgn(fb.T(up, vp)) == 1);
        }
    }
}
