#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mc/algebraic.hpp"
#include "mc/ratfun.hpp"

using namespace mc;

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("22/7") == rat(22, 7));
    CHECK(parse_rational("-3") == rat(-3));
    CHECK(parse_rational("2.3") == rat(23, 10));
    CHECK(parse_rational("1e-6") == rat(1, 1000000));
    CHECK(parse_rational("-1.5e2") == rat(-150));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK(decimal_string(rat(1, 3), 5) == "0.33333");
    CHECK(decimal_string(rat(-1, 2), 3) == "-0.5");
    CHECK(to_string(rat(5, 3)) == "5/3");
}

TEST_CASE("simplest rational in interval") {
    CHECK(simplest_rational_between(rat(1, 3), rat(1, 2)) == rat(2, 5));
    CHECK(simplest_rational_between(rat(-1, 2), rat(1, 2)) == rat(0));
    CHECK(simplest_rational_between(rat(3), rat(4)) == rat(7, 2));
    // brute-force minimality on random intervals
    std::mt19937 rng(7);
    for (int it = 0; it < 200; ++it) {
        long a = static_cast<long>(rng() % 2000) - 1000, b = 1 + static_cast<long>(rng() % 60);
        Rational lo = rat(a, b), hi = lo + rat(1 + static_cast<long>(rng() % 50), 1 + static_cast<long>(rng() % 40));
        Rational best = simplest_rational_between(lo, hi);
        REQUIRE(lo < best);
        REQUIRE(best < hi);
        bool found_smaller = false;
        for (long d = 1; d < best.get_den().get_si() && !found_smaller; ++d) {
            Integer nlo = floor_int(lo * d), nhi = ceil_int(hi * d);
            for (Integer n = nlo; n <= nhi; ++n) {
                Rational cand = make_rational(n, Integer(d));
                if (lo < cand && cand < hi) found_smaller = true;
            }
        }
        CHECK_FALSE(found_smaller);
    }
}

TEST_CASE("polynomial algebra basics") {
    Poly p({1, 2, 1});  // (t+1)^2
    CHECK(p.degree() == 2);
    CHECK(p(rat(2)) == rat(9));
    CHECK(p.derivative() == Poly({2, 2}));
    CHECK(square_free_part(p) == Poly({1, 1}));
    auto yun = square_free_decomposition(Poly({0, 0, 1}) * Poly({1, 1}));  // t^2 (t+1)
    REQUIRE(yun.size() == 2);
    CHECK(yun[0].second == 1);
    CHECK(yun[1].second == 2);
    CHECK(gcd(Poly({-1, 0, 1}), Poly({1, 1})) == Poly({1, 1}));
    CHECK(resultant(Poly({-2, 0, 1}), Poly({-3, 0, 1})) == rat(1));   // res(t^2-2, t^2-3)
    CHECK(resultant(Poly({-1, 1}), Poly({-2, 1})) == rat(-1));        // res(t-1, t-2) = g(1) = -1
}

TEST_CASE("resultant equals product over roots") {
    // res(f, g) = lc(f)^deg g * prod f-roots g(root)
    Poly f = Poly({-1, 1}) * Poly({-2, 1});  // roots 1, 2
    Poly g({-5, 0, 1});                      // t^2 - 5
    CHECK(resultant(f, g) == (rat(1) - rat(5)) * (rat(4) - rat(5)));
}

TEST_CASE("root isolation is complete on random rational-root products") {
    std::mt19937 rng(11);
    for (int it = 0; it < 60; ++it) {
        std::vector<Rational> roots;
        Poly p = Poly::constant(1);
        int k = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
            Rational r = rat(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
            roots.push_back(r);
            p = p * Poly({-r, 1});
        }
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        auto iso = isolate_real_roots(p);
        REQUIRE(iso.size() == roots.size());
        for (size_t i = 0; i < roots.size(); ++i)
            CHECK(compare(iso[i].root, roots[i]) == 0);
        // isolating intervals pairwise disjoint
        for (size_t i = 0; i + 1 < iso.size(); ++i) CHECK(iso[i].root.hi() < iso[i + 1].root.lo());
    }
}

TEST_CASE("isolation with window and multiplicities") {
    // t^2 (t+1): roots -1 simple, 0 double
    Poly p = Poly({0, 0, 1}) * Poly({1, 1});
    auto all = isolate_real_roots(p);
    REQUIRE(all.size() == 2);
    CHECK(compare(all[0].root, rat(-1)) == 0);
    CHECK(all[0].multiplicity == 1);
    CHECK(compare(all[1].root, rat(0)) == 0);
    CHECK(all[1].multiplicity == 2);
    Window w;
    w.lo = rat(-1);  // exclusive
    CHECK(isolate_real_roots(p, w).size() == 1);
    CHECK_THROWS_AS(isolate_real_roots(Poly()), Error);
}

TEST_CASE("algebraic comparison is exact") {
    // sqrt2 vs 3/2
    AlgebraicNumber sqrt2 = isolate_real_roots(Poly({-2, 0, 1}), Window{rat(0), {}}).front().root;
    CHECK(compare(sqrt2, rat(3, 2)) < 0);
    CHECK(compare(sqrt2, rat(7, 5)) > 0);
    // equality through different defining polynomials: sqrt2 as root of
    // (t^2-2)(t-3) restricted near 1.4
    Poly q = Poly({-2, 0, 1}) * Poly({-3, 1});
    AlgebraicNumber other = isolate_real_roots(q, Window{rat(1), rat(2)}).front().root;
    CHECK(compare(sqrt2, other) == 0);
    CHECK(compare(sqrt2.negated(), sqrt2) < 0);
    // strict total order on a random triple
    AlgebraicNumber sqrt3 = isolate_real_roots(Poly({-3, 0, 1}), Window{rat(0), {}}).front().root;
    CHECK(compare(sqrt2, sqrt3) < 0);
    CHECK(compare(sqrt3, rat(2)) < 0);
}

TEST_CASE("rational detection inside algebraic numbers") {
    // (t^2 - 4)(t^2 - 2) has rational root 2 and irrational sqrt2
    Poly p = Poly({-4, 0, 1}) * Poly({-2, 0, 1});
    auto roots = isolate_real_roots(p, Window{rat(0), {}});
    REQUIRE(roots.size() == 2);
    auto r1 = roots[0].root.rational_value();
    REQUIRE_FALSE(r1.has_value());  // sqrt2
    auto r2 = roots[1].root.rational_value();
    REQUIRE(r2.has_value());
    CHECK(*r2 == rat(2));
}

TEST_CASE("refinement and sign") {
    AlgebraicNumber sqrt2 = isolate_real_roots(Poly({-2, 0, 1}), Window{rat(0), {}}).front().root;
    AlgebraicNumber fine = sqrt2.refined_digits(10);
    CHECK(fine.width() < pow_rat(rat(1, 10), 10));
    CHECK(fine.sign() == 1);
    CHECK(sqrt2.negated().sign() == -1);
    CHECK(AlgebraicNumber::from_rational(rat(0)).sign() == 0);
    CHECK(decimal_string(fine.approx(8), 6) == "1.414214");
}

TEST_CASE("mobius substitution is an involution on random rational functions") {
    std::mt19937 rng(3);
    for (int it = 0; it < 40; ++it) {
        int dn = 1 + static_cast<int>(rng() % 4), dd = static_cast<int>(rng() % 3);
        std::vector<Rational> nc(dn + 1), dc(dd + 1);
        for (auto& c : nc) c = rat(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5));
        for (auto& c : dc) c = rat(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5));
        Poly num(std::move(nc)), den(std::move(dc));
        if (num.is_zero() || den.is_zero()) continue;
        RatFun f(num, den);
        CHECK(f.mobius_substitute().mobius_substitute() == f);
    }
    RatFun one = RatFun::constant(rat(1));
    CHECK(one.mobius_substitute() == one);
}

TEST_CASE("rational function algebra") {
    RatFun F(Poly({0, 0, 0, -2, 1}), Poly({1, -2, 1}));  // (t-2)t^3/(t-1)^2
    RatFun back = F.mobius_substitute().mobius_substitute();
    CHECK(back == F);
    CHECK(F.mobius_substitute() == -F);  // the m = 2 antisymmetry
    // eval distributes over ring operations at random rational points
    std::mt19937 rng(5);
    RatFun G(Poly({1, 1}), Poly({3, 0, 1}));
    for (int it = 0; it < 50; ++it) {
        Rational t = rat(static_cast<long>(rng() % 2001) - 1000, 1 + static_cast<long>(rng() % 50));
        if (F.den()(t) == 0 || G.den()(t) == 0) continue;
        CHECK((F * G + F)(t) == F(t) * G(t) + F(t));
    }
    // fixed points of the substitution
    RatFun id = RatFun::from_poly(Poly::identity());
    RatFun sub = id.mobius_substitute();
    CHECK(sub(rat(0)) == rat(0));
    CHECK(sub(rat(2)) == rat(2));
    // evaluation at an algebraic point: F(sqrt2) as a certified value
    AlgebraicNumber sqrt2 = isolate_real_roots(Poly({-2, 0, 1}), Window{rat(0), {}}).front().root;
    AlgebraicNumber val = F(sqrt2);
    // (sqrt2-2)*2*sqrt2/(sqrt2-1)^2 = (2 sqrt2 - 4) sqrt2 / (3 - 2 sqrt2) = (4-4 sqrt2)/(3-2 sqrt2)
    // = (4-4s)(3+2s)/(9-8) = 12+8s-12s-8*2 = -4 - 4 s => value = -4-4 sqrt2
    AlgebraicNumber expect = sqrt2.scaled(rat(-4)).shifted(rat(-4));
    CHECK(compare(val, expect) == 0);
}

TEST_CASE("algebraic evaluation detects poles") {
    AlgebraicNumber sqrt2 = isolate_real_roots(Poly({-2, 0, 1}), Window{rat(0), {}}).front().root;
    RatFun pole(Poly::constant(1), Poly({-2, 0, 1}));  // 1/(t^2-2)
    CHECK_THROWS_AS(pole(sqrt2), Error);
}
