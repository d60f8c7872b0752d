#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <random>

#include "mc/enumerate.hpp"

using namespace mc;

TEST_CASE("number-theory helpers") {
    const long phis[] = {1, 1, 2, 2, 4, 2};
    const int mus[] = {1, -1, -1, 0, -1, 1};
    for (long n = 1; n <= 6; ++n) {
        CHECK(euler_phi(n) == phis[n - 1]);
        CHECK(mobius_mu(n) == mus[n - 1]);
    }
    CHECK_THROWS_AS(euler_phi(0), Error);
    // interior Farey count by brute force
    long brute = 0;
    for (long d = 2; d <= 5; ++d)
        for (long n = 1; n < d; ++n)
            if (std::gcd(n, d) == 1) ++brute;
    long viaphi = 0;
    for (long d = 2; d <= 5; ++d) viaphi += euler_phi(d);
    CHECK(brute == 9);
    CHECK(viaphi == 9);
}

TEST_CASE("pair counting: direct equals inclusion-exclusion") {
    CHECK(count_pairs(Value(rat(1)), 5).direct == 9);
    std::mt19937 rng(61);
    for (int it = 0; it < 40; ++it) {
        long num = 1 + static_cast<long>(rng() % 60), den = 1 + static_cast<long>(rng() % 3);
        Rational ell = rat(num, den);
        if (ell < 1) ell = ell + 1;
        int m = 1 + static_cast<int>(rng() % 120);
        auto pc = count_pairs(Value(ell), m);  // cross-check is internal
        CHECK(pc.direct == pc.mobius);
    }
    // algebraic ell: the curve constants near integers
    for (int m : {9, 11}) {
        const auto& cs = cached_constants(m);
        auto pc = count_pairs(Value(*cs.ell), m);
        CHECK(pc.direct == pc.mobius);
    }
    CHECK(count_pairs(Value(*cached_constants(9).ell), 9).direct == 1);   // only (1, 9)
    CHECK(count_pairs(Value(*cached_constants(11).ell), 11).direct == 2); // (1,10), (1,11)
    CHECK_THROWS_AS(count_pairs(Value(rat(1, 2)), 5), Error);
}

TEST_CASE("first-family enumeration inverts the Farey fractions") {
    auto res = enum_I(2);
    REQUIRE(res.count == 1);
    REQUIRE(res.points.size() == 1);
    CHECK(*res.points[0].p == rat(1, 2));
    Rational u = value_approx(res.points[0].u, 8), v = value_approx(res.points[0].v, 8);
    CHECK(abs(Rational(u - parse_rational("1.5604"))) < rat(1, 1000));
    // counts follow the totient sums
    for (int m : {3, 5, 8}) {
        long expected = 0;
        for (long d = 2; d <= m; ++d) expected += euler_phi(d);
        CHECK(enum_I(m, true).count == expected);
    }
    // closure: every enumerated point is on the curve with the stated value
    auto res5 = enum_I(5);
    for (const auto& pt : res5.points) {
        auto cl = classify(5, pt.u, pt.v);
        CHECK(cl.component == Component::I);
        REQUIRE(cl.p_defined);
        CHECK(value_compare(*cl.p_value, *pt.p) == 0);
        CHECK(is_p_rational(cl).p_rational);
    }
}

TEST_CASE("H-family enumeration carries the forced values") {
    for (int m : {3, 5, 7}) {
        auto res = enum_H(m);
        bool has_minus_one = false, has_shifted = false;
        for (const auto& pt : res.points) {
            CHECK(*pt.p > rat(-2));
            CHECK(*pt.p < rat(0));
            if (*pt.p == rat(-1)) has_minus_one = true;
            if (*pt.p == rat(-1) + rat(1, m)) has_shifted = true;
        }
        CHECK(has_minus_one);
        CHECK(has_shifted);
        CHECK(res.count >= 2);
        // multiplicity-1 values appear once, multiplicity-2 values twice
        std::map<Rational, int> seen;
        for (const auto& pt : res.points) seen[*pt.p] += 1;
        for (const auto& pt : res.points) CHECK(seen[*pt.p] == pt.multiplicity);
    }
    CHECK_THROWS_AS(enum_H(4), Error);
    // closure at m = 5
    auto res5 = enum_H(5);
    for (const auto& pt : res5.points) {
        auto cl = classify(5, pt.u, pt.v);
        CHECK(cl.component == Component::X_H);
        CHECK(is_p_rational(cl).p_rational);
        // the preimage satisfies the defining equation exactly
        const FamilyBasis& fb = cached_basis(5);
        Poly num = fb.P.num() - fb.P.den() * *pt.p;
        CHECK(sign_at_value(num, pt.u) == 0);
    }
}

TEST_CASE("fast H count agrees with the exact count") {
    for (int m : {3, 5, 7, 9, 11}) CHECK(count_H_fast(m) == enum_H(m, true).count);
}

TEST_CASE("T-family enumeration matches the counting identity") {
    CHECK(enum_T(3).count == 0);
    CHECK(enum_T(5).count == 0);
    CHECK(enum_T(7).count == 0);
    auto t9 = enum_T(9);
    CHECK(t9.count == 2);
    REQUIRE(t9.points.size() == 2);
    CHECK(*t9.points[0].p == rat(-8, 9));
    CHECK(*t9.points[1].p == rat(-8, 9));
    auto t11 = enum_T(11);
    CHECK(t11.count == 4);
    CHECK_THROWS_AS(enum_T(6), Error);

    // witnesses are exchanged by the duality involution
    for (const auto& res : {t9, t11}) {
        for (size_t i = 0; i + 1 < res.points.size(); i += 2) {
            const auto& a = res.points[i];
            const auto& b = res.points[i + 1];
            REQUIRE(*a.p == *b.p);
            auto [du, dv] = dual_point(a.u, a.v);
            CHECK(value_compare(du, b.u) == 0);
            CHECK(value_compare(dv, b.v) == 0);
        }
        // closure through the classifier
        for (const auto& pt : res.points) {
            auto cl = classify(res.m, pt.u, pt.v);
            CHECK(cl.component == Component::X_T);
            REQUIRE(cl.p_defined);
            CHECK(value_compare(*cl.p_value, *pt.p) == 0);
            CHECK(is_p_rational(cl).p_rational);
        }
    }

    // the crossing point is never enumerated: k ell_m < d is strict
    const auto& cs9 = cached_constants(9);
    for (const auto& pt : t9.points) CHECK(value_compare(pt.u, Value(*cs9.x)) != 0);
}

TEST_CASE("T-family counts meet the lower bound for odd m in 19..31") {
    for (int m = 19; m <= 31; m += 2) {
        long count = enum_T(m, true).count;
        CHECK(count >= 2 * (m - 17));
    }
    // the full witness construction agrees with the pair count at m = 19
    auto t19 = enum_T(19);
    CHECK(t19.count == 2 * count_pairs(Value(*cached_constants(19).ell), 19).direct);
    CHECK(static_cast<long>(t19.points.size()) == t19.count);
}

TEST_CASE("large-m H-family density approaches its limit") {
    long c = count_H_fast(301);
    Rational ratio = Rational(c) * pi_squared() / Rational(301L * 301L);
    Rational limit = parse_rational("3.113389");
    CHECK(abs(Rational(ratio - limit)) < limit / 10);  // within 10 percent
}

TEST_CASE("D-family enumeration for odd m stays inside [0, 1/m)") {
    auto res = enum_D(3, 12);
    REQUIRE(res.truncation_height == 12);
    bool has_origin = false;
    for (const auto& pt : res.points) {
        REQUIRE(pt.p.has_value());
        CHECK(*pt.p >= rat(0));
        CHECK(*pt.p * 3 < rat(1));
        if (*pt.p == rat(0)) {
            has_origin = true;
            CHECK(value_compare(pt.u, rat(0)) == 0);
            CHECK(pt.multiplicity == 1);
        } else {
            CHECK(pt.multiplicity == 2);
        }
        auto cl = classify(3, pt.u, pt.v);
        CHECK((cl.component == Component::D || cl.component == Component::Origin));
        CHECK(is_p_rational(cl).p_rational);
    }
    CHECK(has_origin);
    CHECK_THROWS_AS(enum_D(3, 0), Error);
}

TEST_CASE("D-family enumeration for even m covers both branches") {
    auto res = enum_D(2, 4);
    bool has_distinguished = false, has_outer = false, has_inner = false;
    for (const auto& pt : res.points) {
        if (!pt.p.has_value()) {
            has_distinguished = true;
            continue;
        }
        if (*pt.p < rat(-1)) {
            has_outer = true;
            CHECK(pt.p->get_den() <= 2);  // denominators bounded by m on the outer branch
        }
        if (*pt.p >= rat(0)) has_inner = true;
        auto cl = classify(2, pt.u, pt.v);
        CHECK((cl.component == Component::D || cl.component == Component::Origin));
        CHECK(is_p_rational(cl).p_rational);
    }
    CHECK(has_distinguished);
    CHECK(has_outer);
    CHECK(has_inner);
}

TEST_CASE("asymptotics report emits the three limits") {
    auto rows = asymptotics_report({9, 11});
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].family == "I");
    CHECK(rows[1].family == "H");
    CHECK(rows[2].family == "T");
    CHECK(abs(Rational(rows[0].limit - parse_rational("0.3040"))) < rat(1, 1000));
    CHECK(abs(Rational(rows[1].limit - parse_rational("3.1130"))) < rat(1, 1000));
    CHECK(abs(Rational(rows[2].limit - parse_rational("0.0348"))) < rat(1, 1000));
}

TEST_CASE("coprime-pair density approaches its limit") {
    // |P(1,m)| * pi^2 / m^2 drifts toward 3 over m = 100, 300, 1000
    Rational prev_err = rat(100);
    for (int m : {100, 300, 1000}) {
        auto pc = count_pairs(Value(rat(1)), m);
        Rational ratio = Rational(pc.direct) * pi_squared() / (Rational(m) * Rational(m));
        Rational err = abs(Rational(ratio - 3));
        CHECK(err < prev_err + rat(1, 10));
        prev_err = err;
    }
    auto pc = count_pairs(Value(rat(1)), 1000);
    Rational ratio = Rational(pc.direct) * pi_squared() / Rational(1000000);
    CHECK(abs(Rational(ratio - 3)) < rat(15, 100));  // within 5 percent of 3
}
