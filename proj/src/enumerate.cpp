#include "mc/enumerate.hpp"

#include <algorithm>
#include <numeric>

#include "mc/parallel.hpp"

namespace mc {

long euler_phi(long n) {
    if (n < 1) fail(ErrorKind::BadIndex, "phi needs n >= 1");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

int mobius_mu(long n) {
    if (n < 1) fail(ErrorKind::BadIndex, "mu needs n >= 1");
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

namespace {

// floor(k * ell) for a certified value ell >= 1
long floor_times(long k, const Value& ell) {
    if (auto r = value_rational(ell)) {
        Rational prod = *r * Rational(k);
        return static_cast<long>(floor_int(prod).get_si());
    }
    AlgebraicNumber a = std::get<AlgebraicNumber>(ell);
    for (int guard = 0; guard < 10000; ++guard) {
        Integer flo = floor_int(a.lo() * k), fhi = floor_int(a.hi() * k);
        if (flo == fhi) return flo.get_si();
        // an integer boundary c/k lies inside; decide whether k*ell == c
        Integer c = fhi;
        if (compare(a, make_rational(c, Integer(k))) == 0) return c.get_si();
        a = a.refined(a.width() / 2);
    }
    fail(ErrorKind::BudgetExceeded, "floor refinement budget exhausted");
}

// largest integer r with r <= M / ell (M rational, ell >= 1)
long floor_ratio(const Rational& M, const Value& ell) {
    if (auto r = value_rational(ell)) return static_cast<long>(floor_int(M / *r).get_si());
    AlgebraicNumber a = std::get<AlgebraicNumber>(ell);
    for (int guard = 0; guard < 10000; ++guard) {
        // M/ell decreasing in ell; ell in [lo, hi] (positive)
        Integer flo = floor_int(M / a.hi()), fhi = floor_int(M / a.lo());
        if (flo == fhi) return flo.get_si();
        Integer c = fhi;
        if (c != 0 && compare(a, M / Rational(c)) == 0) return c.get_si();
        a = a.refined(a.width() / 2);
    }
    fail(ErrorKind::BudgetExceeded, "floor refinement budget exhausted");
}

long count_W(const Rational& M, const Value& ell, const std::vector<long>& floors) {
    // |W_ell(M)| = sum_k (n - s_k), n = floor(M), k = 1..floor(M/ell)
    long n = static_cast<long>(floor_int(M).get_si());
    long r = floor_ratio(M, ell);
    long total = 0;
    for (long k = 1; k <= r; ++k) {
        long sk = floors[static_cast<size_t>(k)];
        if (n > sk) total += n - sk;
    }
    return total;
}

}  // namespace

PairCount count_pairs(const Value& ell, int m) {
    if (m < 1) fail(ErrorKind::BadIndex, "pair counting needs m >= 1");
    if (value_compare(ell, rat(1)) < 0) fail(ErrorKind::BadIndex, "pair counting needs ell >= 1");
    PairCount pc;
    pc.ell = ell;
    pc.m = m;

    std::vector<long> floors(static_cast<size_t>(m) + 1, 0);
    for (long k = 1; k <= m; ++k) floors[static_cast<size_t>(k)] = floor_times(k, ell);

    // direct count, sharded over k
    pc.direct = par::parallel_reduce<long>(
        m, 0L,
        [&](long idx) {
            long k = idx + 1;
            long sk = floors[static_cast<size_t>(k)];
            long local = 0;
            for (long d = sk + 1; d <= m; ++d)
                if (std::gcd(k, d) == 1) ++local;
            return local;
        },
        std::plus<long>());

    // inclusion-exclusion over scaled copies
    long mob = 0;
    for (long j = 1; j <= m; ++j) {
        int mu = mobius_mu(j);
        if (mu == 0) continue;
        mob += mu * count_W(Rational(m) / Rational(j), ell, floors);
    }
    pc.mobius = mob;
    if (pc.direct != pc.mobius)
        fail(ErrorKind::Internal, "pair count cross-check failed (direct != inclusion-exclusion)");
    return pc;
}

std::vector<std::pair<long, long>> list_pairs(const Value& ell, int m) {
    std::vector<std::pair<long, long>> out;
    for (long k = 1; k <= m; ++k) {
        long sk = floor_times(k, ell);
        if (sk >= m) break;
        for (long d = std::max(sk + 1, k + 1); d <= m; ++d)
            if (std::gcd(k, d) == 1) out.emplace_back(k, d);
    }
    return out;
}

std::string family_name(PointFamily f) {
    switch (f) {
        case PointFamily::First: return "First";
        case PointFamily::I: return "I";
        case PointFamily::H: return "H";
        case PointFamily::T: return "T";
        case PointFamily::D: return "D";
    }
    return "?";
}

namespace {

Value affine_of(const Value& x, const Rational& a, const Rational& b) {
    if (auto r = value_rational(x)) return Value(Rational(a * *r + b));
    AlgebraicNumber out = std::get<AlgebraicNumber>(x).scaled(a).shifted(b);
    if (auto r = out.rational_value()) return Value(*r);
    return Value(out);
}

// sign of P(alpha) - r without building the value
int compare_P_at(const FamilyBasis& fb, const AlgebraicNumber& alpha, const Rational& r) {
    Poly num = fb.P.num() - fb.P.den() * r;
    return sign_at(num, alpha) * sign_at(fb.P.den(), alpha);
}

std::vector<Rational> farey_interior(int m) {
    std::vector<Rational> out;
    for (long d = 2; d <= m; ++d)
        for (long n = 1; n < d; ++n)
            if (std::gcd(n, d) == 1) out.push_back(rat(n, d));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

EnumerationResult enum_I(int m, bool count_only) {
    if (m < 2) fail(ErrorKind::BadDimension, "family I needs m >= 2");
    EnumerationResult res;
    res.m = m;
    res.family = PointFamily::I;
    res.count_only = count_only;
    long expected = 0;
    for (long d = 2; d <= m; ++d) expected += euler_phi(d);
    res.count = expected;
    if (count_only) return res;

    const FamilyBasis& fb = cached_basis(m);
    auto fracs = farey_interior(m);
    if (static_cast<long>(fracs.size()) != expected)
        fail(ErrorKind::Internal, "Farey count mismatch");
    res.points = par::parallel_map<EnumPoint>(static_cast<long>(fracs.size()), [&](long i) {
        const Rational& p0 = fracs[static_cast<size_t>(i)];
        Poly num = fb.P.num() - fb.P.den() * p0;
        Window win;
        win.lo = rat(1);
        win.hi = rat(2);
        auto roots = isolate_real_roots(num, win);
        if (roots.size() != 1)
            fail(ErrorKind::IsolationFailure, "family I inversion expects a unique preimage");
        EnumPoint pt;
        pt.p = p0;
        pt.multiplicity = 1;
        AlgebraicNumber u = roots.front().root;
        pt.u = u.rational_value() ? Value(*u.rational_value()) : Value(u);
        pt.v = value_mobius_star(pt.u);
        return pt;
    });
    return res;
}

EnumerationResult enum_H(int m, bool count_only) {
    if (m < 3 || m % 2 == 0) fail(ErrorKind::NotDefinedForParity, "family H exists for odd m >= 3");
    const FamilyBasis& fb = cached_basis(m);
    const ConstantSet& cs = cached_constants(m);
    EnumerationResult res;
    res.m = m;
    res.family = PointFamily::H;
    res.count_only = count_only;

    const AlgebraicNumber z = *cs.z;
    const AlgebraicNumber u_plus = *cs.u_plus;
    const AlgebraicNumber u_plus_star = u_plus.mobius_star();

    // range endpoints: P(u_plus_star) = -P(u_plus) and z/(2-z)
    auto cmp_lower = [&](const Rational& p0) {
        // sign of p0 - P(u_plus_star) = sign of P(u_plus) - (-p0)
        return compare_P_at(fb, u_plus, -p0);
    };
    auto cmp_upper = [&](const Rational& p0) {
        // sign of p0 - z/(2-z) = [2 p0 - (1+p0) z]/(2-z), and 2-z > 0
        Poly num({2 * p0, -(p0 + 1)});
        return sign_at(num, z);
    };

    struct Cand {
        Rational p0;
        int mult;
    };
    std::vector<Cand> cands;
    for (long d = 1; d <= m; ++d) {
        for (long n = -2 * d + 1; n < 0; ++n) {
            if (std::gcd(std::abs(n), d) != 1) continue;
            Rational p0 = rat(n, d);
            int lo = cmp_lower(p0);  // sign of p0 - P(u+*)
            if (lo < 0) continue;
            int hi = cmp_upper(p0);  // sign of p0 - z/(2-z)
            if (hi >= 0) continue;
            int mult;
            if (lo == 0)
                mult = 1;  // the minimum itself
            else if (p0 < -1)
                mult = 2;
            else
                mult = 1;  // [-1, z/(2-z))
            cands.push_back({p0, mult});
        }
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) { return a.p0 < b.p0; });
    res.count = 0;
    for (const auto& c : cands) res.count += c.mult;
    if (count_only) return res;

    std::vector<std::vector<EnumPoint>> rows =
        par::parallel_map<std::vector<EnumPoint>>(static_cast<long>(cands.size()), [&](long i) {
            const auto& c = cands[static_cast<size_t>(i)];
            Poly num = fb.P.num() - fb.P.den() * c.p0;
            auto roots = isolate_real_roots(num);
            std::vector<EnumPoint> here;
            for (const auto& r : roots) {
                if (compare(r.root, z) >= 0) continue;  // beam is u < z
                EnumPoint pt;
                pt.p = c.p0;
                pt.multiplicity = c.mult;
                pt.u = r.root.rational_value() ? Value(*r.root.rational_value()) : Value(r.root);
                pt.v = value_mobius_star(pt.u);
                here.push_back(pt);
            }
            if (static_cast<int>(here.size()) != c.mult)
                fail(ErrorKind::IsolationFailure, "family H multiplicity mismatch at p = " + to_string(c.p0));
            return here;
        });
    for (auto& r : rows)
        for (auto& pt : r) res.points.push_back(pt);
    return res;
}

EnumerationResult enum_T(int m, bool count_only) {
    if (m < 3 || m % 2 == 0) fail(ErrorKind::NotDefinedForParity, "family T exists for odd m >= 3");
    const FamilyBasis& fb = cached_basis(m);
    const ConstantSet& cs = cached_constants(m);
    EnumerationResult res;
    res.m = m;
    res.family = PointFamily::T;
    res.count_only = count_only;

    Value ell = cs.ell->rational_value() ? Value(*cs.ell->rational_value()) : Value(*cs.ell);
    auto pairs = list_pairs(ell, m);
    res.count = 2 * static_cast<long>(pairs.size());
    if (count_only) return res;

    std::vector<std::vector<EnumPoint>> rows =
        par::parallel_map<std::vector<EnumPoint>>(static_cast<long>(pairs.size()), [&](long i) {
            auto [k, d] = pairs[static_cast<size_t>(i)];
            Rational q = rat(k - d, d);
            // v = a u + b with a = (1+q)/(1-q), b = -2q/(1-q)
            Rational a = (1 + q) / (1 - q), b = -2 * q / (1 - q);
            Poly tq = fb.T.substitute_v_affine(a, b);
            Rational ulim = 2 * q / (1 + q);  // v > 0 iff u > ulim (for q in (-1,0))
            Window win;
            win.hi = rat(0);
            auto roots = isolate_real_roots(tq, win);
            std::vector<EnumPoint> here;
            for (const auto& r : roots) {
                if (compare(r.root, ulim) <= 0) continue;
                EnumPoint pt;
                pt.p = q;
                pt.multiplicity = 2;
                pt.u = r.root.rational_value() ? Value(*r.root.rational_value()) : Value(r.root);
                pt.v = affine_of(pt.u, a, b);
                here.push_back(pt);
            }
            if (here.size() != 2)
                fail(ErrorKind::IsolationFailure, "family T fiber expects exactly two points");
            return here;
        });
    for (auto& r : rows)
        for (auto& pt : r) res.points.push_back(pt);
    std::sort(res.points.begin(), res.points.end(), [](const EnumPoint& x, const EnumPoint& y) {
        if (*x.p != *y.p) return *x.p < *y.p;
        return value_compare(x.u, y.u) < 0;
    });
    return res;
}

EnumerationResult enum_D(int m, long height_bound) {
    if (m < 2) fail(ErrorKind::BadDimension, "family D needs m >= 2");
    if (height_bound < 1) fail(ErrorKind::BadBound, "height bound must be >= 1");
    const FamilyBasis& fb = cached_basis(m);
    const ConstantSet& cs = cached_constants(m);
    EnumerationResult res;
    res.m = m;
    res.family = PointFamily::D;
    res.truncation_height = height_bound;

    auto mk = [&](const std::optional<Rational>& p0, int mult, const Value& u) {
        EnumPoint pt;
        pt.p = p0;
        pt.multiplicity = mult;
        pt.u = u;
        pt.v = (value_compare(u, rat(0)) == 0) ? Value(rat(0)) : value_mobius_star(u);
        res.points.push_back(pt);
    };

    if (m % 2 != 0) {
        // values fill [0, P(u_minus_star)] inside [0, 1/m)
        const AlgebraicNumber u_minus = *cs.u_minus;
        mk(rat(0), 1, Value(rat(0)));  // the origin
        auto cmp_top = [&](const Rational& p0) { return compare_P_at(fb, u_minus, -p0); };
        // sign of p0 - P(u_minus_star) = sign of P(u_minus) - (-p0) ... P(u-*) = -P(u-)
        const AlgebraicNumber w = *cs.w;
        for (long d = 2; d <= height_bound; ++d) {
            for (long n = 1; n < d; ++n) {
                if (std::gcd(n, d) != 1) continue;
                Rational p0 = rat(n, d);
                if (Rational(p0 * m) >= 1) continue;  // values lie in [0, 1/m)
                int c = cmp_top(p0);
                if (c > 0) continue;
                int mult = (c == 0) ? 1 : 2;
                Poly num = fb.P.num() - fb.P.den() * p0;
                Window win;
                win.hi = rat(0);
                auto roots = isolate_real_roots(num, win);
                int found = 0;
                for (const auto& r : roots) {
                    if (compare(r.root, w) <= 0) continue;  // component is (w, 0]
                    Value u = r.root.rational_value() ? Value(*r.root.rational_value()) : Value(r.root);
                    mk(p0, mult, u);
                    ++found;
                }
                if (found != mult)
                    fail(ErrorKind::IsolationFailure, "family D (odd) multiplicity mismatch");
            }
        }
    } else {
        const AlgebraicNumber z = *cs.z;
        // distinguished point (z, z*)
        mk(std::nullopt, 1, Value(z));
        mk(rat(0), 1, Value(rat(0)));  // origin, p = 0
        // branch u < z: values in (-inf, -1), denominators <= m
        for (long d = 1; d <= m; ++d) {
            for (long n = -height_bound * d; n < -d; ++n) {
                if (std::gcd(std::abs(n), d) != 1) continue;
                Rational p0 = rat(n, d);
                Poly num = fb.P.num() - fb.P.den() * p0;
                auto roots = isolate_real_roots(num);
                int found = 0;
                for (const auto& r : roots) {
                    if (compare(r.root, z) >= 0) continue;
                    Value u = r.root.rational_value() ? Value(*r.root.rational_value()) : Value(r.root);
                    mk(p0, 1, u);
                    ++found;
                }
                if (found != 1) fail(ErrorKind::IsolationFailure, "family D (even, outer) expects one point");
            }
        }
        // branch z < u <= 0: values in [0, inf), denominators <= height
        for (long d = 1; d <= height_bound; ++d) {
            for (long n = 1; n <= height_bound * d; ++n) {
                if (std::gcd(n, d) != 1) continue;
                Rational p0 = rat(n, d);
                if (p0 >= Rational(height_bound)) continue;
                Poly num = fb.P.num() - fb.P.den() * p0;
                Window win;
                win.hi = rat(0);
                auto roots = isolate_real_roots(num, win);
                int found = 0;
                for (const auto& r : roots) {
                    if (compare(r.root, z) <= 0) continue;
                    Value u = r.root.rational_value() ? Value(*r.root.rational_value()) : Value(r.root);
                    mk(p0, 1, u);
                    ++found;
                }
                if (found != 1) fail(ErrorKind::IsolationFailure, "family D (even, inner) expects one point");
            }
        }
    }
    std::sort(res.points.begin(), res.points.end(), [](const EnumPoint& x, const EnumPoint& y) {
        if (x.p.has_value() != y.p.has_value()) return !x.p.has_value();
        if (x.p && y.p && *x.p != *y.p) return *x.p < *y.p;
        return value_compare(x.u, y.u) < 0;
    });
    res.count = static_cast<long>(res.points.size());
    return res;
}

namespace {

// certified sign of a polynomial evaluated against a bracketed root known to
// be the unique sign-change root of `witness` inside [lo, hi]
struct Bracket {
    Poly witness;  // sign changes exactly once in [lo, hi]
    Rational lo, hi;
    void refine_once() {
        Rational mid = (lo + hi) / 2;
        if (sgn(witness(mid)) == sgn(witness(lo)))
            lo = mid;
        else
            hi = mid;
    }
    // sign of probe at the root; exact tie handling via a cheap gcd when the
    // probe has small degree
    int sign_of(const Poly& probe) {
        for (int it = 0; it < 4000; ++it) {
            auto [plo, phi] = probe.eval_interval(lo, hi);
            if (sgn(plo) > 0) return 1;
            if (sgn(phi) < 0) return -1;
            // tie test: common root of probe and witness inside the bracket
            if (probe.degree() <= 4) {
                Poly g = gcd(probe, witness);
                if (g.degree() > 0) {
                    SturmChain chain(square_free_part(g));
                    if (chain.count_half_open(lo, hi) > 0) return 0;
                }
            }
            refine_once();
        }
        fail(ErrorKind::BudgetExceeded, "bracket sign refinement budget exhausted");
    }
};

}  // namespace

long count_H_fast(int m) {
    if (m < 3 || m % 2 == 0) fail(ErrorKind::NotDefinedForParity, "family H exists for odd m >= 3");
    // basis-free: everything here works through O(m) rational evaluations
    std::vector<Rational> sc(m, Rational(0));
    for (int j = 1; j <= m; ++j)
        sc[j - 1] = Rational(j) / Rational(m) * Rational(binomial(2L * m - j - 1, m - 1));
    const Poly sig(std::move(sc));
    const Poly tm1({-1, 1});
    const Poly E = tm1 * sig;
    const Rational sigma0 = sig(0);
    const Poly fnum = Poly({-2, 1}) * Poly::monomial(2 * m - 1, 1);

    // bracket z: sign change of 2 (t-1)^m (G - E(0)) on (x_infinity, 0)
    Poly gz = (tm1.pow(m) * E) * rat(2) - fnum + tm1.pow(m) * (sigma0 * 2);
    Bracket bz{gz, rat(-5), rat(-1, 2)};
    while (sgn(gz(bz.hi)) == sgn(gz(bz.lo))) bz.hi = bz.hi / 2;  // find a point in (z, 0)
    for (int i = 0; i < 60; ++i) bz.refine_once();

    // pointwise profile value on (0, 1): no symbolic reduction needed
    auto P_at = [&](const Rational& t) -> Rational {
        Rational Ft = fnum(t) / pow_rat(Rational(t - 1), m);
        Rational Gt = E(t) - Ft / 2;
        Rational lhs = 2 * (rat(2) - Rational(1) / Rational(m)) * (t - 1) * (1 + sigma0 / Gt) - t * t;
        return lhs / (t * (t - 2));
    };
    // slope sign on (0, 1) through the defining equation:
    // t(t-1) P' = m t P^2 + (m-1)(t-2) P - t, and t(t-1) < 0 there
    auto pdot_sign = [&](const Rational& t) -> int {
        Rational P = P_at(t);
        Rational rhs = Rational(m) * t * P * P + Rational(m - 1) * (t - 2) * P - t;
        return -sgn(rhs);
    };
    Rational t0;
    bool found = false;
    for (long den = 8; den <= 4096 && !found; den *= 2) {
        for (long nn = 1; nn < den; nn += 2) {
            Rational t = rat(nn, den);
            if (pdot_sign(t) > 0) {
                t0 = t;
                found = true;
                break;
            }
        }
    }
    if (!found) fail(ErrorKind::BudgetExceeded, "no rising point of the profile located");
    // bisect the slope-sign change on [t0, 1)
    Rational bu_lo = t0, bu_hi = rat(1023, 1024);
    while (pdot_sign(bu_hi) > 0) bu_hi = (bu_hi + 1) / 2;
    auto refine_bu = [&]() {
        Rational mid = (bu_lo + bu_hi) / 2;
        (pdot_sign(mid) > 0 ? bu_lo : bu_hi) = mid;
    };
    for (int i = 0; i < 48; ++i) refine_bu();

    // P(u_plus) enclosure through the decreasing upper branch of the slope
    // quadratic m u P^2 + (m-1)(u-2) P - u = 0
    auto p_plus_enclosure = [&](const Rational& t, bool upper) -> Rational {
        // P_+(t) = [-(m-1)(t-2) + sqrt(disc)] / (2 m t), t in (0,1)
        Rational disc = pow_rat(Rational(m - 1) * (t - 2), 2) + 4 * Rational(m) * t * t;
        auto [slo, shi] = nth_root_enclosure(disc, 2, pow_rat(rat(1, 10), 12));
        Rational num = -Rational(m - 1) * (t - 2) + (upper ? shi : slo);
        return num / (2 * Rational(m) * t);
    };
    // u_plus in [bu_lo, bu_hi]; P_+ decreasing => P(u_plus) in [P_+(hi), P_+(lo)]
    Rational pu_lo = p_plus_enclosure(bu_hi, false), pu_hi = p_plus_enclosure(bu_lo, true);
    // P(u_plus_star) = -P(u_plus) in [-pu_hi, -pu_lo]

    long count = 0;
    for (long d = 1; d <= m; ++d) {
        for (long n = -2 * d + 1; n < 0; ++n) {
            if (std::gcd(std::abs(n), d) != 1) continue;
            Rational p0 = rat(n, d);
            // p0 vs P(u_plus_star): refine the u_plus bracket on demand
            int lo_sign;
            for (int it = 0;; ++it) {
                if (p0 < -pu_hi) {
                    lo_sign = -1;
                    break;
                }
                if (p0 > -pu_lo) {
                    lo_sign = 1;
                    break;
                }
                if (it > 2000) fail(ErrorKind::BudgetExceeded, "H-range endpoint tie unresolved");
                refine_bu();
                pu_lo = p_plus_enclosure(bu_hi, false);
                pu_hi = p_plus_enclosure(bu_lo, true);
            }
            if (lo_sign < 0) continue;
            // p0 vs z/(2-z): sign of 2 p0 - (1+p0) z at z
            Poly num({2 * p0, -(p0 + 1)});
            int hi_sign = bz.sign_of(num);
            if (hi_sign >= 0) continue;
            count += (p0 < -1) ? 2 : 1;
        }
    }
    return count;
}

const Rational& pi_squared() {
    static const Rational v = parse_rational("9.869604401089358618834490999876");
    return v;
}

std::vector<AsymptoticsRow> asymptotics_report(const std::vector<int>& ms) {
    std::vector<AsymptoticsRow> rows;
    auto [s2lo, s2hi] = nth_root_enclosure(rat(2), 2, pow_rat(rat(1, 10), 20));
    Rational sqrt2 = (s2lo + s2hi) / 2;
    Rational lim_I = Rational(3) / pi_squared();
    Rational lim_H = Rational(9) * sqrt2 * (sqrt2 + 1) / pi_squared();
    Rational lim_T = (Rational(6) - 4 * sqrt2) / pi_squared();
    for (int m : ms) {
        if (m < 2) fail(ErrorKind::BadDimension, "report needs m >= 2");
        Rational m2 = Rational(m) * Rational(m);
        {
            AsymptoticsRow r;
            r.m = m;
            r.family = "I";
            r.count = enum_I(m, true).count;
            r.scaled = Rational(r.count) / m2;
            r.limit = lim_I;
            rows.push_back(r);
        }
        if (m % 2 != 0 && m >= 3) {
            AsymptoticsRow rh;
            rh.m = m;
            rh.family = "H";
            rh.count = m <= 21 ? enum_H(m, true).count : count_H_fast(m);
            rh.scaled = Rational(rh.count) / m2;
            rh.limit = lim_H;
            rows.push_back(rh);
            AsymptoticsRow rt;
            rt.m = m;
            rt.family = "T";
            rt.count = enum_T(m, true).count;
            rt.scaled = Rational(rt.count) / m2;
            rt.limit = lim_T;
            rows.push_back(rt);
        }
    }
    return rows;
}

}  // namespace mc
