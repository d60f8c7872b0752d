#include "mc/constants.hpp"

#include <map>
#include <mutex>

namespace mc {

namespace {

AlgebraicNumber the_only(std::vector<RootWithMult> roots, const char* what) {
    if (roots.size() != 1)
        fail(ErrorKind::IsolationFailure,
             std::string(what) + ": expected a unique root, found " + std::to_string(roots.size()));
    return roots.front().root;
}

std::vector<RootWithMult> negative_roots(const Poly& p, bool exclude_zero = true) {
    Window w;
    w.hi = rat(0);  // exclusive
    auto roots = isolate_real_roots(p, w);
    if (!exclude_zero) return roots;
    std::vector<RootWithMult> out;
    for (auto& r : roots)
        if (r.root.sign() < 0) out.push_back(r);
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) fail(ErrorKind::IsolationFailure, what);
}

}  // namespace

ConstantSet compute_constants(int m) {
    if (m < 2) fail(ErrorKind::BadDimension, "constants need m >= 2");
    const FamilyBasis fb = build_basis(m);
    ConstantSet cs;
    cs.m = m;
    cs.x_infinity = AlgebraicNumber::from_isolated(Poly({-4, 4, 1}), rat(-5), rat(-4));
    cs.ell_infinity = AlgebraicNumber::from_isolated(Poly({9, -18, 1}), rat(17), rat(18));

    const Poly tm1({-1, 1});
    Poly g_num = (tm1.pow(m) * fb.E) * rat(2) - Poly({-2, 1}) * Poly::monomial(2 * m - 1, 1);
    Poly gdot_num = g_num.derivative() * tm1 - g_num * Rational(m);

    if (m % 2 == 0) {
        // E-characterized constant: the unique real zero of Sigma.
        auto sig_roots = isolate_real_roots(fb.Sigma);
        cs.ztilde = the_only(sig_roots, "even-m zero of Sigma");
        require(cs.ztilde->sign() < 0, "even-m E-constant must be negative");

        // G-characterized constant: two real zeros, z < 0 < z* < 1.
        auto zeros = isolate_real_roots(g_num);
        require(zeros.size() == 2, "even m: G must have exactly two real zeros");
        require(zeros[0].root.sign() < 0, "even m: lower G zero must be negative");
        require(zeros[1].root.sign() > 0 && compare(zeros[1].root, rat(1)) < 0,
                "even m: upper G zero must lie in (0,1)");
        require(compare(zeros[0].root.mobius_star(), zeros[1].root) == 0,
                "even m: G zeros must be exchanged by the involution");
        cs.z = zeros[0].root;
        return cs;
    }

    // odd m
    cs.s = the_only(isolate_real_roots(fb.Sigma.derivative()), "critical point of Sigma");
    require(cs.s->sign() < 0, "critical point of Sigma must be negative");

    cs.ztilde = the_only(negative_roots(fb.E - Poly::constant(fb.E(0))), "negative level-crossing of E");
    cs.wtilde = the_only(negative_roots(fb.E.derivative()), "negative critical point of E");

    Poly gz_num = g_num + tm1.pow(m) * (fb.sigma0 * 2);
    cs.z = the_only(negative_roots(gz_num), "negative level-crossing of G");
    cs.w = the_only(negative_roots(gdot_num), "negative critical point of G");

    cs.x = the_only(negative_roots(fb.S.num()), "negative zero of S");
    cs.y = the_only(negative_roots(fb.W), "negative zero of W");

    {
        Window w01;
        w01.lo = rat(0);
        w01.hi = rat(1);
        auto crit = isolate_real_roots(fb.P.derivative().num(), w01);
        require(crit.size() == 2, "P must have exactly two interior critical points");
        cs.u_minus = crit[0].root;
        cs.u_plus = crit[1].root;
    }

    cs.q_star = eval_alg(Poly({0, 2, -1}), Poly({2, -2, 1}), *cs.x);  // (2-t)t / (t^2-2t+2)
    cs.ell = eval_alg(Poly({2, -2, 1}) * rat(1, 2), Poly::constant(1), *cs.x);
    cs.chi = eval_alg(Poly::monomial(2, 1), Poly({1, -1}), *cs.x);
    cs.zeta = eval_alg(Poly::monomial(2, 1), Poly({1, -1}), *cs.z);

    // ordering facts; failures here mean the isolation contradicts the theory
    require(compare(*cs.ztilde, *cs.s) <= 0, "order: ztilde <= s");
    require(compare(*cs.s, *cs.wtilde) < 0, "order: s < wtilde");
    require(cs.wtilde->sign() < 0, "order: wtilde < 0");
    require(compare(*cs.z, *cs.w) < 0, "order: z < w");
    require(cs.w->sign() < 0, "order: w < 0");
    require(compare(*cs.z, *cs.ztilde) < 0, "order: z < ztilde");
    require(compare(*cs.x, *cs.z) < 0, "order: x < z");
    {
        AlgebraicNumber ws = cs.w->mobius_star();
        AlgebraicNumber zs = cs.z->mobius_star();
        AlgebraicNumber xs = cs.x->mobius_star();
        require(cs.u_minus->sign() > 0, "order: 0 < u_minus");
        require(compare(*cs.u_minus, ws) < 0, "order: u_minus < w*");
        require(compare(ws, zs) < 0, "order: w* < z*");
        require(compare(zs, xs) < 0, "order: z* < x*");
        require(compare(xs, *cs.u_plus) < 0, "order: x* < u_plus");
        require(compare(*cs.u_plus, rat(1)) < 0, "order: u_plus < 1");
    }
    require(compare(*cs.x, cs.x_infinity) > 0, "order: x_infinity < x");

    // zeros of P: exactly {0, w, w*, 2} for odd m
    {
        auto zeros = isolate_real_roots(fb.P.num());
        require(zeros.size() == 4, "odd m: P must have exactly four real zeros");
        require(compare(zeros[0].root, *cs.w) == 0, "odd m: first P zero must be w");
        require(compare(zeros[1].root, rat(0)) == 0, "odd m: P(0) = 0");
        require(compare(zeros[2].root, cs.w->mobius_star()) == 0, "odd m: interior P zero must be w*");
        require(compare(zeros[3].root, rat(2)) == 0, "odd m: P(2) = 0");
    }
    return cs;
}

CertifiedBound certify_chi_bound(int m, const Rational& sigma, BoundDirection dir) {
    if (m < 3 || m % 2 == 0) fail(ErrorKind::NotDefinedForParity, "chi bounds need odd m >= 3");
    if (sgn(sigma) <= 0) fail(ErrorKind::BadIndex, "sigma must be positive");
    CertifiedBound out;
    out.m = m;
    out.sigma = sigma;
    out.direction = dir;

    Integer sum = 0;
    Rational spow = 1;
    for (int j = 0; j <= m - 1; ++j) {
        Rational term = catalan_sigma0(m - 1 - j, true) * spow;
        if ((j & 1) != 0) term = -term;
        Integer b = dir == BoundDirection::Lower ? floor_int(term) : ceil_int(term);
        out.term_bounds.push_back(b);
        sum += b;
        spow *= sigma;
    }
    out.sum_bound = sum;
    out.K_value = Rational(2 * (2 * m - 3)) / (Rational(m - 1) * sigma + Rational(2 * (2 * m - 1)));
    Rational threshold = -catalan_sigma0(m - 1) * out.K_value;
    out.certified = dir == BoundDirection::Lower ? Rational(sum) > threshold : Rational(sum) < threshold;
    return out;
}

std::pair<Rational, Rational> bounds_ell(int m) {
    if (m < 3 || m % 2 == 0) fail(ErrorKind::NotDefinedForParity, "ell bounds need odd m >= 3");
    const Rational tol = pow_rat(rat(1, 10), 12);
    auto [s2lo, s2hi] = nth_root_enclosure(rat(2), 2, tol);
    Rational ell_inf_lo = 9 + 6 * s2lo, ell_inf_hi = 9 + 6 * s2hi;
    auto [qlo, qhi] = nth_root_enclosure(Rational(m), 4, tol);
    // lower: (1 - 17/(q+8)) * ell_inf, increasing in q
    Rational flo = 1 - Rational(17) / (qlo + 8), fhi = 1 - Rational(17) / (qhi + 8);
    Rational cands[4] = {flo * ell_inf_lo, flo * ell_inf_hi, fhi * ell_inf_lo, fhi * ell_inf_hi};
    Rational lower = cands[0];
    for (const auto& c : cands) lower = std::min(lower, c);
    Rational upper = (1 - Rational(1) / Rational(m)) * ell_inf_hi;
    return {lower, upper};
}

namespace {
std::mutex cache_mu;
std::map<int, FamilyBasis> basis_cache;
std::map<int, ConstantSet> constants_cache;
}  // namespace

const FamilyBasis& cached_basis(int m) {
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = basis_cache.find(m);
    if (it == basis_cache.end()) it = basis_cache.emplace(m, build_basis(m)).first;
    return it->second;
}

const ConstantSet& cached_constants(int m) {
    {
        std::lock_guard<std::mutex> lk(cache_mu);
        auto it = constants_cache.find(m);
        if (it != constants_cache.end()) return it->second;
    }
    ConstantSet cs = compute_constants(m);  // outside the lock
    std::lock_guard<std::mutex> lk(cache_mu);
    auto it = constants_cache.find(m);
    if (it == constants_cache.end()) it = constants_cache.emplace(m, std::move(cs)).first;
    return it->second;
}

}  // namespace mc
