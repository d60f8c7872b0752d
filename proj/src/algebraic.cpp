#include "mc/algebraic.hpp"

#include <algorithm>

namespace mc {

long& refinement_budget() {
    static long budget = 100000;
    return budget;
}

namespace {

// Bisection step on [lo, hi] for square-free p with a single sign-change root.
// Maintains p(lo) * p(hi) < 0 (or returns a point interval on exact hit).
void bisect_once(const Poly& p, Rational& lo, Rational& hi) {
    Rational mid = (lo + hi) / 2;
    int sm = sgn(p(mid));
    if (sm == 0) {
        lo = mid;
        hi = mid;
        return;
    }
    if (sm == sgn(p(lo)))
        lo = mid;
    else
        hi = mid;
}

}  // namespace

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
    Poly p({-r.get_num(), Rational(r.get_den())});
    return AlgebraicNumber(p, r, r);
}

AlgebraicNumber AlgebraicNumber::from_isolated(const Poly& p, const Rational& lo, const Rational& hi) {
    if (lo > hi) fail(ErrorKind::DegenerateInterval, "isolating interval reversed");
    return AlgebraicNumber(p, lo, hi);
}

AlgebraicNumber AlgebraicNumber::refined(const Rational& max_width) const {
    if (is_point() || width() < max_width) return *this;
    Rational lo = lo_, hi = hi_;
    // endpoints are non-roots by the class invariant, so signs differ
    while (hi - lo >= max_width) {
        bisect_once(defining_, lo, hi);
        if (lo == hi) break;
    }
    return AlgebraicNumber(defining_, lo, hi);
}

AlgebraicNumber AlgebraicNumber::refined_digits(int digits) const {
    if (digits < 1) digits = 1;
    return refined(pow_rat(rat(1, 10), digits));
}

Rational AlgebraicNumber::approx(int digits) const {
    AlgebraicNumber r = refined_digits(digits + 2);
    return (r.lo_ + r.hi_) / 2;
}

int AlgebraicNumber::sign() const {
    if (sgn(lo_) > 0) return 1;
    if (sgn(hi_) < 0) return -1;
    // zero inside the interval: alpha == 0 iff defining(0) == 0
    if (defining_(0) == 0 && lo_ <= 0 && 0 <= hi_) {
        // 0 is a root of the defining polynomial in the interval; since the
        // interval isolates exactly one root, alpha == 0.
        return 0;
    }
    AlgebraicNumber r = *this;
    while (sgn(r.lo_) <= 0 && sgn(r.hi_) >= 0) {
        if (r.is_point()) return sgn(r.lo_);
        Rational lo = r.lo_, hi = r.hi_;
        bisect_once(r.defining_, lo, hi);
        r = AlgebraicNumber(r.defining_, lo, hi);
    }
    return sgn(r.lo_) > 0 ? 1 : -1;
}

std::optional<Rational> AlgebraicNumber::rational_value() const {
    if (is_point()) return lo_;
    if (defining_.degree() == 1) return -defining_.coeff(0) / defining_.coeff(1);
    // A rational root p/q of the integer defining polynomial has q | leading,
    // so q <= |leading|. Refine until the interval is narrower than 1/(2*lc^2):
    // then it contains at most one rational with denominator <= |leading|,
    // and the simplest rational in the interval finds it if present.
    Rational lc = abs(defining_.leading());
    Rational target = Rational(1) / (2 * lc * lc);
    AlgebraicNumber r = refined(target);
    if (r.is_point()) return r.lo_;
    Rational cand = simplest_rational_between(r.lo_, r.hi_);
    if (Rational(cand.get_den()) <= lc && defining_(cand) == 0) return cand;
    return std::nullopt;
}

AlgebraicNumber AlgebraicNumber::negated() const {
    if (is_point()) return from_rational(-lo_);
    std::vector<Rational> v(defining_.coeffs());
    for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
    return AlgebraicNumber(Poly(std::move(v)), -hi_, -lo_);
}

AlgebraicNumber AlgebraicNumber::scaled(const Rational& k) const {
    if (k == 0) fail(ErrorKind::Internal, "scaling an algebraic number by zero");
    if (is_point()) return from_rational(Rational(lo_ * k));
    Poly q = defining_.compose_affine(Rational(1) / k, 0).primitive().first;
    Rational nlo = lo_ * k, nhi = hi_ * k;
    if (nlo > nhi) std::swap(nlo, nhi);
    return AlgebraicNumber(q, nlo, nhi);
}

AlgebraicNumber AlgebraicNumber::shifted(const Rational& b) const {
    if (is_point()) return from_rational(Rational(lo_ + b));
    Poly q = defining_.shift(-b).primitive().first;
    return AlgebraicNumber(q, lo_ + b, hi_ + b);
}

AlgebraicNumber AlgebraicNumber::mobius_star() const {
    if (is_point()) {
        if (lo_ == 1) fail(ErrorKind::PoleAtOne, "mobius_star at 1");
        return from_rational(lo_ / (lo_ - 1));
    }
    if (defining_(1) == 0 && lo_ <= 1 && 1 <= hi_) fail(ErrorKind::PoleAtOne, "mobius_star at 1");
    AlgebraicNumber a = *this;
    // interval must stay strictly on one side of 1
    while (a.lo_ <= 1 && 1 <= a.hi_) {
        Rational lo = a.lo_, hi = a.hi_;
        bisect_once(a.defining_, lo, hi);
        a = AlgebraicNumber(a.defining_, lo, hi);
    }
    Poly q = a.defining_.mobius_star_cleared();
    q = square_free_part(q).primitive().first;
    // t -> t/(t-1) is involutive and decreasing on each side of 1.
    Rational nlo = a.hi_ / (a.hi_ - 1), nhi = a.lo_ / (a.lo_ - 1);
    if (nlo > nhi) std::swap(nlo, nhi);
    // Endpoints of the image might coincide with roots of q only if the
    // original endpoints were roots of the original defining polynomial,
    // which the invariant excludes.
    return AlgebraicNumber(q, nlo, nhi);
}

std::vector<RootWithMult> isolate_real_roots(const Poly& p, const Window& window) {
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "root isolation of zero polynomial");
    std::vector<RootWithMult> out;
    if (p.degree() == 0) return out;

    auto factors = square_free_decomposition(p);
    for (const auto& [factor, mult] : factors) {
        Poly f = factor.primitive().first;
        if (f.degree() == 0) continue;
        SturmChain chain(f);
        Rational bound = root_bound(f);
        Rational lo = -bound, hi = bound;
        if (window.lo && *window.lo > lo) lo = *window.lo;
        if (window.hi && *window.hi < hi) hi = *window.hi;
        if (lo >= hi) continue;

        // exclusive window bounds: drop roots exactly at lo or hi
        struct Seg {
            Rational a, b;
            int count;
        };
        int total = chain.count_half_open(lo, hi);
        if (f(hi) == 0) total -= 1;
        if (total <= 0) continue;
        std::vector<Seg> work{{lo, hi, total}};
        while (!work.empty()) {
            Seg s = work.back();
            work.pop_back();
            if (s.count == 0) continue;
            if (s.count == 1) {
                // shrink so both endpoints are non-roots, then emit
                Rational a = s.a, b = s.b;
                bool emitted = false;
                while (f(a) == 0 || f(b) == 0) {
                    Rational mid = (a + b) / 2;
                    if (f(mid) == 0) {
                        out.push_back({AlgebraicNumber::from_rational(mid), mult});
                        emitted = true;
                        break;
                    }
                    int in_right = chain.count_half_open(mid, b) - (f(b) == 0 ? 1 : 0);
                    if (in_right == 1)
                        a = mid;
                    else
                        b = mid;
                }
                if (!emitted) out.push_back({AlgebraicNumber::from_isolated(f, a, b), mult});
                continue;
            }
            Rational mid = (s.a + s.b) / 2;
            int right = chain.count_half_open(mid, s.b);
            if (f(s.b) == 0) right -= 1;
            int left = s.count - right;
            if (f(mid) == 0) {
                // mid is a root: emit and exclude from both halves
                out.push_back({AlgebraicNumber::from_rational(mid), mult});
                left -= 1;
            }
            if (left > 0) work.push_back({s.a, mid, left});
            if (right > 0) work.push_back({mid, s.b, right});
        }
    }
    std::sort(out.begin(), out.end(), [](const RootWithMult& x, const RootWithMult& y) {
        return compare(x.root, y.root) < 0;
    });
    // tighten the bisection brackets to a sane width, then make the
    // intervals pairwise disjoint (roots of distinct square-free factors may
    // start with overlapping enclosures)
    for (auto& r : out) r.root = r.root.refined(rat(1, 64));
    for (size_t i = 0; i + 1 < out.size(); ++i) {
        while (out[i].root.hi() >= out[i + 1].root.lo()) {
            out[i].root = out[i].root.refined(out[i].root.width() / 2);
            out[i + 1].root = out[i + 1].root.refined(out[i + 1].root.width() / 2);
        }
    }
    return out;
}

int sign_at(const Poly& p, const AlgebraicNumber& alpha) {
    if (p.is_zero()) return 0;
    if (alpha.is_point()) return sgn(p(alpha.lo()));
    Poly g = gcd(p, alpha.defining());
    if (g.degree() > 0) {
        SturmChain chain(square_free_part(g));
        int c = chain.count_half_open(alpha.lo(), alpha.hi());
        // alpha's defining polynomial has exactly one root in the interval,
        // and roots of g are roots of it; so c >= 1 means that root is alpha.
        if (g(alpha.lo()) == 0) c += 1;
        if (c > 0) return 0;
    }
    // p(alpha) != 0: interval arithmetic with refinement decides the sign.
    AlgebraicNumber a = alpha;
    for (long guard = 0; guard < refinement_budget(); ++guard) {
        auto [vlo, vhi] = p.eval_interval(a.lo(), a.hi());
        if (sgn(vlo) > 0) return 1;
        if (sgn(vhi) < 0) return -1;
        if (a.is_point()) return sgn(p(a.lo()));
        a = a.refined(a.width() / 2);
    }
    fail(ErrorKind::BudgetExceeded, "sign_at refinement budget exhausted");
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_point() && b.is_point()) return sgn(a.lo() - b.lo());
    if (b.is_point()) return -compare(b, a);
    if (a.is_point()) {
        // a rational vs b algebraic
        if (a.lo() < b.lo()) return -1;
        if (a.lo() > b.hi()) return 1;
        if (sign_at(b.defining(), AlgebraicNumber::from_rational(a.lo())) == 0) {
            // a is a root of b's defining polynomial inside b's interval: equal
            return 0;
        }
        AlgebraicNumber bb = b;
        while (a.lo() >= bb.lo() && a.lo() <= bb.hi()) bb = bb.refined(bb.width() / 2);
        return a.lo() < bb.lo() ? -1 : 1;
    }
    // equality test by common factor inside the interval intersection
    Rational ilo = std::max(a.lo(), b.lo()), ihi = std::min(a.hi(), b.hi());
    if (ilo <= ihi) {
        Poly g = gcd(a.defining(), b.defining());
        if (g.degree() > 0) {
            SturmChain chain(square_free_part(g));
            int c = chain.count_half_open(ilo, ihi) + (g(ilo) == 0 ? 1 : 0);
            if (c > 0) return 0;
        }
    }
    AlgebraicNumber x = a, y = b;
    while (std::max(x.lo(), y.lo()) <= std::min(x.hi(), y.hi())) {
        x = x.refined(x.width() / 2);
        y = y.refined(y.width() / 2);
        if (x.is_point() && y.is_point()) return sgn(x.lo() - y.lo());
    }
    return x.hi() < y.lo() ? -1 : 1;
}

int compare(const AlgebraicNumber& a, const Rational& r) {
    return compare(a, AlgebraicNumber::from_rational(r));
}

Poly resultant_param(const Poly& P, const Poly& N, const Poly& D) {
    if (P.is_zero() || P.degree() == 0) fail(ErrorKind::Internal, "resultant_param needs deg P >= 1");
    int n = P.degree();
    int dh = std::max(N.degree(), D.degree());
    // pick n+1 integer samples where deg_t(N - y*D) stays equal to dh
    std::vector<Rational> ys, vals;
    long y = 0;
    while (static_cast<int>(ys.size()) < n + 1) {
        Rational yq(y);
        Rational lead = N.coeff(dh) - yq * D.coeff(dh);
        if (lead != 0) {
            Poly h = N - D * yq;
            vals.push_back(resultant(P, h));
            ys.push_back(yq);
        }
        y = y > 0 ? -y : -y + 1;  // 0, 1, -1, 2, -2, ...
    }
    // Lagrange interpolation (Newton form would do as well).
    Poly acc;
    for (int i = 0; i <= n; ++i) {
        Poly basis = Poly::constant(1);
        Rational denom = 1;
        for (int j = 0; j <= n; ++j) {
            if (j == i) continue;
            basis = basis * Poly({-ys[j], 1});
            denom *= ys[i] - ys[j];
        }
        acc = acc + basis * (vals[i] / denom);
    }
    return acc;
}

AlgebraicNumber eval_alg(const Poly& num, const Poly& den, const AlgebraicNumber& alpha) {
    if (den.is_zero()) fail(ErrorKind::PoleAtPoint, "zero denominator");
    if (sign_at(den, alpha) == 0) fail(ErrorKind::PoleAtPoint, "denominator vanishes at the point");
    if (alpha.is_point()) {
        const Rational t = alpha.lo();
        return AlgebraicNumber::from_rational(num(t) / den(t));
    }
    if (auto r = alpha.rational_value())
        return AlgebraicNumber::from_rational(num(*r) / den(*r));

    Poly g = gcd(num, den);
    Poly N = num, D = den;
    if (g.degree() > 0) {
        N = div_exact(N, g);
        D = div_exact(D, g);
        if (sign_at(D, alpha) == 0) fail(ErrorKind::PoleAtPoint, "denominator vanishes at the point");
    }
    Poly R = resultant_param(alpha.defining(), N, D);
    if (R.is_zero()) fail(ErrorKind::Internal, "parametric resultant vanished identically");
    Poly defining = square_free_part(R).primitive().first;
    SturmChain chain(defining);

    AlgebraicNumber a = alpha;
    for (long guard = 0; guard < refinement_budget(); ++guard) {
        auto [nlo, nhi] = N.eval_interval(a.lo(), a.hi());
        auto [dlo, dhi] = D.eval_interval(a.lo(), a.hi());
        if (sgn(dlo) * sgn(dhi) > 0) {
            Rational c1 = nlo / dlo, c2 = nlo / dhi, c3 = nhi / dlo, c4 = nhi / dhi;
            Rational vlo = std::min(std::min(c1, c2), std::min(c3, c4));
            Rational vhi = std::max(std::max(c1, c2), std::max(c3, c4));
            // widen slightly so endpoints are not roots of the defining poly
            while (defining(vlo) == 0 || defining(vhi) == 0) {
                Rational pad = (vhi - vlo == 0) ? rat(1, 1000000) : (vhi - vlo) / 1024;
                vlo -= pad;
                vhi += pad;
            }
            int roots = chain.count_half_open(vlo, vhi);
            if (roots == 1)
                return AlgebraicNumber::from_isolated(defining, vlo, vhi).refined(rat(1, 1024));
        }
        a = a.refined(a.width() / 2);
    }
    fail(ErrorKind::BudgetExceeded, "eval_alg refinement budget exhausted");
}

bool value_is_rational(const Value& v) { return std::holds_alternative<Rational>(v); }

std::optional<Rational> value_rational(const Value& v) {
    if (auto* r = std::get_if<Rational>(&v)) return *r;
    return std::get<AlgebraicNumber>(v).rational_value();
}

AlgebraicNumber value_as_algebraic(const Value& v) {
    if (auto* r = std::get_if<Rational>(&v)) return AlgebraicNumber::from_rational(*r);
    return std::get<AlgebraicNumber>(v);
}

int value_sign(const Value& v) {
    if (auto* r = std::get_if<Rational>(&v)) return sgn(*r);
    return std::get<AlgebraicNumber>(v).sign();
}

int value_compare(const Value& a, const Value& b) {
    if (value_is_rational(a) && value_is_rational(b))
        return sgn(std::get<Rational>(a) - std::get<Rational>(b));
    return compare(value_as_algebraic(a), value_as_algebraic(b));
}

int value_compare(const Value& a, const Rational& b) {
    if (auto* r = std::get_if<Rational>(&a)) return sgn(*r - b);
    return compare(std::get<AlgebraicNumber>(a), b);
}

Value value_mobius_star(const Value& v) {
    if (auto* r = std::get_if<Rational>(&v)) {
        if (*r == 1) fail(ErrorKind::PoleAtOne, "mobius at 1");
        return Value(*r / (*r - 1));
    }
    AlgebraicNumber a = std::get<AlgebraicNumber>(v).mobius_star();
    if (auto r = a.rational_value()) return Value(*r);
    return Value(a);
}

Value value_neg(const Value& v) {
    if (auto* r = std::get_if<Rational>(&v)) return Value(Rational(-*r));
    return Value(std::get<AlgebraicNumber>(v).negated());
}

Rational value_approx(const Value& v, int digits) {
    if (auto* r = std::get_if<Rational>(&v)) return *r;
    return std::get<AlgebraicNumber>(v).approx(digits);
}

int sign_at_value(const Poly& p, const Value& v) {
    if (auto* r = std::get_if<Rational>(&v)) return sgn(p(*r));
    return sign_at(p, std::get<AlgebraicNumber>(v));
}

std::string value_brief(const Value& v, int digits) {
    if (auto* r = std::get_if<Rational>(&v)) return to_string(*r);
    return decimal_string(value_approx(v, digits), digits) + "~";
}

}  // namespace mc
