#include "mc/poly.hpp"

#include <algorithm>
#include <sstream>

namespace mc {

namespace {
const Rational kZero = 0;
}

Poly::Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
Poly Poly::identity() { return Poly({0, 1}); }

Poly Poly::monomial(int degree, const Rational& c) {
    std::vector<Rational> v(degree + 1, kZero);
    v[degree] = c;
    return Poly(std::move(v));
}

Poly Poly::linear(const Rational& a, const Rational& b) { return Poly({b, a}); }

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
}

const Rational& Poly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Poly Poly::operator-() const {
    std::vector<Rational> v(c_);
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < c_.size(); ++i) v[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Poly(std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, kZero);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    }
    return Poly(std::move(v));
}

Poly Poly::operator*(const Rational& a) const {
    if (a == 0) return Poly();
    std::vector<Rational> v(c_);
    for (auto& x : v) x *= a;
    return Poly(std::move(v));
}

Poly Poly::operator/(const Rational& a) const {
    if (a == 0) fail(ErrorKind::Internal, "division by zero scalar");
    return *this * (Rational(1) / a);
}

Poly operator*(const Rational& a, const Poly& p) { return p * a; }

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> v(c_.size() - 1, kZero);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(v));
}

Rational Poly::operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::pair<Rational, Rational> Poly::eval_interval(const Rational& lo, const Rational& hi) const {
    Rational alo = 0, ahi = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        // [alo,ahi] * [lo,hi] + coeff
        Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        Rational nlo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rational nhi = std::max(std::max(p1, p2), std::max(p3, p4));
        alo = nlo + *it;
        ahi = nhi + *it;
    }
    return {alo, ahi};
}

Poly Poly::pow(unsigned e) const {
    Poly acc = Poly::constant(1), base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

Poly Poly::shift(const Rational& a) const { return compose_affine(1, a); }

Poly Poly::compose_affine(const Rational& a, const Rational& b) const {
    // Horner in the affine argument.
    Poly acc;
    Poly lin = Poly::linear(a, b);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly::constant(*it);
    return acc;
}

Poly Poly::compose(const Poly& inner) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + Poly::constant(*it);
    return acc;
}

Poly Poly::mobius_star_cleared() const {
    // sum_i c_i t^i (t-1)^(d-i)
    if (is_zero()) return Poly();
    int d = degree();
    Poly acc;
    Poly tm1 = Poly({-1, 1});
    for (int i = 0; i <= d; ++i) {
        if (c_[i] == 0) continue;
        acc = acc + Poly::monomial(i, c_[i]) * tm1.pow(d - i);
    }
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this / leading();
}

std::pair<Poly, Rational> Poly::primitive() const {
    if (is_zero()) return {Poly(), rat(1)};
    Integer den_lcm = 1;
    for (const auto& q : c_)
        if (q != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    Integer num_gcd = 0;
    for (const auto& q : c_) {
        if (q == 0) continue;
        Integer scaled = q.get_num() * (den_lcm / q.get_den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    Rational s = make_rational(den_lcm, num_gcd);
    if (sgn(leading()) < 0) s = -s;
    return {*this * s, s};
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& q = c_[i];
        if (q == 0) continue;
        Rational a = q;
        if (!first) {
            os << (sgn(q) < 0 ? " - " : " + ");
            if (sgn(q) < 0) a = -q;
        }
        first = false;
        bool unit = (a == 1) && i != 0;
        if (!unit) os << mc::to_string(a);
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> div_rem(const Poly& num, const Poly& den) {
    if (den.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by zero polynomial");
    Poly rem = num;
    if (num.degree() < den.degree()) return {Poly(), rem};
    std::vector<Rational> q(num.degree() - den.degree() + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int k = rem.degree() - den.degree();
        Rational c = rem.leading() / den.leading();
        q[k] = c;
        rem = rem - den * Poly::monomial(k, c);
    }
    return {Poly(std::move(q)), rem};
}

Poly div_exact(const Poly& num, const Poly& den) {
    auto [q, r] = div_rem(num, den);
    if (!r.is_zero()) fail(ErrorKind::Internal, "inexact polynomial division");
    return q;
}

namespace {

using ZPoly = std::vector<Integer>;  // integer coefficients, low to high

ZPoly to_z(const Poly& p) {
    auto [prim, s] = p.primitive();
    ZPoly z(prim.degree() + 1);
    for (int i = 0; i <= prim.degree(); ++i) z[i] = prim.coeff(i).get_num();
    return z;
}

void z_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer z_content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

// Lazy pseudo-remainder: returns r with r = lc(b)^steps * (a mod b) and
// reports `steps`, the number of reduction steps taken.
ZPoly z_prem(const ZPoly& a, const ZPoly& b, int* steps_out = nullptr) {
    ZPoly r = a;
    z_trim(r);
    int db = static_cast<int>(b.size()) - 1;
    const Integer& lb = b.back();
    int steps = 0;
    while (static_cast<int>(r.size()) - 1 >= db) {
        int k = static_cast<int>(r.size()) - 1 - db;
        Integer lr = r.back();
        for (auto& c : r) c *= lb;
        for (int i = 0; i <= db; ++i) r[k + i] -= lr * b[i];
        z_trim(r);
        ++steps;
    }
    if (steps_out) *steps_out = steps;
    return r;
}

ZPoly to_z_keep_sign(const Poly& p) {
    // content-normalized only; leading sign preserved
    Integer den_lcm = 1;
    for (const auto& q : p.coeffs())
        if (q != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    ZPoly z(p.degree() + 1);
    for (int i = 0; i <= p.degree(); ++i) {
        Rational s = p.coeff(i) * Rational(den_lcm);
        z[i] = s.get_num();
    }
    Integer c = z_content(z);
    if (c != 0)
        for (auto& x : z) x /= c;
    return z;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly p = to_z(a), q = to_z(b);
    if (p.size() < q.size()) std::swap(p, q);
    while (!q.empty()) {
        ZPoly r = z_prem(p, q);
        Integer c = z_content(r);
        if (c != 0)
            for (auto& x : r) x /= c;
        p = std::move(q);
        q = std::move(r);
    }
    std::vector<Rational> v(p.size());
    for (size_t i = 0; i < p.size(); ++i) v[i] = Rational(p[i]);
    return Poly(std::move(v)).monic();
}

Poly square_free_part(const Poly& p) {
    if (p.is_zero()) return p;
    if (p.degree() == 0) return Poly::constant(1);
    return div_exact(p, gcd(p, p.derivative())).monic();
}

std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p) {
    // Yun's algorithm on the monic image.
    std::vector<std::pair<Poly, int>> out;
    if (p.is_zero() || p.degree() == 0) return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a = gcd(f, fp);
    Poly b = div_exact(f, a);
    Poly c = div_exact(fp, a);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = div_exact(b, g);
        Poly cq = div_exact(d, g);
        d = cq - b.derivative();
        ++i;
    }
    return out;
}

Rational resultant(const Poly& pa, const Poly& pb) {
    if (pa.is_zero() || pb.is_zero()) return 0;
    Poly A = pa, B = pb;
    Rational acc = 1;
    if (A.degree() < B.degree()) {
        if (((A.degree() * B.degree()) & 1) != 0) acc = -acc;
        std::swap(A, B);
    }
    while (true) {
        int da = A.degree(), db = B.degree();
        if (db == 0) return acc * pow_rat(B.coeff(0), da);
        Poly R = div_rem(A, B).second;
        if (R.is_zero()) return 0;
        // res(A,B) = (-1)^(da*db) * lc(B)^(da - deg R) * res(B, R)
        if (((da * db) & 1) != 0) acc = -acc;
        acc = acc * pow_rat(B.leading(), da - R.degree());
        A = std::move(B);
        B = std::move(R);
    }
}

SturmChain::SturmChain(const Poly& p) {
    if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "Sturm chain of zero polynomial");
    auto push = [&](const ZPoly& z) {
        std::vector<Rational> v(z.size());
        for (size_t i = 0; i < z.size(); ++i) v[i] = Rational(z[i]);
        chain_.push_back(Poly(std::move(v)));
    };
    ZPoly a = to_z_keep_sign(p);
    chain_.reserve(p.degree() + 1);
    push(a);
    if (p.degree() == 0) return;
    ZPoly b = to_z_keep_sign(p.derivative());
    push(b);
    while (static_cast<int>(b.size()) - 1 > 0) {
        int steps = 0;
        ZPoly r = z_prem(a, b, &steps);
        if (r.empty()) break;
        // r = lc(b)^steps * (a mod b); Sturm wants -(a mod b) up to a
        // positive factor, so flip by the sign of lc(b)^steps and negate.
        bool neg_scale = sgn(b.back()) < 0 && (steps & 1) != 0;
        for (auto& c : r) c = neg_scale ? c : -c;
        Integer cont = z_content(r);
        for (auto& c : r) c /= cont;
        push(r);
        a = std::move(b);
        b = to_z_keep_sign(chain_.back());
        // to_z_keep_sign of an integer poly with unit content is itself; reuse
    }
}

namespace {
int count_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}
}  // namespace

int SturmChain::variations_at(const Rational& x) const {
    std::vector<int> s;
    s.reserve(chain_.size());
    for (const auto& p : chain_) s.push_back(sgn(p(x)));
    return count_variations(s);
}

int SturmChain::variations_at_neg_inf() const {
    std::vector<int> s;
    for (const auto& p : chain_) {
        int lead = sgn(p.leading());
        s.push_back((p.degree() % 2 == 0) ? lead : -lead);
    }
    return count_variations(s);
}

int SturmChain::variations_at_pos_inf() const {
    std::vector<int> s;
    for (const auto& p : chain_) s.push_back(sgn(p.leading()));
    return count_variations(s);
}

int SturmChain::count_half_open(const Rational& a, const Rational& b) const {
    return variations_at(a) - variations_at(b);
}

Rational root_bound(const Poly& p) {
    if (p.is_zero() || p.degree() == 0) return 1;
    Rational maxr = 0;
    for (int i = 0; i < p.degree(); ++i) {
        Rational r = abs(p.coeff(i) / p.leading());
        if (r > maxr) maxr = r;
    }
    return maxr + 1;
}

}  // namespace mc
