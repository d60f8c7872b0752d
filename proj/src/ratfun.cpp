#include "mc/ratfun.hpp"

namespace mc {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::ZeroPolynomial, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = div_exact(num_, g);
        den_ = div_exact(den_, g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        num_ = num_ / lead;
        den_ = den_ / lead;
    }
}

RatFun RatFun::operator-() const {
    RatFun r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator/(const RatFun& o) const {
    if (o.is_zero()) fail(ErrorKind::ZeroPolynomial, "division by zero rational function");
    return RatFun(num_ * o.den_, den_ * o.num_);
}

RatFun RatFun::operator/(const Rational& a) const {
    if (a == 0) fail(ErrorKind::ZeroPolynomial, "division by zero scalar");
    return RatFun(num_ / a, den_);
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::mobius_substitute() const {
    if (is_zero()) return *this;
    int dn = num_.degree(), dd = den_.degree();
    Poly nstar = num_.mobius_star_cleared();
    Poly dstar = den_.mobius_star_cleared();
    Poly tm1 = Poly({-1, 1});
    // num(t*)/den(t*) = nstar * (t-1)^dd / (dstar * (t-1)^dn)
    if (dd >= dn)
        return RatFun(nstar * tm1.pow(dd - dn), dstar);
    return RatFun(nstar, dstar * tm1.pow(dn - dd));
}

RatFun RatFun::compose_affine(const Rational& a, const Rational& b) const {
    return RatFun(num_.compose_affine(a, b), den_.compose_affine(a, b));
}

Rational RatFun::operator()(const Rational& t) const {
    Rational d = den_(t);
    if (d == 0) fail(ErrorKind::PoleAtPoint, "pole at " + mc::to_string(t));
    return num_(t) / d;
}

AlgebraicNumber RatFun::operator()(const AlgebraicNumber& alpha) const {
    return eval_alg(num_, den_, alpha);
}

Value RatFun::eval_value(const Value& v) const {
    if (auto* r = std::get_if<Rational>(&v)) return Value((*this)(*r));
    AlgebraicNumber out = (*this)(std::get<AlgebraicNumber>(v));
    if (auto r = out.rational_value()) return Value(*r);
    return Value(out);
}

std::string RatFun::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

RatFun operator+(const Rational& a, const RatFun& f) { return RatFun::constant(a) + f; }
RatFun operator*(const Rational& a, const RatFun& f) { return RatFun(f.num() * a, f.den()); }

}  // namespace mc
