#ifndef MC_RATFUN_HPP
#define MC_RATFUN_HPP

#include "mc/algebraic.hpp"
#include "mc/poly.hpp"

namespace mc {

// Reduced rational function: gcd(num, den) = 1, den monic and nonzero.
class RatFun {
  public:
    RatFun() : num_(), den_(Poly::constant(1)) {}
    RatFun(Poly num, Poly den);  // reduces
    static RatFun from_poly(const Poly& p) { return RatFun(p, Poly::constant(1)); }
    static RatFun constant(const Rational& c) { return from_poly(Poly::constant(c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    RatFun operator-() const;
    RatFun operator+(const RatFun&) const;
    RatFun operator-(const RatFun&) const;
    RatFun operator*(const RatFun&) const;
    RatFun operator/(const RatFun&) const;
    RatFun operator*(const Rational& a) const { return RatFun(num_ * a, den_); }
    RatFun operator/(const Rational& a) const;
    RatFun operator+(const Rational& a) const { return *this + constant(a); }
    RatFun operator-(const Rational& a) const { return *this - constant(a); }
    bool operator==(const RatFun&) const = default;

    RatFun derivative() const;
    // t -> t/(t-1) substitution, fully reduced.
    RatFun mobius_substitute() const;
    RatFun compose_affine(const Rational& a, const Rational& b) const;

    Rational operator()(const Rational& t) const;  // PoleAtPoint if den(t) == 0
    AlgebraicNumber operator()(const AlgebraicNumber& alpha) const;
    Value eval_value(const Value& v) const;

    std::string to_string(const std::string& var = "t") const;

  private:
    Poly num_, den_;
};

RatFun operator+(const Rational& a, const RatFun& f);
RatFun operator*(const Rational& a, const RatFun& f);

}  // namespace mc

#endif
