#ifndef MC_POLY2_HPP
#define MC_POLY2_HPP

#include <map>
#include <string>
#include <utility>

#include "mc/ratfun.hpp"

namespace mc {

// Sparse bivariate polynomial in (u, v) over the rationals.
// No zero coefficients are stored.
class Poly2 {
  public:
    using Key = std::pair<int, int>;  // (deg_u, deg_v)
    using Map = std::map<Key, Rational>;

    Poly2() = default;
    static Poly2 constant(const Rational& c);
    static Poly2 monomial(int du, int dv, const Rational& c);
    static Poly2 var_u();
    static Poly2 var_v();
    static Poly2 from_poly_u(const Poly& p);  // p(u)
    static Poly2 from_poly_v(const Poly& p);  // p(v)

    bool is_zero() const { return terms_.empty(); }
    const Map& terms() const { return terms_; }
    Rational coeff(int du, int dv) const;
    int total_degree() const;
    int degree_u() const;
    int degree_v() const;

    Poly2 operator-() const;
    Poly2 operator+(const Poly2&) const;
    Poly2 operator-(const Poly2&) const;
    Poly2 operator*(const Poly2&) const;
    Poly2 operator*(const Rational&) const;
    bool operator==(const Poly2&) const = default;

    Poly2 pow(unsigned e) const;
    Poly2 transpose() const;  // swap u and v
    bool is_symmetric() const;
    Poly2 derivative_u() const;
    Poly2 derivative_v() const;

    Rational operator()(const Rational& u, const Rational& v) const;
    Poly eval_u(const Rational& u) const;  // polynomial in v
    Poly eval_v(const Rational& v) const;  // polynomial in u
    Poly substitute_v_affine(const Rational& a, const Rational& b) const;  // v := a*u + b
    RatFun substitute_v_ratfun(const RatFun& f) const;                     // v := f(u)
    Poly2 shift(const Rational& du, const Rational& dv) const;             // (u+du, v+dv)
    // (u-1)^degu (v-1)^degv * T(u/(u-1), v/(v-1))
    Poly2 mobius_both_cleared() const;

    std::string to_string() const;

  private:
    void add_term(int du, int dv, const Rational& c);
    Map terms_;
};

Poly2 operator*(const Rational& a, const Poly2& p);

// Exact single-divisor division under graded-lex order; throws Internal if
// the remainder is nonzero.
Poly2 div_exact(const Poly2& num, const Poly2& den);

}  // namespace mc

#endif
