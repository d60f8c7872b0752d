#ifndef MC_POLY_HPP
#define MC_POLY_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mc/rational.hpp"

namespace mc {

// Dense univariate polynomial over the rationals. Coefficients indexed by
// degree, trailing zeros stripped; the zero polynomial has no coefficients.
class Poly {
  public:
    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs_low_to_high);
    explicit Poly(std::vector<Rational> coeffs_low_to_high);
    static Poly constant(const Rational& c);
    static Poly identity();                       // t
    static Poly monomial(int degree, const Rational& c);
    static Poly linear(const Rational& a, const Rational& b);  // a*t + b

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(int i) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly&) const;
    Poly operator-(const Poly&) const;
    Poly operator*(const Poly&) const;
    Poly operator*(const Rational&) const;
    Poly operator/(const Rational&) const;
    bool operator==(const Poly&) const = default;

    Poly derivative() const;
    Rational operator()(const Rational& t) const;
    // Interval image bound via Horner on interval endpoints.
    std::pair<Rational, Rational> eval_interval(const Rational& lo, const Rational& hi) const;

    Poly pow(unsigned e) const;
    Poly shift(const Rational& a) const;          // p(t + a)
    Poly compose_affine(const Rational& a, const Rational& b) const;  // p(a*t + b)
    Poly compose(const Poly& inner) const;
    // (t-1)^deg * p(t/(t-1)); exact carrier of the t -> t/(t-1) substitution.
    Poly mobius_star_cleared() const;

    Poly monic() const;
    // Integer-primitive image: returns (q, s) with q = s * this, q having
    // coprime integer coefficients and positive leading coefficient.
    std::pair<Poly, Rational> primitive() const;

    std::string to_string(const std::string& var = "t") const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

Poly operator*(const Rational& a, const Poly& p);

// Exact division; throws Internal if remainder nonzero.
Poly div_exact(const Poly& num, const Poly& den);
std::pair<Poly, Poly> div_rem(const Poly& num, const Poly& den);
Poly gcd(const Poly& a, const Poly& b);  // monic gcd, 1 if coprime
Poly square_free_part(const Poly& p);
// Yun decomposition: list of (factor, multiplicity), factors square-free,
// pairwise coprime, monic; product of factor^multiplicity = monic(p).
std::vector<std::pair<Poly, int>> square_free_decomposition(const Poly& p);

Rational resultant(const Poly& a, const Poly& b);

// Sturm-chain root counting on the square-free primitive image.
class SturmChain {
  public:
    explicit SturmChain(const Poly& square_free);
    int variations_at(const Rational& x) const;
    int variations_at_neg_inf() const;
    int variations_at_pos_inf() const;
    // number of roots in (a, b]
    int count_half_open(const Rational& a, const Rational& b) const;
    const Poly& base() const { return chain_.front(); }

  private:
    std::vector<Poly> chain_;  // integer-primitive entries
};

// Upper bound B with all real roots in (-B, B).
Rational root_bound(const Poly& p);

}  // namespace mc

#endif
