#ifndef MC_ALGEBRAIC_HPP
#define MC_ALGEBRAIC_HPP

#include <optional>
#include <variant>
#include <vector>

#include "mc/poly.hpp"

namespace mc {

// A real algebraic number: square-free integer defining polynomial with
// exactly one real root inside [lo, hi]. Rational values carry a point
// interval (lo == hi) and the linear polynomial den*t - num.
// Values are immutable; refinement returns a new object.
class AlgebraicNumber {
  public:
    static AlgebraicNumber from_rational(const Rational& r);
    // Caller guarantees p is square-free with exactly one root in [lo, hi]
    // and p(lo) != 0 != p(hi) unless lo == hi.
    static AlgebraicNumber from_isolated(const Poly& square_free, const Rational& lo, const Rational& hi);

    const Poly& defining() const { return defining_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    bool is_point() const { return lo_ == hi_; }

    AlgebraicNumber refined(const Rational& max_width) const;
    AlgebraicNumber refined_digits(int digits) const;
    Rational approx(int digits) const;

    std::optional<Rational> rational_value() const;  // exact decision
    int sign() const;

    AlgebraicNumber negated() const;
    AlgebraicNumber scaled(const Rational& k) const;   // k * alpha, k != 0
    AlgebraicNumber shifted(const Rational& b) const;  // alpha + b
    // alpha / (alpha - 1); requires alpha != 1.
    AlgebraicNumber mobius_star() const;

  private:
    AlgebraicNumber(Poly p, Rational lo, Rational hi)
        : defining_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}
    Poly defining_;
    Rational lo_, hi_;
};

struct RootWithMult {
    AlgebraicNumber root;
    int multiplicity;
};

struct Window {
    std::optional<Rational> lo, hi;  // open bounds where present
};

// Iteration cap shared by the certified refinement loops; configurable
// through the CLI config ("refinement_budget").
long& refinement_budget();

// All distinct real roots (ascending) with multiplicities; window bounds,
// when present, are exclusive. Throws ZeroPolynomial on p == 0.
std::vector<RootWithMult> isolate_real_roots(const Poly& p, const Window& window = {});

// Exact sign of p(alpha).
int sign_at(const Poly& p, const AlgebraicNumber& alpha);

// Exact ordering. -1, 0, +1.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
int compare(const AlgebraicNumber& a, const Rational& r);

// N(alpha)/D(alpha) as a certified algebraic number (resultant route);
// throws PoleAtPoint when D(alpha) == 0.
AlgebraicNumber eval_alg(const Poly& num, const Poly& den, const AlgebraicNumber& alpha);

// R(y) = Res_t(P(t), N(t) - y*D(t)) via interpolation; gcd(N, D) must be 1.
Poly resultant_param(const Poly& P, const Poly& N, const Poly& D);

// Union value used across module boundaries.
using Value = std::variant<Rational, AlgebraicNumber>;

bool value_is_rational(const Value& v);
std::optional<Rational> value_rational(const Value& v);
AlgebraicNumber value_as_algebraic(const Value& v);
int value_sign(const Value& v);
int value_compare(const Value& a, const Value& b);
int value_compare(const Value& a, const Rational& b);
Value value_mobius_star(const Value& v);  // v/(v-1)
Value value_neg(const Value& v);
Rational value_approx(const Value& v, int digits);
int sign_at_value(const Poly& p, const Value& v);
std::string value_brief(const Value& v, int digits = 12);

}  // namespace mc

#endif
