#ifndef MC_CONSTANTS_HPP
#define MC_CONSTANTS_HPP

#include <optional>

#include "mc/family.hpp"

namespace mc {

// The distinguished algebraic constants attached to dimension m, isolated
// and cross-ordered exactly. Optional fields are absent when the constant
// is not defined for the parity of m.
struct ConstantSet {
    int m = 0;

    // both parities
    std::optional<AlgebraicNumber> ztilde;  // E-characterized constant
    std::optional<AlgebraicNumber> z;       // G-characterized constant

    // odd m only
    std::optional<AlgebraicNumber> s;        // critical point of Sigma
    std::optional<AlgebraicNumber> wtilde;   // critical point of E
    std::optional<AlgebraicNumber> w;        // critical point of G
    std::optional<AlgebraicNumber> x;        // negative zero of S
    std::optional<AlgebraicNumber> y;        // negative zero of W
    std::optional<AlgebraicNumber> u_minus;  // interior critical points of P
    std::optional<AlgebraicNumber> u_plus;
    std::optional<AlgebraicNumber> q_star;   // (2-x)x / ((x-1)^2 + 1)
    std::optional<AlgebraicNumber> ell;      // ((x-1)^2 + 1)/2 = 1/(1+q_star)
    std::optional<AlgebraicNumber> chi;      // x^2/(1-x)
    std::optional<AlgebraicNumber> zeta;     // z^2/(1-z)

    // shared limits
    AlgebraicNumber x_infinity = AlgebraicNumber::from_rational(0);   // -2(1+sqrt 2)
    AlgebraicNumber ell_infinity = AlgebraicNumber::from_rational(0); // 9 + 6 sqrt 2
};

// Isolates every constant and verifies the expected uniqueness and
// ordering facts; IsolationFailure when the curve theory is not reproduced.
ConstantSet compute_constants(int m);

enum class BoundDirection { Lower, Upper };

struct CertifiedBound {
    int m = 0;
    Rational sigma;
    BoundDirection direction = BoundDirection::Lower;
    std::vector<Integer> term_bounds;
    Integer sum_bound;
    Rational K_value;
    bool certified = false;  // false = inconclusive
};

// Hand-checkable certification of chi_m > sigma (Lower) or chi_m < sigma
// (Upper) through directed integer rounding of the series terms.
CertifiedBound certify_chi_bound(int m, const Rational& sigma, BoundDirection dir);

// Rational enclosure scaffolding for ell_m: (lower, upper) with
// lower <= ell_m <= upper whenever lower is positive.
std::pair<Rational, Rational> bounds_ell(int m);

// Shared caches (thread-safe).
const FamilyBasis& cached_basis(int m);
const ConstantSet& cached_constants(int m);

}  // namespace mc

#endif
