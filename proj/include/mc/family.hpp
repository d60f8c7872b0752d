#ifndef MC_FAMILY_HPP
#define MC_FAMILY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mc/poly2.hpp"

namespace mc {

// All named members of the curve family for a fixed dimension m >= 2,
// constructed exactly.
struct FamilyBasis {
    int m = 0;
    Poly Sigma;     // deg m-1, all coefficients positive
    Poly E;         // (t-1) * Sigma
    RatFun F;       // (t-2) t^(2m-1) / (t-1)^m
    RatFun G;       // E - F/2
    Poly Lambda;    // m t^2 - 2(2m-1)(t-1), positive definite
    Poly D;         // (t-1)^m E - (t-2) t^(2m-1)
    Poly W;         // [(m-1)t - 2m + 1] Sigma + (2m-1) Sigma(0)
    RatFun S;       // [(m-1)t^2 - 2(2m-1)(t-1)] G + (2m-1)(t^2-2t+2) Sigma(0)
    Poly2 T;        // symmetric, degree 3(m-2)
    RatFun P;       // boundary-value profile on the hyperbola
    Rational sigma0;  // Sigma(0)

    Rational c_T() const;  // (2m-1) * Sigma(0)
};

FamilyBasis build_basis(int m);  // BadDimension if m < 2

// Catalan-type constant Sigma_m(0); m = 0 allowed only with allow_zero
// (value -1/2, used by the series identities).
Rational catalan_sigma0(int m, bool allow_zero = false);

// Symmetric kernel polynomial: sum_{j=1}^{k-1} j(k-j) u^(j-1) v^(k-j-1).
Poly2 theta(int k);  // BadIndex if k < 2

RatFun build_P(int m);

// Auxiliary bivariate blocks used by several identities and by the
// curve tracer; alpha/beta are the cleared endpoint-coefficient numerators.
Poly2 family_alpha(const FamilyBasis& fb);
Poly2 family_beta(const FamilyBasis& fb);
Poly2 family_phi();    // u + v - 2
Poly2 family_f(int m); // m uv - (2m-1)(u+v-2)

// T reconstructed by the antisymmetrized-quotient route (exact division,
// zero remainder asserted). Cross-check for the closed-form construction.
Poly2 family_T_from_quotient(const FamilyBasis& fb);

// Components of the endpoint coefficient vector as polynomials in t:
// ((t-1)^m, (t-1)^m E(t), (t-2) t^(2m-1)).
std::array<Poly, 3> coefficient_vector(const FamilyBasis& fb);

struct IdentityEntry {
    std::string name;
    std::string anchor;
    bool pass = false;
    std::string witness;  // set on failure
};

struct IdentityReport {
    int m = 0;
    std::vector<IdentityEntry> entries;
    bool all_pass() const;
};

// Full catalog for the given basis (exposed for fault-injection tests).
IdentityReport verify_identities_on(const FamilyBasis& fb);
// Builds the basis and runs the catalog; enforces 2 <= m <= cap.
IdentityReport verify_identities(int m, int m_cap = 12);

Integer binomial(long n, long k);

}  // namespace mc

#endif
