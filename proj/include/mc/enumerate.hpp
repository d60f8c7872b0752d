#ifndef MC_ENUMERATE_HPP
#define MC_ENUMERATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "mc/moduli.hpp"

namespace mc {

long euler_phi(long n);  // BadIndex if n < 1
int mobius_mu(long n);   // BadIndex if n < 1

struct PairCount {
    Value ell = Rational(1);
    int m = 0;
    long direct = 0;
    long mobius = 0;
};

// Coprime pairs (k, d) with 1 <= k*ell < d <= m, counted two ways
// (direct sieve and inclusion-exclusion); the two must agree.
PairCount count_pairs(const Value& ell, int m);
std::vector<std::pair<long, long>> list_pairs(const Value& ell, int m);

enum class PointFamily { First, I, H, T, D };
std::string family_name(PointFamily f);

struct EnumPoint {
    std::optional<Rational> p;  // empty only at the distinguished even-m point
    int multiplicity = 1;       // multiplicity of the p value on the component
    Value u = Rational(0), v = Rational(0);
};

struct EnumerationResult {
    int m = 0;
    PointFamily family = PointFamily::First;
    std::vector<EnumPoint> points;  // one row per point, sorted by p (ascending)
    long count = 0;                 // = number of points = sum of value multiplicities
    std::optional<long> truncation_height;
    bool count_only = false;
};

EnumerationResult enum_I(int m, bool count_only = false);
EnumerationResult enum_H(int m, bool count_only = false);  // NotDefinedForParity on even m
EnumerationResult enum_T(int m, bool count_only = false);  // NotDefinedForParity on even m
EnumerationResult enum_D(int m, long height_bound);        // BadBound if height_bound < 1

// Bracket-based count of the H-family points that avoids full root
// isolation; usable at large m.
long count_H_fast(int m);

struct AsymptoticsRow {
    int m = 0;
    std::string family;
    long count = 0;
    Rational scaled;  // count * pi^2 / m^2 (with a fixed rational pi^2 approximation)
    Rational limit;
};

std::vector<AsymptoticsRow> asymptotics_report(const std::vector<int>& ms);

// pi^2 to 30 digits as a rational; used only for reporting ratios.
const Rational& pi_squared();

}  // namespace mc

#endif
