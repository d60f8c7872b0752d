#ifndef MC_RATIONAL_HPP
#define MC_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace mc {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorKind {
    ZeroPolynomial,
    PoleAtPoint,
    BadDimension,
    BadIndex,
    BadBound,
    NotDefinedForParity,
    IsolationFailure,
    OffCurve,
    DegenerateInterval,
    PoleAtOne,
    ZeroC,
    ConditionsFail,
    AmbiguousNumeric,
    BudgetExceeded,
    ParseError,
    Internal,
};

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) { throw Error(k, msg); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(long n) { return Rational(n); }
inline Rational rat(long n, long d) { return make_rational(Integer(n), Integer(d)); }

inline int sgn(const Rational& q) { return sgn(q.get_num()); }

Integer floor_int(const Rational& q);
Integer ceil_int(const Rational& q);
Integer round_half_up(const Rational& q);

Rational pow_rat(const Rational& base, long e);  // e may be negative for nonzero base

// Accepts "p/q", integer strings, and plain decimal/scientific forms
// ("2.3", "-1e-6", "1.5e3"). Throws ParseError with the offending position.
Rational parse_rational(const std::string& text);

// Fixed-point decimal rendering, round-half-away-from-zero at `digits`
// fractional places, trailing zeros trimmed (but at least one digit kept).
std::string decimal_string(const Rational& q, int digits);

std::string to_string(const Rational& q);  // canonical "p/q" or "p"

// Smallest-denominator rational strictly inside (lo, hi); requires lo < hi.
Rational simplest_rational_between(const Rational& lo, const Rational& hi);

// Rational enclosure of nthroot(x) for x >= 0,
// with hi - lo <= tol. Certified by exact sign checks of t^n - x.
std::pair<Rational, Rational> nth_root_enclosure(const Rational& x, unsigned n, const Rational& tol);

}  // namespace mc

#endif
