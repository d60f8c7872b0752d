#ifndef MC_MODULI_HPP
#define MC_MODULI_HPP

#include <optional>
#include <string>

#include "mc/constants.hpp"

namespace mc {

enum class Component { Origin, I, D, X_H, X_T, NotOnCurve };

std::string component_name(Component c);

struct ModuliPoint {
    int m = 0;
    Value u = Rational(0), v = Rational(0);
    Component component = Component::NotOnCurve;
    std::optional<int> delta;      // set when on the curve
    bool p_defined = false;        // false off-curve or at the distinguished even-m point
    std::optional<Value> p_value;  // set when p_defined
};

// Exact membership and component classification. AmbiguousNumeric when a
// joint-algebraic certification exceeds the budget.
ModuliPoint classify(int m, const Value& u, const Value& v);

int delta_of(const ModuliPoint& pt);  // OffCurve error when not on the curve

struct PResult {
    bool defined = false;
    std::optional<Value> value;
};
PResult eval_p(const ModuliPoint& pt);  // OffCurve error when not on the curve

struct RationalityResult {
    bool p_rational = false;
    std::string reason;
};
RationalityResult is_p_rational(const ModuliPoint& pt);

struct QSpec {
    int m = 0;
    Value u = Rational(0), v = Rational(0);
    Value A = Rational(0), B = Rational(0), C = Rational(0);
    bool cond_a = false, cond_b = false, cond_c = false, cond_d = false, cond_e = false;
    bool normalized = false;  // true when scaled so Q > 0 on the interior
    bool all_conditions() const { return cond_a && cond_b && cond_c && cond_d && cond_e; }
};

QSpec q_from_interval(int m, const Value& u, const Value& v);

enum class PositivityCase {
    AwayFromZeroAndOne,  // neither 0 nor 1 in the interval: always holds
    BadContainment,      // 1 interior or 0 an endpoint: never holds
    EndpointOne,         // decided by the other endpoint's position
    ZeroInterior,        // decided by the endpoint slope conditions
};

struct PositivityResult {
    bool holds = false;
    PositivityCase which = PositivityCase::AwayFromZeroAndOne;
};

PositivityResult positivity(int m, const Value& u, const Value& v);

std::pair<Value, Value> dual_point(const Value& u, const Value& v);  // PoleAtOne

struct BoundaryData {
    Rational c;
    int epsilon = 1;
    Value a = Rational(0);
    Value kappa = Rational(0);
    bool p_defined = false;
    std::optional<Value> p;
    int delta = 0;
    bool admissible = false;
};

BoundaryData boundary_data(int m, const Value& u, const Value& v, const Rational& c);

// Certified sign of T(u, v) for any mix of rational and algebraic inputs.
int sign_poly2_at_values(const Poly2& T, const Value& u, const Value& v);

// N(u,v)/D(u,v) as a certified Value for algebraic inputs (candidate
// polynomial by iterated resultants plus interval isolation).
Value eval_poly2_ratio(const Poly2& N, const Poly2& D, const Value& u, const Value& v);

}  // namespace mc

#endif
