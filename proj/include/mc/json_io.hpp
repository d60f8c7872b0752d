#ifndef MC_JSON_IO_HPP
#define MC_JSON_IO_HPP

#include <json.hpp>

#include "mc/enumerate.hpp"
#include "mc/moduli.hpp"

namespace mc {

using json = nlohmann::json;

// Number schema shared by every module:
//   rational:  {"type":"rational","num":"<decimal>","den":"<decimal>"}
//   algebraic: {"type":"algebraic","minpoly":["c0","c1",...],
//               "interval":[<rational>,<rational>],"approx":"<decimal>"}
json rational_json(const Rational& r);
json algebraic_json(const AlgebraicNumber& a, int digits);
json value_json(const Value& v, int digits);

json identity_report_json(const IdentityReport& rep);
json constant_set_json(const ConstantSet& cs, int digits);
json certified_bound_json(const CertifiedBound& cb);
json moduli_point_json(const ModuliPoint& pt, int digits);
json qspec_json(const QSpec& qs, int digits);
json enumeration_json(const EnumerationResult& res, int digits);
json pair_count_json(const PairCount& pc, int digits);

// Parses "p/q", integers, decimals, or the algebraic spec
// "minpoly=<c0,c1,...>;lo=<p/q>;hi=<p/q>".
Value parse_value(const std::string& text);

}  // namespace mc

#endif
