#include "mc/json_io.hpp"

#include <sstream>

namespace mc {

json rational_json(const Rational& r) {
    return json{{"type", "rational"}, {"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

json algebraic_json(const AlgebraicNumber& a, int digits) {
    json coeffs = json::array();
    const Poly& p = a.defining();
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(p.coeff(i).get_num().get_str());
    return json{{"type", "algebraic"},
                {"minpoly", coeffs},
                {"interval", json::array({rational_json(a.lo()), rational_json(a.hi())})},
                {"approx", decimal_string(a.approx(digits), digits)}};
}

json value_json(const Value& v, int digits) {
    if (auto r = value_rational(v)) return rational_json(*r);
    return algebraic_json(std::get<AlgebraicNumber>(v), digits);
}

json identity_report_json(const IdentityReport& rep) {
    json arr = json::array();
    for (const auto& e : rep.entries) {
        json item{{"name", e.name}, {"anchor", e.anchor}, {"status", e.pass ? "pass" : "fail"}};
        if (!e.pass) item["witness"] = e.witness;
        arr.push_back(item);
    }
    return json{{"m", rep.m}, {"entries", arr}, {"all_pass", rep.all_pass()}};
}

json constant_set_json(const ConstantSet& cs, int digits) {
    json out{{"m", cs.m}};
    auto put = [&](const char* key, const std::optional<AlgebraicNumber>& a) {
        if (!a) return;
        if (auto r = a->rational_value())
            out[key] = rational_json(*r);
        else
            out[key] = algebraic_json(*a, digits);
    };
    put("ztilde", cs.ztilde);
    put("z", cs.z);
    put("s", cs.s);
    put("wtilde", cs.wtilde);
    put("w", cs.w);
    put("x", cs.x);
    put("y", cs.y);
    put("u_minus", cs.u_minus);
    put("u_plus", cs.u_plus);
    put("q_star", cs.q_star);
    put("ell", cs.ell);
    put("chi", cs.chi);
    put("zeta", cs.zeta);
    out["x_infinity"] = algebraic_json(cs.x_infinity, digits);
    out["ell_infinity"] = algebraic_json(cs.ell_infinity, digits);
    return out;
}

json certified_bound_json(const CertifiedBound& cb) {
    json terms = json::array();
    for (const auto& t : cb.term_bounds) terms.push_back(t.get_str());
    return json{{"m", cb.m},
                {"sigma", rational_json(cb.sigma)},
                {"direction", cb.direction == BoundDirection::Lower ? "lower" : "upper"},
                {"term_bounds", terms},
                {"sum_bound", cb.sum_bound.get_str()},
                {"K_value", rational_json(cb.K_value)},
                {"verdict", cb.certified ? "certified" : "inconclusive"}};
}

json moduli_point_json(const ModuliPoint& pt, int digits) {
    json out{{"m", pt.m},
             {"u", value_json(pt.u, digits)},
             {"v", value_json(pt.v, digits)},
             {"component", component_name(pt.component)}};
    if (pt.delta)
        out["delta"] = *pt.delta;
    else
        out["delta"] = nullptr;
    if (pt.component == Component::NotOnCurve) {
        out["p"] = nullptr;
    } else if (!pt.p_defined) {
        out["p"] = "undefined";
    } else {
        out["p"] = value_json(*pt.p_value, digits);
        auto rr = is_p_rational(pt);
        out["p_rational"] = rr.p_rational;
        out["p_rational_reason"] = rr.reason;
    }
    return out;
}

json qspec_json(const QSpec& qs, int digits) {
    return json{{"m", qs.m},
                {"interval", json::array({value_json(qs.u, digits), value_json(qs.v, digits)})},
                {"A", value_json(qs.A, digits)},
                {"B", value_json(qs.B, digits)},
                {"C", value_json(qs.C, digits)},
                {"conditions",
                 json{{"a", qs.cond_a}, {"b", qs.cond_b}, {"c", qs.cond_c}, {"d", qs.cond_d}, {"e", qs.cond_e}}},
                {"normalized", qs.normalized}};
}

json enumeration_json(const EnumerationResult& res, int digits) {
    json pts = json::array();
    for (const auto& p : res.points) {
        json row;
        row["p"] = p.p ? rational_json(*p.p) : json(nullptr);
        row["multiplicity"] = p.multiplicity;
        row["u"] = value_json(p.u, digits);
        row["v"] = value_json(p.v, digits);
        pts.push_back(row);
    }
    json out{{"m", res.m},
             {"family", family_name(res.family)},
             {"count", res.count},
             {"count_only", res.count_only},
             {"points", pts}};
    if (res.truncation_height) out["truncation_height"] = *res.truncation_height;
    return out;
}

json pair_count_json(const PairCount& pc, int digits) {
    return json{{"ell", value_json(pc.ell, digits)},
                {"m", pc.m},
                {"direct", pc.direct},
                {"mobius", pc.mobius}};
}

Value parse_value(const std::string& text) {
    if (text.rfind("minpoly=", 0) == 0) {
        // minpoly=<c0,c1,...>;lo=<p/q>;hi=<p/q>
        std::string rest = text.substr(8);
        auto semi1 = rest.find(';');
        if (semi1 == std::string::npos) fail(ErrorKind::ParseError, "algebraic spec needs ;lo=");
        std::string coeffs = rest.substr(0, semi1);
        std::string tail = rest.substr(semi1 + 1);
        auto semi2 = tail.find(';');
        if (semi2 == std::string::npos) fail(ErrorKind::ParseError, "algebraic spec needs ;hi=");
        std::string lostr = tail.substr(0, semi2), histr = tail.substr(semi2 + 1);
        if (lostr.rfind("lo=", 0) != 0 || histr.rfind("hi=", 0) != 0)
            fail(ErrorKind::ParseError, "algebraic spec is minpoly=<ints>;lo=<p/q>;hi=<p/q>");
        std::vector<Rational> cs;
        std::stringstream ss(coeffs);
        std::string item;
        while (std::getline(ss, item, ',')) cs.push_back(parse_rational(item));
        Poly p(std::move(cs));
        if (p.is_zero()) fail(ErrorKind::ZeroPolynomial, "algebraic spec with zero polynomial");
        Poly sf = square_free_part(p).primitive().first;
        Rational lo = parse_rational(lostr.substr(3)), hi = parse_rational(histr.substr(3));
        SturmChain chain(sf);
        Rational a = lo, b = hi;
        if (sf(a) == 0 || sf(b) == 0 || chain.count_half_open(a, b) != 1)
            fail(ErrorKind::IsolationFailure, "the given interval does not isolate one root");
        AlgebraicNumber alg = AlgebraicNumber::from_isolated(sf, a, b);
        if (auto r = alg.rational_value()) return Value(*r);
        return Value(alg);
    }
    return Value(parse_rational(text));
}

}  // namespace mc
