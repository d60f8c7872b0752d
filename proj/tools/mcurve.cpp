// Command-line frontend: exact computations on the curve family with
// machine-readable output. Exit codes: 0 success, 1 verification or
// certification failure, 2 invalid input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "mc/config.hpp"
#include "mc/json_io.hpp"
#include "mc/trace.hpp"

using namespace mc;

namespace {

int guarded(const std::function<int()>& body) {
    try {
        return body();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind) {
            case ErrorKind::ParseError:
            case ErrorKind::BadDimension:
            case ErrorKind::BadIndex:
            case ErrorKind::BadBound:
            case ErrorKind::DegenerateInterval:
            case ErrorKind::NotDefinedForParity:
            case ErrorKind::ZeroC:
            case ErrorKind::PoleAtOne: return 2;
            default: return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the moduli curve family: identities, constants, "
                 "certified bounds, classification, enumeration, tracing"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "key=value config file (default: $MC_CONFIG)");
    bool strict = false;
    app.add_flag("--strict", strict, "escalate inconclusive certifications to failures");

    // identities
    auto* c_id = app.add_subcommand("identities", "run the exact identity catalog for one dimension");
    int id_m = 3;
    c_id->add_option("--m", id_m, "dimension (2..cap)")->required();

    // constants
    auto* c_ct = app.add_subcommand("constants", "isolate the distinguished algebraic constants");
    int ct_m = 3, ct_digits = 0;
    c_ct->add_option("--m", ct_m, "dimension")->required();
    c_ct->add_option("--digits", ct_digits, "decimal digits for approx fields");

    // chi-bound
    auto* c_cb = app.add_subcommand("chi-bound", "certify chi_m > sigma or chi_m < sigma");
    int cb_m = 7;
    std::string cb_sigma = "1.9", cb_dir = "lower";
    c_cb->add_option("--m", cb_m, "odd dimension >= 3")->required();
    c_cb->add_option("--sigma", cb_sigma, "positive rational p/q")->required();
    c_cb->add_option("--dir", cb_dir, "lower|upper")->required();

    // classify
    auto* c_cl = app.add_subcommand("classify", "classify a point against the curve");
    int cl_m = 3;
    std::string cl_u, cl_v;
    std::string cl_tol;
    c_cl->add_option("--m", cl_m, "dimension")->required();
    c_cl->add_option("--u", cl_u, "rational p/q or algebraic spec")->required();
    c_cl->add_option("--v", cl_v, "rational p/q or algebraic spec")->required();
    c_cl->add_option("--tolerance", cl_tol, "numeric tolerance: mark result numeric, not certified");

    // qspec
    auto* c_qs = app.add_subcommand("qspec", "boundary-value function data for an interval");
    int qs_m = 3;
    std::string qs_u, qs_v;
    c_qs->add_option("--m", qs_m, "dimension")->required();
    c_qs->add_option("--u", qs_u, "lower endpoint")->required();
    c_qs->add_option("--v", qs_v, "upper endpoint")->required();

    // enumerate
    auto* c_en = app.add_subcommand("enumerate", "enumerate the rational-value points of a family");
    int en_m = 3;
    std::string en_family = "I";
    long en_height = 12;
    bool en_count_only = false;
    c_en->add_option("--m", en_m, "dimension")->required();
    c_en->add_option("--family", en_family, "I|H|T|D")->required();
    c_en->add_option("--height", en_height, "denominator height bound for the D family");
    c_en->add_flag("--count-only", en_count_only, "skip the inversions, report counts");

    // count-pairs
    auto* c_cp = app.add_subcommand("count-pairs", "coprime pair counting, direct and sieve");
    int cp_m = 9;
    std::string cp_ell = "1";
    c_cp->add_option("--ell", cp_ell, "rational p/q, or ell_m for the curve constant")->required();
    c_cp->add_option("--m", cp_m, "upper bound")->required();

    // trace
    auto* c_tr = app.add_subcommand("trace", "trace the curve components to CSV/SVG");
    int tr_m = 3, tr_samples = 200;
    std::string tr_width = "1e-6", tr_out, tr_svg;
    double tr_lo = -2.5, tr_hi = 2.5;
    c_tr->add_option("--m", tr_m, "dimension")->required();
    c_tr->add_option("--samples", tr_samples, "transcendental-branch sample count");
    c_tr->add_option("--width", tr_width, "certified enclosure width");
    c_tr->add_option("--out", tr_out, "CSV output path")->required();
    c_tr->add_option("--svg", tr_svg, "optional SVG output path");
    c_tr->add_option("--view-lo", tr_lo, "viewport lower bound");
    c_tr->add_option("--view-hi", tr_hi, "viewport upper bound");

    // report
    auto* c_rp = app.add_subcommand("report", "asymptotic count ratios for a list of dimensions");
    std::vector<int> rp_ms;
    c_rp->add_option("--m", rp_ms, "dimensions (repeatable)")->required();

    CLI11_PARSE(app, argc, argv);

    Config cfg = Config::load(config_path);
    int digits = cfg.default_digits;
    refinement_budget() = cfg.refinement_budget;

    if (c_id->parsed()) {
        return guarded([&] {
            IdentityReport rep = verify_identities(id_m, cfg.identity_m_cap);
            std::cout << identity_report_json(rep).dump(2) << "\n";
            return rep.all_pass() ? 0 : 1;
        });
    }
    if (c_ct->parsed()) {
        return guarded([&] {
            ConstantSet cs = compute_constants(ct_m);
            std::cout << constant_set_json(cs, ct_digits > 0 ? ct_digits : digits).dump(2) << "\n";
            return 0;
        });
    }
    if (c_cb->parsed()) {
        return guarded([&] {
            BoundDirection dir;
            if (cb_dir == "lower")
                dir = BoundDirection::Lower;
            else if (cb_dir == "upper")
                dir = BoundDirection::Upper;
            else
                fail(ErrorKind::ParseError, "--dir must be lower or upper");
            CertifiedBound cb = certify_chi_bound(cb_m, parse_rational(cb_sigma), dir);
            std::cout << certified_bound_json(cb).dump(2) << "\n";
            return (!cb.certified && strict) ? 1 : 0;
        });
    }
    if (c_cl->parsed()) {
        return guarded([&] {
            Value u = parse_value(cl_u), v = parse_value(cl_v);
            ModuliPoint pt = classify(cl_m, u, v);
            json out = moduli_point_json(pt, digits);
            out["certified"] = true;
            if (!cl_tol.empty() && pt.component == Component::NotOnCurve) {
                // numeric mode: report the nearest-looking component, never certified
                Rational tol = parse_rational(cl_tol);
                if (auto ru = value_rational(u)) {
                    if (auto rv = value_rational(v)) {
                        Rational on_h = abs(Rational(*ru * *rv - *ru - *rv));
                        const FamilyBasis& fb = cached_basis(cl_m);
                        Rational tval = abs(fb.T(*ru, *rv));
                        out["certified"] = false;
                        out["numeric"] = true;
                        if (on_h <= tol)
                            out["numeric_component"] = "hyperbola";
                        else if (cl_m % 2 != 0 && tval <= tol)
                            out["numeric_component"] = "X_T";
                        else
                            out["numeric_component"] = "NotOnCurve";
                    }
                }
            }
            std::cout << out.dump(2) << "\n";
            return 0;
        });
    }
    if (c_qs->parsed()) {
        return guarded([&] {
            QSpec qs = q_from_interval(qs_m, parse_value(qs_u), parse_value(qs_v));
            std::cout << qspec_json(qs, digits).dump(2) << "\n";
            return 0;
        });
    }
    if (c_en->parsed()) {
        return guarded([&] {
            EnumerationResult res;
            if (en_family == "I")
                res = enum_I(en_m, en_count_only);
            else if (en_family == "H")
                res = enum_H(en_m, en_count_only);
            else if (en_family == "T")
                res = enum_T(en_m, en_count_only);
            else if (en_family == "D")
                res = enum_D(en_m, en_height);
            else
                fail(ErrorKind::ParseError, "--family must be one of I, H, T, D");
            if (cfg.output_format == "csv") {
                std::cout << "p,multiplicity,u,v\n";
                for (const auto& pt : res.points)
                    std::cout << (pt.p ? to_string(*pt.p) : "undefined") << "," << pt.multiplicity
                              << "," << decimal_string(value_approx(pt.u, digits), digits) << ","
                              << decimal_string(value_approx(pt.v, digits), digits) << "\n";
            } else {
                std::cout << enumeration_json(res, digits).dump(2) << "\n";
            }
            return 0;
        });
    }
    if (c_cp->parsed()) {
        return guarded([&] {
            Value ell;
            if (cp_ell == "ell_m") {
                const ConstantSet& cs = cached_constants(cp_m);
                if (!cs.ell) fail(ErrorKind::NotDefinedForParity, "ell_m needs odd m >= 3");
                ell = Value(*cs.ell);
            } else {
                ell = Value(parse_rational(cp_ell));
            }
            PairCount pc = count_pairs(ell, cp_m);
            std::cout << pair_count_json(pc, digits).dump(2) << "\n";
            return 0;
        });
    }
    if (c_tr->parsed()) {
        return guarded([&] {
            Rational width = parse_rational(tr_width);
            // clip unbounded hyperbola pieces a little beyond the viewport
            Rational margin = rat(3, 2);
            std::vector<CurvePolyline> lines =
                trace_components(tr_m, parse_rational(std::to_string(tr_lo)) - margin,
                                 parse_rational(std::to_string(tr_hi)) + margin);
            if (tr_m % 2 != 0) {
                auto gamma = trace_gamma(tr_m, tr_samples, width);
                for (auto& g : gamma) lines.push_back(std::move(g));
            }
            std::ofstream csv(tr_out);
            if (!csv) fail(ErrorKind::ParseError, "cannot open " + tr_out);
            write_trace_csv(csv, lines, digits);
            if (!tr_svg.empty()) {
                std::ofstream svg(tr_svg);
                if (!svg) fail(ErrorKind::ParseError, "cannot open " + tr_svg);
                write_trace_svg(svg, lines, tr_lo, tr_hi);
            }
            return 0;
        });
    }
    if (c_rp->parsed()) {
        return guarded([&] {
            auto rows = asymptotics_report(rp_ms);
            std::cout << "m,family,count,count_over_m2,limit\n";
            for (const auto& r : rows)
                std::cout << r.m << "," << r.family << "," << r.count << ","
                          << decimal_string(r.scaled, 6) << "," << decimal_string(r.limit, 6) << "\n";
            return 0;
        });
    }
    return 2;
}
