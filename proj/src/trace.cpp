#include "mc/trace.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "mc/parallel.hpp"

namespace mc {

namespace {

// T restricted to the fiber line v = a u + b of the parameter q.
struct Fiber {
    Rational q, a, b;
    Poly tq;    // T(u, a u + b)
    Poly hyp;   // u v - u - v along the line; negative strictly inside the Z side
    Rational ulim;  // v > 0 iff u > ulim
};

Fiber make_fiber(const FamilyBasis& fb, const Rational& q) {
    Fiber f;
    f.q = q;
    f.a = (1 + q) / (1 - q);
    f.b = -2 * q / (1 - q);
    f.tq = fb.T.substitute_v_affine(f.a, f.b);
    // u(au+b) - u - (au+b) = a u^2 + (b - 1 - a) u - b
    f.hyp = Poly({-f.b, f.b - 1 - f.a, f.a});
    f.ulim = 2 * q / (1 + q);
    return f;
}

struct BoxPair {
    TraceSample primary, dual;
};

// One Gamma sample at parameter q: isolate the fiber root on the Z side
// (u v - u - v <= 0), refine to width, certify the corner sign change.
BoxPair solve_fiber(const FamilyBasis& fb, const Rational& q, const Rational& width) {
    Fiber f = make_fiber(fb, q);
    Window win;
    win.hi = rat(0);
    auto roots = isolate_real_roots(f.tq, win);
    std::vector<AlgebraicNumber> on_gamma;
    for (const auto& r : roots) {
        if (compare(r.root, f.ulim) <= 0) continue;  // v must stay positive
        on_gamma.push_back(r.root);
    }
    if (on_gamma.size() != 2)
        fail(ErrorKind::IsolationFailure, "fiber at q = " + to_string(q) + " expects two curve points");
    // the Z-side point satisfies u v - u - v < 0
    AlgebraicNumber uz = on_gamma[0];
    if (sign_at(f.hyp, uz) > 0) uz = on_gamma[1];
    if (sign_at(f.hyp, uz) > 0)
        fail(ErrorKind::IsolationFailure, "no fiber point on the compact side at q = " + to_string(q));

    // refine until the box is small and its diagonal corners show a sign change
    Rational target = width / 2;
    for (int tries = 0; tries < 200; ++tries) {
        uz = uz.refined(target);
        Rational vlo = f.a * uz.lo() + f.b, vhi = f.a * uz.hi() + f.b;  // a > 0
        if (vhi - vlo <= width && uz.width() <= width) {
            int s1 = sgn(f.tq(uz.lo())), s2 = sgn(f.tq(uz.hi()));
            if (s1 * s2 < 0) {
                TraceSample smp;
                smp.q = q;
                smp.ulo = uz.lo();
                smp.uhi = uz.hi();
                smp.vlo = vlo;
                smp.vhi = vhi;
                smp.sign_change_certified = true;
                // dual box: (v*, u*), both Moebius images of rational bounds
                TraceSample dsm;
                dsm.q = q;
                auto star = [](const Rational& t) -> Rational { return t / (t - 1); };
                dsm.ulo = star(vhi);
                dsm.uhi = star(vlo);
                dsm.vlo = star(uz.hi());
                dsm.vhi = star(uz.lo());
                int d1 = sgn(fb.T(dsm.ulo, dsm.vlo)), d2 = sgn(fb.T(dsm.uhi, dsm.vhi));
                dsm.sign_change_certified = d1 * d2 < 0;
                if (!dsm.sign_change_certified) {
                    target = target / 4;
                    continue;
                }
                return {smp, dsm};
            }
        }
        target = target / 4;
    }
    fail(ErrorKind::BudgetExceeded, "fiber box certification failed at q = " + to_string(q));
}

TraceSample endpoint_box(const AlgebraicNumber& u, const AlgebraicNumber& v, const Rational& q,
                         const Rational& width, const Poly2& T) {
    AlgebraicNumber ur = u.refined(width), vr = v.refined(width);
    TraceSample smp;
    smp.q = q;
    smp.ulo = ur.lo();
    smp.uhi = ur.hi();
    smp.vlo = vr.lo();
    smp.vhi = vr.hi();
    smp.endpoint = true;
    // look for a corner sign change (transversal crossing)
    for (int tries = 0; tries < 60 && !smp.sign_change_certified; ++tries) {
        Rational c1 = T(smp.ulo, smp.vlo), c2 = T(smp.uhi, smp.vhi);
        Rational c3 = T(smp.ulo, smp.vhi), c4 = T(smp.uhi, smp.vlo);
        bool pos = sgn(c1) > 0 || sgn(c2) > 0 || sgn(c3) > 0 || sgn(c4) > 0;
        bool neg = sgn(c1) < 0 || sgn(c2) < 0 || sgn(c3) < 0 || sgn(c4) < 0;
        if (pos && neg) {
            smp.sign_change_certified = true;
            break;
        }
        ur = ur.refined(ur.width() / 4);
        vr = vr.refined(vr.width() / 4);
        smp.ulo = ur.lo();
        smp.uhi = ur.hi();
        smp.vlo = vr.lo();
        smp.vhi = vr.hi();
    }
    return smp;
}

}  // namespace

std::vector<CurvePolyline> trace_gamma(int m, int n, const Rational& width) {
    if (m % 2 == 0) fail(ErrorKind::NotDefinedForParity, "the transcendental branch is empty for even m");
    if (m < 3) fail(ErrorKind::BadDimension, "tracing needs m >= 3");
    if (n < 2) fail(ErrorKind::BadIndex, "tracing needs at least two samples");
    if (sgn(width) <= 0) fail(ErrorKind::BadIndex, "enclosure width must be positive");
    const FamilyBasis& fb = cached_basis(m);
    const ConstantSet& cs = cached_constants(m);

    // rational stand-in strictly below q_star
    AlgebraicNumber qs = cs.q_star->refined(pow_rat(rat(1, 10), 9));
    Rational qtop = qs.lo();

    // grid on (-1, qtop]: uniform plus geometric refinement toward -1
    std::set<Rational> grid;
    int interior = std::max(0, n - 2);
    int geo = std::min(12, interior / 3);
    int uni = interior - geo;
    for (int j = 1; j <= uni; ++j) {
        Rational t = Rational(j) / Rational(uni + 1);
        grid.insert(Rational(-1) + (qtop + 1) * t);
    }
    Rational tg = Rational(1) / Rational(uni + 1);
    for (int j = 1; j <= geo; ++j) {
        tg = tg / 2;
        grid.insert(Rational(-1) + (qtop + 1) * tg);
    }
    grid.insert(qtop);

    std::vector<Rational> qsorted(grid.begin(), grid.end());
    std::vector<BoxPair> boxes = par::parallel_map<BoxPair>(
        static_cast<long>(qsorted.size()),
        [&](long i) { return solve_fiber(fb, qsorted[static_cast<size_t>(i)], width); });

    CurvePolyline gamma, dual;
    gamma.m = dual.m = m;
    gamma.branch = Branch::Gamma;
    dual.branch = Branch::GammaDual;
    gamma.label = "Gamma";
    dual.label = "Gamma_dual";
    gamma.certified_width = dual.certified_width = width;

    // endpoint (y, 1) at q = -1 (unbounded end maps to it on the Z side)
    TraceSample yend = endpoint_box(*cs.y, AlgebraicNumber::from_rational(rat(1)), rat(-1), width, fb.T);
    gamma.samples.push_back(yend);
    for (const auto& bp : boxes) gamma.samples.push_back(bp.primary);
    // endpoint (x, x*) at q = q_star
    AlgebraicNumber x = *cs.x;
    TraceSample xend = endpoint_box(x, x.mobius_star(), qs.hi(), width, fb.T);
    xend.q = qs.hi();
    gamma.samples.push_back(xend);

    // dual branch ordered the same way; it is unbounded toward q = -1, so it
    // carries interior samples plus the shared crossing point only
    for (const auto& bp : boxes) dual.samples.push_back(bp.dual);
    dual.samples.push_back(xend);

    return {gamma, dual};
}

std::vector<CurvePolyline> trace_components(int m, const Rational& wlo, const Rational& whi,
                                            int samples_per_segment) {
    if (m < 2) fail(ErrorKind::BadDimension, "tracing needs m >= 2");
    if (!(wlo < whi)) fail(ErrorKind::DegenerateInterval, "window must be nonempty");
    const ConstantSet& cs = cached_constants(m);
    const bool odd = (m % 2) != 0;
    std::vector<CurvePolyline> out;

    auto emit_segment = [&](const std::string& label, const Rational& lo, const Rational& hi,
                            bool open_lo, bool open_hi) {
        Rational a = std::max(lo, wlo), b = std::min(hi, whi);
        if (!(a < b)) return;
        CurvePolyline line;
        line.m = m;
        line.branch = Branch::HSegment;
        line.label = label;
        line.certified_width = 0;
        int N = samples_per_segment;
        for (int j = 0; j <= N; ++j) {
            Rational t = a + (b - a) * Rational(j) / Rational(N);
            if ((open_lo && j == 0) || (open_hi && j == N)) {
                // nudge off an excluded endpoint
                Rational step = (b - a) / Rational(8 * N);
                t = (j == 0) ? Rational(a + step) : Rational(b - step);
            }
            if (t == 1) continue;  // pole of the hyperbola parameterization
            TraceSample smp;
            smp.q = t;
            smp.ulo = smp.uhi = t;
            Rational v = t / (t - 1);
            smp.vlo = smp.vhi = v;
            line.samples.push_back(smp);
        }
        out.push_back(std::move(line));
    };

    if (odd) {
        AlgebraicNumber z = cs.z->refined(pow_rat(rat(1, 10), 9));
        AlgebraicNumber w = cs.w->refined(pow_rat(rat(1, 10), 9));
        emit_segment("X_H", wlo, z.lo(), false, true);
        emit_segment("D", w.hi(), rat(0), true, false);
        emit_segment("I", rat(1), rat(2), true, true);
        // transversality marker at (x, x*)
        CurvePolyline marker;
        marker.m = m;
        marker.branch = Branch::HSegment;
        marker.label = "marker";
        marker.certified_width = pow_rat(rat(1, 10), 9);
        AlgebraicNumber x = cs.x->refined(marker.certified_width);
        AlgebraicNumber xs = x.mobius_star();
        TraceSample smp;
        smp.q = (x.lo() + x.hi()) / 2;
        smp.ulo = x.lo();
        smp.uhi = x.hi();
        smp.vlo = xs.lo();
        smp.vhi = xs.hi();
        smp.endpoint = true;
        marker.samples.push_back(smp);
        out.push_back(std::move(marker));
    } else {
        emit_segment("D", wlo, rat(0), false, false);
        emit_segment("I", rat(1), rat(2), true, true);
    }
    return out;
}

bool gamma_region_empty_on_grid(int m, int grid) {
    const FamilyBasis& fb = cached_basis(m);
    for (int i = 1; i <= grid; ++i) {
        for (int j = 1; j < grid; ++j) {
            Rational u = -Rational(5 * i) / Rational(grid);  // u in [-5, 0)
            Rational v = Rational(j) / Rational(grid);       // v in (0, 1)
            if (fb.T(u, v) == 0) return false;
        }
    }
    return true;
}

void write_trace_csv(std::ostream& os, const std::vector<CurvePolyline>& lines, int digits) {
    os << "branch,q,u,v,width\n";
    for (const auto& line : lines) {
        for (const auto& s : line.samples) {
            Rational umid = (s.ulo + s.uhi) / 2, vmid = (s.vlo + s.vhi) / 2;
            Rational w = std::max(Rational(s.uhi - s.ulo), Rational(s.vhi - s.vlo));
            os << line.label << "," << decimal_string(s.q, digits) << ","
               << decimal_string(umid, digits) << "," << decimal_string(vmid, digits) << ","
               << decimal_string(w, digits + 2) << "\n";
        }
    }
}

void write_trace_svg(std::ostream& os, const std::vector<CurvePolyline>& lines, double lo, double hi) {
    const int W = 640, H = 640;
    auto sx = [&](double x) { return (x - lo) / (hi - lo) * W; };
    auto sy = [&](double y) { return H - (y - lo) / (hi - lo) * H; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
    os << "<line x1=\"" << sx(lo) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(hi) << "\" y2=\""
       << sy(0) << "\" stroke=\"#bbb\"/>\n";
    os << "<line x1=\"" << sx(0) << "\" y1=\"" << sy(lo) << "\" x2=\"" << sx(0) << "\" y2=\""
       << sy(hi) << "\" stroke=\"#bbb\"/>\n";
    const char* colors[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
    int ci = 0;
    for (const auto& line : lines) {
        std::string color = colors[ci++ % 6];
        if (line.label == "marker") {
            for (const auto& s : line.samples) {
                double u = (s.ulo.get_d() + s.uhi.get_d()) / 2, v = (s.vlo.get_d() + s.vhi.get_d()) / 2;
                os << "<circle cx=\"" << sx(u) << "\" cy=\"" << sy(v) << "\" r=\"4\" fill=\"none\" stroke=\""
                   << color << "\"/>\n";
            }
            continue;
        }
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        bool started = false;
        double lastu = 0;
        for (const auto& s : line.samples) {
            double u = (s.ulo.get_d() + s.uhi.get_d()) / 2, v = (s.vlo.get_d() + s.vhi.get_d()) / 2;
            if (u < lo || u > hi || v < lo || v > hi) {
                continue;
            }
            if (started && line.branch == Branch::HSegment && std::abs(u - lastu) > (hi - lo) / 2) {
                os << "\"/>\n<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            }
            os << sx(u) << "," << sy(v) << " ";
            started = true;
            lastu = u;
        }
        os << "\"/>\n";
        os << "<text x=\"8\" y=\"" << 16 * ci << "\" fill=\"" << color << "\" font-size=\"12\">"
           << line.label << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace mc
