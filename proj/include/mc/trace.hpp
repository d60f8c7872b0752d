#ifndef MC_TRACE_HPP
#define MC_TRACE_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "mc/constants.hpp"

namespace mc {

enum class Branch { Gamma, GammaDual, HSegment };

struct TraceSample {
    Rational q;  // curve parameter (the u coordinate for hyperbola segments)
    Rational ulo, uhi, vlo, vhi;
    bool endpoint = false;
    bool sign_change_certified = false;
};

struct CurvePolyline {
    int m = 0;
    Branch branch = Branch::Gamma;
    std::string label;
    std::vector<TraceSample> samples;
    Rational certified_width;
};

// Traces the transcendental branch with n samples at enclosure width
// `width`, plus the involution image. Every interior sample box carries a
// corner sign change of T; endpoints are the exact curve-segment ends.
std::vector<CurvePolyline> trace_gamma(int m, int n, const Rational& width);

// Hyperbola pieces of the curve clipped to u in [window_lo, window_hi].
std::vector<CurvePolyline> trace_components(int m, const Rational& window_lo,
                                            const Rational& window_hi, int samples_per_segment = 64);

// Certified nonvanishing of T on a rational grid of the open region
// u < 0 < v < 1 (used for the even-m emptiness checks).
bool gamma_region_empty_on_grid(int m, int grid);

void write_trace_csv(std::ostream& os, const std::vector<CurvePolyline>& lines, int digits);
void write_trace_svg(std::ostream& os, const std::vector<CurvePolyline>& lines, double lo, double hi);

}  // namespace mc

#endif
