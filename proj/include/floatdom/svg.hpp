#ifndef FLOATDOM_SVG_HPP
#define FLOATDOM_SVG_HPP

#include "floatdom/chords.hpp"
#include "floatdom/closed_curve.hpp"

#include <string>
#include <vector>

namespace floatdom {

struct SvgLabel {
    Point2d at = Point2d::Zero();
    std::string text;
};

struct SvgDecorations {
    std::vector<ChordSampled> chords;
    bool shade_caps = false;  ///< one shaded path per chord: forward arc then back along the chord
    std::vector<SvgLabel> labels;
    int fourier_segments = 720;  ///< polyline resolution for smooth curves
};

/// Static SVG, 1024 units wide, viewBox from the bounding box plus a 5% margin.
/// Arc-spline boundaries are written with exact arc commands; numbers use
/// fixed-point "C"-locale formatting, so output is byte-stable.
std::string render_svg(const ClosedCurved& curve, const SvgDecorations& deco = {});

} // namespace floatdom

#endif // FLOATDOM_SVG_HPP
