#include "floatdom/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace floatdom {

namespace {

constexpr double canvas_width = 1024.0;

std::string fmt(double v) {
    if (!std::isfinite(v)) throw Error(ErrorCode::InvalidArgument, "non-finite coordinate in SVG output");
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 3);
    std::string s(buf, res.ptr);
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string escape(const std::string& text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

// World -> canvas, y flipped.
struct Frame {
    double x0 = 0, y1 = 0, scale = 1, height = 0;

    std::string xy(const Point2d& p) const { return fmt((p.x() - x0) * scale) + " " + fmt((y1 - p.y()) * scale); }
    std::string x(const Point2d& p) const { return fmt((p.x() - x0) * scale); }
    std::string y(const Point2d& p) const { return fmt((y1 - p.y()) * scale); }
};

Frame make_frame(const ClosedCurved& curve, const SvgDecorations& deco) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
    auto grow = [&](const Point2d& p) {
        xmin = std::min(xmin, p.x());
        xmax = std::max(xmax, p.x());
        ymin = std::min(ymin, p.y());
        ymax = std::max(ymax, p.y());
    };
    for (const auto& p : sample_polyline(curve, 4096)) grow(p);
    for (const auto& c : deco.chords) {
        grow(c.p_start);
        grow(c.p_end);
    }
    for (const auto& l : deco.labels) grow(l.at);
    const double w = xmax - xmin, h = ymax - ymin;
    const double margin = 0.05 * std::max(w, h);
    Frame f;
    f.x0 = xmin - margin;
    f.y1 = ymax + margin;
    f.scale = canvas_width / (w + 2 * margin);
    f.height = (h + 2 * margin) * f.scale;
    return f;
}

// Arc piece [u0, u1] of one circular arc, split so no command spans more than half a turn.
void emit_arc(std::string& d, const Frame& f, const CircularArc<double>& a, double u0, double u1) {
    const double extent = (u1 - u0) / a.radius;
    const int pieces = extent > 0.9 * pi_v<double> ? static_cast<int>(std::ceil(extent / (0.9 * pi_v<double>))) : 1;
    const std::string r = fmt(a.radius * f.scale);
    for (int i = 1; i <= pieces; ++i) {
        const double u = u0 + (u1 - u0) * i / pieces;
        // Counterclockwise in world coordinates is counterclockwise on the flipped canvas: sweep flag 0.
        d += " A " + r + " " + r + " 0 0 " + (a.ccw ? "0 " : "1 ") + f.xy(a.point_at(u));
    }
}

// Boundary from s0 forward by `length` (move-to included).
std::string boundary_path(const ClosedCurved& curve, const Frame& f, double s0, double length, int segments) {
    std::string d = "M " + f.xy(point_at(curve, s0));
    if (const auto* arcs = std::get_if<ArcSplineCurved>(&curve)) {
        auto loc = arcs->locate(s0);
        std::size_t i = loc.arc;
        double u = loc.u, left = length;
        for (std::size_t guard = 0; left > 1e-12 * arcs->perimeter() && guard <= 2 * arcs->size() + 2; ++guard) {
            const auto& a = arcs->arcs()[i];
            const double take = std::min(a.length() - u, left);
            if (take > 0) emit_arc(d, f, a, u, u + take);
            left -= take;
            i = (i + 1) % arcs->size();
            u = 0;
        }
        return d;
    }
    const double L = curve_perimeter(curve);
    const int n = std::max(2, static_cast<int>(std::ceil(segments * length / L)));
    for (int k = 1; k <= n; ++k) d += " L " + f.xy(point_at(curve, s0 + length * k / n));
    return d;
}

} // namespace

std::string render_svg(const ClosedCurved& curve, const SvgDecorations& deco) {
    const Frame f = make_frame(curve, deco);
    const double L = curve_perimeter(curve);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(canvas_width) + "\" height=\"" +
           fmt(f.height) + "\" viewBox=\"0 0 " + fmt(canvas_width) + " " + fmt(f.height) + "\">\n";
    if (deco.shade_caps) {
        for (const auto& c : deco.chords) {
            const double span = wrap_period(c.s_end - c.s_start, L);
            out += "  <path class=\"cap\" d=\"" + boundary_path(curve, f, c.s_start, span, deco.fourier_segments) +
                   " Z\" fill=\"#4a90d9\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
        }
    }
    // The closing segment of a smooth curve is its last polyline step; arcs close exactly.
    out += "  <path class=\"boundary\" d=\"" + boundary_path(curve, f, 0.0, L, deco.fourier_segments) +
           " Z\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
    for (const auto& c : deco.chords)
        out += "  <line x1=\"" + f.x(c.p_start) + "\" y1=\"" + f.y(c.p_start) + "\" x2=\"" + f.x(c.p_end) +
               "\" y2=\"" + f.y(c.p_end) + "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
    for (const auto& l : deco.labels)
        out += "  <text x=\"" + f.x(l.at) + "\" y=\"" + f.y(l.at) +
               "\" font-family=\"sans-serif\" font-size=\"20\">" + escape(l.text) + "</text>\n";
    out += "</svg>\n";
    return out;
}

} // namespace floatdom
