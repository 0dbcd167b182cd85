#ifndef FLOATDOM_CLOSED_CURVE_HPP
#define FLOATDOM_CLOSED_CURVE_HPP

#include "floatdom/arc_spline.hpp"
#include "floatdom/fourier_curve.hpp"
#include "floatdom/geometry.hpp"

#include <cmath>
#include <limits>
#include <type_traits>
#include <variant>
#include <vector>

namespace floatdom {

/// Any boundary the toolkit measures. Orientation is always counterclockwise.
template <typename Scalar>
using ClosedCurve = std::variant<FourierCurve<Scalar>, ArcSplineCurve<Scalar>>;

using ClosedCurved = ClosedCurve<double>;

template <typename Scalar>
struct TangentSample {
    Vec2<Scalar> direction;
    bool corner = false;  ///< s sits on a junction with a tangent jump; direction is one-sided forward
};

// -- Perimeter, points, tangents, curvature ---------------------------------

template <typename Scalar>
Scalar curve_perimeter(const FourierCurve<Scalar>& c) { return c.perimeter(); }
template <typename Scalar>
Scalar curve_perimeter(const ArcSplineCurve<Scalar>& c) { return c.perimeter(); }
template <typename Scalar>
Scalar curve_perimeter(const ClosedCurve<Scalar>& c) {
    return std::visit([](const auto& v) { return v.perimeter(); }, c);
}

template <typename Scalar>
Point2<Scalar> point_at(const ClosedCurve<Scalar>& c, Scalar s) {
    return std::visit([s](const auto& v) { return v.point_at(s); }, c);
}

/// Arc-length distance from s to the nearest tangent discontinuity.
template <typename Scalar>
Scalar distance_to_corner(const ClosedCurve<Scalar>& c, Scalar s) {
    if (const auto* arcs = std::get_if<ArcSplineCurve<Scalar>>(&c)) return arcs->distance_to_corner(s);
    return std::numeric_limits<Scalar>::infinity();
}

template <typename Scalar>
TangentSample<Scalar> tangent_at(const ClosedCurve<Scalar>& c, Scalar s) {
    const Scalar corner_tol = Scalar(1e-9) * std::max(Scalar(1), curve_perimeter(c));
    return std::visit(
        [&](const auto& v) {
            return TangentSample<Scalar>{v.tangent_at(s), distance_to_corner(c, s) <= corner_tol};
        },
        c);
}

template <typename Scalar>
Scalar curvature_at(const ClosedCurve<Scalar>& c, Scalar s) {
    return std::visit([s](const auto& v) { return v.curvature_at(s); }, c);
}

template <typename Scalar>
Scalar enclosed_area(const ClosedCurve<Scalar>& c) {
    return std::visit([](const auto& v) { return v.enclosed_area(); }, c);
}

/// (1/2) integral of (x dy - y dx) along the boundary from s0 forward to s1 (s1 >= s0).
template <typename Scalar>
Scalar green_between(const FourierCurve<Scalar>& c, Scalar s0, Scalar s1) {
    return c.green_at_theta(c.theta_at(s1)) - c.green_at_theta(c.theta_at(s0));
}
template <typename Scalar>
Scalar green_between(const ArcSplineCurve<Scalar>& c, Scalar s0, Scalar s1) {
    return c.green_at(s1) - c.green_at(s0);
}
template <typename Scalar>
Scalar green_between(const ClosedCurve<Scalar>& c, Scalar s0, Scalar s1) {
    return std::visit([&](const auto& v) { return green_between(v, s0, s1); }, c);
}

// -- Polylines and simplicity ------------------------------------------------

/// `count` boundary points at uniform arc-length spacing starting at s = 0.
template <typename Scalar>
std::vector<Point2<Scalar>> sample_polyline(const ClosedCurve<Scalar>& c, std::size_t count) {
    std::vector<Point2<Scalar>> pts(count);
    const Scalar L = curve_perimeter(c);
    for (std::size_t i = 0; i < count; ++i)
        pts[i] = point_at(c, L * Scalar(i) / Scalar(count));
    return pts;
}

namespace detail {

template <typename Scalar>
bool segments_cross(const Point2<Scalar>& a, const Point2<Scalar>& b, const Point2<Scalar>& c,
                    const Point2<Scalar>& d) {
    const Scalar d1 = cross<Scalar>(b - a, c - a), d2 = cross<Scalar>(b - a, d - a);
    const Scalar d3 = cross<Scalar>(d - c, a - c), d4 = cross<Scalar>(d - c, b - c);
    return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 && d4 != 0;
}

} // namespace detail

/// Self-intersection test on a uniform polyline (bounding-box pruned pairwise sweep).
template <typename Scalar>
bool is_simple(const ClosedCurve<Scalar>& c, std::size_t samples = 4096) {
    const auto pts = sample_polyline(c, samples);
    const std::size_t n = pts.size();
    struct Box { Scalar x0, x1, y0, y1; };
    std::vector<Box> box(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& p = pts[i];
        const auto& q = pts[(i + 1) % n];
        box[i] = {std::min(p.x(), q.x()), std::max(p.x(), q.x()), std::min(p.y(), q.y()), std::max(p.y(), q.y())};
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (box[i].x1 < box[j].x0 || box[j].x1 < box[i].x0 || box[i].y1 < box[j].y0 || box[j].y1 < box[i].y0)
                continue;
            if (detail::segments_cross(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) return false;
        }
    }
    return true;
}

/// Throws non-simple-curve if the boundary crosses itself.
template <typename Scalar>
void require_simple(const ClosedCurve<Scalar>& c, std::size_t samples = 4096) {
    if (!is_simple(c, samples)) throw Error(ErrorCode::NonSimpleCurve, "boundary self-intersects");
}

// -- Curvature sign structure ------------------------------------------------

/// Number of sign changes, taken cyclically, in the boundary's curvature
/// measure: smooth curvature along each piece plus the turning impulse at
/// every corner. Zero for convex curves.
template <typename Scalar>
int curvature_sign_changes(const ClosedCurve<Scalar>& c) {
    // rho > 0 for Fourier curves by construction.
    if (std::holds_alternative<FourierCurve<Scalar>>(c)) return 0;
    std::vector<int> signs;
    const auto& arcs = std::get<ArcSplineCurve<Scalar>>(c);
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (arcs.junction_is_corner(i)) signs.push_back(arcs.corner_turning(i) > 0 ? 1 : -1);
        signs.push_back(arcs.arcs()[i].signed_curvature() > 0 ? 1 : -1);
    }
    int changes = 0;
    for (std::size_t i = 0; i < signs.size(); ++i)
        if (signs[i] != signs[(i + 1) % signs.size()]) ++changes;
    return changes;
}

} // namespace floatdom

#endif // FLOATDOM_CLOSED_CURVE_HPP
