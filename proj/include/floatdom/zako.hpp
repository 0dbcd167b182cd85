#ifndef FLOATDOM_ZAKO_HPP
#define FLOATDOM_ZAKO_HPP

#include "floatdom/arc_spline.hpp"
#include "floatdom/closed_curve.hpp"
#include "floatdom/error.hpp"
#include "floatdom/geometry.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace floatdom {

/// A 2n-gon A_1..A_2n (counterclockwise) with diagonal step k, 1 < k <= n.
template <typename Scalar>
struct ZaKoPolygon {
    std::vector<Point2<Scalar>> vertices;
    int k = 3;

    int half() const { return static_cast<int>(vertices.size()) / 2; }
    const Point2<Scalar>& at(int i) const {
        const int m = static_cast<int>(vertices.size());
        return vertices[static_cast<std::size_t>(((i % m) + m) % m)];
    }
};

using ZaKoPolygond = ZaKoPolygon<double>;

/// Regular n-gon with its side midpoints inserted, centered at the origin,
/// first side horizontal at the bottom. k = n.
template <typename Scalar>
ZaKoPolygon<Scalar> midpoint_polygon(int n, Scalar circumradius = Scalar(1)) {
    if (n < 3) throw Error(ErrorCode::InvalidArgument, "midpoint_polygon needs n >= 3");
    if (!(circumradius > Scalar(0))) throw Error(ErrorCode::InvalidArgument, "circumradius must be positive");
    ZaKoPolygon<Scalar> p;
    p.k = n;
    const Scalar step = two_pi_v<Scalar> / Scalar(n);
    const Scalar first = -pi_v<Scalar> / Scalar(2) - step / Scalar(2);
    std::vector<Point2<Scalar>> corners;
    for (int i = 0; i < n; ++i) corners.push_back(circumradius * unit_direction(first + step * Scalar(i)));
    for (int i = 0; i < n; ++i) {
        p.vertices.push_back(corners[i]);
        p.vertices.push_back((corners[i] + corners[(i + 1) % n]) / Scalar(2));
    }
    return p;
}

template <typename Scalar>
struct Circle {
    Point2<Scalar> center = Point2<Scalar>::Zero();
    Scalar radius = 0;
};

/// Circumcircle of a, b, c from the intersection of two perpendicular
/// bisectors; nullopt when the points are collinear (relative to their spread).
template <typename Scalar>
std::optional<Circle<Scalar>> circle_through(const Point2<Scalar>& a, const Point2<Scalar>& b,
                                             const Point2<Scalar>& c) {
    using std::abs;
    const Vec2<Scalar> u = b - a, v = c - a;
    const Scalar d = Scalar(2) * cross(u, v);
    const Scalar scale = std::max({u.squaredNorm(), v.squaredNorm(), (c - b).squaredNorm()});
    if (!(abs(d) > Scalar(1e-12) * scale)) return std::nullopt;
    const Scalar uu = u.squaredNorm(), vv = v.squaredNorm();
    const Vec2<Scalar> off((v.y() * uu - u.y() * vv) / d, (u.x() * vv - v.x() * uu) / d);
    return Circle<Scalar>{a + off, off.norm()};
}

template <typename Scalar>
struct QuadDiagnostic {
    int pair = 0;            ///< j, 0-based: Q_j = (A_j, A_j+1, A_j+n, A_j+n+1)
    bool degenerate = false; ///< three of the four vertices collinear
    bool concyclic = false;
    Scalar residual = 0;     ///< |dist(A_j+n+1, center) - radius|
    Circle<Scalar> circle;
};

template <typename Scalar>
struct ZaKoDiagnostics {
    bool sides_equal = false;           ///< condition i)
    bool opposite_sides_equal = false;  ///< condition i')
    bool diagonals_equal = false;       ///< condition ii), step k
    bool simple = false;
    bool k_valid = false;
    Scalar side_spread = 0;
    Scalar diagonal_spread = 0;
    std::vector<Scalar> opposite_side_deviation;  ///< per pair
    std::vector<QuadDiagnostic<Scalar>> quads;

    bool all_concyclic() const {
        for (const auto& q : quads)
            if (!q.concyclic) return false;
        return !quads.empty();
    }
    bool valid() const {
        return k_valid && simple && (sides_equal || opposite_sides_equal) && diagonals_equal && all_concyclic();
    }
    std::string summary() const {
        std::string out;
        auto add = [&](bool ok, const std::string& what) {
            if (!ok) out += (out.empty() ? "" : "; ") + what;
        };
        add(k_valid, "k out of range");
        add(simple, "polygon not simple");
        add(sides_equal || opposite_sides_equal, "opposite sides differ");
        add(diagonals_equal, "step-k diagonals differ (spread " + std::to_string(double(diagonal_spread)) + ")");
        for (const auto& q : quads) {
            if (q.degenerate) add(false, "Q" + std::to_string(q.pair + 1) + " degenerate");
            else if (!q.concyclic)
                add(false, "Q" + std::to_string(q.pair + 1) + " not concyclic (residual " +
                               std::to_string(double(q.residual)) + ")");
        }
        return out.empty() ? "ok" : out;
    }
};

namespace detail {

template <typename Scalar>
bool polygon_is_simple(const std::vector<Point2<Scalar>>& v) {
    const std::size_t m = v.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            if (j == i + 1 || (i == 0 && j == m - 1)) continue;
            if (segments_cross<Scalar>(v[i], v[(i + 1) % m], v[j], v[(j + 1) % m])) return false;
        }
    return true;
}

template <typename Scalar>
Scalar spread_of(const std::vector<Scalar>& xs) {
    if (xs.empty()) return 0;
    const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
    return *hi - *lo;
}

} // namespace detail

/// Conditions i), i'), ii), simplicity, and per-pair concyclicity of Q_j.
template <typename Scalar>
ZaKoDiagnostics<Scalar> zako_validate(const ZaKoPolygon<Scalar>& P, Scalar tol) {
    using std::abs;
    ZaKoDiagnostics<Scalar> d;
    const int m = static_cast<int>(P.vertices.size());
    if (m < 6 || m % 2 != 0) return d;
    const int n = P.half();
    d.k_valid = P.k > 1 && P.k <= n;
    d.simple = detail::polygon_is_simple(P.vertices);

    std::vector<Scalar> sides, diagonals;
    for (int i = 0; i < m; ++i) sides.push_back((P.at(i + 1) - P.at(i)).norm());
    d.side_spread = detail::spread_of(sides);
    d.sides_equal = d.side_spread <= tol;
    d.opposite_sides_equal = true;
    for (int j = 0; j < n; ++j) {
        const Scalar dev = abs(sides[j] - sides[j + n]);
        d.opposite_side_deviation.push_back(dev);
        if (!(dev <= tol)) d.opposite_sides_equal = false;
    }
    if (d.k_valid) {
        for (int i = 0; i < m; ++i) diagonals.push_back((P.at(i + P.k) - P.at(i)).norm());
        d.diagonal_spread = detail::spread_of(diagonals);
        d.diagonals_equal = d.diagonal_spread <= tol;
    }

    for (int j = 0; j < n; ++j) {
        QuadDiagnostic<Scalar> q;
        q.pair = j;
        const Point2<Scalar> quad[4] = {P.at(j), P.at(j + 1), P.at(j + n), P.at(j + n + 1)};
        for (int skip = 0; skip < 4 && !q.degenerate; ++skip) {
            Point2<Scalar> t[3];
            for (int r = 0, w = 0; r < 4; ++r)
                if (r != skip) t[w++] = quad[r];
            if (!circle_through(t[0], t[1], t[2])) q.degenerate = true;
        }
        if (!q.degenerate) {
            q.circle = *circle_through(quad[0], quad[1], quad[2]);
            q.residual = abs((quad[3] - q.circle.center).norm() - q.circle.radius);
            q.concyclic = q.residual <= tol;
        }
        d.quads.push_back(q);
    }
    return d;
}

/// Replaces side A_j A_j+1 by the arc of the circumcircle of Q_(j mod n)
/// that avoids the other two vertices of that quadrilateral.
template <typename Scalar>
ArcSplineCurve<Scalar> zako_construct(const ZaKoPolygon<Scalar>& P, Scalar tol = Scalar(1e-9)) {
    using std::atan2;
    const auto d = zako_validate(P, tol);
    for (const auto& q : d.quads)
        if (q.degenerate)
            throw Error(ErrorCode::AmbiguousArc, "Q" + std::to_string(q.pair + 1) + " has three collinear vertices");
    if (!d.valid()) {
        const ErrorCode code = d.quads.empty() || d.all_concyclic() ? ErrorCode::InvalidArgument
                                                                    : ErrorCode::NotConcyclic;
        throw Error(code, "polygon is not admissible: " + d.summary());
    }
    const int n = P.half();
    const int m = 2 * n;
    std::vector<CircularArc<Scalar>> arcs;
    for (int j = 0; j < m; ++j) {
        const int pair = j % n;
        const Circle<Scalar>& c = d.quads[static_cast<std::size_t>(pair)].circle;
        auto polar = [&](const Point2<Scalar>& p) {
            const Vec2<Scalar> r = p - c.center;
            return atan2(r.y(), r.x());
        };
        const Scalar a0 = polar(P.at(j));
        const Scalar extent_ccw = wrap_two_pi(polar(P.at(j + 1)) - a0);
        // The two quadrilateral vertices that are not endpoints of this side.
        const int others[2] = {j < n ? j + n : j - n, j < n ? j + n + 1 : j - n + 1};
        int inside = 0;
        for (int o : others) {
            const Scalar t = wrap_two_pi(polar(P.at(o)) - a0);
            if (t > Scalar(0) && t < extent_ccw) ++inside;
        }
        if (inside == 1)
            throw Error(ErrorCode::AmbiguousArc, "side " + std::to_string(j + 1) + ": both arcs hold a vertex");
        CircularArc<Scalar> arc;
        arc.center = c.center;
        arc.radius = c.radius;
        arc.start_angle = a0;
        arc.ccw = inside == 0;
        arc.end_angle = arc.ccw ? a0 + extent_ccw : a0 - (two_pi_v<Scalar> - extent_ccw);
        arcs.push_back(arc);
    }
    return ArcSplineCurve<Scalar>(std::move(arcs));
}

} // namespace floatdom

#endif // FLOATDOM_ZAKO_HPP
