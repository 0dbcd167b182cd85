#ifndef FLOATDOM_ARC_SPLINE_HPP
#define FLOATDOM_ARC_SPLINE_HPP

#include "floatdom/error.hpp"
#include "floatdom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

namespace floatdom {

/// Circular arc traversed from start_angle to end_angle, counterclockwise
/// around its center when `ccw`, clockwise otherwise.
template <typename Scalar>
struct CircularArc {
    Point2<Scalar> center = Point2<Scalar>::Zero();
    Scalar radius = Scalar(1);
    Scalar start_angle = Scalar(0);
    Scalar end_angle = Scalar(0);
    bool ccw = true;

    /// Angular extent in [0, 2 pi).
    Scalar extent() const {
        return ccw ? wrap_two_pi(end_angle - start_angle) : wrap_two_pi(start_angle - end_angle);
    }
    Scalar length() const { return radius * extent(); }
    Scalar orientation() const { return ccw ? Scalar(1) : Scalar(-1); }

    /// Polar angle after travelling arc length u from the start.
    Scalar angle_at(Scalar u) const { return start_angle + orientation() * u / radius; }

    Point2<Scalar> point_at(Scalar u) const { return center + radius * unit_direction(angle_at(u)); }
    Point2<Scalar> start_point() const { return center + radius * unit_direction(start_angle); }
    Point2<Scalar> end_point() const { return center + radius * unit_direction(end_angle); }

    Vec2<Scalar> tangent_at(Scalar u) const {
        const Vec2<Scalar> radial = unit_direction(angle_at(u));
        return orientation() * Vec2<Scalar>(-radial.y(), radial.x());
    }

    Scalar signed_curvature() const { return orientation() / radius; }

    /// (1/2) integral of (x dy - y dx) from u0 to u1 along the arc, exact.
    Scalar green(Scalar u0, Scalar u1) const {
        using std::cos;
        using std::sin;
        const Scalar p0 = angle_at(u0), p1 = angle_at(u1);
        return (radius * center.x() * (sin(p1) - sin(p0)) - radius * center.y() * (cos(p1) - cos(p0)) +
                radius * radius * (p1 - p0)) /
               Scalar(2);
    }

    CircularArc reversed() const { return {center, radius, end_angle, start_angle, !ccw}; }
};

/// Closed boundary made of circular arcs joined end to end. The constructor
/// checks closure and normalizes the orientation to counterclockwise; the
/// basepoint (s = 0) is the start point of arc 0.
template <typename Scalar>
class ArcSplineCurve {
public:
    static constexpr double default_junction_tol = 1e-9;

    explicit ArcSplineCurve(std::vector<CircularArc<Scalar>> arcs,
                            Scalar junction_tol = Scalar(default_junction_tol))
        : arcs_(std::move(arcs)) {
        using std::isfinite;
        if (arcs_.empty()) throw Error(ErrorCode::InvalidCurve, "arc spline has no arcs");
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            const auto& a = arcs_[i];
            if (!(isfinite(a.radius) && a.radius > Scalar(0)))
                throw Error(ErrorCode::InvalidCurve, "arc " + std::to_string(i) + " has non-positive radius");
            if (!(isfinite(a.center.x()) && isfinite(a.center.y()) && isfinite(a.start_angle) &&
                  isfinite(a.end_angle)))
                throw Error(ErrorCode::InvalidCurve, "arc " + std::to_string(i) + " is not finite");
            if (!(a.extent() > Scalar(0)))
                throw Error(ErrorCode::InvalidCurve, "arc " + std::to_string(i) + " has zero extent");
        }
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            const auto& next = arcs_[(i + 1) % arcs_.size()];
            const Scalar gap = (arcs_[i].end_point() - next.start_point()).norm();
            if (!(gap <= junction_tol))
                throw Error(ErrorCode::InvalidCurve, "gap of " + std::to_string(static_cast<double>(gap)) +
                                                         " after arc " + std::to_string(i));
        }
        Scalar area = Scalar(0);
        for (const auto& a : arcs_) area += a.green(Scalar(0), a.length());
        if (!(std::abs(area) > Scalar(0)))
            throw Error(ErrorCode::InvalidCurve, "enclosed signed area is zero");
        if (area < Scalar(0)) {
            std::reverse(arcs_.begin(), arcs_.end());
            // The reversed last arc starts at the old basepoint, so s = 0 is unchanged.
            for (auto& a : arcs_) a = a.reversed();
        }
        build();
    }

    const std::vector<CircularArc<Scalar>>& arcs() const { return arcs_; }
    std::size_t size() const { return arcs_.size(); }
    Scalar perimeter() const { return perimeter_; }

    /// Arc length at which arc i starts.
    Scalar junction(std::size_t i) const { return offsets_[i]; }

    /// Signed turning angle of the tangent at the start of arc i (from the
    /// end tangent of arc i-1); zero where the junction is smooth.
    Scalar corner_turning(std::size_t i) const { return turning_[i]; }

    bool junction_is_corner(std::size_t i) const { return corner_[i]; }

    struct Location {
        std::size_t arc;
        Scalar u;
        bool wrapped = false;  ///< snapped forward across the basepoint
    };

    /// Arc containing s (forward convention: a junction belongs to the arc that starts there).
    Location locate(Scalar s) const { return locate_in_period(wrap_period(s, perimeter_)); }

    Point2<Scalar> point_at(Scalar s) const {
        const auto loc = locate(s);
        return arcs_[loc.arc].point_at(loc.u);
    }

    Vec2<Scalar> tangent_at(Scalar s) const {
        const auto loc = locate(s);
        return arcs_[loc.arc].tangent_at(loc.u);
    }

    Scalar curvature_at(Scalar s) const { return arcs_[locate(s).arc].signed_curvature(); }

    /// Distance in arc length from s to the nearest corner junction (infinity if none).
    Scalar distance_to_corner(Scalar s) const {
        using std::abs;
        using std::min;
        const Scalar r = wrap_period(s, perimeter_);
        Scalar best = std::numeric_limits<Scalar>::infinity();
        for (std::size_t i = 0; i < arcs_.size(); ++i) {
            if (!corner_[i]) continue;
            const Scalar d = abs(r - offsets_[i]);
            best = min(best, min(d, perimeter_ - d));
        }
        return best;
    }

    /// (1/2) integral of (x dy - y dx) from arc length 0 to s (unwrapped).
    Scalar green_at(Scalar s) const {
        using std::floor;
        Scalar turns = floor(s / perimeter_);
        Scalar r = s - turns * perimeter_;
        if (r >= perimeter_) {
            r -= perimeter_;
            turns += Scalar(1);
        }
        if (r < Scalar(0)) r = Scalar(0);
        const auto loc = locate_in_period(r);
        const Scalar partial = green_prefix_[loc.arc] + arcs_[loc.arc].green(Scalar(0), loc.u);
        return (turns + (loc.wrapped ? Scalar(1) : Scalar(0))) * signed_area_ + partial;
    }

    Scalar enclosed_area() const { return signed_area_; }

    ArcSplineCurve transformed(Scalar angle, const Vec2<Scalar>& shift, Scalar scale = Scalar(1)) const {
        auto arcs = arcs_;
        for (auto& a : arcs) {
            a.center = scale * floatdom::rotated<Scalar>(a.center, angle) + shift;
            a.radius *= scale;
            a.start_angle += angle;
            a.end_angle += angle;
        }
        return ArcSplineCurve(std::move(arcs), Scalar(default_junction_tol) * std::max(Scalar(1), scale));
    }

private:
    Location locate_in_period(Scalar r) const {
        using std::abs;
        auto it = std::upper_bound(offsets_.begin(), offsets_.end() - 1, r);
        std::size_t i = static_cast<std::size_t>(std::distance(offsets_.begin(), it)) - 1;
        Scalar u = r - offsets_[i];
        const Scalar snap = Scalar(64) * std::numeric_limits<Scalar>::epsilon() * perimeter_;
        bool wrapped = false;
        if (abs(offsets_[i + 1] - r) <= snap) {
            wrapped = i + 1 == arcs_.size();
            i = (i + 1) % arcs_.size();
            u = Scalar(0);
        } else if (u <= snap) {
            u = Scalar(0);
        }
        return {i, u, wrapped};
    }

    void build() {
        using std::abs;
        const std::size_t n = arcs_.size();
        offsets_.assign(n + 1, Scalar(0));
        green_prefix_.assign(n + 1, Scalar(0));
        for (std::size_t i = 0; i < n; ++i) {
            offsets_[i + 1] = offsets_[i] + arcs_[i].length();
            green_prefix_[i + 1] = green_prefix_[i] + arcs_[i].green(Scalar(0), arcs_[i].length());
        }
        perimeter_ = offsets_[n];
        signed_area_ = green_prefix_[n];
        turning_.assign(n, Scalar(0));
        corner_.assign(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            const auto& prev = arcs_[(i + n - 1) % n];
            const Vec2<Scalar> in = prev.tangent_at(prev.length());
            const Vec2<Scalar> out = arcs_[i].tangent_at(Scalar(0));
            turning_[i] = signed_angle<Scalar>(in, out);
            corner_[i] = abs(turning_[i]) > Scalar(1e-9);
        }
    }

    std::vector<CircularArc<Scalar>> arcs_;
    std::vector<Scalar> offsets_;
    std::vector<Scalar> green_prefix_;
    std::vector<Scalar> turning_;
    std::vector<bool> corner_;
    Scalar perimeter_ = Scalar(0);
    Scalar signed_area_ = Scalar(0);
};

using ArcSplineCurved = ArcSplineCurve<double>;

} // namespace floatdom

#endif // FLOATDOM_ARC_SPLINE_HPP
