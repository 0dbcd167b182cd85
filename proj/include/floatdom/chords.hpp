#ifndef FLOATDOM_CHORDS_HPP
#define FLOATDOM_CHORDS_HPP

#include "floatdom/closed_curve.hpp"
#include "floatdom/detail/roots.hpp"
#include "floatdom/error.hpp"

#include <cmath>
#include <limits>

namespace floatdom {

/// One directed chord P(s_start) -> P(s_end).
///
/// Angles: angle_start is measured counterclockwise from the forward tangent
/// at the start to the chord direction; angle_end counterclockwise from the
/// chord direction to the forward tangent at the end. On a circle both equal
/// the inscribed tangent-chord angle. The capillary contact angle of the
/// floating picture is pi - angle_start.
template <typename Scalar>
struct ChordSample {
    Scalar s_start = 0;
    Scalar s_end = 0;  ///< reduced to [0, perimeter)
    Point2<Scalar> p_start = Point2<Scalar>::Zero();
    Point2<Scalar> p_end = Point2<Scalar>::Zero();
    Scalar direction_alpha = 0;  ///< direction of p_end - p_start, in [0, 2 pi)
    Scalar angle_start = 0;
    Scalar angle_end = 0;
    Scalar chord_length = 0;
    /// Area between the forward boundary arc s_start -> s_end and the chord
    /// (absolute value of the signed Green integral of arc-then-chord).
    Scalar cap_area = 0;
    Scalar curvature_start = 0;
    bool corner_start = false;
    bool corner_end = false;
};

using ChordSampled = ChordSample<double>;

namespace detail {

template <typename Scalar>
void finish_chord(ChordSample<Scalar>& c, Scalar L, const Vec2<Scalar>& t0, const Vec2<Scalar>& t1,
                  Scalar green_arc) {
    using std::abs;
    using std::atan2;
    const Vec2<Scalar> d = c.p_end - c.p_start;
    c.chord_length = d.norm();
    if (!(c.chord_length > Scalar(1e-12) * std::max(Scalar(1), L)))
        throw Error(ErrorCode::DegenerateChord, "chord endpoints coincide");
    c.direction_alpha = wrap_two_pi(atan2(d.y(), d.x()));
    c.angle_start = signed_angle<Scalar>(t0, d);
    c.angle_end = signed_angle<Scalar>(d, t1);
    c.cap_area = abs(green_arc + segment_green<Scalar>(c.p_end, c.p_start));
}

/// s1_unwrapped = s0 + forward arc length; theta0/theta1 are the matching
/// (unwrapped) normal angles.
template <typename Scalar>
ChordSample<Scalar> measure_chord(const FourierCurve<Scalar>& curve, Scalar s0, Scalar theta0,
                                  Scalar s1_unwrapped, Scalar theta1) {
    const Scalar L = curve.perimeter();
    ChordSample<Scalar> c;
    c.s_start = s0;
    c.s_end = wrap_period(s1_unwrapped, L);
    c.p_start = curve.point_at_theta(theta0);
    c.p_end = curve.point_at_theta(theta1);
    c.curvature_start = Scalar(1) / curve.rho_at_theta(theta0);
    finish_chord(c, L, curve.tangent_at_theta(theta0), curve.tangent_at_theta(theta1),
                 curve.green_at_theta(theta1) - curve.green_at_theta(theta0));
    return c;
}

template <typename Scalar>
ChordSample<Scalar> measure_chord(const ArcSplineCurve<Scalar>& curve, Scalar s0, Scalar s1_unwrapped) {
    const Scalar L = curve.perimeter();
    const Scalar corner_tol = Scalar(1e-9) * std::max(Scalar(1), L);
    ChordSample<Scalar> c;
    c.s_start = s0;
    c.s_end = wrap_period(s1_unwrapped, L);
    c.p_start = curve.point_at(s0);
    c.p_end = curve.point_at(s1_unwrapped);
    c.curvature_start = curve.curvature_at(s0);
    c.corner_start = curve.distance_to_corner(s0) <= corner_tol;
    c.corner_end = curve.distance_to_corner(s1_unwrapped) <= corner_tol;
    finish_chord(c, L, curve.tangent_at(s0), curve.tangent_at(s1_unwrapped),
                 curve.green_at(s1_unwrapped) - curve.green_at(s0));
    return c;
}

template <typename Scalar>
void check_fraction(Scalar delta) {
    if (!(delta > Scalar(0) && delta < Scalar(1)))
        throw Error(ErrorCode::InvalidArgument, "delta must lie in (0, 1)");
}

} // namespace detail

/// Chord spanning the forward boundary arc of length delta * perimeter that starts at s.
template <typename Scalar>
ChordSample<Scalar> chord_at_fraction(const FourierCurve<Scalar>& curve, Scalar s, Scalar delta) {
    detail::check_fraction(delta);
    const Scalar L = curve.perimeter();
    const Scalar s0 = wrap_period(s, L);
    const Scalar s1 = s0 + delta * L;
    return detail::measure_chord(curve, s0, curve.theta_at(s0), s1, curve.theta_at(s1));
}

template <typename Scalar>
ChordSample<Scalar> chord_at_fraction(const ArcSplineCurve<Scalar>& curve, Scalar s, Scalar delta) {
    detail::check_fraction(delta);
    const Scalar L = curve.perimeter();
    const Scalar s0 = wrap_period(s, L);
    return detail::measure_chord(curve, s0, s0 + delta * L);
}

template <typename Scalar>
ChordSample<Scalar> chord_at_fraction(const ClosedCurve<Scalar>& curve, Scalar s, Scalar delta) {
    return std::visit([&](const auto& v) { return chord_at_fraction(v, s, delta); }, curve);
}

struct ShootOptions {
    int scan_samples = 256;
    double xtol = 1e-14;  ///< in the normal-angle parameter, which is O(1)
};

/// Fires the chord from P(s) whose direction is the forward tangent rotated
/// counterclockwise by gamma, and returns it ending at the other boundary
/// intersection. Defined for strictly convex curves only.
///
/// The exit point is the zero of the angle, relative to the ray, of the
/// secant P(theta) - P(s); on a convex curve that angle increases
/// monotonically from -gamma to pi - gamma over one turn, so the first sign
/// change of a uniform scan brackets the unique exit.
template <typename Scalar>
ChordSample<Scalar> shoot_chord(const FourierCurve<Scalar>& curve, Scalar s, Scalar gamma,
                                const ShootOptions& opt = {}) {
    using std::abs;
    if (!(gamma >= Scalar(1e-6) && gamma <= pi_v<Scalar> - Scalar(1e-6)))
        throw Error(ErrorCode::NearTangency, "gamma must lie in [1e-6, pi - 1e-6]");
    const Scalar L = curve.perimeter();
    const Scalar s0 = wrap_period(s, L);
    const Scalar theta0 = curve.theta_at(s0);
    const Point2<Scalar> p0 = curve.point_at_theta(theta0);
    const Vec2<Scalar> ray = rotated<Scalar>(curve.tangent_at_theta(theta0), gamma);

    const Scalar theta_end = theta0 + two_pi_v<Scalar>;
    auto relative_angle = [&](Scalar theta) {
        if (theta <= theta0) return -gamma;
        if (theta >= theta_end) return pi_v<Scalar> - gamma;
        const Vec2<Scalar> d = curve.point_at_theta(theta) - p0;
        return signed_angle<Scalar>(ray, d);
    };

    const int m = opt.scan_samples;
    const Scalar step = two_pi_v<Scalar> / Scalar(m);
    Scalar lo = theta0, flo = -gamma;
    bool found = false;
    Scalar hi = theta0, fhi = flo;
    for (int i = 1; i <= m; ++i) {
        hi = i == m ? theta_end : theta0 + step * Scalar(i);
        fhi = relative_angle(hi);
        // A sign change across +-pi would be the antipodal branch; only
        // accept a crossing through zero.
        if (flo < Scalar(0) && fhi >= Scalar(0) && fhi - flo < pi_v<Scalar>) {
            found = true;
            break;
        }
        lo = hi;
        flo = fhi;
    }
    if (!found) throw Error(ErrorCode::NoIntersection, "no exit point bracketed (curve not strictly convex?)");
    const Scalar theta1 =
        detail::brent_root<Scalar>(relative_angle, lo, hi, flo, fhi, Scalar(opt.xtol));
    const Scalar s1 = curve.arc_length_at(theta1) - curve.arc_length_at(theta0) + s0;
    auto c = detail::measure_chord(curve, s0, theta0, s1, theta1);
    c.angle_start = gamma;
    return c;
}

} // namespace floatdom

#endif // FLOATDOM_CHORDS_HPP
