#ifndef FLOATDOM_GEOMETRY_HPP
#define FLOATDOM_GEOMETRY_HPP

#include <Eigen/Dense>

#include <cmath>
#include <numbers>

namespace floatdom {

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;

template <typename Scalar>
using Point2 = Vec2<Scalar>;
using Point2d = Point2<double>;

template <typename Scalar>
constexpr Scalar pi_v = std::numbers::pi_v<Scalar>;

template <typename Scalar>
constexpr Scalar two_pi_v = Scalar(2) * std::numbers::pi_v<Scalar>;

template <typename Scalar>
inline Scalar cross(const Vec2<Scalar>& u, const Vec2<Scalar>& v) {
    return u.x() * v.y() - u.y() * v.x();
}

/// Counterclockwise angle from u to v in (-pi, pi].
template <typename Scalar>
inline Scalar signed_angle(const Vec2<Scalar>& u, const Vec2<Scalar>& v) {
    using std::atan2;
    return atan2(cross(u, v), u.dot(v));
}

template <typename Scalar>
inline Vec2<Scalar> rotated(const Vec2<Scalar>& v, Scalar angle) {
    using std::cos;
    using std::sin;
    const Scalar c = cos(angle), s = sin(angle);
    return {c * v.x() - s * v.y(), s * v.x() + c * v.y()};
}

/// Reduces an angle to [0, 2 pi).
template <typename Scalar>
inline Scalar wrap_two_pi(Scalar angle) {
    using std::floor;
    Scalar r = angle - two_pi_v<Scalar> * floor(angle / two_pi_v<Scalar>);
    if (r >= two_pi_v<Scalar>) r -= two_pi_v<Scalar>;
    return r;
}

/// Reduces an arc length to [0, period).
template <typename Scalar>
inline Scalar wrap_period(Scalar s, Scalar period) {
    using std::floor;
    Scalar r = s - period * floor(s / period);
    if (r >= period || r < Scalar(0)) r = Scalar(0);
    return r;
}

template <typename Scalar>
inline Vec2<Scalar> unit_direction(Scalar angle) {
    using std::cos;
    using std::sin;
    return {cos(angle), sin(angle)};
}

/// Line integral of (x dy - y dx) / 2 along the straight segment a -> b.
template <typename Scalar>
inline Scalar segment_green(const Point2<Scalar>& a, const Point2<Scalar>& b) {
    return cross(a, b) / Scalar(2);
}

} // namespace floatdom

#endif // FLOATDOM_GEOMETRY_HPP
