// Independent reference computations for the test suites. Nothing here calls
// the library's position, arc-length, Green or root-finding code.
#ifndef FLOATDOM_TEST_ORACLES_HPP
#define FLOATDOM_TEST_ORACLES_HPP

#include "floatdom/arc_spline.hpp"
#include "floatdom/fourier_curve.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <type_traits>
#include <vector>

namespace oracle {

using floatdom::Point2d;

inline constexpr double pi = 3.14159265358979323846;

/// rho evaluated term by term from the coefficient list.
inline double rho(const floatdom::FourierCurved& c, double t) {
    double r = c.mean_radius();
    for (const auto& h : c.harmonics()) r += h.a * std::cos(h.n * t) + h.b * std::sin(h.n * t);
    return r;
}

/// 8-point Gauss-Legendre on [a, b].
template <typename F>
auto gauss8(F f, double a, double b) {
    static const double x[4] = {0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363};
    static const double w[4] = {0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763};
    const double m = 0.5 * (a + b), h = 0.5 * (b - a);
    std::decay_t<decltype(f(a))> acc = w[0] * (f(m - h * x[0]) + f(m + h * x[0]));
    for (int i = 1; i < 4; ++i) acc = acc + w[i] * (f(m - h * x[i]) + f(m + h * x[i]));
    return decltype(acc)(h * acc);
}

/// Adaptive Simpson with Richardson correction.
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double eps, int depth = 40) {
    std::function<double(double, double, double, double, double, double, double, int)> rec =
        [&](double a, double b, double fa, double fm, double fb, double whole, double eps, int d) {
            const double m = 0.5 * (a + b), lm = 0.5 * (a + m), rm = 0.5 * (m + b);
            const double flm = f(lm), frm = f(rm);
            const double left = (m - a) / 6 * (fa + 4 * flm + fm), right = (b - m) / 6 * (fm + 4 * frm + fb);
            const double diff = left + right - whole;
            if (d <= 0 || std::abs(diff) <= 15 * eps) return left + right + diff / 15;
            return rec(a, m, fa, flm, fm, left, eps / 2, d - 1) + rec(m, b, fm, frm, fb, right, eps / 2, d - 1);
        };
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    return rec(a, b, fa, fm, fb, (b - a) / 6 * (fa + 4 * fm + fb), eps, depth);
}

/// Closed polyline with cumulative arc length; pts[i] sits at s[i], s[0] = 0.
struct Polyline {
    std::vector<Point2d> pts;
    std::vector<double> s;
    double length = 0;

    Point2d at(double t) const {
        t = std::fmod(t, length);
        if (t < 0) t += length;
        const auto it = std::upper_bound(s.begin(), s.end(), t);
        const std::size_t i = static_cast<std::size_t>(it - s.begin()) - 1;
        const std::size_t j = (i + 1) % pts.size();
        const double seg = (i + 1 < s.size() ? s[i + 1] : length) - s[i];
        return pts[i] + (pts[j] - pts[i]) * ((t - s[i]) / seg);
    }
};

inline void finish(Polyline& p) {
    p.s.assign(p.pts.size(), 0.0);
    for (std::size_t i = 1; i < p.pts.size(); ++i) p.s[i] = p.s[i - 1] + (p.pts[i] - p.pts[i - 1]).norm();
    p.length = p.s.back() + (p.pts.front() - p.pts.back()).norm();
}

/// Tangent-angle polyline: P(theta) = P0 + integral of rho(t) (-sin t, cos t), uniform in theta.
inline Polyline fourier_polyline(const floatdom::FourierCurved& c, int m, Point2d start = Point2d::Zero()) {
    Polyline p;
    p.pts.reserve(static_cast<std::size_t>(m));
    Point2d cur = start;
    const double h = 2 * pi / m;
    for (int i = 0; i < m; ++i) {
        p.pts.push_back(cur);
        cur += gauss8([&](double t) -> Point2d { return rho(c, t) * Point2d(-std::sin(t), std::cos(t)); }, i * h,
                      (i + 1) * h);
    }
    finish(p);
    return p;
}

/// Arc points from center + r (cos, sin), segments shared in proportion to arc length.
inline Polyline arcs_polyline(const floatdom::ArcSplineCurved& c, int m) {
    double total = 0;
    for (const auto& a : c.arcs()) total += a.length();
    Polyline p;
    for (const auto& a : c.arcs()) {
        const int k = std::max(4, static_cast<int>(std::lround(m * a.length() / total)));
        double sweep = a.ccw ? a.end_angle - a.start_angle : a.start_angle - a.end_angle;
        while (sweep <= 0) sweep += 2 * pi;
        while (sweep > 2 * pi) sweep -= 2 * pi;
        const double dir = a.ccw ? 1.0 : -1.0;
        for (int i = 0; i < k; ++i) {
            const double phi = a.start_angle + dir * sweep * i / k;
            p.pts.push_back(a.center + a.radius * Point2d(std::cos(phi), std::sin(phi)));
        }
    }
    finish(p);
    return p;
}

/// Signed shoelace area of a closed vertex loop.
inline double shoelace(const std::vector<Point2d>& v) {
    double acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        acc += a.x() * b.y() - a.y() * b.x();
    }
    return 0.5 * acc;
}

/// |area| of the loop: polyline from arc length s0 forward to s1 (s0 < s1 <= s0 + length), then the chord.
inline double cap_area(const Polyline& p, double s0, double s1) {
    std::vector<Point2d> loop{p.at(s0)};
    const double L = p.length;
    const std::size_t m = p.pts.size();
    // Walk vertices strictly inside (s0, s1), with wrap-around.
    for (int lap = 0; lap < 2; ++lap)
        for (std::size_t i = 0; i < m; ++i) {
            const double t = p.s[i] + lap * L;
            if (t > s0 && t < s1) loop.push_back(p.pts[i]);
        }
    loop.push_back(p.at(s1));
    return std::abs(shoelace(loop));
}

/// Sign changes of tan(n g) - n tan(g) on a uniform grid of (0, pi/2), skipping
/// grid cells that contain a pole of tan(n .) and cells below 1e-6.
inline int gamma_root_count(int n, int grid) {
    int count = 0;
    const double h = (pi / 2) / grid;
    auto r = [n](double g) { return std::tan(n * g) - n * std::tan(g); };
    auto pole_between = [n](double a, double b) {
        // Odd multiples of pi / 2n in [a, b]?
        const double ka = std::ceil((a * 2 * n / pi - 1) / 2), kb = std::floor((b * 2 * n / pi - 1) / 2);
        return kb >= ka;
    };
    double prev_g = h, prev = r(prev_g);
    for (int i = 2; i < grid; ++i) {
        const double g = i * h;
        const double v = r(g);
        if (prev_g > 1e-6 && !pole_between(prev_g, g) && ((prev < 0) != (v < 0))) ++count;
        prev_g = g;
        prev = v;
    }
    return count;
}

} // namespace oracle

#endif // FLOATDOM_TEST_ORACLES_HPP
