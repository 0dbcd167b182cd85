#include "floatdom/closed_curve.hpp"
#include "floatdom/zako.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace floatdom;
using doctest::Approx;

namespace {

const double tri_circumradius = 1.0 / std::sqrt(3.0);

FourierCurved oval4() { return FourierCurved(1.0, {{4, 0.3, 0.0}}); }

ArcSplineCurved flower3() { return zako_construct(midpoint_polygon<double>(3, tri_circumradius)); }

// Two unequal circles through the origin, the second traversed clockwise; they cross again elsewhere.
ArcSplineCurved figure_eight() {
    const Point2d ca(-1, 1), cb(1.5, 1);
    const double ra = std::sqrt(2.0), rb = std::sqrt(3.25);
    const double a0 = std::atan2(-ca.y(), -ca.x()), b0 = std::atan2(-cb.y(), -cb.x());
    return ArcSplineCurved({{ca, ra, a0, a0 + pi_v<double>, true},
                            {ca, ra, a0 + pi_v<double>, a0, true},
                            {cb, rb, b0, b0 - pi_v<double>, false},
                            {cb, rb, b0 - pi_v<double>, b0, false}});
}

} // namespace

TEST_CASE("trig poly evaluation, derivative, integral and product") {
    TrigPoly<double> p(3);
    p.constant() = 1.0;
    p.a(2) = 0.3;
    p.b(3) = -0.2;
    const double t = 0.7;
    CHECK(p(t) == Approx(1 + 0.3 * std::cos(2 * t) - 0.2 * std::sin(3 * t)).epsilon(1e-15));
    CHECK(p.derivative()(t) == Approx(-0.6 * std::sin(2 * t) - 0.6 * std::cos(3 * t)).epsilon(1e-14));
    const double I = t + 0.15 * std::sin(2 * t) + 0.2 / 3 * (std::cos(3 * t) - 1);
    CHECK(p.integral(t) == Approx(I).epsilon(1e-14));
    TrigPoly<double> q(2);
    q.constant() = 0.5;
    q.a(1) = 2.0;
    const auto pq = p * q;
    CHECK(pq.degree() == 5);
    for (double x : {0.0, 0.4, 2.2, 5.9}) CHECK(pq(x) == Approx(p(x) * q(x)).epsilon(1e-13));
}

TEST_CASE("harmonic basis stays accurate at high degree") {
    const HarmonicBasis<double> b(1.234, 200);
    for (int k : {1, 7, 64, 199, 200}) {
        CHECK(b.cos_k(k) == Approx(std::cos(k * 1.234)).epsilon(1e-12));
        CHECK(b.sin_k(k) == Approx(std::sin(k * 1.234)).epsilon(1e-12));
    }
}

TEST_CASE("fourier curve validation") {
    CHECK_THROWS_AS(FourierCurved(0.0, {}), Error);
    CHECK_THROWS_AS(FourierCurved(1.0, {{1, 0.1, 0.0}}), Error);
    CHECK_THROWS_AS(FourierCurved(1.0, {{2, 0.6, 0.0}, {2, 0.1, 0.0}}), Error);
    CHECK_THROWS_AS(FourierCurved(1.0, {{3, 1.2, 0.0}}), Error);
    CHECK_THROWS_AS(FourierCurved(1.0, {{3, std::nan(""), 0.0}}), Error);
    try {
        FourierCurved(1.0, {{2, 0.7, 0.8}});
        FAIL("expected invalid-curve");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidCurve);
    }
    const FourierCurved ok(1.0, {{5, 0.0, 0.5}, {2, 0.2, 0.0}});
    CHECK(ok.harmonics().front().n == 2);
    CHECK(ok.min_rho() > 0);
}

TEST_CASE("perimeter") {
    CHECK(curve_perimeter(FourierCurved::circle()) == Approx(2 * pi_v<double>).epsilon(1e-15));
    CHECK(curve_perimeter(oval4()) == Approx(2 * pi_v<double>).epsilon(1e-15));
    CHECK(curve_perimeter(FourierCurved(2.5, {{3, 0.1, 0.4}})) == Approx(5 * pi_v<double>).epsilon(1e-15));
    const auto f = flower3();
    const auto poly = oracle::arcs_polyline(f, 100000);
    CHECK(std::abs(f.perimeter() - poly.length) / poly.length < 1e-8);
    CHECK(f.perimeter() == Approx(pi_v<double>).epsilon(1e-12));  // six arcs of radius 1/2, each 60 degrees
}

TEST_CASE("point_at on the unit circle") {
    const ClosedCurved c = FourierCurved::circle();
    const Point2d p0 = point_at(c, 0.0);
    CHECK(p0.x() == Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(p0.y()) < 1e-15);
    const Point2d half = point_at(c, pi_v<double>);
    CHECK((half + p0).norm() < 1e-14);
    CHECK((point_at(c, pi_v<double> / 2) - p0).norm() == Approx(std::sqrt(2.0)).epsilon(1e-14));
    const auto t0 = tangent_at(c, 0.0);
    CHECK(t0.direction.x() == doctest::Approx(0.0));
    CHECK(t0.direction.y() == Approx(1.0));
    CHECK_FALSE(t0.corner);
}

TEST_CASE("point_at matches the position integral") {
    const auto c = oval4();
    // s(theta) = theta + 0.3 sin(4 theta) / 4 inverted by bisection.
    double lo = 0, hi = 2 * pi_v<double>;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mid + 0.075 * std::sin(4 * mid) < 1.0 ? lo : hi) = mid;
    }
    const double theta = 0.5 * (lo + hi);
    const double dx = oracle::adaptive_simpson(
        [&](double t) { return -oracle::rho(c, t) * std::sin(t); }, 0.0, theta, 1e-15);
    const double dy = oracle::adaptive_simpson(
        [&](double t) { return oracle::rho(c, t) * std::cos(t); }, 0.0, theta, 1e-15);
    const Point2d d = c.point_at(1.0) - c.point_at(0.0);
    CHECK(std::abs(d.x() - dx) < 1e-10);
    CHECK(std::abs(d.y() - dy) < 1e-10);
    CHECK(c.theta_at(1.0) == Approx(theta).epsilon(1e-13));
}

TEST_CASE("closure, unit tangents and finite-difference consistency") {
    const std::vector<ClosedCurved> curves{FourierCurved::circle(), oval4(),
                                           FourierCurved(1.0, {{2, 0.2, 0.05}, {3, -0.1, 0.1}, {6, 0.02, 0.0}}),
                                           FourierCurved(1.0, {{3, 0.1, 0.0}}, Point2d(2, -1)), flower3()};
    for (const auto& c : curves) {
        const double L = curve_perimeter(c);
        CHECK((point_at(c, 0.0) - point_at(c, L)).norm() < 1e-9);
        for (int i = 0; i < 37; ++i) {
            const double s = L * (i + 0.31) / 37;
            if (distance_to_corner(c, s) < 1e-3) continue;
            const auto t = tangent_at(c, s);
            CHECK(std::abs(t.direction.norm() - 1) < 1e-12);
            const double h = 1e-6;
            const Vec2<double> fd = (point_at(c, s + h) - point_at(c, s)) / h;
            CHECK((fd - t.direction).norm() < 1e-4);
            const double turn = signed_angle<double>(t.direction, tangent_at(c, s + h).direction) / h;
            CHECK(std::abs(turn - curvature_at(c, s)) < 1e-4);
        }
    }
}

TEST_CASE("curvature") {
    const ClosedCurved circle = FourierCurved::circle();
    for (double s : {0.0, 1.0, 4.0}) CHECK(curvature_at(circle, s) == Approx(1.0));
    CHECK(curvature_at(ClosedCurved(oval4()), 0.0) == Approx(1 / 1.3).epsilon(1e-14));
    const auto c = FourierCurved(1.0, {{2, 0.3, 0.0}, {5, 0.1, 0.2}});
    for (int i = 0; i < 100; ++i) CHECK(c.curvature_at(c.perimeter() * i / 100) > 0);
    CHECK(curvature_sign_changes(ClosedCurved(c)) == 0);
}

TEST_CASE("enclosed area") {
    CHECK(enclosed_area(ClosedCurved(FourierCurved::circle())) == Approx(pi_v<double>).epsilon(1e-14));
    // Trapezoid quadrature of (1/2) integral (x y' - y x') d theta; spectrally accurate for trig polynomials.
    const auto c = oval4();
    double acc = 0;
    const int m = 4096;
    for (int i = 0; i < m; ++i) {
        const double t = 2 * pi_v<double> * i / m;
        const Point2d p = c.point_at_theta(t);
        const double r = oracle::rho(c, t);
        acc += 0.5 * (p.x() * r * std::cos(t) + p.y() * r * std::sin(t));
    }
    acc *= 2 * pi_v<double> / m;
    CHECK(std::abs(c.enclosed_area() - acc) < 1e-10);
    const auto f = flower3();
    const auto poly = oracle::arcs_polyline(f, 100000);
    const double ref = oracle::shoelace(poly.pts);
    CHECK(std::abs(f.enclosed_area() - ref) / ref < 1e-8);
}

TEST_CASE("arc spline validation and orientation") {
    const CircularArc<double> upper{{0, 0}, 1, 0, pi_v<double>, true};
    const CircularArc<double> lower{{0, 0}, 1, pi_v<double>, 2 * pi_v<double>, true};
    const ArcSplineCurved disc({upper, lower});
    CHECK(disc.enclosed_area() == Approx(pi_v<double>).epsilon(1e-14));
    CHECK(disc.perimeter() == Approx(2 * pi_v<double>).epsilon(1e-15));
    CHECK_FALSE(disc.junction_is_corner(0));
    // Clockwise input is normalized to counterclockwise.
    const ArcSplineCurved cw({lower.reversed(), upper.reversed()});
    CHECK(cw.enclosed_area() == Approx(pi_v<double>).epsilon(1e-14));
    CHECK(cw.curvature_at(0.3) == Approx(1.0));
    // A gap larger than 1e-9 is rejected.
    CircularArc<double> gap = lower;
    gap.start_angle += 1e-7;
    CHECK_THROWS_AS(ArcSplineCurved({upper, gap}), Error);
    CircularArc<double> bad_r = lower;
    bad_r.radius = -1;
    CHECK_THROWS_AS(ArcSplineCurved({upper, bad_r}), Error);
    CHECK_THROWS_AS(ArcSplineCurved({}), Error);
}

TEST_CASE("flower corners, tangents and curvature signs") {
    const auto f = flower3();
    const ClosedCurved c = f;
    const auto P = midpoint_polygon<double>(3, tri_circumradius);
    double s = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK((point_at(c, s) - P.vertices[i]).norm() < 1e-12);
        CHECK(f.junction_is_corner(i));
        const auto t = tangent_at(c, s);
        CHECK(t.corner);
        // Forward tangent of the arc that starts here.
        CHECK((t.direction - f.arcs()[i].tangent_at(0.0)).norm() < 1e-12);
        s += f.arcs()[i].length();
    }
    // Arcs turn +1/r; midpoint corners turn by -60 degrees, triangle corners by +60.
    for (std::size_t i = 0; i < f.size(); ++i) {
        CHECK(f.arcs()[i].signed_curvature() == Approx(2.0));
        CHECK(std::abs(std::abs(f.corner_turning(i)) - pi_v<double> / 3) < 1e-12);
    }
    CHECK(curvature_sign_changes(c) > 0);
    CHECK(is_simple(c));
}

TEST_CASE("simplicity check") {
    CHECK(is_simple(ClosedCurved(FourierCurved(1.0, {{2, 0.4, 0.0}}))));
    const ClosedCurved eight = figure_eight();
    CHECK_FALSE(is_simple(eight));
    CHECK_THROWS_AS(require_simple(eight), Error);
}

TEST_CASE("rigid motions and scaling") {
    const auto c = FourierCurved(1.0, {{2, 0.2, 0.1}, {3, 0.05, -0.02}});
    const auto r = c.rotated(0.9);
    CHECK(r.enclosed_area() == Approx(c.enclosed_area()).epsilon(1e-13));
    CHECK(r.min_rho() == Approx(c.min_rho()).epsilon(1e-12));
    const auto k = c.scaled(3.0);
    CHECK(k.enclosed_area() == Approx(9 * c.enclosed_area()).epsilon(1e-13));
    CHECK(k.perimeter() == Approx(3 * c.perimeter()).epsilon(1e-15));
    const auto t = c.translated(Point2d(1, 2));
    CHECK((t.point_at(1.3) - c.point_at(1.3) - Point2d(1, 2)).norm() < 1e-13);
    const auto f = flower3();
    const auto g = f.transformed(0.4, Point2d(-3, 1), 2.0);
    CHECK(g.enclosed_area() == Approx(4 * f.enclosed_area()).epsilon(1e-13));
}
