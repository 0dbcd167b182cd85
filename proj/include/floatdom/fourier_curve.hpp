#ifndef FLOATDOM_FOURIER_CURVE_HPP
#define FLOATDOM_FOURIER_CURVE_HPP

#include "floatdom/error.hpp"
#include "floatdom/geometry.hpp"
#include "floatdom/trig_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

namespace floatdom {

template <typename Scalar>
struct Harmonic {
    int n = 2;
    Scalar a = Scalar(0);  ///< cos coefficient
    Scalar b = Scalar(0);  ///< sin coefficient
};

using Harmonicd = Harmonic<double>;

/// Smooth strictly convex closed curve described by the Fourier series of its
/// radius of curvature
///
///     rho(theta) = a0 + sum_n (a_n cos n theta + b_n sin n theta),   n >= 2,
///
/// where theta is the direction of the outward normal (the tangent direction
/// is theta + pi/2). The first harmonic is absent, which is exactly the
/// closure condition, so the perimeter is 2 pi a0.
///
/// Positions come from the support function p (rho = p + p''):
///     P(theta) = offset + p(theta) n(theta) + p'(theta) t(theta),
/// which places the Steiner point at `offset` and starts the unit circle at (1, 0).
/// Everything below is closed form; the only iterative step is the
/// inversion s -> theta.
template <typename Scalar>
class FourierCurve {
public:
    using Poly = TrigPoly<Scalar>;

    FourierCurve(Scalar mean_radius, std::vector<Harmonic<Scalar>> harmonics,
                 Point2<Scalar> offset = Point2<Scalar>::Zero())
        : a0_(mean_radius), harmonics_(std::move(harmonics)), offset_(offset) {
        using std::isfinite;
        if (!(isfinite(a0_) && a0_ > Scalar(0)))
            throw Error(ErrorCode::InvalidCurve, "mean radius must be positive and finite");
        if (!(isfinite(offset_.x()) && isfinite(offset_.y())))
            throw Error(ErrorCode::InvalidCurve, "offset must be finite");
        std::sort(harmonics_.begin(), harmonics_.end(),
                  [](const auto& l, const auto& r) { return l.n < r.n; });
        for (std::size_t i = 0; i < harmonics_.size(); ++i) {
            const auto& h = harmonics_[i];
            if (h.n < 2)
                throw Error(ErrorCode::InvalidCurve,
                            "harmonic index " + std::to_string(h.n) + " < 2 (n = 1 breaks closure)");
            if (i > 0 && harmonics_[i - 1].n == h.n)
                throw Error(ErrorCode::InvalidCurve, "duplicate harmonic " + std::to_string(h.n));
            if (!(isfinite(h.a) && isfinite(h.b)))
                throw Error(ErrorCode::InvalidCurve, "non-finite harmonic coefficient");
        }
        build();
        if (!(min_rho_ > Scalar(0)))
            throw Error(ErrorCode::InvalidCurve,
                        "radius of curvature is not positive (min rho = " +
                            std::to_string(static_cast<double>(min_rho_)) + ")");
    }

    static FourierCurve circle(Scalar radius = Scalar(1)) { return FourierCurve(radius, {}); }

    Scalar mean_radius() const { return a0_; }
    const std::vector<Harmonic<Scalar>>& harmonics() const { return harmonics_; }
    const Point2<Scalar>& offset() const { return offset_; }
    const Poly& rho() const { return rho_; }
    const Poly& support() const { return support_; }

    Scalar perimeter() const { return two_pi_v<Scalar> * a0_; }
    Scalar min_rho() const { return min_rho_; }
    Scalar max_rho() const { return max_rho_; }

    /// Arc length from theta = 0 to theta (unwrapped, monotone).
    Scalar arc_length_at(Scalar theta) const { return rho_.integral(theta); }

    /// Inverse of arc_length_at for any real s (unwrapped).
    Scalar theta_at(Scalar s) const {
        using std::abs;
        using std::floor;
        const Scalar L = perimeter();
        const Scalar turns = floor(s / L);
        Scalar r = s - turns * L;
        if (r < Scalar(0)) r = Scalar(0);
        if (r >= L) r = L;
        return two_pi_v<Scalar> * turns + theta_local(r);
    }

    Point2<Scalar> point_at_theta(Scalar theta) const {
        const HarmonicBasis<Scalar> basis(theta, std::max<Eigen::Index>(1, rho_.degree()));
        const Scalar c = basis.cos_k[1], s = basis.sin_k[1];
        const Scalar p = support_(basis);
        const Scalar dp = support_d_(basis);
        return offset_ + Point2<Scalar>(p * c - dp * s, p * s + dp * c);
    }

    Vec2<Scalar> tangent_at_theta(Scalar theta) const {
        return Vec2<Scalar>(-sin_of(theta), cos_of(theta));
    }

    Scalar rho_at_theta(Scalar theta) const { return rho_(theta); }

    /// (1/2) integral of (x dy - y dx) from theta = 0 to theta (unwrapped).
    Scalar green_at_theta(Scalar theta) const {
        const HarmonicBasis<Scalar> basis(theta, sector_.degree());
        const Scalar own = sector_.integral(basis, theta) / Scalar(2);
        if (offset_.x() == Scalar(0) && offset_.y() == Scalar(0)) return own;
        // The offset adds (1/2) offset x (P(theta) - P(0)).
        return own + cross(offset_, Vec2<Scalar>(point_at_theta(theta) - point_at_theta(Scalar(0)))) /
                         Scalar(2);
    }

    Scalar enclosed_area() const { return pi_v<Scalar> * sector_.constant(); }

    Point2<Scalar> point_at(Scalar s) const { return point_at_theta(theta_at(s)); }
    Vec2<Scalar> tangent_at(Scalar s) const { return tangent_at_theta(theta_at(s)); }
    Scalar curvature_at(Scalar s) const { return Scalar(1) / rho_(theta_at(s)); }

    /// Same curve rotated by `angle` about its Steiner point; the basepoint
    /// moves with the rotation's phase convention rho_new(theta) = rho(theta - angle).
    FourierCurve rotated(Scalar angle) const {
        using std::cos;
        using std::sin;
        auto hs = harmonics_;
        for (auto& h : hs) {
            const Scalar c = cos(Scalar(h.n) * angle), s = sin(Scalar(h.n) * angle);
            const Scalar a = h.a, b = h.b;
            h.a = a * c - b * s;
            h.b = a * s + b * c;
        }
        return FourierCurve(a0_, std::move(hs), floatdom::rotated<Scalar>(offset_, angle));
    }

    FourierCurve scaled(Scalar factor) const {
        auto hs = harmonics_;
        for (auto& h : hs) {
            h.a *= factor;
            h.b *= factor;
        }
        return FourierCurve(a0_ * factor, std::move(hs), offset_ * factor);
    }

    FourierCurve translated(const Vec2<Scalar>& shift) const {
        return FourierCurve(a0_, harmonics_, offset_ + shift);
    }

private:
    static Scalar sin_of(Scalar t) { using std::sin; return sin(t); }
    static Scalar cos_of(Scalar t) { using std::cos; return cos(t); }

    void build() {
        const Eigen::Index degree = harmonics_.empty() ? 0 : harmonics_.back().n;
        rho_ = Poly(degree);
        support_ = Poly(degree);
        rho_.constant() = a0_;
        support_.constant() = a0_;
        for (const auto& h : harmonics_) {
            rho_.a(h.n) = h.a;
            rho_.b(h.n) = h.b;
            const Scalar k = Scalar(1) - Scalar(h.n) * Scalar(h.n);
            support_.a(h.n) = h.a / k;
            support_.b(h.n) = h.b / k;
        }
        support_d_ = support_.derivative();
        sector_ = support_ * rho_;
        find_rho_extrema();
    }

    void find_rho_extrema() {
        if (rho_.degree() == 0) {
            min_rho_ = max_rho_ = a0_;
            return;
        }
        std::tie(min_rho_, max_rho_) = trig_poly_extrema(rho_);
    }

    // Safeguarded Newton on the strictly increasing map theta -> s on [0, 2 pi].
    Scalar theta_local(Scalar target) const {
        using std::abs;
        const Scalar L = perimeter();
        if (target <= Scalar(0)) return Scalar(0);
        if (target >= L) return two_pi_v<Scalar>;
        Scalar lo = Scalar(0), hi = two_pi_v<Scalar>;
        Scalar theta = target / a0_;
        const Scalar stol = Scalar(1e-14) * L;
        if (theta <= lo || theta >= hi) theta = target / L * two_pi_v<Scalar>;
        for (int it = 0; it < 100; ++it) {
            const HarmonicBasis<Scalar> basis(theta, rho_.degree());
            const Scalar f = rho_.integral(basis, theta) - target;
            if (abs(f) <= stol) break;
            if (f > Scalar(0)) hi = theta; else lo = theta;
            Scalar next = theta - f / rho_(basis);
            if (!(next > lo && next < hi)) next = lo + (hi - lo) / Scalar(2);
            if (abs(next - theta) <= std::numeric_limits<Scalar>::epsilon() * Scalar(4)) {
                theta = next;
                break;
            }
            theta = next;
        }
        return theta;
    }

    Scalar a0_;
    std::vector<Harmonic<Scalar>> harmonics_;
    Point2<Scalar> offset_;
    Poly rho_, support_, support_d_, sector_;
    Scalar min_rho_ = Scalar(0), max_rho_ = Scalar(0);
};

using FourierCurved = FourierCurve<double>;

} // namespace floatdom

#endif // FLOATDOM_FOURIER_CURVE_HPP
