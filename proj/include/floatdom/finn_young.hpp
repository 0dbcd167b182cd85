#ifndef FLOATDOM_FINN_YOUNG_HPP
#define FLOATDOM_FINN_YOUNG_HPP

#include "floatdom/chords.hpp"
#include "floatdom/detail/parallel.hpp"
#include "floatdom/detail/roots.hpp"
#include "floatdom/gamma.hpp"
#include "floatdom/profile.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace floatdom {

/// Largest |residual| accepted by the constructors below.
inline constexpr double fy_root_tolerance = 1e-8;

/// rho(theta) = 1 + tau cos(n theta), for gamma a root of tan(n gamma) = n tan(gamma).
template <typename Scalar>
FourierCurve<Scalar> fy_curve(int n, Scalar gamma, Scalar tau) {
    using std::abs;
    if (!(abs(tau) < Scalar(1))) throw Error(ErrorCode::Nonconvex, "|tau| must be < 1");
    const Scalar r = gutkin_residual(n, gamma);
    if (!(abs(r) <= Scalar(fy_root_tolerance)))
        throw Error(ErrorCode::NotARoot, "residual " + std::to_string(static_cast<double>(r)) + " for n = " +
                                             std::to_string(n));
    if (tau == Scalar(0)) return FourierCurve<Scalar>::circle();
    return FourierCurve<Scalar>(Scalar(1), {{n, tau, Scalar(0)}});
}

/// General member: any harmonic set all of whose indices satisfy the root
/// relation at the same gamma. Convexity is checked by the curve itself.
template <typename Scalar>
FourierCurve<Scalar> fy_curve(Scalar mean_radius, std::vector<Harmonic<Scalar>> harmonics, Scalar gamma) {
    using std::abs;
    for (const auto& h : harmonics) {
        const Scalar r = gutkin_residual(h.n, gamma);
        if (!(abs(r) <= Scalar(fy_root_tolerance)))
            throw Error(ErrorCode::NotARoot, "harmonic " + std::to_string(h.n) + " is not admissible at gamma");
    }
    try {
        return FourierCurve<Scalar>(mean_radius, std::move(harmonics));
    } catch (const Error& e) {
        throw Error(ErrorCode::Nonconvex, e.what());
    }
}

namespace detail {

template <typename Scalar>
void check_fy_gamma(Scalar gamma) {
    if (!(gamma > Scalar(0) && gamma < pi_v<Scalar> / Scalar(2)))
        throw Error(ErrorCode::InvalidArgument, "gamma must lie in (0, pi/2)");
}

} // namespace detail

/// Shoots the gamma-chord from N uniform start positions; passes iff every
/// exit angle equals gamma within tol (sup norm).
template <typename Scalar>
FloatProfile<Scalar> fy_floats_everywhere(const FourierCurve<Scalar>& curve, Scalar gamma, int samples, Scalar tol,
                                          const SweepOptions& opt = {}) {
    using std::abs;
    detail::check_fy_gamma(gamma);
    detail::check_sample_count<Scalar>(samples, 8);
    FloatProfile<Scalar> p;
    p.model = FloatModel::FinnYoung;
    p.parameter = gamma;
    p.tol = tol;
    p.samples.resize(static_cast<std::size_t>(samples));
    const Scalar L = curve.perimeter();
    detail::parallel_for(p.samples.size(), opt.threads, [&](std::size_t i) {
        p.samples[i] = shoot_chord(curve, L * Scalar(i) / Scalar(samples), gamma);
    });
    detail::fill_stats(p);
    p.max_abs_deviation = 0;
    for (const auto& c : p.samples) p.max_abs_deviation = std::max(p.max_abs_deviation, abs(c.angle_end - gamma));
    p.verdict = p.max_abs_deviation < tol;
    return p;
}

template <typename Scalar>
struct EquilibriumCount {
    bool all_orientations = false;
    int count = 0;
    std::vector<Scalar> start_positions;  ///< arc lengths s of the zeros
    std::vector<Scalar> directions;       ///< chord directions alpha at the zeros
};

/// Zeros of h(s) = angle_end(s) - gamma: orientations in which the
/// gamma-chord meets the boundary at gamma at both ends.
template <typename Scalar>
EquilibriumCount<Scalar> fy_equilibrium_count(const FourierCurve<Scalar>& curve, Scalar gamma, int samples,
                                              const SweepOptions& opt = {}) {
    using std::abs;
    detail::check_fy_gamma(gamma);
    detail::check_sample_count<Scalar>(samples, 360);
    const Scalar L = curve.perimeter();
    const std::size_t m = static_cast<std::size_t>(samples);
    std::vector<Scalar> h(m);
    detail::parallel_for(m, opt.threads, [&](std::size_t i) {
        h[i] = shoot_chord(curve, L * Scalar(i) / Scalar(samples), gamma).angle_end - gamma;
    });
    EquilibriumCount<Scalar> out;
    Scalar hmax = 0;
    for (Scalar v : h) hmax = std::max(hmax, abs(v));
    if (hmax < Scalar(1e-9)) {
        out.all_orientations = true;
        return out;
    }
    auto defect = [&](Scalar s) { return shoot_chord(curve, s, gamma).angle_end - gamma; };
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (i + 1) % m;
        if ((h[i] < 0) == (h[j] < 0)) continue;
        const Scalar lo = L * Scalar(i) / Scalar(samples);
        const Scalar hi = L * Scalar(i + 1) / Scalar(samples);
        const auto [a, b] = detail::bisect<Scalar>(defect, lo, hi, Scalar(1e-9));
        const Scalar s = wrap_period(a + (b - a) / Scalar(2), L);
        out.start_positions.push_back(s);
        out.directions.push_back(shoot_chord(curve, s, gamma).direction_alpha);
    }
    out.count = static_cast<int>(out.start_positions.size());
    return out;
}

} // namespace floatdom

#endif // FLOATDOM_FINN_YOUNG_HPP
