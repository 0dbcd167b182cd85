#ifndef FLOATDOM_GAMMA_HPP
#define FLOATDOM_GAMMA_HPP

#include "floatdom/error.hpp"
#include "floatdom/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace floatdom {

/// Solution of tan(n gamma) = n tan(gamma) with 0 < gamma < pi/2.
template <typename Scalar>
struct GammaRoot {
    int n = 2;
    Scalar gamma = 0;
    Scalar residual = 0;   ///< tan(n gamma) - n tan(gamma) at the stored gamma
    int branch_index = 0;  ///< j for the branch between consecutive breakpoints j and j+1
};

using GammaRootd = GammaRoot<double>;

namespace detail {

/// Residual evaluated in extended precision, so that the reported value
/// reflects how close the stored gamma is, not the rounding of n * gamma.
template <typename Scalar>
long double gutkin_residual_ld(int n, Scalar gamma) {
    const long double g = static_cast<long double>(gamma);
    return std::tan(static_cast<long double>(n) * g) - static_cast<long double>(n) * std::tan(g);
}

/// sin(n g) cos g - n cos(n g) sin g: the residual multiplied by
/// cos(n g) cos g. Same zeros inside every branch, but continuous across the poles.
template <typename Scalar>
Scalar gutkin_smooth(int n, Scalar g) {
    using std::cos;
    using std::sin;
    return sin(Scalar(n) * g) * cos(g) - Scalar(n) * cos(Scalar(n) * g) * sin(g);
}

/// Branch breakpoints 0 < (2j+1) pi / 2n < pi/2 (poles of tan(n .)), with 0 and pi/2 appended.
template <typename Scalar>
std::vector<Scalar> gutkin_breakpoints(int n) {
    std::vector<Scalar> pts{Scalar(0)};
    for (int j = 0; 2 * j + 1 < n; ++j) pts.push_back(pi_v<Scalar> * Scalar(2 * j + 1) / Scalar(2 * n));
    pts.push_back(pi_v<Scalar> / Scalar(2));
    return pts;
}

} // namespace detail

/// tan(n gamma) - n tan(gamma). Throws pole-proximity within 1e-12 of a pole
/// of either term.
template <typename Scalar>
Scalar gutkin_residual(int n, Scalar gamma) {
    using std::abs;
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
    const Scalar half_pi = pi_v<Scalar> / Scalar(2);
    // Poles of tan(n .) sit at odd multiples of pi / 2n; pi/2 is a pole of tan.
    const Scalar spacing = pi_v<Scalar> / Scalar(n);
    const Scalar shifted = gamma - spacing / Scalar(2);
    const Scalar nearest = std::round(shifted / spacing) * spacing + spacing / Scalar(2);
    if (abs(gamma - nearest) < Scalar(1e-12) || abs(abs(gamma) - half_pi) < Scalar(1e-12))
        throw Error(ErrorCode::PoleProximity, "gamma within 1e-12 of a pole for n = " + std::to_string(n));
    using std::tan;
    return tan(Scalar(n) * gamma) - Scalar(n) * tan(gamma);
}

struct GammaScanOptions {
    int scan_points = 512;       ///< per branch
    double trivial_cutoff = 1e-6;
};

/// All roots of tan(n gamma) = n tan(gamma) in (0, pi/2), ascending. Each
/// open branch between poles is sign-scanned and every sign change bisected
/// to width `tol` or finer; the final gamma is the nearby floating-point value
/// with the smallest residual.
template <typename Scalar>
std::vector<GammaRoot<Scalar>> gutkin_roots(int n, Scalar tol, const GammaScanOptions& opt = {}) {
    using std::abs;
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "n must be >= 2");
    if (!(tol >= Scalar(1e-14))) throw Error(ErrorCode::InvalidArgument, "tol must be >= 1e-14");
    const auto breaks = detail::gutkin_breakpoints<Scalar>(n);
    const Scalar half_pi = pi_v<Scalar> / Scalar(2);
    std::vector<GammaRoot<Scalar>> roots;
    for (std::size_t j = 0; j + 1 < breaks.size(); ++j) {
        const Scalar width = breaks[j + 1] - breaks[j];
        // 0 and pi/2 are zeros of the smooth form but not admissible roots.
        const Scalar lo = j == 0 ? Scalar(opt.trivial_cutoff) : breaks[j];
        const Scalar hi = j + 2 == breaks.size() ? breaks[j + 1] - width * Scalar(1e-9) : breaks[j + 1];
        const int m = opt.scan_points;
        Scalar x_prev = lo;
        Scalar g_prev = detail::gutkin_smooth(n, lo);
        for (int i = 1; i <= m; ++i) {
            const Scalar x = i == m ? hi : lo + (hi - lo) * Scalar(i) / Scalar(m);
            const Scalar g = detail::gutkin_smooth(n, x);
            if ((g_prev < 0) != (g < 0)) {
                Scalar a = x_prev, b = x;
                const bool a_negative = g_prev < 0;
                // Bisect past `tol` down to adjacent floating-point values; the
                // bracket width then satisfies the requested tolerance a fortiori.
                for (;;) {
                    const Scalar mid = a + (b - a) / Scalar(2);
                    if (mid <= a || mid >= b) break;
                    if ((detail::gutkin_smooth(n, mid) < 0) == a_negative) a = mid; else b = mid;
                }
                Scalar best = a + (b - a) / Scalar(2);
                long double best_res = abs(detail::gutkin_residual_ld(n, best));
                Scalar probe_up = best, probe_down = best;
                for (int k = 0; k < 32; ++k) {
                    probe_up = std::nextafter(probe_up, half_pi);
                    probe_down = std::nextafter(probe_down, Scalar(0));
                    for (Scalar cand : {probe_up, probe_down}) {
                        const long double r = abs(detail::gutkin_residual_ld(n, cand));
                        if (r < best_res) {
                            best_res = r;
                            best = cand;
                        }
                    }
                }
                if (best > Scalar(opt.trivial_cutoff)) {
                    roots.push_back({n, best, static_cast<Scalar>(detail::gutkin_residual_ld(n, best)),
                                     static_cast<int>(j)});
                }
            }
            x_prev = x;
            g_prev = g;
        }
    }
    std::sort(roots.begin(), roots.end(), [](const auto& l, const auto& r) { return l.gamma < r.gamma; });
    return roots;
}

/// Union of gutkin_roots(n) for 2 <= n <= n_max, sorted by gamma (ties by n).
template <typename Scalar>
std::vector<GammaRoot<Scalar>> gamma_set(int n_max, Scalar tol, const GammaScanOptions& opt = {}) {
    if (n_max < 2) throw Error(ErrorCode::InvalidArgument, "n_max must be >= 2");
    std::vector<GammaRoot<Scalar>> all;
    for (int n = 2; n <= n_max; ++n) {
        auto r = gutkin_roots<Scalar>(n, tol, opt);
        all.insert(all.end(), r.begin(), r.end());
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& l, const auto& r) {
        return l.gamma < r.gamma || (l.gamma == r.gamma && l.n < r.n);
    });
    return all;
}

} // namespace floatdom

#endif // FLOATDOM_GAMMA_HPP
