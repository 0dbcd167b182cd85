#ifndef FLOATDOM_ARCHIMEDEAN_HPP
#define FLOATDOM_ARCHIMEDEAN_HPP

#include "floatdom/chords.hpp"
#include "floatdom/detail/parallel.hpp"
#include "floatdom/profile.hpp"

#include <cmath>
#include <string>

namespace floatdom {

struct ArchOptions {
    unsigned threads = 1;
    /// Samples whose endpoints lie within this arc length of a corner are
    /// skipped for angle statistics (kept for areas and lengths).
    double corner_window = 1e-6;
};

/// Cap areas, chord lengths and endpoint angles of the delta-chords from N
/// uniform start positions. For delta in (1/2, 1) the caps are those of the
/// complementary density 1 - delta taken backward.
template <typename Scalar>
FloatProfile<Scalar> arch_profile(const ClosedCurve<Scalar>& curve, Scalar delta, int samples,
                                  const ArchOptions& opt = {}) {
    detail::check_fraction(delta);
    detail::check_sample_count<Scalar>(samples, 8);
    FloatProfile<Scalar> p;
    p.model = FloatModel::Archimedean;
    p.parameter = delta;
    const std::size_t m = static_cast<std::size_t>(samples);
    p.samples.resize(m);
    p.angle_excluded.assign(m, false);
    std::vector<Scalar> complement(m);
    std::vector<char> excluded(m, 0);
    const Scalar L = curve_perimeter(curve);
    const Scalar window = Scalar(opt.corner_window);
    detail::parallel_for(m, opt.threads, [&](std::size_t i) {
        const Scalar s = L * Scalar(i) / Scalar(samples);
        p.samples[i] = chord_at_fraction(curve, s, delta);
        complement[i] = chord_at_fraction(curve, s, Scalar(1) - delta).cap_area;
        excluded[i] = distance_to_corner(curve, s) <= window ||
                      distance_to_corner(curve, s + delta * L) <= window;
    });
    for (std::size_t i = 0; i < m; ++i) p.angle_excluded[i] = excluded[i] != 0;
    detail::fill_stats(p);
    p.max_abs_deviation = p.cap_area.relative_spread();
    p.complement_cap_spread = compute_stats<Scalar>(complement).relative_spread();
    return p;
}

/// Passes iff the relative cap-area spread is below tol.
template <typename Scalar>
bool arch_floats_everywhere(const ClosedCurve<Scalar>& curve, Scalar delta, int samples, Scalar tol,
                            const ArchOptions& opt = {}, FloatProfile<Scalar>* profile_out = nullptr) {
    auto p = arch_profile(curve, delta, samples, opt);
    p.tol = tol;
    p.verdict = p.max_abs_deviation < tol;
    const bool ok = p.verdict;
    if (profile_out) *profile_out = std::move(p);
    return ok;
}

template <typename Scalar>
struct EquivalenceReport {
    bool area_constant = false;   ///< relative cap spread < tol
    bool chord_constant = false;  ///< relative chord spread < tol
    bool angles_equal = false;    ///< max |angle_start - angle_end| < tol * pi
    bool agree = false;
    Scalar area_spread = 0;
    Scalar chord_spread = 0;
    Scalar angle_mismatch = 0;
};

/// The three constancy clauses (cap area, chord length, equal endpoint
/// angles) evaluated as verdicts on one sweep.
template <typename Scalar>
EquivalenceReport<Scalar> arch_equivalence_report(const ClosedCurve<Scalar>& curve, Scalar delta, int samples,
                                                  Scalar tol, const ArchOptions& opt = {}) {
    const auto p = arch_profile(curve, delta, samples, opt);
    EquivalenceReport<Scalar> r;
    r.area_spread = p.cap_area.relative_spread();
    r.chord_spread = p.chord_length.relative_spread();
    r.angle_mismatch = p.angle_mismatch;
    r.area_constant = r.area_spread < tol;
    r.chord_constant = r.chord_spread < tol;
    r.angles_equal = r.angle_mismatch < tol * pi_v<Scalar>;
    r.agree = r.area_constant == r.chord_constant && r.chord_constant == r.angles_equal;
    return r;
}

template <typename Scalar>
struct ConstantAngleFinding {
    bool applicable = false;  ///< corner-free profile and mean angle away from pi/2
    bool triggered = false;   ///< angle constant within tol
    bool consistent = true;   ///< triggered implies the curvature is constant
    Scalar theta_mean = 0;
    Scalar theta_spread = 0;
    Scalar curvature_spread = 0;  ///< relative
    std::string message;
};

/// A constant endpoint angle other than pi/2 forces a disc. When the
/// angle is constant, the curvature spread is checked and any disagreement
/// reported as an inconsistency.
template <typename Scalar>
ConstantAngleFinding<Scalar> constant_angle_diagnostic(const FloatProfile<Scalar>& profile, Scalar tol) {
    using std::abs;
    ConstantAngleFinding<Scalar> f;
    f.theta_mean = profile.angle_start.mean;
    f.theta_spread = profile.angle_start.spread();
    f.curvature_spread = profile.curvature_start.relative_spread();
    if (profile.model != FloatModel::Archimedean) {
        f.message = "not applicable: archimedean profile required";
        return f;
    }
    f.triggered = f.theta_spread < tol;
    if (!f.triggered) {
        f.applicable = profile.corner_samples == 0;
        f.message = "angle not constant; not triggered";
        return f;
    }
    if (profile.corner_samples > 0) {
        f.triggered = false;
        f.message = "not applicable: boundary has corners";
        return f;
    }
    if (abs(f.theta_mean - pi_v<Scalar> / Scalar(2)) <= Scalar(1e-3)) {
        f.triggered = false;
        f.message = "not applicable: constant angle equals pi/2";
        return f;
    }
    f.applicable = true;
    f.consistent = f.curvature_spread < Scalar(1e-6);
    f.message = f.consistent ? "constant angle != pi/2 and constant curvature: disc"
                             : "INCONSISTENT: constant angle != pi/2 but curvature varies";
    return f;
}

} // namespace floatdom

#endif // FLOATDOM_ARCHIMEDEAN_HPP
