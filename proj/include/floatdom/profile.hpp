#ifndef FLOATDOM_PROFILE_HPP
#define FLOATDOM_PROFILE_HPP

#include "floatdom/chords.hpp"

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace floatdom {

enum class FloatModel { FinnYoung, Archimedean };

inline const char* to_string(FloatModel m) {
    return m == FloatModel::FinnYoung ? "finn-young" : "archimedean";
}

template <typename Scalar>
struct Stats {
    Scalar min = 0;
    Scalar max = 0;
    Scalar mean = 0;
    Scalar stddev = 0;  ///< population
    std::size_t count = 0;

    Scalar spread() const { return max - min; }
    Scalar relative_spread() const {
        using std::abs;
        return mean == Scalar(0) ? spread() : spread() / abs(mean);
    }
};

/// Sequential (order-fixed) statistics, so parallel sweeps reduce identically.
template <typename Scalar>
Stats<Scalar> compute_stats(std::span<const Scalar> values) {
    Stats<Scalar> st;
    st.count = values.size();
    if (values.empty()) {
        st.min = st.max = st.mean = st.stddev = std::numeric_limits<Scalar>::quiet_NaN();
        return st;
    }
    st.min = st.max = values[0];
    Scalar sum = 0;
    for (Scalar v : values) {
        st.min = std::min(st.min, v);
        st.max = std::max(st.max, v);
        sum += v;
    }
    st.mean = sum / Scalar(values.size());
    Scalar sq = 0;
    for (Scalar v : values) sq += (v - st.mean) * (v - st.mean);
    using std::sqrt;
    st.stddev = sqrt(sq / Scalar(values.size()));
    return st;
}

/// A sweep of chords over N uniformly spaced start positions.
template <typename Scalar>
struct FloatProfile {
    FloatModel model = FloatModel::FinnYoung;
    Scalar parameter = 0;  ///< gamma (Finn-Young) or delta (archimedean)
    std::vector<ChordSample<Scalar>> samples;
    /// Samples whose endpoints sit within the corner window; left out of angle statistics.
    std::vector<bool> angle_excluded;

    Stats<Scalar> angle_start;
    Stats<Scalar> angle_end;
    Stats<Scalar> chord_length;
    Stats<Scalar> cap_area;
    Stats<Scalar> curvature_start;

    /// Finn-Young: max |angle_end - gamma|. Archimedean: relative cap-area spread.
    Scalar max_abs_deviation = 0;
    /// max |angle_start - angle_end| over angle-eligible samples.
    Scalar angle_mismatch = 0;
    /// Archimedean only: relative spread of the complementary (backward) caps.
    Scalar complement_cap_spread = 0;
    std::size_t corner_samples = 0;

    bool verdict = false;
    Scalar tol = 0;

    std::size_t size() const { return samples.size(); }
};

namespace detail {

template <typename Scalar>
void fill_stats(FloatProfile<Scalar>& p) {
    std::vector<Scalar> a0, a1, len, cap, curv;
    p.angle_mismatch = 0;
    p.corner_samples = 0;
    for (std::size_t i = 0; i < p.samples.size(); ++i) {
        const auto& c = p.samples[i];
        len.push_back(c.chord_length);
        cap.push_back(c.cap_area);
        const bool excluded = !p.angle_excluded.empty() && p.angle_excluded[i];
        if (excluded) {
            ++p.corner_samples;
            continue;
        }
        a0.push_back(c.angle_start);
        a1.push_back(c.angle_end);
        curv.push_back(c.curvature_start);
        using std::abs;
        p.angle_mismatch = std::max(p.angle_mismatch, abs(c.angle_start - c.angle_end));
    }
    p.angle_start = compute_stats<Scalar>(a0);
    p.angle_end = compute_stats<Scalar>(a1);
    p.chord_length = compute_stats<Scalar>(len);
    p.cap_area = compute_stats<Scalar>(cap);
    p.curvature_start = compute_stats<Scalar>(curv);
}

template <typename Scalar>
void check_sample_count(int n, int minimum) {
    if (n < minimum)
        throw Error(ErrorCode::InvalidArgument, "need at least " + std::to_string(minimum) + " samples");
}

} // namespace detail

struct SweepOptions {
    unsigned threads = 1;
};

} // namespace floatdom

#endif // FLOATDOM_PROFILE_HPP
