#ifndef FLOATDOM_SEARCH_HPP
#define FLOATDOM_SEARCH_HPP

#include "floatdom/archimedean.hpp"
#include "floatdom/detail/parallel.hpp"
#include "floatdom/finn_young.hpp"
#include "floatdom/fourier_curve.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace floatdom {

enum class SearchMode { FinnYoung, Archimedean };

inline const char* to_string(SearchMode m) { return m == SearchMode::FinnYoung ? "fy" : "arch"; }

template <typename Scalar>
struct SearchProblem {
    SearchMode mode = SearchMode::Archimedean;
    Scalar parameter = Scalar(0.5);  ///< gamma or delta
    std::vector<int> harmonics{2, 3, 4, 5, 6};
    int samples = 256;
    Scalar margin = Scalar(0.1);     ///< minimum allowed rho
    std::uint64_t seed = 42;
    int max_iterations = 200;
    Scalar objective_tol = Scalar(1e-8);
    unsigned threads = 1;
    int verify_samples = 720;

    void validate() const {
        if (!(margin > Scalar(0))) throw Error(ErrorCode::InvalidArgument, "margin must be positive");
        if (harmonics.empty()) throw Error(ErrorCode::InvalidArgument, "empty harmonic set");
        for (std::size_t i = 0; i < harmonics.size(); ++i) {
            if (harmonics[i] < 2) throw Error(ErrorCode::InvalidArgument, "harmonic indices must be >= 2");
            if (i > 0 && harmonics[i] <= harmonics[i - 1])
                throw Error(ErrorCode::InvalidArgument, "harmonics must be strictly increasing");
        }
        if (samples < 8) throw Error(ErrorCode::InvalidArgument, "need at least 8 samples");
        if (mode == SearchMode::Archimedean) detail::check_fraction(parameter);
        else detail::check_fy_gamma(parameter);
    }
};

template <typename Scalar>
struct SearchResult {
    std::vector<Harmonic<Scalar>> coefficients;  ///< a0 is fixed at 1
    Scalar objective = 0;
    int iterations = 0;
    Scalar min_rho = 0;  ///< convexity margin achieved
    bool converged = false;
    std::string stop_reason;
    std::vector<Scalar> objective_history;  ///< accepted iterates, starting with the initial one
    /// Verifier run on the final curve at tol 10 sqrt(objective_tol), when the curve is valid.
    std::optional<FloatProfile<Scalar>> verification;

    bool verified() const { return verification && verification->verdict; }
    Scalar max_coefficient() const {
        using std::abs;
        Scalar m = 0;
        for (const auto& h : coefficients) m = std::max({m, abs(h.a), abs(h.b)});
        return m;
    }
    FourierCurve<Scalar> curve() const { return FourierCurve<Scalar>(Scalar(1), coefficients); }
};

/// Residual weight of the convexity barrier max(0, margin - min rho).
inline constexpr double barrier_weight = 1e3;

namespace detail {

template <typename Scalar>
TrigPoly<Scalar> rho_poly(const std::vector<Harmonic<Scalar>>& hs) {
    Eigen::Index deg = 0;
    for (const auto& h : hs) deg = std::max<Eigen::Index>(deg, h.n);
    TrigPoly<Scalar> p(deg);
    p.constant() = Scalar(1);
    for (const auto& h : hs) {
        p.a(h.n) += h.a;
        p.b(h.n) += h.b;
    }
    return p;
}

template <typename Scalar>
Scalar min_rho_of(const std::vector<Harmonic<Scalar>>& hs) {
    const auto p = rho_poly(hs);
    if (p.degree() == 0) return p.constant();
    return trig_poly_extrema(p).first;
}

/// Free parameters: (a_n, b_n) per harmonic, except b of the lowest harmonic (phase gauge).
template <typename Scalar>
std::vector<Harmonic<Scalar>> unpack(const SearchProblem<Scalar>& pb, const Eigen::Matrix<Scalar, Eigen::Dynamic, 1>& x) {
    std::vector<Harmonic<Scalar>> hs;
    Eigen::Index k = 0;
    for (std::size_t i = 0; i < pb.harmonics.size(); ++i) {
        Harmonic<Scalar> h{pb.harmonics[i], x(k++), Scalar(0)};
        if (i > 0) h.b = x(k++);
        hs.push_back(h);
    }
    return hs;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> pack(const SearchProblem<Scalar>& pb, const std::vector<Harmonic<Scalar>>& hs) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(Eigen::Index(2 * pb.harmonics.size() - 1));
    x.setZero();
    for (const auto& h : hs) {
        Eigen::Index k = 0;
        bool found = false;
        for (std::size_t i = 0; i < pb.harmonics.size(); ++i) {
            if (pb.harmonics[i] == h.n) {
                found = true;
                x(k) = h.a;
                if (i > 0) x(k + 1) = h.b;
                break;
            }
            k += i == 0 ? 1 : 2;
        }
        if (!found) throw Error(ErrorCode::InvalidArgument, "harmonic " + std::to_string(h.n) + " not in the problem set");
    }
    return x;
}

} // namespace detail

/// Archimedean: cap_area(s_i) - mean over the N-grid. Finn-Young:
/// angle_end(s_i) - gamma. One barrier entry is appended. Curves with
/// min rho <= 0 get zero geometric residuals and are penalized by the barrier alone.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> floating_defect(const std::vector<Harmonic<Scalar>>& coefficients,
                                                        const SearchProblem<Scalar>& pb) {
    const Eigen::Index N = pb.samples;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> r = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(N + 1);
    const Scalar mr = detail::min_rho_of(coefficients);
    r(N) = std::max(Scalar(0), pb.margin - mr) * Scalar(barrier_weight);
    if (!(mr > Scalar(0))) return r;
    const FourierCurve<Scalar> curve(Scalar(1), coefficients);
    const Scalar L = curve.perimeter();
    for (Eigen::Index i = 0; i < N; ++i) {
        const Scalar s = L * Scalar(i) / Scalar(N);
        if (pb.mode == SearchMode::Archimedean)
            r(i) = chord_at_fraction(curve, s, pb.parameter).cap_area;
        else
            r(i) = shoot_chord(curve, s, pb.parameter).angle_end - pb.parameter;
    }
    if (pb.mode == SearchMode::Archimedean) {
        Scalar mean = 0;
        for (Eigen::Index i = 0; i < N; ++i) mean += r(i);
        mean /= Scalar(N);
        for (Eigen::Index i = 0; i < N; ++i) r(i) -= mean;
    }
    return r;
}

/// Uniform +-amplitude coefficients from a 64-bit Mersenne twister seeded with
/// problem.seed; the gauge-pinned coefficient is zero.
template <typename Scalar>
std::vector<Harmonic<Scalar>> random_init(const SearchProblem<Scalar>& pb, Scalar amplitude = Scalar(0.05)) {
    std::mt19937_64 rng(pb.seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Harmonic<Scalar>> hs;
    for (std::size_t i = 0; i < pb.harmonics.size(); ++i) {
        const Scalar a = amplitude * Scalar(u(rng));
        const Scalar b = amplitude * Scalar(u(rng));
        hs.push_back({pb.harmonics[i], a, i == 0 ? Scalar(0) : b});
    }
    return hs;
}

/// Damped Gauss-Newton on |floating_defect|^2: forward-difference Jacobian
/// (step 1e-6, columns in parallel), (J^T J + lambda I) dx = -J^T r, lambda
/// x10 on a rejected step and /10 on an accepted one.
template <typename Scalar>
SearchResult<Scalar> search_floating(const SearchProblem<Scalar>& pb, const std::vector<Harmonic<Scalar>>& init) {
    using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    using std::sqrt;
    pb.validate();
    if (!(detail::min_rho_of(init) >= pb.margin))
        throw Error(ErrorCode::InvalidArgument, "initial coefficients violate the convexity margin");

    auto defect = [&](const Vec& x) { return floating_defect(detail::unpack(pb, x), pb); };
    Vec x = detail::pack(pb, init);
    Vec r = defect(x);
    Scalar f = r.squaredNorm();
    SearchResult<Scalar> res;
    res.objective_history.push_back(f);
    Scalar lambda = Scalar(1e-3);
    const Scalar h = Scalar(1e-6);
    const Eigen::Index p = x.size();

    res.stop_reason = "max-iterations";
    for (int it = 0; it < pb.max_iterations; ++it) {
        if (f < pb.objective_tol) {
            res.stop_reason = "objective";
            break;
        }
        Mat J(r.size(), p);
        detail::parallel_for(std::size_t(p), pb.threads, [&](std::size_t j) {
            Vec xp = x;
            xp(Eigen::Index(j)) += h;
            J.col(Eigen::Index(j)) = (defect(xp) - r) / h;
        });
        const Mat A = J.transpose() * J;
        const Vec g = J.transpose() * r;
        ++res.iterations;
        bool accepted = false, tiny = false;
        while (lambda <= Scalar(1e12)) {
            const Vec dx = (A + lambda * Mat::Identity(p, p)).ldlt().solve(-g);
            if (dx.norm() < Scalar(1e-12)) {
                tiny = true;
                break;
            }
            const Vec xn = x + dx;
            const Vec rn = defect(xn);
            const Scalar fn = rn.squaredNorm();
            if (fn < f) {
                x = xn;
                r = rn;
                f = fn;
                lambda = std::max(lambda / Scalar(10), Scalar(1e-12));
                accepted = true;
                break;
            }
            lambda *= Scalar(10);
        }
        if (accepted) res.objective_history.push_back(f);
        if (tiny) {
            res.stop_reason = "step";
            break;
        }
        if (!accepted) {
            res.stop_reason = "damping";
            break;
        }
    }
    if (f < pb.objective_tol) res.stop_reason = "objective";

    res.coefficients = detail::unpack(pb, x);
    res.objective = f;
    res.min_rho = detail::min_rho_of(res.coefficients);
    res.converged = f < pb.objective_tol;
    if (res.min_rho > Scalar(0)) {
        const Scalar tol = Scalar(10) * sqrt(pb.objective_tol);
        const auto curve = res.curve();
        SweepOptions so;
        so.threads = pb.threads;
        if (pb.mode == SearchMode::Archimedean) {
            FloatProfile<Scalar> prof;
            ArchOptions ao;
            ao.threads = pb.threads;
            arch_floats_everywhere<Scalar>(ClosedCurve<Scalar>(curve), pb.parameter, pb.verify_samples, tol, ao, &prof);
            res.verification = std::move(prof);
        } else {
            res.verification = fy_floats_everywhere(curve, pb.parameter, pb.verify_samples, tol, so);
        }
    }
    return res;
}

} // namespace floatdom

#endif // FLOATDOM_SEARCH_HPP
