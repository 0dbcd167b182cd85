#ifndef FLOATDOM_TRIG_POLY_HPP
#define FLOATDOM_TRIG_POLY_HPP

#include <Eigen/Dense>

#include <cmath>
#include <algorithm>
#include <complex>
#include <utility>
#include <vector>

namespace floatdom {

/// cos(k t) and sin(k t) for k = 0..degree, evaluated once and shared by
/// every series that is sampled at the same t.
template <typename Scalar>
struct HarmonicBasis {
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> cos_k;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> sin_k;

    HarmonicBasis(Scalar t, Eigen::Index degree) : cos_k(degree + 1), sin_k(degree + 1) {
        using std::cos;
        using std::sin;
        cos_k[0] = Scalar(1);
        sin_k[0] = Scalar(0);
        if (degree == 0) return;
        const Scalar c1 = cos(t);
        const Scalar s1 = sin(t);
        cos_k[1] = c1;
        sin_k[1] = s1;
        // Angle addition; re-seeded every 8 steps to keep the drift at a few ulps.
        for (Eigen::Index k = 2; k <= degree; ++k) {
            if (k % 8 == 0) {
                cos_k[k] = cos(Scalar(k) * t);
                sin_k[k] = sin(Scalar(k) * t);
            } else {
                cos_k[k] = cos_k[k - 1] * c1 - sin_k[k - 1] * s1;
                sin_k[k] = sin_k[k - 1] * c1 + cos_k[k - 1] * s1;
            }
        }
    }
};

/// Real trigonometric polynomial  c0 + sum_k (a_k cos kt + b_k sin kt),  k = 1..degree.
/// Index 0 of `cos_coeffs` / `sin_coeffs` belongs to k = 0; sin_coeffs[0] is unused and kept at zero.
template <typename Scalar>
class TrigPoly {
public:
    using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    TrigPoly() : cos_(Vector::Zero(1)), sin_(Vector::Zero(1)) {}

    explicit TrigPoly(Eigen::Index degree)
        : cos_(Vector::Zero(degree + 1)), sin_(Vector::Zero(degree + 1)) {}

    Eigen::Index degree() const { return cos_.size() - 1; }

    Scalar& constant() { return cos_[0]; }
    Scalar constant() const { return cos_[0]; }
    Scalar& a(Eigen::Index k) { return cos_[k]; }
    Scalar a(Eigen::Index k) const { return cos_[k]; }
    Scalar& b(Eigen::Index k) { return sin_[k]; }
    Scalar b(Eigen::Index k) const { return sin_[k]; }

    Scalar operator()(const HarmonicBasis<Scalar>& basis) const {
        Scalar acc = cos_[0];
        for (Eigen::Index k = 1; k <= degree(); ++k)
            acc += cos_[k] * basis.cos_k[k] + sin_[k] * basis.sin_k[k];
        return acc;
    }

    Scalar operator()(Scalar t) const { return (*this)(HarmonicBasis<Scalar>(t, degree())); }

    TrigPoly derivative() const {
        TrigPoly out(degree());
        for (Eigen::Index k = 1; k <= degree(); ++k) {
            out.cos_[k] = Scalar(k) * sin_[k];
            out.sin_[k] = -Scalar(k) * cos_[k];
        }
        return out;
    }

    /// Value of the definite integral from 0 to t (t unrestricted; the
    /// constant term contributes linearly).
    Scalar integral(const HarmonicBasis<Scalar>& basis, Scalar t) const {
        Scalar acc = cos_[0] * t;
        for (Eigen::Index k = 1; k <= degree(); ++k)
            acc += (cos_[k] * basis.sin_k[k] + sin_[k] * (Scalar(1) - basis.cos_k[k])) / Scalar(k);
        return acc;
    }

    Scalar integral(Scalar t) const { return integral(HarmonicBasis<Scalar>(t, degree()), t); }

    /// Sum of |coefficients| of the non-constant part; bounds the oscillation.
    Scalar oscillation_bound() const {
        return cos_.tail(degree()).cwiseAbs().sum() + sin_.tail(degree()).cwiseAbs().sum();
    }

    friend TrigPoly operator*(const TrigPoly& lhs, const TrigPoly& rhs) {
        using Complex = std::complex<Scalar>;
        const Eigen::Index dl = lhs.degree();
        const Eigen::Index dr = rhs.degree();
        const Eigen::Index d = dl + dr;
        // Complex exponential coefficients, index k + degree.
        auto to_exp = [](const TrigPoly& p) {
            const Eigen::Index n = p.degree();
            std::vector<Complex> e(2 * n + 1);
            e[n] = Complex(p.cos_[0], 0);
            for (Eigen::Index k = 1; k <= n; ++k) {
                e[n + k] = Complex(p.cos_[k], -p.sin_[k]) / Scalar(2);
                e[n - k] = std::conj(e[n + k]);
            }
            return e;
        };
        const auto el = to_exp(lhs);
        const auto er = to_exp(rhs);
        std::vector<Complex> prod(2 * d + 1, Complex(0, 0));
        for (Eigen::Index i = 0; i <= 2 * dl; ++i)
            for (Eigen::Index j = 0; j <= 2 * dr; ++j) prod[i + j] += el[i] * er[j];
        TrigPoly out(d);
        out.cos_[0] = prod[d].real();
        for (Eigen::Index k = 1; k <= d; ++k) {
            out.cos_[k] = Scalar(2) * prod[d + k].real();
            out.sin_[k] = -Scalar(2) * prod[d + k].imag();
        }
        return out;
    }

private:
    Vector cos_;
    Vector sin_;
};

/// (min, max) of a trigonometric polynomial: dense grid of max(1024, 64 degree)
/// points, the minimum refined by golden-section search.
template <typename Scalar>
std::pair<Scalar, Scalar> trig_poly_extrema(const TrigPoly<Scalar>& p) {
    using std::max;
    using std::sqrt;
    const Scalar two_pi = Scalar(2) * Scalar(EIGEN_PI);
    const int grid = static_cast<int>(std::max<Eigen::Index>(1024, 64 * p.degree()));
    const Scalar h = two_pi / Scalar(grid);
    int imin = 0;
    Scalar vmin = p(Scalar(0)), vmax = vmin;
    for (int i = 1; i < grid; ++i) {
        const Scalar v = p(h * Scalar(i));
        if (v < vmin) { vmin = v; imin = i; }
        vmax = max(vmax, v);
    }
    Scalar lo = h * Scalar(imin - 1), hi = h * Scalar(imin + 1);
    const Scalar g = (sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
    Scalar x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    Scalar f1 = p(x1), f2 = p(x2);
    for (int it = 0; it < 100; ++it) {
        if (f1 < f2) {
            hi = x2; x2 = x1; f2 = f1;
            x1 = hi - g * (hi - lo); f1 = p(x1);
        } else {
            lo = x1; x1 = x2; f1 = f2;
            x2 = lo + g * (hi - lo); f2 = p(x2);
        }
    }
    return {std::min({vmin, f1, f2}), vmax};
}

} // namespace floatdom

#endif // FLOATDOM_TRIG_POLY_HPP
