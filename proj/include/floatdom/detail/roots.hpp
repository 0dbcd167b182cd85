#ifndef FLOATDOM_DETAIL_ROOTS_HPP
#define FLOATDOM_DETAIL_ROOTS_HPP

#include <cmath>
#include <limits>
#include <utility>

namespace floatdom::detail {

/// Brent's zeroin on a bracket [a, b] with f(a), f(b) of opposite sign
/// (either may be zero). Returns the abscissa; stops when the bracket is
/// narrower than xtol.
template <typename Scalar, typename F>
Scalar brent_root(F&& f, Scalar a, Scalar b, Scalar fa, Scalar fb, Scalar xtol, int max_iter = 200) {
    using std::abs;
    if (fa == Scalar(0)) return a;
    if (fb == Scalar(0)) return b;
    const Scalar eps = std::numeric_limits<Scalar>::epsilon();
    Scalar c = a, fc = fa, d = b - a, e = d;
    for (int iter = 0; iter < max_iter; ++iter) {
        if ((fb > 0) == (fc > 0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (abs(fc) < abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const Scalar tol = Scalar(2) * eps * abs(b) + xtol / Scalar(2);
        const Scalar m = (c - b) / Scalar(2);
        if (abs(m) <= tol || fb == Scalar(0)) return b;
        if (abs(e) >= tol && abs(fa) > abs(fb)) {
            Scalar p, q, r;
            const Scalar s = fb / fa;
            if (a == c) {
                p = Scalar(2) * m * s;
                q = Scalar(1) - s;
            } else {
                q = fa / fc;
                r = fb / fc;
                p = s * (Scalar(2) * m * q * (q - r) - (b - a) * (r - Scalar(1)));
                q = (q - Scalar(1)) * (r - Scalar(1)) * (s - Scalar(1));
            }
            if (p > 0) q = -q; else p = -p;
            if (Scalar(2) * p < std::min(Scalar(3) * m * q - abs(tol * q), abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += (abs(d) > tol) ? d : (m > 0 ? tol : -tol);
        fb = f(b);
    }
    return b;
}

/// Plain bisection; returns the final bracket.
template <typename Scalar, typename F>
std::pair<Scalar, Scalar> bisect(F&& f, Scalar lo, Scalar hi, Scalar xtol, int max_iter = 200) {
    bool lo_negative = f(lo) < Scalar(0);
    for (int iter = 0; iter < max_iter && hi - lo > xtol; ++iter) {
        const Scalar mid = lo + (hi - lo) / Scalar(2);
        if (mid <= lo || mid >= hi) break;
        if ((f(mid) < Scalar(0)) == lo_negative) lo = mid; else hi = mid;
    }
    return {lo, hi};
}

} // namespace floatdom::detail

#endif // FLOATDOM_DETAIL_ROOTS_HPP
