#ifndef KG_DETAIL_NUMERICS_HPP
#define KG_DETAIL_NUMERICS_HPP

#include <cmath>
#include <functional>
#include <limits>

namespace kg::detail {

/// Brent root refinement on a bracket [a, b] with f(a) f(b) <= 0.
template <typename F>
double brent(F&& f, double a, double b, double xtol, int maxit = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    double c = a, fc = fa, d = b - a, e = d;
    for (int it = 0; it < maxit; ++it) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double tol1 = 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
        double xm = 0.5 * (c - b);
        if (std::abs(xm) <= tol1 || fb == 0.0) return b;
        if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
            double s = fb / fa, p, qq;
            if (a == c) {
                p = 2.0 * xm * s;
                qq = 1.0 - s;
            } else {
                double q2 = fa / fc, r = fb / fc;
                p = s * (2.0 * xm * q2 * (q2 - r) - (b - a) * (r - 1.0));
                qq = (q2 - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) qq = -qq;
            p = std::abs(p);
            if (2.0 * p < std::min(3.0 * xm * qq - std::abs(tol1 * qq), std::abs(e * qq))) {
                e = d;
                d = p / qq;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa; d = b - a; e = d;
        }
    }
    return b;
}

/// Sign-change bracket scan on a cosine-clustered grid (dense at both ends,
/// where weakly bound levels hide in thin slivers next to the edges).
/// Calls found(a, b) for every bracket.
template <typename F, typename G>
void scan_brackets(F&& f, double lo, double hi, int n, G&& found) {
    if (!(hi > lo) || n < 2) return;
    constexpr double pi = 3.14159265358979323846264338327950288;
    double prev_x = lo, prev_f = f(lo);
    for (int i = 1; i <= n; ++i) {
        double x = lo + (hi - lo) * 0.5 * (1.0 - std::cos(pi * i / n));
        double fx = f(x);
        if (std::isfinite(prev_f) && std::isfinite(fx) && prev_f * fx <= 0.0 && prev_f != fx)
            found(prev_x, x);
        prev_x = x;
        prev_f = fx;
    }
}

/// Composite-Simpson with interval doubling until the estimate settles.
template <typename F>
double simpson_adaptive(F&& f, double a, double b, double rel_tol, int max_doublings = 22) {
    int n = 64;
    auto comp = [&](int m) {
        double h = (b - a) / m;
        double s = f(a) + f(b);
        for (int i = 1; i < m; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
        return s * h / 3.0;
    };
    double prev = comp(n);
    for (int k = 0; k < max_doublings; ++k) {
        n *= 2;
        double cur = comp(n);
        if (std::abs(cur - prev) <= rel_tol * (std::abs(cur) + 1e-300)) return cur;
        prev = cur;
    }
    return prev;
}

} // namespace kg::detail

#endif
