#include "kg/specfun.hpp"
#include "kg/errors.hpp"

#include <cmath>
#include <string>

namespace kg::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kHalfLog2Pi = 0.91893853320467274178032973640562;

// Lanczos g=7, 9 coefficients (Godfrey/Pugh set).
constexpr int kLanczosG = 7;
constexpr double kLanczosP[kLanczosG + 2] = {
    0.99999999999980993,   676.5203681218851,   -1259.1392167224028,
    771.32342877765313,    -176.61502916214059, 12.507343278686905,
    -0.13857109526572012,  9.9843695780195716e-6, 1.5056327351493116e-7};

bool near_nonpositive_integer(Complex z, double tol) {
    double k = std::round(z.real());
    if (k > 0.5) return false;
    return std::abs(z.real() - k) <= tol && std::abs(z.imag()) <= tol;
}

// log Gamma for Re z >= 0.5 only.
Complex log_gamma_lanczos(Complex z) {
    Complex zm = z - 1.0;
    Complex acc = kLanczosP[0];
    for (int i = 1; i < kLanczosG + 2; ++i)
        acc += kLanczosP[i] / (zm + static_cast<double>(i));
    Complex t = zm + (kLanczosG + 0.5);
    // Re t >= 7, Re acc > 0 on this half-plane: each principal log is smooth.
    return kHalfLog2Pi + (zm + 0.5) * std::log(t) - t + std::log(acc);
}

// log sin(pi z) with the branch that keeps Im(log Gamma) continuous after
// reflection: linear-in-z phase plus a log1p-size correction.
Complex log_sin_pi(Complex z) {
    if (z.imag() > 0.0) {
        Complex i2pz = Complex(0.0, 2.0 * kPi) * z;
        return Complex(-std::log(2.0), kPi / 2.0) - Complex(0.0, kPi) * z +
               std::log(1.0 - std::exp(i2pz));
    }
    if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
    double s = std::sin(kPi * z.real());
    return {std::log(std::abs(s)), s < 0.0 ? kPi : 0.0};
}

} // namespace

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z, 1e-12))
        throw PoleError("log_gamma: pole at z = " + std::to_string(z.real()));
    if (z.real() >= 0.5) return log_gamma_lanczos(z);
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma_lanczos(1.0 - z);
}

double gamma_arg(Complex z) {
    if (z.imag() == 0.0 && z.real() > 0.0) return 0.0;
    return log_gamma(z).imag();
}

Complex gamma(Complex z) { return std::exp(log_gamma(z)); }

namespace {

// 1/Gamma(z); entire, zero at the poles of Gamma.
Complex inv_gamma(Complex z) {
    if (near_nonpositive_integer(z, 1e-12)) return {0.0, 0.0};
    return std::exp(-log_gamma(z));
}

constexpr int kMaxTerms = 100000;

// Plain Gauss series; caller guarantees convergence radius.
Complex gauss_series(Complex a, Complex b, Complex c, Complex z, int& terms) {
    Complex sum = 1.0, term = 1.0;
    for (int n = 0; n < kMaxTerms; ++n) {
        term *= (a + static_cast<double>(n)) * (b + static_cast<double>(n)) /
                ((c + static_cast<double>(n)) * static_cast<double>(n + 1)) * z;
        sum += term;
        if (std::abs(term) <= 1e-14 * (1.0 + std::abs(sum))) {
            terms = n + 1;
            return sum;
        }
    }
    throw NonConvergence("hyp2f1: series did not reach tolerance in 1e5 terms");
}

} // namespace

Hyp2f1Result hyp2f1_ex(Complex a, Complex b, Complex c, Complex z) {
    if (near_nonpositive_integer(c, 1e-12))
        throw ParameterError("hyp2f1: c is a non-positive integer");
    Hyp2f1Result res;
    if (z == Complex(0.0, 0.0) || a == Complex(0.0, 0.0) || b == Complex(0.0, 0.0)) {
        res.value = 1.0;
        return res;
    }
    double az = std::abs(z);
    if (az > 1.0 + 1e-14) throw DomainError("hyp2f1: |z| > 1");

    // terminating (polynomial) cases stay on the direct series
    bool poly = near_nonpositive_integer(a, 1e-12) || near_nonpositive_integer(b, 1e-12);
    if (az <= 0.5 || poly) {
        res.value = gauss_series(a, b, c, z, res.terms);
        return res;
    }

    // 0.5 < |z| <= 1: connection formula to argument 1-z
    Complex cab = c - a - b;
    if (az >= 1.0 - 1e-14 && cab.real() <= 0.0 && std::abs(z - 1.0) < 1e-14)
        throw DomainError("hyp2f1: z = 1 requires Re(c-a-b) > 0");
    double nearest = std::round(cab.real());
    if (std::abs(cab.real() - nearest) < 1e-8 && std::abs(cab.imag()) < 1e-8) {
        c += 1e-6; // degenerate connection coefficients; see header
        cab = c - a - b;
        res.c_perturbed = true;
    }
    Complex w = 1.0 - z;
    Complex coef1 = std::exp(log_gamma(c) + log_gamma(cab)) * inv_gamma(c - a) * inv_gamma(c - b);
    Complex t1 = (w == Complex(0.0, 0.0)) ? Complex(1.0, 0.0)
                                          : gauss_series(a, b, a + b - c + 1.0, w, res.terms);
    if (w == Complex(0.0, 0.0)) {
        res.value = coef1;
        return res;
    }
    Complex coef2 = std::exp(log_gamma(c) + log_gamma(-cab)) * inv_gamma(a) * inv_gamma(b);
    int t2n = 0;
    Complex t2 = gauss_series(c - a, c - b, cab + 1.0, w, t2n);
    res.terms += t2n;
    res.value = coef1 * t1 + std::pow(w, cab) * coef2 * t2;
    return res;
}

Complex hyp2f1(Complex a, Complex b, Complex c, Complex z) {
    return hyp2f1_ex(a, b, c, z).value;
}

double jacobi_poly(int n, double mu, double nu, double x) {
    if (mu <= -1.0 || nu <= -1.0)
        throw ParameterError("jacobi_poly: parameters must exceed -1");
    if (n < 0) throw ParameterError("jacobi_poly: negative degree");
    if (n == 0) return 1.0;
    double p0 = 1.0;
    double p1 = 0.5 * (mu - nu) + (1.0 + 0.5 * (mu + nu)) * x;
    for (int m = 2; m <= n; ++m) {
        double s = mu + nu;
        double c1 = 2.0 * m * (m + s) * (2.0 * m + s - 2.0);
        double c2 = (2.0 * m + s - 1.0) * ((2.0 * m + s) * (2.0 * m + s - 2.0) * x + mu * mu - nu * nu);
        double c3 = 2.0 * (m + mu - 1.0) * (m + nu - 1.0) * (2.0 * m + s);
        double p2 = (c2 * p1 - c3 * p0) / c1;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

} // namespace kg::specfun
