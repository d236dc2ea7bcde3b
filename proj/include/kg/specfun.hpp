#ifndef KG_SPECFUN_HPP
#define KG_SPECFUN_HPP

#include <complex>

namespace kg::specfun {

using Complex = std::complex<double>;

/// Principal-branch log Gamma. The imaginary part is arg Gamma(z) continued
/// smoothly along any path with Re z > 0 (no 2*pi jumps). Lanczos (g=7) for
/// Re z >= 0.5, reflection below.
/// Throws PoleError within 1e-12 of a non-positive integer.
Complex log_gamma(Complex z);

/// Im(log_gamma(z)); exactly 0 for real z > 0.
double gamma_arg(Complex z);

/// Gamma(z) = exp(log_gamma(z)); overflows for large |z| like the real thing.
Complex gamma(Complex z);

struct Hyp2f1Result {
    Complex value;
    bool c_perturbed = false; // degenerate c-a-b handled by nudging c (see impl)
    int terms = 0;            // series terms consumed (diagnostic)
};

/// Gauss hypergeometric 2F1(a,b;c;z) for |z| <= 1 (z != 1 unless Re(c-a-b) > 0).
/// Direct series for |z| <= 0.5, connection formula to argument 1-z beyond.
/// Relative accuracy target 1e-10.
Hyp2f1Result hyp2f1_ex(Complex a, Complex b, Complex c, Complex z);
Complex hyp2f1(Complex a, Complex b, Complex c, Complex z);

/// Jacobi polynomial P_n^(mu,nu)(x) by the three-term recurrence. mu, nu > -1.
double jacobi_poly(int n, double mu, double nu, double x);

} // namespace kg::specfun

#endif
