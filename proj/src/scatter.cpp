#include "kg/scatter.hpp"
#include "kg/detail/numerics.hpp"
#include "kg/errors.hpp"
#include "kg/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kg {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

using specfun::gamma_arg;
using specfun::log_gamma;

double reduce_pi(double x) {
    double y = std::remainder(x, 2.0 * kPi);
    if (y <= -kPi) y += 2.0 * kPi;
    return y;
}

Complex sqrt_c(double x) { return std::sqrt(Complex(x, 0.0)); }

// Hypergeometric parameters of the regular solution
//   F = N x^{lam1} z^{lam2} 2F1(a, b; c; x),  x = 1 - z,  z = q e^{-2ar}.
// These are the eta's evaluated at half the wave number: the two exponents
// at x = 1 are +-ik/(2a) (the screening is e^{-2ar}), so the connection
// coefficients carry Gamma(ik/a) rather than Gamma(2ik/a).
struct HypParams {
    Complex a, b, c;
    double lam1;
    Complex lam2;
};

HypParams hyp_params(const XiCoefficients& xi, double k, double alpha) {
    auto eta = eta_params(xi, 0.5 * k, alpha);
    HypParams h;
    h.a = eta.eta1;
    h.b = eta.eta2;
    h.c = eta.eta3;
    h.lam1 = eta.eta3.real() / 2.0;
    h.lam2 = Complex(0.0, -k / (2.0 * alpha));
    return h;
}

} // namespace

std::pair<double, double> threshold_energy(const PotentialParams& p, const MassParams& m) {
    double gap = std::abs(m.m0 + m.m1 + p.S1);
    return {p.V1 + gap, p.V1 - gap};
}

XiCoefficients xi_coeffs(double E, const QuantumNumbers& qn, const PotentialParams& p,
                         const MassParams& m) {
    auto c = chi_coeffs(E, qn, p, m);
    double chi3s = -c.chi3; // scattering sign: positive above the edge
    return {c.chi2 + chi3s - c.chi1, chi3s, c.chi1};
}

double wave_number(double E, const QuantumNumbers& qn, const PotentialParams& p,
                   const MassParams& m) {
    auto xi = xi_coeffs(E, qn, p, m);
    double k2 = 4.0 * p.alpha * p.alpha * xi.xi2;
    if (k2 <= 0.0) throw BelowThreshold("wave_number: k^2 <= 0 inside the gap");
    return std::sqrt(k2);
}

EtaParams eta_params(const XiCoefficients& xi, double k, double alpha) {
    double rad = 1.0 - 4.0 * xi.xi1;
    if (rad < 0.0)
        throw ParameterError("eta_params: 1 - 4 xi1 < 0 (fall to the center)");
    double lam1 = 0.5 * (1.0 + std::sqrt(rad));
    Complex s3 = sqrt_c(xi.xi3);
    Complex ik(0.0, k / alpha);
    EtaParams e;
    e.eta1 = lam1 - ik + s3;
    e.eta2 = lam1 - ik - s3;
    e.eta3 = 2.0 * lam1;
    return e;
}

PhaseShiftTerms phase_shift_terms(double E, const QuantumNumbers& qn, const PotentialParams& p,
                                  const MassParams& m) {
    double k = wave_number(E, qn, p, m);
    auto xi = xi_coeffs(E, qn, p, m);
    auto h = hyp_params(xi, k, p.alpha);

    PhaseShiftTerms t;
    t.offset = 0.5 * kPi * (qn.l + 0.5 * (qn.D - 1.0));
    t.arg_gamma_2ik = gamma_arg(h.c - h.a - h.b); // = arg Gamma(i k / a)
    t.arg_gamma_31 = gamma_arg(h.c - h.a);
    t.arg_gamma_32 = gamma_arg(h.c - h.b);
    t.q_term = -(k / (2.0 * p.alpha)) * std::log(p.q);
    t.raw = t.offset + t.arg_gamma_2ik - t.arg_gamma_31 - t.arg_gamma_32 + t.q_term;
    t.reduced = reduce_pi(t.raw);

    // literal transcription: eta's at k/a, a -(k/a) ln 2 term, q^{-ik/a}
    auto ep = eta_params(xi, k, p.alpha);
    t.transcribed_raw = t.offset - (k / p.alpha) * std::log(2.0) +
                    gamma_arg(ep.eta3 - ep.eta1 - ep.eta2) - gamma_arg(ep.eta3 - ep.eta1) -
                    gamma_arg(ep.eta3 - ep.eta2) - (k / p.alpha) * std::log(p.q);
    return t;
}

double phase_shift(double E, const QuantumNumbers& qn, const PotentialParams& p,
                   const MassParams& m) {
    return phase_shift_terms(E, qn, p, m).reduced;
}

double scatter_normalization(double E, const QuantumNumbers& qn, const PotentialParams& p,
                             const MassParams& m) {
    double k = wave_number(E, qn, p, m);
    auto h = hyp_params(xi_coeffs(E, qn, p, m), k, p.alpha);
    // |Gamma(a* )| |Gamma(b* )| / (Gamma(c) |Gamma(ik/a)|); |q^{ik/2a}| = 1
    double lg = log_gamma(h.a).real() + log_gamma(h.b).real() - log_gamma(h.c).real() -
                log_gamma(h.c - h.a - h.b).real();
    return std::exp(lg);
}

Complex scattering_wavefunction(double r, double E, const QuantumNumbers& qn,
                                const PotentialParams& p, const MassParams& m) {
    if (p.q > 1.0 && r <= p.r_floor())
        throw DomainError("scattering_wavefunction: r <= r_floor");
    double k = wave_number(E, qn, p, m);
    auto h = hyp_params(xi_coeffs(E, qn, p, m), k, p.alpha);
    double N = scatter_normalization(E, qn, p, m);
    double z = p.q * std::exp(-2.0 * p.alpha * r);
    double x = 1.0 - z;
    Complex pref = N * std::pow(x, h.lam1) * std::exp(h.lam2 * std::log(z));
    if (x <= 0.5) return pref * specfun::hyp2f1(h.a, h.b, h.c, x);
    // near x -> 1 use the connection formula with z known exactly
    Complex cab = h.c - h.a - h.b;
    Complex c1 = std::exp(log_gamma(h.c) + log_gamma(cab) - log_gamma(h.c - h.a) -
                          log_gamma(h.c - h.b));
    Complex c2 = std::exp(log_gamma(h.c) + log_gamma(-cab) - log_gamma(h.a) -
                          log_gamma(h.b));
    Complex f1 = specfun::hyp2f1(h.a, h.b, h.a + h.b - h.c + 1.0, z);
    Complex f2 = specfun::hyp2f1(h.c - h.a, h.c - h.b, cab + 1.0, z);
    return pref * (c1 * f1 + std::exp(cab * std::log(z)) * c2 * f2);
}

double scattering_asymptote(double r, double E, const QuantumNumbers& qn,
                            const PotentialParams& p, const MassParams& m) {
    double k = wave_number(E, qn, p, m);
    auto t = phase_shift_terms(E, qn, p, m);
    return 2.0 * std::sin(k * r + t.raw - 0.5 * kPi * (qn.l + 0.5 * (qn.D - 3.0)));
}

ScatteringState scattering_state(double E, const QuantumNumbers& qn, const PotentialParams& p,
                                 const MassParams& m) {
    ScatteringState st;
    st.energy = E;
    st.k = wave_number(E, qn, p, m);
    auto xi = xi_coeffs(E, qn, p, m);
    auto ep = eta_params(xi, st.k, p.alpha);
    st.eta1 = ep.eta1;
    st.eta2 = ep.eta2;
    st.eta3 = ep.eta3;
    st.lambda1 = ep.eta3.real() / 2.0;
    st.lambda2 = Complex(0.0, -st.k / (2.0 * p.alpha));
    auto t = phase_shift_terms(E, qn, p, m);
    st.delta = t.reduced;
    st.delta_raw = t.raw;
    st.norm = scatter_normalization(E, qn, p, m);
    return st;
}

std::vector<double> smatrix_pole_energies(const QuantumNumbers& qn, const PotentialParams& p,
                                          const MassParams& m, const SearchConfig& search) {
    // Gamma(eta) pole: lam1 + kappa/(2a) - sqrt(xi3) = -n_r with k = i kappa,
    // kappa = 2a sqrt(-xi2) the decay constant inside the gap.
    auto cond = [&](double E) {
        auto xi = xi_coeffs(E, qn, p, m);
        if (xi.xi2 >= 0.0 || xi.xi3 < 0.0) return kNaN;
        double rad = 1.0 - 4.0 * xi.xi1;
        if (rad < 0.0) return kNaN;
        double lam1 = 0.5 * (1.0 + std::sqrt(rad));
        double kappa = 2.0 * p.alpha * std::sqrt(-xi.xi2);
        return lam1 + kappa / (2.0 * p.alpha) - std::sqrt(xi.xi3) + qn.n;
    };
    double e_max = search.E_max > 0.0 ? search.E_max : default_search_e_max(p, m);
    auto [gap_lo, gap_hi] = effective_gap(p, m);
    double lo = std::max(-e_max, gap_lo);
    double hi = std::min(e_max, gap_hi);
    int npts = std::max(search.grid_points, 100);
    std::vector<double> out;
    detail::scan_brackets(cond, lo, hi, npts, [&](double a, double b) {
        out.push_back(detail::brent(cond, a, b, 1e-14));
    });
    std::sort(out.begin(), out.end());
    return out;
}

PotentialParams hulthen_mapped(const HulthenParams& h) {
    PotentialParams p;
    p.V0 = h.V0;
    p.V1 = p.S0 = p.S1 = 0.0;
    p.q = h.q;
    p.alpha = 0.5 * h.alpha;
    return p;
}

std::pair<double, double> hulthen_case(const HulthenParams& h, double E,
                                       const QuantumNumbers& qn) {
    auto p = hulthen_mapped(h);
    MassParams m{h.m0, 0.0};
    return {phase_shift(E, qn, p, m), scatter_normalization(E, qn, p, m)};
}

std::pair<double, double> hulthen_dedicated(const HulthenParams& h, double E,
                                            const QuantumNumbers& qn) {
    // closed forms in the Hulthen variables: screening e^{-ar} makes the
    // gamma arguments carry k/a directly
    double a = h.alpha, q = h.q;
    double Et = E * E - h.m0 * h.m0;
    if (Et <= 0.0) throw BelowThreshold("hulthen_dedicated: E inside the gap");
    double k = std::sqrt(Et);
    double gam = qn.gamma();
    // xi's of the mapped problem, expressed directly
    double a2g = 0.25 * a * a; // (a/2)^2
    double w1 = 2.0 * E * h.V0 * q - h.V0 * h.V0;
    double w2 = -2.0 * E * h.V0 + 4.0 * gam * a2g;
    double xi3 = w1 / (4.0 * a2g * q * q) - Et / (4.0 * a2g);
    double sum = w1 + w2 * q; // w3 = 0
    double rad = 1.0 + sum / (a2g * q * q);
    if (rad < 0.0) throw ParameterError("hulthen_dedicated: fall to the center");
    double lam1 = 0.5 * (1.0 + std::sqrt(rad));
    Complex s3 = sqrt_c(xi3);
    Complex ika(0.0, k / a);
    double delta = 0.5 * kPi * (qn.l + 0.5 * (qn.D - 1.0)) + gamma_arg(2.0 * ika) -
                   gamma_arg(lam1 + ika - s3) - gamma_arg(lam1 + ika + s3) -
                   (k / a) * std::log(q);
    double lg = log_gamma(lam1 - ika + s3).real() + log_gamma(lam1 - ika - s3).real() -
                log_gamma(Complex(2.0 * lam1, 0.0)).real() - log_gamma(2.0 * ika).real();
    return {reduce_pi(delta), std::exp(lg)};
}

double woods_saxon_potential(double r, const WoodsSaxonParams& w) {
    if (r <= w.theta) throw DomainError("woods_saxon_potential: r <= theta");
    return w.V0 / (1.0 - std::exp((r - w.theta) / w.R));
}

PotentialParams woods_saxon_mapped(const WoodsSaxonParams& w) {
    HulthenParams h;
    h.q = std::exp(w.theta / w.R);
    h.V0 = w.V0 * h.q;
    h.alpha = 1.0 / w.R;
    h.m0 = w.m0;
    return hulthen_mapped(h);
}

std::pair<double, double> woods_saxon_case(const WoodsSaxonParams& w, double E,
                                           const QuantumNumbers& qn) {
    auto p = woods_saxon_mapped(w);
    MassParams m{w.m0, 0.0};
    return {phase_shift(E, qn, p, m), scatter_normalization(E, qn, p, m)};
}

std::pair<double, double> woods_saxon_dedicated(const WoodsSaxonParams& w, double E,
                                                const QuantumNumbers& qn) {
    HulthenParams h;
    h.q = std::exp(w.theta / w.R);
    h.V0 = w.V0 * h.q;
    h.alpha = 1.0 / w.R;
    h.m0 = w.m0;
    // (R, theta) variables: k/alpha_H = kR, ln q = theta/R
    double Et = E * E - w.m0 * w.m0;
    if (Et <= 0.0) throw BelowThreshold("woods_saxon_dedicated: E inside the gap");
    double k = std::sqrt(Et);
    double gam = qn.gamma();
    double a2g = 0.25 / (w.R * w.R);
    double q = h.q;
    double w1 = 2.0 * E * h.V0 * q - h.V0 * h.V0;
    double w2 = -2.0 * E * h.V0 + 4.0 * gam * a2g;
    double xi3 = w1 / (4.0 * a2g * q * q) - Et / (4.0 * a2g);
    double rad = 1.0 + (w1 + w2 * q) / (a2g * q * q);
    if (rad < 0.0) throw ParameterError("woods_saxon_dedicated: fall to the center");
    double lam1 = 0.5 * (1.0 + std::sqrt(rad));
    Complex s3 = sqrt_c(xi3);
    Complex ikR(0.0, k * w.R);
    double delta = 0.5 * kPi * (qn.l + 0.5 * (qn.D - 1.0)) + gamma_arg(2.0 * ikR) -
                   gamma_arg(lam1 + ikR - s3) - gamma_arg(lam1 + ikR + s3) -
                   k * w.theta;
    double lg = log_gamma(lam1 - ikR + s3).real() + log_gamma(lam1 - ikR - s3).real() -
                log_gamma(Complex(2.0 * lam1, 0.0)).real() - log_gamma(2.0 * ikR).real();
    return {reduce_pi(delta), std::exp(lg)};
}

} // namespace kg
