#include "kg/bound.hpp"
#include "kg/detail/numerics.hpp"
#include "kg/errors.hpp"
#include "kg/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace kg {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double exp2ar(double r, const PotentialParams& p) { return std::exp(-2.0 * p.alpha * r); }

// P(rho) of the Riccati solution, reused along the shape-invariance chain.
double p_of_rho(double rho, const OmegaCoefficients& om, double q) {
    if (rho == 0.0) throw DegenerateError("rho = 0 in the superpotential chain");
    return (rho * rho - om.omega1 + om.omega3 * q * q) / (2.0 * q * rho);
}

double rho_k(const SusyFactors& f, const PotentialParams& p, int k) {
    return f.Q - 2.0 * p.alpha * p.q * k;
}
} // namespace

void QuantumNumbers::validate() const {
    if (n < 0) throw ParameterError("QuantumNumbers: n must be >= 0");
    if (l < 0) throw ParameterError("QuantumNumbers: l must be >= 0");
    if (D < 1) throw ParameterError("QuantumNumbers: D must be >= 1");
}

OmegaCoefficients omega_coeffs(double E, const QuantumNumbers& qn, const PotentialParams& p,
                               const MassParams& m) {
    p.validate();
    const double q = p.q, a = p.alpha;
    const double m0 = m.m0, m1 = m.m1;
    const double V0 = p.V0, V1 = p.V1, S0 = p.S0, S1 = p.S1;
    OmegaCoefficients om;
    om.gamma = qn.gamma();
    om.omega1 = 2.0 * m0 * S0 * q - 2.0 * m0 * S1 * q * q + 2.0 * E * V0 * q -
                2.0 * E * V1 * q * q + S0 * S0 + S1 * S1 * q * q - V0 * V0 + V1 * V1 * q * q;
    om.omega2 = -2.0 * m0 * S0 - 2.0 * m1 * S0 + 2.0 * m1 * S1 * q - 2.0 * E * V0 -
                2.0 * S0 * S1 * q + 2.0 * S1 * S1 * q + 2.0 * V0 * V1 * q + 2.0 * V1 * V1 * q -
                2.0 * m0 * m1 * q + 4.0 * om.gamma * a * a;
    om.omega3 = 2.0 * m1 * S1 + 2.0 * m0 * S1 + 2.0 * E * V1 - 2.0 * S0 * S1 + S1 * S1 +
                2.0 * V0 * V1 + V1 * V1 + 2.0 * m0 * m1 + m1 * m1;
    return om;
}

SusyFactors susy_factors(const OmegaCoefficients& om, const PotentialParams& p, Branch branch) {
    const double aq = p.alpha * p.q;
    double disc = 1.0 + om.sum_weighted(p.q) / (aq * aq);
    if (disc < 0.0)
        throw BranchError("susy_factors: negative discriminant, no real superpotential");
    double root = std::sqrt(disc);
    SusyFactors f;
    f.branch = branch;
    f.Q = aq * (branch == Branch::Plus ? -1.0 + root : -1.0 - root);
    f.P = p_of_rho(f.Q, om, p.q);
    return f;
}

double superpotential(double r, const SusyFactors& f, const PotentialParams& p) {
    if (p.q > 1.0 && r <= p.r_floor()) throw DomainError("superpotential: r <= r_floor");
    double u = exp2ar(r, p);
    return f.P + f.Q * u / (1.0 - p.q * u);
}

std::pair<double, double> partner_potentials(double r, const SusyFactors& f,
                                             const PotentialParams& p) {
    if (p.q > 1.0 && r <= p.r_floor()) throw DomainError("partner_potentials: r <= r_floor");
    double u = exp2ar(r, p);
    double d = 1.0 - p.q * u;
    double w = f.P + f.Q * u / d;
    double wp = -2.0 * p.alpha * f.Q * u / (d * d);
    return {w * w + wp, w * w - wp};
}

double shape_invariance_remainder(int k, const SusyFactors& f, const OmegaCoefficients& om,
                                  const PotentialParams& p) {
    if (k < 1) throw ParameterError("shape_invariance_remainder: k must be >= 1");
    double pm1 = p_of_rho(rho_k(f, p, k - 1), om, p.q);
    double pk = p_of_rho(rho_k(f, p, k), om, p.q);
    return pm1 * pm1 - pk * pk;
}

double energy_residual(double E, const QuantumNumbers& qn, const PotentialParams& p,
                       const MassParams& m) {
    auto om = omega_coeffs(E, qn, p, m);
    auto f = susy_factors(om, p, Branch::Minus);
    double pn = p_of_rho(rho_k(f, p, qn.n), om, p.q);
    return -pn * pn + om.omega3 - (E * E - m.m0 * m.m0);
}

double energy_residual_sigma_form(double E, const QuantumNumbers& qn, const PotentialParams& p,
                                  const MassParams& m) {
    auto om = omega_coeffs(E, qn, p, m);
    const double aq = p.alpha * p.q;
    double disc = 1.0 + om.sum_weighted(p.q) / (aq * aq);
    if (disc < 0.0) throw BranchError("sigma form: negative discriminant");
    double sigma = 0.5 * p.q * (1.0 + std::sqrt(disc));
    double s = 2.0 * p.alpha * (p.q * qn.n + sigma);
    double t = (om.omega3 * p.q * p.q - om.omega1) / s + s;
    return -t * t / (4.0 * p.q * p.q) + om.omega3 - (E * E - m.m0 * m.m0);
}

ChiCoefficients chi_coeffs(double E, const QuantumNumbers& qn, const PotentialParams& p,
                           const MassParams& m) {
    auto om = omega_coeffs(E, qn, p, m);
    const double a2 = p.alpha * p.alpha;
    const double Et = E * E - m.m0 * m.m0;
    ChiCoefficients c;
    c.chi1 = om.omega1 / (4.0 * a2 * p.q * p.q) - Et / (4.0 * a2);
    c.chi2 = -om.omega2 / (4.0 * a2 * p.q) - 2.0 * Et / (4.0 * a2);
    c.chi3 = om.omega3 / (4.0 * a2) - Et / (4.0 * a2);
    return c;
}

double quantization_residual(double E, const QuantumNumbers& qn, const PotentialParams& p,
                             const MassParams& m) {
    auto c = chi_coeffs(E, qn, p, m);
    if (c.chi1 < 0.0 || c.chi3 < 0.0) return kNaN;
    double rad = c.origin_radicand();
    if (rad < 0.0) return kNaN;
    double tau = 0.5 + std::sqrt(rad);
    return std::sqrt(c.chi1) - std::sqrt(c.chi3) - tau - qn.n;
}

std::pair<double, double> effective_gap(const PotentialParams& p, const MassParams& m) {
    // E^2 - m0^2 - omega3(E) = 0 with omega3 linear in E (slope 2 V1)
    auto om0 = omega_coeffs(0.0, QuantumNumbers{0, 0, 3}, p, m);
    double rad = p.V1 * p.V1 + m.m0 * m.m0 + om0.omega3;
    if (rad <= 0.0) return {0.0, 0.0};
    double root = std::sqrt(rad);
    return {p.V1 - root, p.V1 + root};
}

double default_search_e_max(const PotentialParams& p, const MassParams& m) {
    double gap = std::abs(m.m0 + m.m1 + p.S1);
    double e = std::max(std::abs(p.V1 + gap), std::abs(p.V1 - gap));
    auto [lo, hi] = effective_gap(p, m);
    e = std::max({e, std::abs(lo), std::abs(hi)});
    return 0.999 * e;
}

namespace {

// Tail cutoff then doubling Simpson; the integrand is smooth and compactly
// concentrated between the origin exponent rise and the e^{-2 P r} tail.
double norm_quadrature(const BoundState& st) {
    const auto& p = st.pot;
    auto c = st.chis;
    double s3 = std::sqrt(c.chi3);
    double tau = 0.5 + std::sqrt(c.origin_radicand());
    auto u2 = [&](double r) {
        double z = p.q * exp2ar(r, p);
        double w = std::pow(z, s3) * std::pow(1.0 - z, tau) *
                   specfun::jacobi_poly(st.qn.n, 2.0 * s3, 2.0 * (tau - 0.5), 1.0 - 2.0 * z);
        return w * w;
    };
    double lo = std::max(0.0, p.r_floor()) + 1e-12 / p.alpha;
    // locate the support: scan for the peak, then walk out to the tail
    double hi = lo + 30.0 / p.alpha;
    double peak = 0.0, rpk = lo;
    for (int i = 0; i <= 3000; ++i) {
        double r = lo + (hi - lo) * i / 3000.0;
        double v = u2(r);
        if (v > peak) {
            peak = v;
            rpk = r;
        }
    }
    if (peak <= 0.0) throw InvariantError("normalization: vanishing wavefunction");
    double decay = 2.0 * p.alpha * s3;
    double r_up = rpk + 45.0 / decay;
    double integral = detail::simpson_adaptive(u2, lo, r_up, 1e-11);
    if (!(integral > 0.0) || !std::isfinite(integral))
        throw NonConvergence("normalization quadrature failed");
    return 1.0 / std::sqrt(integral);
}

} // namespace

std::vector<BoundState> solve_bound_energies(const QuantumNumbers& qn, const PotentialParams& p,
                                             const MassParams& m, const SearchConfig& search) {
    qn.validate();
    p.validate();
    if (search.grid_points < 100)
        throw ParameterError("solve_bound_energies: grid_points must be >= 100");
    double e_max = search.E_max > 0.0 ? search.E_max : default_search_e_max(p, m);

    auto [gap_lo, gap_hi] = effective_gap(p, m);
    double lo = std::max(-e_max, gap_lo);
    double hi = std::min(e_max, gap_hi);

    auto h = [&](double E) { return quantization_residual(E, qn, p, m); };
    std::vector<BoundState> out;
    detail::scan_brackets(h, lo, hi, search.grid_points, [&](double a, double b) {
        double root = detail::brent(h, a, b, 1e-14);
        double gtol = search.tol * std::max(1.0, root * root);
        double g = energy_residual(root, qn, p, m);
        for (int it = 0; it < 40 && std::abs(g) > gtol; ++it) {
            double step = std::max(1e-9, 1e-9 * std::abs(root));
            double gp = (energy_residual(root + step, qn, p, m) - g) / step;
            if (gp == 0.0) break;
            root -= g / gp;
            g = energy_residual(root, qn, p, m);
        }
        if (std::abs(g) > gtol)
            throw NonConvergence("solve_bound_energies: bracket refinement stalled");
        BoundState st;
        st.energy = root;
        st.qn = qn;
        st.pot = p;
        st.mass = m;
        st.omegas = omega_coeffs(root, qn, p, m);
        st.chis = chi_coeffs(root, qn, p, m);
        auto f = susy_factors(st.omegas, p, Branch::Minus);
        st.sigma = -f.Q / (2.0 * p.alpha); // (q/2)(1 + sqrt(1 + sum/(a q)^2))
        if (st.chis.chi3 <= 0.0 || st.chis.origin_radicand() <= 0.0)
            throw InvariantError("solve_bound_energies: non-real exponents at root");
        st.norm = norm_quadrature(st);
        out.push_back(std::move(st));
    });
    std::sort(out.begin(), out.end(),
              [](const BoundState& a, const BoundState& b) { return a.energy < b.energy; });
    return out;
}

double bound_wavefunction(double r, const BoundState& state) {
    const auto& p = state.pot;
    if (p.q > 1.0 && r <= p.r_floor()) throw DomainError("bound_wavefunction: r <= r_floor");
    auto c = state.chis;
    if (c.chi3 < 0.0 || c.origin_radicand() < 0.0)
        throw InvariantError("bound_wavefunction: non-real exponents");
    double s3 = std::sqrt(c.chi3);
    double tau = 0.5 + std::sqrt(c.origin_radicand());
    double z = p.q * exp2ar(r, p);
    return state.norm * std::pow(z, s3) * std::pow(1.0 - z, tau) *
           specfun::jacobi_poly(state.qn.n, 2.0 * s3, 2.0 * (tau - 0.5), 1.0 - 2.0 * z);
}

} // namespace kg
