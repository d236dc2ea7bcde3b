#ifndef KG_BOUND_HPP
#define KG_BOUND_HPP

#include "kg/potential.hpp"

#include <utility>
#include <vector>

namespace kg {

struct QuantumNumbers {
    int n = 0; // radial
    int l = 0; // angular momentum l_D
    int D = 3; // spatial dimension

    /// Centrifugal constant (D+2l-1)(D+2l-3)/4; depends on D+2l only, which
    /// carries the interdimensional degeneracy (l, D) -> (l-1, D+2).
    double gamma() const {
        double s = D + 2.0 * l;
        return (s - 1.0) * (s - 3.0) / 4.0;
    }

    void validate() const;
};

/// Energy-dependent coefficients of the reduced radial equation
///   -F'' + [w1 e^{-4ar} + w2 e^{-2ar} + w3]/(1 - q e^{-2ar})^2 F = (E^2 - m0^2) F.
struct OmegaCoefficients {
    double omega1 = 0.0;
    double omega2 = 0.0;
    double omega3 = 0.0;
    double gamma = 0.0;

    double sum_weighted(double q) const { return omega1 + omega2 * q + omega3 * q * q; }
};

enum class Branch { Plus, Minus };

/// Superpotential W(r) = P + Q e^{-2ar}/(1 - q e^{-2ar}).
struct SusyFactors {
    double P = 0.0;
    double Q = 0.0;
    Branch branch = Branch::Minus;
};

struct ChiCoefficients {
    double chi1 = 0.0;
    double chi2 = 0.0;
    double chi3 = 0.0;

    /// Radicand of the regular-origin exponent: 1/4 + chi1 - chi2 + chi3.
    double origin_radicand() const { return 0.25 + chi1 - chi2 + chi3; }
};

struct BoundState {
    double energy = 0.0;
    QuantumNumbers qn;
    OmegaCoefficients omegas;
    ChiCoefficients chis;
    double sigma = 0.0; // (q/2)(1 + sqrt(1 + (w1 + w2 q + w3 q^2)/(a^2 q^2)))
    double norm = 1.0;  // quadrature normalization of the radial function
    PotentialParams pot;
    MassParams mass;
};

struct SearchConfig {
    double E_max = 0.0;   // 0: auto, 0.999 * max |continuum edge|
    int grid_points = 400;
    double tol = 1e-12;
};

OmegaCoefficients omega_coeffs(double E, const QuantumNumbers& qn,
                               const PotentialParams& p, const MassParams& m);

/// Default half-width of the energy search window: just inside the widest of
/// the physical channel edges and the edges of the effective problem
/// (E^2 - m0^2 = omega3(E), which the omega algebra places further out).
double default_search_e_max(const PotentialParams& p, const MassParams& m);

/// Interval of E where the effective equation's tail decays (chi3 > 0):
/// between the roots of E^2 - m0^2 = omega3(E). Empty (lo >= hi) if the
/// parameters leave no decaying window.
std::pair<double, double> effective_gap(const PotentialParams& p, const MassParams& m);

/// Solves the Riccati system for (P, Q). The Minus branch is the
/// normalizable one (ground state e^{-int W} regular at both ends) and is
/// what the spectrum uses; Plus is exposed for completeness.
SusyFactors susy_factors(const OmegaCoefficients& om, const PotentialParams& p,
                         Branch branch = Branch::Minus);

double superpotential(double r, const SusyFactors& f, const PotentialParams& p);

/// (V+, V-) = (W^2 + W', W^2 - W') with the derivative taken analytically.
std::pair<double, double> partner_potentials(double r, const SusyFactors& f,
                                             const PotentialParams& p);

/// Shape-invariance energy increment R(rho_k) with rho_k = Q - 2 a q k.
/// (The parameter step that keeps V+(r; rho_{k-1}) - V-(r; rho_k)
/// r-independent is 2 a q.)
double shape_invariance_remainder(int k, const SusyFactors& f,
                                  const OmegaCoefficients& om, const PotentialParams& p);

/// g(E) = -P(rho_n)^2 + w3 - (E^2 - m0^2); bound states are roots with the
/// decaying-tail sign P(rho_n) > 0.
double energy_residual(double E, const QuantumNumbers& qn, const PotentialParams& p,
                       const MassParams& m);

/// Equivalent explicit-sigma form of the energy equation (secondary route,
/// compared against energy_residual in the verification report).
double energy_residual_sigma_form(double E, const QuantumNumbers& qn,
                                  const PotentialParams& p, const MassParams& m);

/// Sign-resolved quantization function: sqrt(chi1) - sqrt(chi3) - tau - n
/// with tau the regular-origin exponent. Vanishes exactly at physical bound
/// states (it is the polynomial-termination condition); NaN where the state
/// cannot exist. energy_residual has the same roots plus sign-artifact ones.
double quantization_residual(double E, const QuantumNumbers& qn,
                             const PotentialParams& p, const MassParams& m);

std::vector<BoundState> solve_bound_energies(const QuantumNumbers& qn,
                                             const PotentialParams& p, const MassParams& m,
                                             const SearchConfig& search = {});

ChiCoefficients chi_coeffs(double E, const QuantumNumbers& qn, const PotentialParams& p,
                           const MassParams& m);

/// Radial function N z^{sqrt(chi3)} (1-z)^{1/2 + sqrt(1/4+chi1-chi2+chi3)}
///   P_n^{(2 sqrt(chi3), 2 sqrt(1/4+chi1-chi2+chi3))}(1 - 2z),  z = q e^{-2ar},
/// with N the stored quadrature norm.
double bound_wavefunction(double r, const BoundState& state);

} // namespace kg

#endif
