#ifndef KG_SCATTER_HPP
#define KG_SCATTER_HPP

#include "kg/bound.hpp"
#include "kg/potential.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace kg {

using Complex = std::complex<double>;

/// Continuum-sector coefficient triple. Built from the chi's with the
/// scattering sign of chi3 (tail oscillates instead of decaying), under
/// which xi1 = chi2 + chi3 - chi1, xi2 = chi3, xi3 = chi1 and
/// k^2 = 4 a^2 xi2 > 0 above the edge.
struct XiCoefficients {
    double xi1 = 0.0;
    double xi2 = 0.0;
    double xi3 = 0.0;
};

struct ScatteringState {
    double energy = 0.0;
    double k = 0.0;
    Complex eta1, eta2, eta3;
    double lambda1 = 0.0;
    Complex lambda2;
    double delta = 0.0;     // reduced to (-pi, pi]
    double delta_raw = 0.0; // unreduced
    double norm = 1.0;
};

/// Per-term breakdown of the phase shift, including the literal source
/// transcription (eta's scaled with k/a and a -k ln2/a term) whose
/// bookkeeping the asymptotic-matching oracle rejects; kept for the
/// verification report.
struct PhaseShiftTerms {
    double offset = 0.0;       // pi/2 (l_D + (D-1)/2)
    double arg_gamma_2ik = 0.0; // arg Gamma(eta3 - eta1 - eta2)
    double arg_gamma_31 = 0.0;  // arg Gamma(eta3 - eta1)
    double arg_gamma_32 = 0.0;  // arg Gamma(eta3 - eta2)
    double q_term = 0.0;        // arg q^{-i k/(2a)}
    double raw = 0.0;           // primary unreduced value
    double reduced = 0.0;       // primary, in (-pi, pi]
    double transcribed_raw = 0.0;   // literal transcription incl. -k ln2/a
};

/// Continuum edges (E+, E-) = V1 +- |m0 + m1 + S1| of the asymptotic
/// channel; scattering requires E > E+ or E < E-.
std::pair<double, double> threshold_energy(const PotentialParams& p, const MassParams& m);

XiCoefficients xi_coeffs(double E, const QuantumNumbers& qn, const PotentialParams& p,
                         const MassParams& m);

/// k = sqrt(4 a^2 xi2); throws BelowThreshold when k^2 <= 0.
double wave_number(double E, const QuantumNumbers& qn, const PotentialParams& p,
                   const MassParams& m);

/// eta1 = (1 + sqrt(1-4 xi1))/2 - ik/a + sqrt(xi3), eta2 likewise with
/// -sqrt(xi3), eta3 = 1 + sqrt(1-4 xi1). sqrt(xi3) is taken on the
/// principal branch when xi3 < 0. Throws ParameterError when 1-4 xi1 < 0
/// (fall-to-the-center regime).
struct EtaParams {
    Complex eta1, eta2, eta3;
};
EtaParams eta_params(const XiCoefficients& xi, double k, double alpha);

PhaseShiftTerms phase_shift_terms(double E, const QuantumNumbers& qn,
                                  const PotentialParams& p, const MassParams& m);

/// Phase shift delta_{l_D}, reduced to (-pi, pi].
double phase_shift(double E, const QuantumNumbers& qn, const PotentialParams& p,
                   const MassParams& m);

/// Normalization making the large-r amplitude exactly 2.
double scatter_normalization(double E, const QuantumNumbers& qn, const PotentialParams& p,
                             const MassParams& m);

/// Regular scattering solution, asymptotically 2 sin(kr + delta - ...).
Complex scattering_wavefunction(double r, double E, const QuantumNumbers& qn,
                                const PotentialParams& p, const MassParams& m);

/// The sinusoidal boundary form 2 sin(kr + delta - pi/2 (l_D + (D-3)/2)).
double scattering_asymptote(double r, double E, const QuantumNumbers& qn,
                            const PotentialParams& p, const MassParams& m);

ScatteringState scattering_state(double E, const QuantumNumbers& qn, const PotentialParams& p,
                                 const MassParams& m);

/// Real energies inside the gap where the scattering amplitude's gamma
/// denominator hits a pole (k continued to i kappa); coincide with the
/// bound spectrum.
std::vector<double> smatrix_pole_energies(const QuantumNumbers& qn, const PotentialParams& p,
                                          const MassParams& m, const SearchConfig& search = {});

struct HulthenParams {
    double V0 = 0.0;
    double q = 1.0;
    double alpha = 1.0; // screening of e^{-alpha r} in the Hulthen form
    double m0 = 1.0;
};

/// General-pipeline parameters realizing V_H = -V0 e^{-ar}/(1 - q e^{-ar}).
PotentialParams hulthen_mapped(const HulthenParams& h);

/// (delta, N) from the general pipeline at the mapped parameters.
std::pair<double, double> hulthen_case(const HulthenParams& h, double E,
                                       const QuantumNumbers& qn);

/// Dedicated closed forms in the Hulthen variables; equal to hulthen_case.
std::pair<double, double> hulthen_dedicated(const HulthenParams& h, double E,
                                            const QuantumNumbers& qn);

struct WoodsSaxonParams {
    double V0 = 0.0;    // depth
    double R = 1.0;     // surface thickness
    double theta = 1.0; // width
    double m0 = 1.0;
};

/// V(r) = V0/(1 - exp((r - theta)/R)), valid for r > theta.
double woods_saxon_potential(double r, const WoodsSaxonParams& w);

/// General-pipeline parameters realizing the Woods-Saxon form
/// (alpha = 1/(2R), q = e^{theta/R}, V0 -> V0 e^{theta/R}).
PotentialParams woods_saxon_mapped(const WoodsSaxonParams& w);

std::pair<double, double> woods_saxon_case(const WoodsSaxonParams& w, double E,
                                           const QuantumNumbers& qn);

/// Dedicated closed forms in the (R, theta) variables.
std::pair<double, double> woods_saxon_dedicated(const WoodsSaxonParams& w, double E,
                                                const QuantumNumbers& qn);

} // namespace kg

#endif
