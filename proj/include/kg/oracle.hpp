#ifndef KG_ORACLE_HPP
#define KG_ORACLE_HPP

#include "kg/bound.hpp"
#include "kg/potential.hpp"

#include <vector>

namespace kg::oracle {

/// Uniform Dirichlet grid for the finite-difference eigensolver.
struct RadialGrid {
    double r_min = 0.0;
    double r_max = 0.0;
    int points = 20000;

    void validate(const PotentialParams& p) const;

    /// r_min = 1e-6/a, r_max = 14/a (tail < 1e-12), 20000 points.
    static RadialGrid bound_defaults(const PotentialParams& p);
    /// Longer box for asymptotic matching (alpha r up to 26).
    static RadialGrid scattering_defaults(const PotentialParams& p);
};

enum class Centrifugal {
    Approximated, // the hyperbolic stand-in baked into the omega's
    Exact         // swap in gamma / r^2 (report-only mode)
};

/// Lowest nlev eigenvalues Etilde of
///   -F'' + [w1 u^2 + w2 u + w3]/(1-qu)^2 F = Etilde F,  u = e^{-2ar},
/// omegas frozen at E_param. Three-point stencil, Sturm-sequence bisection,
/// Richardson extrapolation over {h, h/2}.
std::vector<double> effective_levels(double E_param, const QuantumNumbers& qn,
                                     const PotentialParams& p, const MassParams& m,
                                     const RadialGrid& grid, int nlev = 8,
                                     Centrifugal mode = Centrifugal::Approximated);

struct BoundResult {
    std::vector<double> energies;
    bool dirichlet_tail_warning = false; // eigenfunction tail at r_max > 1e-8 of peak
};

/// Self-consistent spectra: E with Etilde_num,n(E) = E^2 - m0^2, both branches.
BoundResult oracle_bound_energies(const QuantumNumbers& qn, const PotentialParams& p,
                                  const MassParams& m, const RadialGrid& grid,
                                  const SearchConfig& search = {});

/// Normalized FD eigenvector of level n at frozen omegas(E_param); returned on
/// the interior grid nodes (r_i = r_min + i h). For wavefunction overlaps.
std::vector<double> oracle_eigenvector(double E_param, const QuantumNumbers& qn,
                                       const PotentialParams& p, const MassParams& m,
                                       const RadialGrid& grid, int n);

/// Outward Numerov integration of the same effective equation at scattering
/// energy; phase extracted at two radii with alpha r > 15, reported in
/// (-pi, pi] (meaningful modulo pi). Throws MatchError if the two radii
/// disagree by more than 1e-3 (mod pi).
double oracle_phase_shift(double E, const QuantumNumbers& qn, const PotentialParams& p,
                          const MassParams& m, const RadialGrid& grid);

} // namespace kg::oracle

#endif
