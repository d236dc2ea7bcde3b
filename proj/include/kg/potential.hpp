#ifndef KG_POTENTIAL_HPP
#define KG_POTENTIAL_HPP

namespace kg {

/// Couplings of the vector/scalar potential pair
///   V(r) = -V0 e^{-2 a r}/(1 - q e^{-2 a r}) + V1 (1 + q e^{-2 a r})/(1 - q e^{-2 a r})
/// (same shape for S with S0, S1) and the deformed-hyperbolic machinery.
/// Natural units: every coupling is an inverse length.
struct PotentialParams {
    double V0 = 0.0;
    double V1 = 0.0;
    double S0 = 0.0;
    double S1 = 0.0;
    double q = 1.0;     // deformation, > 0
    double alpha = 1.0; // screening, > 0

    /// 1 - q e^{-2 a r} vanishes at ln(q)/(2 a); evaluations at or below this
    /// radius are domain errors. Negative (hence harmless) for q < 1.
    double r_floor() const;

    /// Throws ParameterError unless alpha > 0 and q > 0.
    void validate() const;
};

/// Position-dependent mass m(r) = m0 + m1/(1 - q e^{-2 a r}).
struct MassParams {
    double m0 = 1.0;
    double m1 = 0.0;
};

enum class QHyperbolic { Sinh, Cosh, Tanh, Coth, Csch };

/// Deformed hyperbolics: sinh_q(x) = (e^x - q e^{-x})/2, cosh_q adds instead,
/// satisfying cosh_q^2 - sinh_q^2 = q. Ratios throw DomainError at the
/// sinh_q zero x = ln(q)/2.
double q_hyperbolic(QHyperbolic kind, double x, double q);

double vector_potential(double r, const PotentialParams& p);
double scalar_potential(double r, const PotentialParams& p);
double mass_at(double r, const MassParams& m, const PotentialParams& p);

enum class CentrifugalScheme { Exact, GreeneAldrich, Hyperbolic };

/// 1/r^2 or one of its exponential-type stand-ins. GreeneAldrich is the
/// c0-improved q=1 form used for comparison plots only; Hyperbolic is
/// alpha^2/sinh_q^2(alpha r), the form the solver is built on.
double centrifugal(double r, const PotentialParams& p, CentrifugalScheme scheme,
                   double c0 = 1.0 / 12.0);

} // namespace kg

#endif
