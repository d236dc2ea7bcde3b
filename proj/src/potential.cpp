#include "kg/potential.hpp"
#include "kg/errors.hpp"

#include <cmath>

namespace kg {

double PotentialParams::r_floor() const { return std::log(q) / (2.0 * alpha); }

void PotentialParams::validate() const {
    if (!(alpha > 0.0)) throw ParameterError("PotentialParams: alpha must be > 0");
    if (!(q > 0.0)) throw ParameterError("PotentialParams: q must be > 0");
}

namespace {

void check_domain(double r, const PotentialParams& p) {
    if (p.q > 1.0 && r <= p.r_floor())
        throw DomainError("evaluation at r <= r_floor for q > 1");
}

// numerator pieces shared by both potentials and the mass
double exp2ar(double r, const PotentialParams& p) { return std::exp(-2.0 * p.alpha * r); }

} // namespace

double q_hyperbolic(QHyperbolic kind, double x, double q) {
    double ex = std::exp(x), emx = std::exp(-x);
    double sh = 0.5 * (ex - q * emx);
    double ch = 0.5 * (ex + q * emx);
    switch (kind) {
    case QHyperbolic::Sinh: return sh;
    case QHyperbolic::Cosh: return ch;
    case QHyperbolic::Tanh: return sh / ch;
    case QHyperbolic::Coth:
        if (std::abs(sh) <= 1e-14 * ch) throw DomainError("coth_q at the sinh_q zero");
        return ch / sh;
    case QHyperbolic::Csch:
        if (std::abs(sh) <= 1e-14 * ch) throw DomainError("csch_q at the sinh_q zero");
        return 1.0 / sh;
    }
    throw ParameterError("q_hyperbolic: bad kind");
}

double vector_potential(double r, const PotentialParams& p) {
    check_domain(r, p);
    double u = exp2ar(r, p);
    double d = 1.0 - p.q * u;
    return -p.V0 * u / d + p.V1 * (1.0 + p.q * u) / d;
}

double scalar_potential(double r, const PotentialParams& p) {
    check_domain(r, p);
    double u = exp2ar(r, p);
    double d = 1.0 - p.q * u;
    return -p.S0 * u / d + p.S1 * (1.0 + p.q * u) / d;
}

double mass_at(double r, const MassParams& m, const PotentialParams& p) {
    check_domain(r, p);
    return m.m0 + m.m1 / (1.0 - p.q * exp2ar(r, p));
}

double centrifugal(double r, const PotentialParams& p, CentrifugalScheme scheme, double c0) {
    if (r <= 0.0) throw DomainError("centrifugal: r must be > 0");
    switch (scheme) {
    case CentrifugalScheme::Exact:
        return 1.0 / (r * r);
    case CentrifugalScheme::GreeneAldrich: {
        // c0-improved q = 1 form from the source literature
        double u = std::exp(-2.0 * p.alpha * r);
        double t = u / (1.0 - u);
        return 4.0 * p.alpha * p.alpha * (c0 + t + t * t);
    }
    case CentrifugalScheme::Hyperbolic: {
        check_domain(r, p);
        double s = q_hyperbolic(QHyperbolic::Sinh, p.alpha * r, p.q);
        return p.alpha * p.alpha / (s * s);
    }
    }
    throw ParameterError("centrifugal: bad scheme");
}

} // namespace kg
