#ifndef KG_ERRORS_HPP
#define KG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// gamma function evaluated at (or too close to) a non-positive integer
struct PoleError : Error {
    using Error::Error;
};

// invalid special-function or coefficient parameters (c pole, complex lambda1, ...)
struct ParameterError : Error {
    using Error::Error;
};

// a series/iteration failed to reach its tolerance
struct NonConvergence : Error {
    using Error::Error;
};

// evaluation outside the validity domain (r <= r_floor, |z| > 1, ...)
struct DomainError : Error {
    using Error::Error;
};

// superpotential discriminant negative: no real (P, Q)
struct BranchError : Error {
    using Error::Error;
};

// rho_k hit zero in the shape-invariance chain
struct DegenerateError : Error {
    using Error::Error;
};

// scattering quantity requested below the continuum edge (k^2 <= 0)
struct BelowThreshold : Error {
    using Error::Error;
};

// a solved state violates its own invariants (complex exponents, ...)
struct InvariantError : Error {
    using Error::Error;
};

// radial grid violates its invariants
struct GridError : Error {
    using Error::Error;
};

// the two-radius phase extraction disagrees with itself
struct MatchError : Error {
    using Error::Error;
};

// bad run configuration / JSON
struct ConfigError : Error {
    using Error::Error;
};

} // namespace kg

#endif
