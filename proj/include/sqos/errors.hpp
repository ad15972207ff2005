// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace sqos {

// A user-supplied callable returned a non-finite value.
struct EvaluationError : std::runtime_error {
    EvaluationError(std::string callable_, double t_)
        : std::runtime_error("non-finite value from '" + callable_ +
                             "' at t=" + std::to_string(t_)),
          callable(std::move(callable_)), t(t_) {}
    std::string callable;
    double t;
};

// Integration could not continue (step underflow, coefficient blow-up).
// Carries the last time the integrator reached.
struct SingularityError : std::runtime_error {
    SingularityError(const std::string& msg, double last_z_)
        : std::runtime_error(msg + " (last reachable z=" + std::to_string(last_z_) + ")"),
          last_z(last_z_) {}
    double last_z;
};

// Im X(z) vanished at an evaluation time; propagator coefficients diverge there.
struct ResonanceError : std::runtime_error {
    explicit ResonanceError(double z_)
        : std::runtime_error("Im X(z) ~ 0 at z=" + std::to_string(z_) +
                             "; coefficients diverge at this instant"),
          z(z_) {}
    double z;
};

// Parameters outside the validity domain of a formula or scenario.
struct ValidityError : std::domain_error {
    using std::domain_error::domain_error;
};

// Wrong bath regime for the requested operation.
struct RegimeError : std::logic_error {
    using std::logic_error::logic_error;
};

// Degenerate Gaussian evolution (D <= 0): coefficient set is not physical.
struct DegeneracyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// tr rho^2 > 1 beyond tolerance.
struct PurityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Basis rotation requested on a degenerate axis (phi = 0 or pi/2).
struct AxisError : std::domain_error {
    using std::domain_error::domain_error;
};

struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid run configuration; names the offending field.
struct ConfigError : std::runtime_error {
    ConfigError(std::string field_, const std::string& msg)
        : std::runtime_error("config field '" + field_ + "': " + msg),
          field(std::move(field_)) {}
    std::string field;
};

} // namespace sqos
