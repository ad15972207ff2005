// lagrangian.hpp — system Lagrangian L = M/2 (xdot^2 + 2 E xdot x - Omega^2 x^2),
// the equivalent (f, h) Hamiltonian coefficients, the constant-angle fixed-point
// criterion, and the surface-term transform that removes the cross term.
//
// All evolution elsewhere runs in the dimensionless time z = kappa * t; the
// scaled accessors below (suffix _z) evaluate at t = z / kappa and divide by
// the power of kappa that makes the quantity dimensionless.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "sqos/errors.hpp"
#include "sqos/math.hpp"

namespace sqos {

using TimeFn = std::function<double(double)>;

struct SystemLagrangian {
    TimeFn mass;       // M(t) > 0
    TimeFn mass_dot;   // dM/dt
    TimeFn cross;      // E(t)
    TimeFn cross_dot;  // dE/dt
    TimeFn omega_sq;   // Omega^2(t), any sign
    double kappa = 1.0;
    double t_i = 0.0;

    double z_i() const { return kappa * t_i; }

    double eval(const TimeFn& fn, const char* name, double t) const {
        if (!fn) throw EvaluationError(std::string(name) + " (missing)", t);
        double v = fn(t);
        if (!std::isfinite(v)) throw EvaluationError(name, t);
        return v;
    }

    double M(double t) const {
        double m = eval(mass, "mass", t);
        if (m <= 0.0) throw EvaluationError("mass (must stay positive)", t);
        return m;
    }
    double E(double t) const { return eval(cross, "cross", t); }
    double W2(double t) const { return eval(omega_sq, "omega_sq", t); }
    double Mdot(double t) const { return eval(mass_dot, "mass_dot", t); }
    double Edot(double t) const { return eval(cross_dot, "cross_dot", t); }

    // scaled accessors, z = kappa * t
    double m_z(double z) const { return M(z / kappa); }
    double e_z(double z) const { return E(z / kappa) / kappa; }
    double w2_z(double z) const { return W2(z / kappa) / (kappa * kappa); }
    double mdot_z(double z) const { return Mdot(z / kappa) / kappa; }
    double edot_z(double z) const { return Edot(z / kappa) / (kappa * kappa); }

    // Coefficient of X in X'' + (m'/m) X' + q(z) X = 0.
    double mode_coeff_z(double z) const {
        double m = m_z(z);
        return w2_z(z) + edot_z(z) + mdot_z(z) * e_z(z) / m;
    }
};

struct HamiltonianCoeffs {
    std::complex<double> f;
    double h = 0;
};

// f = (1/2)[(M/k)(Omega^2+E^2) - k/M + 2iE],  h = (1/2)[(M/k)(Omega^2+E^2) + k/M].
inline HamiltonianCoeffs hamiltonian_coeffs(const SystemLagrangian& lagr, double t) {
    double m = lagr.M(t), e = lagr.E(t), w2 = lagr.W2(t), k = lagr.kappa;
    double common = (m / k) * (w2 + e * e);
    return {std::complex<double>(0.5 * (common - k / m), e), 0.5 * (common + k / m)};
}

// Same, divided by kappa and evaluated at z; drives the squeeze flow.
inline HamiltonianCoeffs hamiltonian_coeffs_z(const SystemLagrangian& lagr, double z) {
    auto c = hamiltonian_coeffs(lagr, z / lagr.kappa);
    return {c.f / lagr.kappa, c.h / lagr.kappa};
}

struct FixedPoint {
    bool exists = false;
    std::optional<double> phi_star; // in [0, pi) when it exists and |f| > 0
};

// Constant solutions for (phi, theta) exist iff Omega^2(t) <= 0; when they do,
// phi* solves cos(2 phi* + arg f) = h/|f|.
inline FixedPoint fixed_point_exists(const SystemLagrangian& lagr, double t) {
    auto [f, h] = hamiltonian_coeffs(lagr, t);
    double fa = std::abs(f);
    if (fa == 0.0) return {h == 0.0, std::nullopt};
    if (h * h > fa * fa) return {false, std::nullopt};
    double eps = arg_principal(f);
    double phi = 0.5 * (std::acos(std::clamp(h / fa, -1.0, 1.0)) - eps);
    return {true, wrap_angle(phi, pi)};
}

// Remove the cross term by a surface term: E' = 0 and
// Omega'^2 = Omega^2 + Mdot E / M + Edot. The classical mode equation is
// unchanged; the squeeze parameters generally are not.
inline SystemLagrangian surface_term_transform(const SystemLagrangian& lagr) {
    if (!lagr.mass_dot || !lagr.cross_dot)
        throw EvaluationError("mass_dot/cross_dot (required for surface term)", lagr.t_i);
    SystemLagrangian out = lagr;
    SystemLagrangian base = lagr;
    out.cross = [](double) { return 0.0; };
    out.cross_dot = [](double) { return 0.0; };
    out.omega_sq = [base](double t) {
        return base.W2(t) + base.Mdot(t) * base.E(t) / base.M(t) + base.Edot(t);
    };
    return out;
}

} // namespace sqos
