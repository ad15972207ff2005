// bath.hpp — ohmic environment: spectral noise kernel, white-noise limit,
// local dissipation via the smoothed-delta calculus, and the effective
// frequency shift the bath induces on the system.

#pragma once

#include <cmath>
#include <functional>
#include <limits>

#include "sqos/errors.hpp"
#include "sqos/lagrangian.hpp"
#include "sqos/math.hpp"
#include "sqos/quadrature.hpp"

namespace sqos {

enum class NoiseRegime { WhiteNoise, SpectralIntegral };

struct BathSpec {
    double gamma0 = 0.0;       // ohmic strength, >= 0
    double temperature = 0.0;  // k_B T / hbar; infinity only in WhiteNoise regime
    TimeFn coupling;           // c(t)
    TimeFn coupling_dot;       // dc/dt
    double omega_max_hat = 1e3; // frequency cutoff in units of kappa_ref
    double kappa_ref = 1.0;
    NoiseRegime regime = NoiseRegime::SpectralIntegral;

    double omega_max() const { return omega_max_hat * kappa_ref; }

    double c(double t) const {
        if (!coupling) return 1.0;
        double v = coupling(t);
        if (!std::isfinite(v)) throw EvaluationError("coupling", t);
        return v;
    }
    double cdot(double t) const {
        if (!coupling_dot) return 0.0;
        double v = coupling_dot(t);
        if (!std::isfinite(v)) throw EvaluationError("coupling_dot", t);
        return v;
    }
    double gamma0_hat(double kappa) const { return gamma0 / kappa; }
};

// One kernel evaluation; nu is symmetric in (s, s').
struct KernelEval {
    double value = 0.0;
    double s = 0.0, s_prime = 0.0;
};

// nu(s, s') = (2 gamma0 / pi) c(s) c(s') Int_0^{omega_max} w coth(w/2T) cos(w(s-s')) dw.
// T = 0 sets coth to one exactly.
inline double noise_kernel(const BathSpec& bath, double s, double s_prime,
                           double quad_rel_tol = 1e-9) {
    if (bath.regime != NoiseRegime::SpectralIntegral)
        throw RegimeError("noise_kernel needs the SpectralIntegral regime");
    if (std::isinf(bath.temperature))
        throw RegimeError("T = infinity has no spectral integral; use the WhiteNoise regime");
    double delta = s - s_prime;
    double T = bath.temperature;
    auto integrand = [&](double w) { return omega_coth(w, T) * std::cos(w * delta); };
    quad::Options opt;
    opt.rel_tol = quad_rel_tol;
    opt.abs_tol = 1e-12;
    if (delta != 0.0) opt.max_width = pi / std::abs(delta);
    double iw = quad::integrate(integrand, 0.0, bath.omega_max(), opt);
    return (2.0 * bath.gamma0 / pi) * bath.c(s) * bath.c(s_prime) * iw;
}

inline KernelEval noise_kernel_eval(const BathSpec& bath, double s, double s_prime,
                                    double quad_rel_tol = 1e-9) {
    return {noise_kernel(bath, s, s_prime, quad_rel_tol), s, s_prime};
}

// Coefficient of delta(s - s') in the T -> infinity (white) limit: 4 gamma0 T c(s)^2.
inline double white_noise_kernel(const BathSpec& bath, double s) {
    if (bath.regime != NoiseRegime::WhiteNoise)
        throw RegimeError("white_noise_kernel needs the WhiteNoise regime");
    double c = bath.c(s);
    return 4.0 * bath.gamma0 * bath.temperature * c * c;
}

// Omega_eff^2 = Omega^2 - gamma0^2 c^4 / M^2.
inline double effective_frequency_sq(const SystemLagrangian& lagr, const BathSpec& bath,
                                     double t) {
    double c = bath.c(t), m = lagr.M(t);
    double g = bath.gamma0 * c * c / m;
    return lagr.W2(t) - g * g;
}

// ---- smoothed-delta calculus -----------------------------------------------
// theta(0) == 1/2; integrals over [x0, x1] with x1 > x0:
//   Int f(x) delta(x - a) dx  =  f(a)  theta(x1 - a) theta(a - x0)
//   Int f(x) delta'(x - a) dx = -f'(a) theta(x1 - a) theta(a - x0)

inline double smooth_step(double x) {
    if (x > 0.0) return 1.0;
    if (x < 0.0) return 0.0;
    return 0.5;
}

inline double delta_window(double a, double x0, double x1) {
    return smooth_step(x1 - a) * smooth_step(a - x0);
}

template <class F>
double integrate_against_delta(F&& f, double a, double x0, double x1) {
    double w = delta_window(a, x0, x1);
    return w == 0.0 ? 0.0 : w * f(a);
}

template <class Fprime>
double integrate_against_delta_prime(Fprime&& fprime, double a, double x0, double x1) {
    double w = delta_window(a, x0, x1);
    return w == 0.0 ? 0.0 : -w * fprime(a);
}

struct DissipationResult {
    double value = 0.0;
    bool inside = true; // false when s fell outside [x0, x1]
};

// Int_{x0}^{x1} mu(s, s') f(s') ds' with mu(s, s') = 2 gamma0 c(s) c(s') delta'(s - s').
// delta'(s - s') is odd in its argument, so the smoothed rule gives
// +2 gamma0 c(s) d/ds'[c(s') f(s')] at s' = s, endpoint-weighted.
template <class F, class Fdot>
DissipationResult apply_dissipation(const BathSpec& bath, F&& f, Fdot&& fdot, double s,
                                    double x0, double x1) {
    double w = delta_window(s, x0, x1);
    if (w == 0.0) return {0.0, false};
    double g = bath.cdot(s) * f(s) + bath.c(s) * fdot(s);
    return {2.0 * bath.gamma0 * bath.c(s) * g * w, true};
}

} // namespace sqos
