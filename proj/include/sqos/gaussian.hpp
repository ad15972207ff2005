// gaussian.hpp — Gaussian reduced density matrices in sum/difference form
//   rho(x, x') = N exp(-A d^2 - 2 i B d S - 4 C S^2),  S = (x+x')/2, d = x - x',
// their evolution under the propagator coefficients, von Neumann and linear
// entropy, the super/subfluctuant basis change, and fluctuation/coherence
// measures.

#pragma once

#include <cmath>
#include <complex>
#include <limits>

#include "sqos/errors.hpp"
#include "sqos/math.hpp"
#include "sqos/propagator.hpp"

namespace sqos {

// rho0(x, x') ~ exp(-xi x^2 + chi x x' - xi* x'^2)
struct InitialGaussian {
    std::complex<double> xi{0.25, 0.0};
    double chi = 0.0;

    void validate() const {
        if (!(xi.real() > 0.0))
            throw ValidityError("initial Gaussian needs Re xi > 0");
        if (!(2.0 * xi.real() - chi > 0.0))
            throw ValidityError("initial Gaussian needs 2 Re xi - chi > 0");
    }
    bool pure() const { return chi == 0.0; }
};

struct WidthInit {
    InitialGaussian state;
    double r = 0.0; // squeeze parameter ln(sigma0 / sigma), sigma0 = 1/sqrt(2 kappa)
};

// Ground-state-width map: xi = 1/(4 sigma^2), chi = 0.
inline WidthInit initial_from_width(double sigma, double kappa) {
    if (!(sigma > 0.0)) throw ValidityError("width must be positive");
    if (!(kappa > 0.0)) throw ValidityError("kappa must be positive");
    double sigma0 = 1.0 / std::sqrt(2.0 * kappa);
    return {InitialGaussian{{1.0 / (4.0 * sigma * sigma), 0.0}, 0.0},
            std::log(sigma0 / sigma)};
}

struct EvolvedGaussian {
    double A = 0, B = 0, C = 0;
    double N = 0; // 2 sqrt(C / pi)

    double purity_ratio() const { return std::sqrt(C / A); } // tr rho^2
};

inline EvolvedGaussian evolve(const InitialGaussian& init, const PropagatorCoeffs& pc) {
    init.validate();
    double xr = init.xi.real(), xi = init.xi.imag(), chi = init.chi;
    double p = 2.0 * xr - chi; // > 0
    double q = 2.0 * xr + chi;
    double D = 4.0 * std::norm(init.xi) - chi * chi + 4.0 * p * pc.a11 +
               4.0 * xi * pc.b4 + pc.b4 * pc.b4;
    if (!(D > 0.0))
        throw DegeneracyError("degenerate Gaussian evolution (D <= 0): invalid coefficients");

    EvolvedGaussian st;
    st.A = pc.a22 + ((0.25 * q + pc.a11) * pc.b3 * pc.b3 +
                     (2.0 * xi + pc.b4) * pc.a12 * pc.b3 - p * pc.a12 * pc.a12) / D;
    st.B = -0.5 * pc.b1 +
           ((xi + 0.5 * pc.b4) * pc.b2 * pc.b3 - p * pc.a12 * pc.b2) / D;
    st.C = 0.25 * p * pc.b2 * pc.b2 / D;
    st.N = 2.0 * std::sqrt(st.C / pi);
    return st;
}

struct EntropyResult {
    double S = 0;
    double S_lin = 0; // -tr rho^2 = -sqrt(C/A)
    double w = 0;     // 2 sqrt(C/A) / (1 + sqrt(C/A))
};

// S = (-1/w)[w ln w + (1-w) ln(1-w)], with series branches where the exact
// expression cancels catastrophically (w -> 0 and w -> 1).
inline EntropyResult entropy(const EvolvedGaussian& st) {
    if (!(st.C > 0.0)) throw ValidityError("entropy needs C > 0");
    double ratio = st.purity_ratio();
    if (ratio > 1.0 + 1e-9)
        throw PurityError("tr rho^2 = " + std::to_string(ratio) + " > 1");
    ratio = std::min(ratio, 1.0);

    EntropyResult out;
    out.S_lin = -ratio;
    out.w = 2.0 * ratio / (1.0 + ratio);
    double w = out.w;
    if (w < 1e-6) {
        out.S = 1.0 - std::log(w) - 0.5 * w;
    } else if (1.0 - w < 1e-6) {
        double eps = 1.0 - w;
        out.S = eps > 0.0 ? eps * (1.0 - std::log(eps)) : 0.0;
    } else {
        out.S = -(w * std::log(w) + (1.0 - w) * std::log1p(-w)) / w;
    }
    return out;
}

// Coefficients of a Gaussian kernel in the canonical (N, A, B, C) form.
struct KernelCoeffs {
    double A = 0, B = 0, C = 0, N = 0;
};

struct FluctuationReport {
    double du2 = 0, dv2 = 0;   // fluctuations of the super/subfluctuant variables
    double Lu2 = 0, Lv2 = 0;   // squared coherence lengths
    double sigma = 0, lambda = 0, gamma_rot = 0; // intermediates of the rotation
    KernelCoeffs rho_u, rho_v;

    double uncertainty() const { return std::sqrt(du2 * dv2); }
};

namespace detail {

inline KernelCoeffs kernel_from(double A, double B, double C) {
    return {A, B, C, 2.0 * std::sqrt(C / pi)};
}

} // namespace detail

// Rotate to u = -kappa sin(phi) q + cos(phi) p, v = cos(phi) q + sin(phi) p / kappa.
// Degenerate at phi = 0 or pi/2: use axis_marginals there.
inline FluctuationReport superfluctuant_basis(const EvolvedGaussian& st, double phi,
                                              double kappa) {
    double s = std::sin(phi), c = std::cos(phi);
    if (std::abs(s) < 1e-9 || std::abs(c) < 1e-9)
        throw AxisError("basis rotation degenerates at phi = 0 or pi/2; "
                        "use the native q/p marginals (axis_marginals)");

    double gamma = 0.5 * kappa * c / s;
    double fourAC = 4.0 * st.A * st.C;
    double sigma = (s * s / (kappa * kappa)) * (fourAC + (st.B - gamma) * (st.B - gamma));
    double m = 4.0 * gamma * sigma + st.B - gamma;
    double lambda = (fourAC + m * m) / (4.0 * sigma * sigma);

    FluctuationReport rep;
    rep.sigma = sigma;
    rep.lambda = lambda;
    rep.gamma_rot = gamma;
    rep.du2 = sigma * lambda / (2.0 * st.C);
    rep.dv2 = sigma / (2.0 * st.C);
    rep.Lu2 = sigma * lambda / (2.0 * st.A);
    rep.Lv2 = sigma / (2.0 * st.A);
    double su = 4.0 * sigma * lambda;
    double sv = 4.0 * sigma;
    rep.rho_u = detail::kernel_from(st.A / su, +m / su, st.C / su);
    rep.rho_v = detail::kernel_from(st.A / sv, -m / sv, st.C / sv);
    return rep;
}

// Exact phi -> 0 (u = p, v = q) and phi -> pi/2 (u = -kappa q, v = p/kappa)
// limits of the rotation; the removable forms of the same quantities.
inline FluctuationReport axis_marginals(const EvolvedGaussian& st, bool phi_is_zero,
                                        double kappa) {
    double fourACB2 = 4.0 * st.A * st.C + st.B * st.B;
    // momentum marginal of rho: (A, B, C) -> (A, -B, C)/(4AC + B^2)
    double Ap = st.A / fourACB2, Bp = -st.B / fourACB2, Cp = st.C / fourACB2;
    double dq2 = 1.0 / (8.0 * st.C);
    double dp2 = fourACB2 / (2.0 * st.C); // = 2A + B^2/(2C)
    double ratio = st.C / st.A;

    FluctuationReport rep;
    if (phi_is_zero) {
        rep.sigma = 0.25;
        rep.lambda = 4.0 * fourACB2;
        rep.gamma_rot = std::numeric_limits<double>::infinity();
        rep.du2 = dp2;
        rep.dv2 = dq2;
        rep.rho_u = detail::kernel_from(Ap, Bp, Cp);
        rep.rho_v = detail::kernel_from(st.A, st.B, st.C);
    } else {
        double k2 = kappa * kappa;
        rep.sigma = fourACB2 / k2;
        rep.lambda = k2 * k2 / (4.0 * fourACB2);
        rep.gamma_rot = 0.0;
        rep.du2 = k2 * dq2;
        rep.dv2 = dp2 / k2;
        rep.rho_u = detail::kernel_from(st.A / k2, st.B / k2, st.C / k2);
        rep.rho_v = detail::kernel_from(Ap * k2, Bp * k2, Cp * k2);
    }
    rep.Lu2 = ratio * rep.du2;
    rep.Lv2 = ratio * rep.dv2;
    return rep;
}

// Squeezed vacuum in the position basis:
//   A = C = (kappa/4)(1 - th^2 r) / den,  B = kappa sin(2 phi) th r / den,
//   den = 1 - 2 cos(2 phi) th r + th^2 r.
inline EvolvedGaussian squeezed_vacuum_abc(double r, double phi, double kappa) {
    double t = std::tanh(r);
    double den = 1.0 - 2.0 * std::cos(2.0 * phi) * t + t * t;
    if (std::abs(den) < 1e-300)
        throw ValidityError("squeezed vacuum coefficients overflow (th r -> 1, cos 2phi -> 1)");
    EvolvedGaussian st;
    st.A = st.C = 0.25 * kappa * (1.0 - t * t) / den;
    st.B = kappa * std::sin(2.0 * phi) * t / den;
    st.N = 2.0 * std::sqrt(st.C / pi);
    return st;
}

} // namespace sqos
