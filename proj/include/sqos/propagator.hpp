// propagator.hpp — coefficients of the reduced-density-matrix propagator
//   J(x, x', t | xi, xi', ti) = |b2|/(2 pi) exp[ i(b1 Sd - b2 S di + b3 si d - b4 si di)
//                                               - (a11 di^2 + a12 di d + a22 d^2) ]
// built from the mode function X, the bath kernels, and the damping exponent
// Gamma(z) = gamma0_hat Int_{z_i}^{z} c^2/M dz'. Everything runs in z units.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "sqos/bath.hpp"
#include "sqos/lagrangian.hpp"
#include "sqos/math.hpp"
#include "sqos/mode.hpp"
#include "sqos/ode.hpp"
#include "sqos/quadrature.hpp"

namespace sqos {

struct ACoeffs {
    double a11 = 0, a12 = 0, a22 = 0;
};

struct BCoeffs {
    double b1 = 0, b2 = 0, b3 = 0, b4 = 0;
};

struct PropagatorCoeffs {
    double a11 = 0, a12 = 0, a22 = 0;
    double b1 = 0, b2 = 0, b3 = 0, b4 = 0;
    double z_i = 0, z = 0;
};

inline constexpr double resonance_rel_floor = 1e-8;

inline void check_resonance(const ModePoint& p) {
    if (std::abs(p.X.imag()) < resonance_rel_floor * std::abs(p.X))
        throw ResonanceError(p.z);
}

using DampingFn = std::function<double(double)>; // Gamma(z), Gamma(z_i) = 0

// Generic damping exponent by integrating Gamma' = gamma0_hat c^2/M.
inline DampingFn make_damping_exponent(const SystemLagrangian& lagr, const BathSpec& bath,
                                       double z_end, double tol = 1e-12) {
    double zi = lagr.z_i();
    double gh = bath.gamma0_hat(lagr.kappa);
    if (gh == 0.0) return [](double) { return 0.0; };
    auto rhs = [&lagr, &bath, gh](double z, const ode::State<1>&) {
        double t = z / lagr.kappa;
        double c = bath.c(t);
        return ode::State<1>{gh * c * c / lagr.m_z(z)};
    };
    ode::Options opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol;
    auto dense = ode::solve<1>(rhs, ode::State<1>{0.0}, zi, z_end, opt);
    return [dense = std::move(dense)](double z) { return dense(z)[0]; };
}

struct ElementarySolutions {
    std::function<double(double)> u1, u2, v1, v2;
};

// Closed forms built on X:
//   u1 = e^{-Gamma(s)} Im[X(z) X*(s)] / Im X(z),  v1 the same with +Gamma(s),
//   u2 = e^{+(Gamma(z)-Gamma(s))} Im X(s) / Im X(z),  v2 with the opposite sign.
inline ElementarySolutions elementary_solutions(const ModeFunction& mode,
                                                const DampingFn& Gamma, double z) {
    ModePoint end = mode.at(z);
    check_resonance(end);
    double im_end = end.X.imag();
    double cot_end = end.X.real() / im_end;
    double Gamma_end = Gamma(z);

    auto P = [mode, cot_end](double s) {
        ModePoint p = mode.at(s);
        return p.X.real() - cot_end * p.X.imag();
    };
    auto Q = [mode, im_end](double s) { return mode.at(s).X.imag() / im_end; };

    ElementarySolutions es;
    es.u1 = [P, Gamma](double s) { return std::exp(-Gamma(s)) * P(s); };
    es.v1 = [P, Gamma](double s) { return std::exp(+Gamma(s)) * P(s); };
    es.u2 = [Q, Gamma, Gamma_end](double s) { return std::exp(Gamma_end - Gamma(s)) * Q(s); };
    es.v2 = [Q, Gamma, Gamma_end](double s) { return std::exp(Gamma(s) - Gamma_end) * Q(s); };
    return es;
}

//   b1 = -gh k c^2(z)  + k M Im X'/Im X + M E        (all at z)
//   b2,b3 = -+ k e^{+-Gamma(z)} / Im X(z)
//   b4 = -gh k c^2(z_i) + k Re X(z)/Im X(z) + M(z_i) E(z_i)
inline BCoeffs b_coeffs(const SystemLagrangian& lagr, const BathSpec& bath,
                        const ModeFunction& mode, const DampingFn& Gamma, double z) {
    ModePoint p = mode.at(z);
    check_resonance(p);
    double k = lagr.kappa;
    double gh = bath.gamma0_hat(k);
    double zi = lagr.z_i();
    double c_end = bath.c(z / k), c_i = bath.c(zi / k);
    double im = p.X.imag();

    BCoeffs b;
    b.b1 = k * (-gh * c_end * c_end + lagr.m_z(z) * p.Xdz.imag() / im +
                lagr.m_z(z) * lagr.e_z(z));
    double g_end = std::exp(Gamma(z));
    b.b2 = -k * g_end / im;
    b.b3 = +k / (g_end * im);
    b.b4 = k * (-gh * c_i * c_i + p.X.real() / im + lagr.m_z(zi) * lagr.e_z(zi));
    return b;
}

namespace detail {

struct VFactors {
    // v1(s; z) = e^{Gamma(s)} (Re X(s) - cot_end Im X(s))
    // v2(s; z) = e^{Gamma(s) - Gamma_end} Im X(s) / im_end
    double cot_end, im_end, Gamma_end;
};

inline VFactors v_factors(const ModeFunction& mode, const DampingFn& Gamma, double z) {
    ModePoint end = mode.at(z);
    check_resonance(end);
    return {end.X.real() / end.X.imag(), end.X.imag(), Gamma(z)};
}

} // namespace detail

struct QuadTols {
    double rel_tol = 1e-9;
    double abs_tol = 1e-14;
    double osc_scale = 1.0; // intrinsic oscillation frequency of X in z
};

// White-noise path: nu = 4 gamma0 T c^2(s) delta(s - s') collapses the double
// integrals to one dimension:
//   a11 = 2 gh T Int c^2 v1^2,  a12 = 4 gh T Int c^2 v1 v2,  a22 = 2 gh T Int c^2 v2^2.
inline ACoeffs a_coeffs_white_noise(const SystemLagrangian& lagr, const BathSpec& bath,
                                    const ModeFunction& mode, const DampingFn& Gamma,
                                    double z, const QuadTols& tols = {}) {
    if (bath.regime != NoiseRegime::WhiteNoise)
        throw RegimeError("a_coeffs_white_noise needs the WhiteNoise regime");
    if (bath.gamma0 == 0.0) return {};
    auto vf = detail::v_factors(mode, Gamma, z);
    double k = lagr.kappa;
    double gh = bath.gamma0_hat(k);
    double T = bath.temperature;
    double zi = lagr.z_i();

    auto integrand = [&](double s) -> std::array<double, 3> {
        ModePoint p = mode.at(s);
        double c = bath.c(s / k);
        double eg = std::exp(Gamma(s));
        double v1 = eg * (p.X.real() - vf.cot_end * p.X.imag());
        double v2 = (eg / std::exp(vf.Gamma_end)) * p.X.imag() / vf.im_end;
        double w = c * c;
        return {w * v1 * v1, w * v1 * v2, w * v2 * v2};
    };
    quad::Options opt;
    opt.rel_tol = tols.rel_tol;
    opt.abs_tol = tols.abs_tol;
    opt.max_width = pi / tols.osc_scale;
    auto r = quad::integrate_vec<3>(integrand, zi, z, opt);
    return {2 * gh * T * r.value[0], 4 * gh * T * r.value[1], 2 * gh * T * r.value[2]};
}

// Time-side integrals for one frequency: J_ij(w) = C_i C_j + S_i S_j with
//   C_i = Int c v_i cos(w s) ds,  S_i = Int c v_i sin(w s) ds,
// the exact factorization of the double integral against cos(w (s - s')).
using SpectralJSource = std::function<std::array<double, 3>(double w_hat, double z)>;

inline SpectralJSource make_numeric_j_source(const SystemLagrangian& lagr,
                                             const BathSpec& bath, const ModeFunction& mode,
                                             const DampingFn& Gamma,
                                             const QuadTols& tols = {}) {
    double k = lagr.kappa;
    double zi = lagr.z_i();
    // everything captured by value so the source may outlive its arguments
    return [=](double w_hat, double z) -> std::array<double, 3> {
        auto vf = detail::v_factors(mode, Gamma, z);
        auto integrand = [&](double s) -> std::array<double, 4> {
            ModePoint p = mode.at(s);
            double c = bath.c(s / k);
            double eg = std::exp(Gamma(s));
            double v1 = c * eg * (p.X.real() - vf.cot_end * p.X.imag());
            double v2 = c * (eg / std::exp(vf.Gamma_end)) * p.X.imag() / vf.im_end;
            double cs = std::cos(w_hat * s), sn = std::sin(w_hat * s);
            return {v1 * cs, v1 * sn, v2 * cs, v2 * sn};
        };
        quad::Options opt;
        opt.rel_tol = tols.rel_tol;
        opt.abs_tol = tols.abs_tol;
        opt.max_width = pi / (tols.osc_scale + std::abs(w_hat));
        auto r = quad::integrate_vec<4>(integrand, zi, z, opt);
        double C1 = r.value[0], S1 = r.value[1], C2 = r.value[2], S2 = r.value[3];
        return {C1 * C1 + S1 * S1, C1 * C2 + S1 * S2, C2 * C2 + S2 * S2};
    };
}

struct SpectralOptions {
    QuadTols tols{};
    double omega_rel_tol = 1e-7;
    std::vector<std::string>* warnings = nullptr;
};

// Spectral path: a_ij = (2 gamma0 / ((1 + delta_ij) pi))
//                       Int_0^{w_max} dw w coth(w kappa / 2T) J_ij(w, z).
inline ACoeffs a_coeffs_spectral(const SystemLagrangian& lagr, const BathSpec& bath,
                                 double z, const SpectralJSource& j_source,
                                 const SpectralOptions& opt = {}) {
    if (bath.regime != NoiseRegime::SpectralIntegral)
        throw RegimeError("a_coeffs_spectral needs the SpectralIntegral regime");
    if (std::isinf(bath.temperature))
        throw RegimeError("T = infinity has no spectral integral; use the WhiteNoise regime");
    if (bath.gamma0 == 0.0) return {};
    double k = lagr.kappa;
    double T = bath.temperature;
    if (opt.warnings && T > 0.0 && bath.omega_max_hat * k >= 50.0 * T)
        opt.warnings->push_back("frequency cutoff exceeds 50 T; the coth tail is flat there");

    auto integrand = [&](double w_hat) -> std::array<double, 3> {
        // w_hat coth(w_hat kappa / 2T)
        double weight = omega_coth(w_hat * k, T) / k;
        auto j = j_source(w_hat, z);
        return {weight * j[0], weight * j[1], weight * j[2]};
    };
    quad::Options qopt;
    qopt.rel_tol = opt.omega_rel_tol;
    qopt.abs_tol = 1e-14;
    auto r = quad::integrate_vec<3>(integrand, 0.0, bath.omega_max_hat, qopt);
    double pref = 2.0 * bath.gamma0 / pi;
    return {0.5 * pref * r.value[0], pref * r.value[1], 0.5 * pref * r.value[2]};
}

// High-temperature de Sitter path: the same collapsed 1-D white-noise integral,
// valid only for c = gamma0/H < 1/2 and |z| << 1 asymptotics.
inline ACoeffs a_coeffs_desitter_high_t(const SystemLagrangian& lagr, const BathSpec& bath,
                                        const ModeFunction& mode, const DampingFn& Gamma,
                                        double z, double c_over_h,
                                        const QuadTols& tols = {}) {
    if (c_over_h >= 0.5)
        throw ValidityError("high-temperature de Sitter coefficients need c = gamma0/H < 1/2");
    return a_coeffs_white_noise(lagr, bath, mode, Gamma, z, tols);
}

} // namespace sqos
