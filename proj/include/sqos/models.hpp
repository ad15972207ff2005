// models.hpp — concrete scenarios (static oscillator, inverted oscillator,
// de Sitter field mode) with their analytic mode functions, damping exponents,
// closed-form propagator coefficients where they exist, and the asymptotic
// entropy laws used by the verifiers. Also the least-squares asymptote fit.

#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "sqos/bath.hpp"
#include "sqos/gaussian.hpp"
#include "sqos/lagrangian.hpp"
#include "sqos/mode.hpp"
#include "sqos/propagator.hpp"

namespace sqos {

enum class LawKind { EntropyConstant, EntropyLinearInR };

struct AsymptoticLaw {
    LawKind kind = LawKind::EntropyConstant;
    double slope = 0.0;              // dS/dr in the late-time window
    std::optional<double> intercept; // empty when only the slope is predicted
    std::string validity;
};

struct Scenario {
    std::string name;
    SystemLagrangian lagr;
    BathSpec bath;
    ModeFunction mode;    // analytic X by default
    DampingFn damping;    // Gamma(z), analytic per scenario
    double sigma = 1.0;   // initial Gaussian width
    InitialGaussian init;
    double r0 = 0.0;      // initial squeeze implied by sigma

    std::function<ACoeffs(double)> white_closed; // closed-form white-noise a_ij
    std::function<BCoeffs(double)> b_closed;     // closed-form b_i
    SpectralJSource spectral_j;                  // analytic spectral time integrals

    std::vector<AsymptoticLaw> predictions;
    double relaxation_time = std::numeric_limits<double>::quiet_NaN();
    double decoherence_time = std::numeric_limits<double>::quiet_NaN();
    double c_over_h = 0.0; // de Sitter dimensionless coupling gamma0/H
    double z_end_hint = 0.0;

    PropagatorCoeffs coeffs_at(double z, const QuadTols& tols = {}) const {
        PropagatorCoeffs pc;
        pc.z_i = lagr.z_i();
        pc.z = z;
        check_resonance(mode.at(z)); // closed forms diverge there too
        BCoeffs b = b_closed ? b_closed(z) : b_coeffs(lagr, bath, mode, damping, z);
        ACoeffs a{};
        if (bath.gamma0 != 0.0) {
            if (bath.regime == NoiseRegime::WhiteNoise) {
                a = white_closed ? white_closed(z)
                                 : a_coeffs_white_noise(lagr, bath, mode, damping, z, tols);
            } else {
                SpectralOptions sopt;
                sopt.tols = tols;
                a = a_coeffs_spectral(
                    lagr, bath, z,
                    spectral_j ? spectral_j
                               : make_numeric_j_source(lagr, bath, mode, damping, tols),
                    sopt);
            }
        }
        pc.a11 = a.a11;
        pc.a12 = a.a12;
        pc.a22 = a.a22;
        pc.b1 = b.b1;
        pc.b2 = b.b2;
        pc.b3 = b.b3;
        pc.b4 = b.b4;
        return pc;
    }
};

namespace detail {

inline TimeFn const_fn(double v) {
    return [v](double) { return v; };
}

} // namespace detail

// Static oscillator: M = 1, E = 0, c = 1, Omega_eff^2 = k^2 - gamma0^2 = kappa^2,
// X(z) = e^{-iz}. Requires k > gamma0.
inline Scenario make_static(double k, double gamma0, double T, double sigma,
                            NoiseRegime regime = NoiseRegime::WhiteNoise) {
    if (!(k > 0.0)) throw ValidityError("static oscillator needs k > 0");
    if (!(k > gamma0))
        throw ValidityError("static oscillator needs k > gamma0 (it would invert)");
    double kappa = std::sqrt(k * k - gamma0 * gamma0);
    double gh = gamma0 / kappa;
    double khat2 = (k * k) / (kappa * kappa); // = 1 + gh^2

    Scenario sc;
    sc.name = "static";
    sc.lagr = {detail::const_fn(1.0), detail::const_fn(0.0), detail::const_fn(0.0),
               detail::const_fn(0.0), detail::const_fn(kappa * kappa), kappa, 0.0};
    sc.bath = {gamma0, T, detail::const_fn(1.0), detail::const_fn(0.0), 1e3, kappa, regime};
    sc.mode = ModeFunction::analytic(
        [](double z) { return std::exp(Complex(0, -z)); },
        [](double z) { return Complex(0, -1) * std::exp(Complex(0, -z)); }, 0.0, 1e12);
    sc.damping = [gh](double z) { return gh * z; };
    sc.sigma = sigma;
    auto wi = initial_from_width(sigma, kappa);
    sc.init = wi.state;
    sc.r0 = wi.r;

    sc.b_closed = [kappa, gh](double z) {
        double cot = std::cos(z) / std::sin(z);
        double inv_sin = 1.0 / std::sin(z);
        return BCoeffs{kappa * (-gh + cot), kappa * std::exp(gh * z) * inv_sin,
                       -kappa * std::exp(-gh * z) * inv_sin, kappa * (-gh - cot)};
    };
    // sign convention check: b2 = -kappa e^{+gh z} / Im X, Im X = -sin z
    sc.white_closed = [kappa, gh, khat2, T](double z) {
        // written with expm1 and sin^2 so the small-z cancellations stay benign
        double sn = std::sin(z);
        double pref = T / (2.0 * khat2 * sn * sn);
        double g2s2 = 2.0 * gh * gh * sn * sn;
        ACoeffs a;
        a.a11 = pref * (std::expm1(2.0 * gh * z) - gh * std::sin(2 * z) - g2s2);
        a.a12 = (2.0 * T / (khat2 * sn * sn)) *
                (-std::cos(z) * std::sinh(gh * z) + gh * sn * std::cosh(gh * z));
        a.a22 = pref * (-std::expm1(-2.0 * gh * z) - gh * std::sin(2 * z) + g2s2);
        return a;
    };
    sc.predictions = {{LawKind::EntropyConstant, 0.0, 1.0 + std::log(T / k),
                       "thermal equilibrium, T >> k"}};
    if (gamma0 > 0.0) {
        sc.relaxation_time = 1.0 / (2.0 * gamma0);
        if (T > 0.0) sc.decoherence_time = 1.0 / (4.0 * gamma0 * T * sigma * sigma);
    }
    sc.z_end_hint = 100.0;
    return sc;
}

// Inverted oscillator: Omega_eff^2 = -(k^2 + gamma0^2) = -kappa^2,
// X(z) = ch z - i sh z, r(z) = z.
inline Scenario make_inverted(double k, double gamma0, double T, double sigma,
                              NoiseRegime regime = NoiseRegime::WhiteNoise) {
    if (!(k > 0.0)) throw ValidityError("inverted oscillator needs k > 0");
    double kappa = std::sqrt(k * k + gamma0 * gamma0);
    double gh = gamma0 / kappa;
    double khat2 = (k * k) / (kappa * kappa); // = 1 - gh^2

    Scenario sc;
    sc.name = "inverted";
    sc.lagr = {detail::const_fn(1.0), detail::const_fn(0.0), detail::const_fn(0.0),
               detail::const_fn(0.0), detail::const_fn(-kappa * kappa), kappa, 0.0};
    sc.bath = {gamma0, T, detail::const_fn(1.0), detail::const_fn(0.0), 1e3, kappa, regime};
    sc.mode = ModeFunction::analytic(
        [](double z) { return Complex(std::cosh(z), -std::sinh(z)); },
        [](double z) { return Complex(std::sinh(z), -std::cosh(z)); }, 0.0, 1e12);
    sc.damping = [gh](double z) { return gh * z; };
    sc.sigma = sigma;
    auto wi = initial_from_width(sigma, kappa);
    sc.init = wi.state;
    sc.r0 = wi.r;

    sc.b_closed = [kappa, gh](double z) {
        double coth = std::cosh(z) / std::sinh(z);
        double inv_sh = 1.0 / std::sinh(z);
        return BCoeffs{kappa * (coth - gh), kappa * std::exp(gh * z) * inv_sh,
                       -kappa * std::exp(-gh * z) * inv_sh, kappa * (-coth - gh)};
    };
    sc.white_closed = [gh, khat2, T](double z) {
        double sh = std::sinh(z);
        double pref = T / (2.0 * khat2 * sh * sh);
        double g2s2 = 2.0 * gh * gh * sh * sh;
        ACoeffs a;
        a.a11 = pref * (gh * std::sinh(2 * z) + g2s2 - std::expm1(2.0 * gh * z));
        a.a12 = (2.0 * T / (khat2 * sh * sh)) *
                (std::sinh(gh * z) * std::cosh(z) - gh * std::cosh(gh * z) * sh);
        a.a22 = pref * (std::expm1(-2.0 * gh * z) + gh * std::sinh(2 * z) - g2s2);
        return a;
    };
    // Spectral time integrals in closed form; shared quartic denominator.
    sc.spectral_j = [gh, khat2](double w, double z) -> std::array<double, 3> {
        double den = khat2 * khat2 + 2.0 * w * w * (1.0 + gh * gh) + w * w * w * w;
        double ch2 = std::cosh(2 * z), sh2 = std::sinh(2 * z);
        double ch = std::cosh(z), sh = std::sinh(z);
        double egz = std::exp(gh * z), e2gz = egz * egz;
        double cwz = std::cos(w * z), swz = std::sin(w * z);
        double I11 = (khat2 - w * w + 2.0 * e2gz + (1.0 + gh * gh + w * w) * ch2 -
                      4.0 * egz * (cwz * (ch + gh * sh) + w * swz * sh) + 2.0 * gh * sh2) /
                     den;
        double I12 = (-2.0 * ch * (1.0 + e2gz) - 2.0 * gh * sh * (1.0 - e2gz) +
                      egz * cwz * (3.0 + gh * gh + w * w + (khat2 - w * w) * ch2) +
                      2.0 * w * egz * swz * sh2) /
                     den;
        double I22 = (2.0 + e2gz * (khat2 - w * w + (1.0 + gh * gh + w * w) * ch2 -
                                    2.0 * gh * sh2) +
                      4.0 * egz * (cwz * (-ch + gh * sh) - w * swz * sh)) /
                     den;
        double shz2 = sh * sh;
        return {I11 / (2.0 * shz2), std::exp(-gh * z) * I12 / (2.0 * shz2),
                std::exp(-2.0 * gh * z) * I22 / (2.0 * shz2)};
    };
    double intercept_highT =
        (T > 0.0 && gamma0 > 0.0) ? 1.0 + std::log(T * gamma0 / (kappa * kappa))
                                  : std::numeric_limits<double>::quiet_NaN();
    sc.predictions = {{LawKind::EntropyLinearInR, 1.0,
                       std::isnan(intercept_highT) ? std::optional<double>{}
                                                   : std::optional<double>{intercept_highT},
                       "high temperature, gamma0_hat << 1"},
                      {LawKind::EntropyLinearInR, 1.0, std::nullopt,
                       "zero temperature, gamma0_hat << 1"}};
    sc.z_end_hint = 10.0;
    return sc;
}

struct DeSitterOptions {
    bool exact_initial_phase = false; // keep the z_i-dependent phase of X
    double sigma = 0.0;               // 0 = ground-state width 1/sqrt(2k)
};

// Massless minimally coupled field mode in de Sitter space: M = 1, E = 1/eta,
// kappa = k, coupling profile c(eta) = 1/sqrt(-H eta), dimensionless c = gamma0/H,
// Omega_eff^2 = k^2 - (1 + c^2)/eta^2, z = k eta < 0 increasing toward 0-.
inline Scenario make_desitter(double k, double H, double c, double T, double z_i,
                              NoiseRegime regime = NoiseRegime::WhiteNoise,
                              DeSitterOptions opts = {}) {
    if (!(k > 0.0) || !(H > 0.0)) throw ValidityError("de Sitter mode needs k > 0 and H > 0");
    if (c >= 0.5) throw ValidityError("de Sitter coupling needs c = gamma0/H < 1/2");
    if (c < 0.0) throw ValidityError("de Sitter coupling needs c >= 0");
    if (!(z_i < -1.0)) throw ValidityError("de Sitter initial time needs z_i << -1");
    double gamma0 = c * H;

    Scenario sc;
    sc.name = "desitter";
    sc.lagr = {detail::const_fn(1.0),
               detail::const_fn(0.0),
               [](double eta) { return 1.0 / eta; },
               [](double eta) { return -1.0 / (eta * eta); },
               [k, c](double eta) { return k * k - (1.0 + c * c) / (eta * eta); },
               k,
               z_i / k};
    sc.bath = {gamma0,
               T,
               [H](double eta) { return 1.0 / std::sqrt(-H * eta); },
               [H](double eta) { return 0.5 * H * std::pow(-H * eta, -1.5); },
               1e3,
               k,
               regime};
    sc.c_over_h = c;

    auto renamed_X = [](double z) {
        return (1.0 - Complex(0, 1) / z) * std::exp(Complex(0, -z));
    };
    auto renamed_Xdz = [](double z) {
        return std::exp(Complex(0, -z)) * Complex(-1.0 / z, 1.0 / (z * z) - 1.0);
    };
    if (!opts.exact_initial_phase) {
        sc.mode = ModeFunction::analytic(renamed_X, renamed_Xdz, z_i, -1e-12);
    } else {
        Complex ca = 1.0 + Complex(0, 1) / (2.0 * z_i);
        Complex cb = Complex(0, 1) / z_i;
        auto f = [z_i](double z) {
            return (1.0 - Complex(0, 1) / z) * std::exp(Complex(0, z_i - z));
        };
        auto fdz = [z_i](double z) {
            return std::exp(Complex(0, z_i - z)) *
                   Complex(-1.0 / z, 1.0 / (z * z) - 1.0);
        };
        sc.mode = ModeFunction::analytic(
            [ca, cb, f](double z) { return ca * f(z) + cb * std::conj(f(z)); },
            [ca, cb, fdz](double z) { return ca * fdz(z) + cb * std::conj(fdz(z)); }, z_i,
            -1e-12);
    }
    sc.damping = [c, z_i](double z) { return -c * std::log(z / z_i); };
    double sigma = opts.sigma > 0.0 ? opts.sigma : 1.0 / std::sqrt(2.0 * k);
    sc.sigma = sigma;
    auto wi = initial_from_width(sigma, k);
    sc.init = wi.state;
    sc.r0 = wi.r;

    sc.predictions = {{LawKind::EntropyLinearInR, 1.0 - c, std::nullopt,
                       "white noise (high temperature)"},
                      {LawKind::EntropyLinearInR, 0.5 - c, std::nullopt,
                       "finite temperature, T <~ omega_max"}};
    sc.z_end_hint = -1e-3;
    return sc;
}

struct FitResult {
    double slope = 0, intercept = 0, stderr_slope = 0;
};

// Ordinary least squares of S on r. Needs >= 10 samples spanning >= 2 in r.
inline FitResult fit_asymptote(const std::vector<double>& r, const std::vector<double>& S) {
    if (r.size() != S.size()) throw FitError("fit needs matching sample vectors");
    std::size_t n = r.size();
    if (n < 10) throw FitError("fit needs at least 10 samples");
    double rmin = r[0], rmax = r[0];
    for (double v : r) {
        rmin = std::min(rmin, v);
        rmax = std::max(rmax, v);
    }
    if (rmax - rmin < 2.0) throw FitError("fit needs an r spread of at least 2");

    double mr = 0, mS = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mr += r[i];
        mS += S[i];
    }
    mr /= double(n);
    mS /= double(n);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (r[i] - mr) * (r[i] - mr);
        sxy += (r[i] - mr) * (S[i] - mS);
    }
    FitResult fr;
    fr.slope = sxy / sxx;
    fr.intercept = mS - fr.slope * mr;
    double ss_res = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double e = S[i] - (fr.intercept + fr.slope * r[i]);
        ss_res += e * e;
    }
    fr.stderr_slope = n > 2 ? std::sqrt(ss_res / double(n - 2) / sxx) : 0.0;
    return fr;
}

} // namespace sqos
