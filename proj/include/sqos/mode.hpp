// mode.hpp — the classical mode function X (sum of Bogoliubov coefficients),
// its numerical solution with dense output, extraction of (alpha, beta) and of
// the squeeze parameters (r, phi, theta), and the squeeze-parameter flow ODE.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

#include "sqos/lagrangian.hpp"
#include "sqos/math.hpp"
#include "sqos/ode.hpp"

namespace sqos {

using Complex = std::complex<double>;

struct ModePoint {
    double z = 0;
    Complex X{};
    Complex Xdz{}; // dX/dz
};

// Uniform handle over analytic and numerically integrated mode functions.
class ModeFunction {
public:
    ModeFunction() = default;
    ModeFunction(std::function<ModePoint(double)> eval, double z_begin, double z_end)
        : eval_(std::move(eval)), z_begin_(z_begin), z_end_(z_end) {}

    ModePoint at(double z) const { return eval_(z); }
    double z_begin() const { return z_begin_; }
    double z_end() const { return z_end_; }
    explicit operator bool() const { return static_cast<bool>(eval_); }

    static ModeFunction analytic(std::function<Complex(double)> X,
                                 std::function<Complex(double)> Xdz,
                                 double z_begin, double z_end) {
        auto f = [X = std::move(X), Xdz = std::move(Xdz)](double z) {
            return ModePoint{z, X(z), Xdz(z)};
        };
        return ModeFunction(std::move(f), z_begin, z_end);
    }

private:
    std::function<ModePoint(double)> eval_;
    double z_begin_ = 0, z_end_ = 0;
};

// Canonical initial data: X(z_i) = 1, X'(z_i) = -i/M - E (in z units).
inline ModePoint mode_initial_data(const SystemLagrangian& lagr) {
    double zi = lagr.z_i();
    return {zi, Complex(1.0, 0.0),
            Complex(-lagr.e_z(zi), -1.0 / lagr.m_z(zi))};
}

// Initial data equivalent to starting from a squeezed state (r0, phi0, theta0):
// X = alpha0 + beta0 and X' from the Bogoliubov equations of motion.
inline ModePoint mode_initial_data_squeezed(const SystemLagrangian& lagr, double r0,
                                            double phi0, double theta0 = 0.0) {
    double zi = lagr.z_i();
    Complex alpha0 = std::exp(Complex(0, -theta0)) * std::cosh(r0);
    Complex beta0 = -std::exp(Complex(0, -(theta0 + 2 * phi0))) * std::sinh(r0);
    auto [f, h] = hamiltonian_coeffs_z(lagr, zi);
    Complex i(0, 1);
    Complex Xdz = i * (f - h) * alpha0 + i * (h - std::conj(f)) * beta0;
    return {zi, alpha0 + beta0, Xdz};
}

namespace detail {

inline ode::State<4> pack(const Complex& X, const Complex& Xdz) {
    return {X.real(), X.imag(), Xdz.real(), Xdz.imag()};
}

} // namespace detail

// Integrate X'' + (m'/m) X' + q(z) X = 0 from init.z to z_end with dense output.
inline ModeFunction solve_mode(const SystemLagrangian& lagr, const ModePoint& init,
                               double z_end, double tol = 1e-10) {
    auto rhs = [lagr](double z, const ode::State<4>& y) {
        double m = lagr.m_z(z);
        double damp = lagr.mdot_z(z) / m;
        double q = lagr.mode_coeff_z(z);
        return ode::State<4>{y[2], y[3],
                             -damp * y[2] - q * y[0],
                             -damp * y[3] - q * y[1]};
    };
    ode::Options opt;
    opt.rel_tol = tol;
    opt.abs_tol = tol * 1e-2;
    auto dense = ode::solve<4>(rhs, detail::pack(init.X, init.Xdz), init.z, z_end, opt);
    auto eval = [dense = std::move(dense)](double z) {
        auto y = dense(z);
        return ModePoint{z, Complex(y[0], y[1]), Complex(y[2], y[3])};
    };
    return ModeFunction(std::move(eval), init.z, z_end);
}

// Same with the canonical initial data.
inline ModeFunction solve_mode(const SystemLagrangian& lagr, double z_end,
                               double tol = 1e-10) {
    return solve_mode(lagr, mode_initial_data(lagr), z_end, tol);
}

inline std::vector<ModePoint> sample_mode(const ModeFunction& mode,
                                          const std::vector<double>& zs) {
    std::vector<ModePoint> out;
    out.reserve(zs.size());
    for (double z : zs) out.push_back(mode.at(z));
    return out;
}

// Conserved along any trajectory: m(z) Im(X* X') = -1 for canonical data.
inline double mode_wronskian(const SystemLagrangian& lagr, const ModePoint& p) {
    return lagr.m_z(p.z) * std::imag(std::conj(p.X) * p.Xdz);
}

struct BogoliubovPair {
    Complex alpha{}, beta{};
    double unitarity_defect() const {
        return std::norm(alpha) - std::norm(beta) - 1.0;
    }
};

// alpha, beta = (1/2)(1 +- i E M / kappa) X +- (i M / 2 kappa) Xdot.
inline BogoliubovPair bogoliubov_from_mode(const SystemLagrangian& lagr,
                                           const ModePoint& p) {
    double m = lagr.m_z(p.z), e = lagr.e_z(p.z);
    Complex i(0, 1);
    Complex half_x = 0.5 * p.X;
    Complex tilt = 0.5 * i * e * m * p.X;
    Complex mom = 0.5 * i * m * p.Xdz;
    return {half_x + tilt + mom, half_x - tilt - mom};
}

struct SqueezeAngles {
    double r = 0;
    double phi = 0;    // canonical range [0, pi)
    double theta = 0;  // canonical range [0, 2 pi)
    bool phase_defined = true;

    SqueezeAngles canonical() const {
        return {r, wrap_angle(phi, pi), wrap_angle(theta, 2 * pi), phase_defined};
    }
};

// Invert alpha = e^{-i theta} ch r, beta = -e^{-i(theta + 2 phi)} sh r.
// beta = 0 leaves phi undefined; flagged, with phi set to 0.
inline SqueezeAngles squeeze_from_bogoliubov(const BogoliubovPair& pair) {
    double r = std::asinh(std::abs(pair.beta));
    double theta = -arg_principal(pair.alpha);
    if (std::abs(pair.beta) == 0.0)
        return SqueezeAngles{0.0, 0.0, wrap_angle(theta, 2 * pi), false};
    double phi = 0.5 * (-arg_principal(pair.beta) - theta) - 0.5 * pi;
    return SqueezeAngles{r, wrap_angle(phi, pi), wrap_angle(theta, 2 * pi), true};
}

inline SqueezeAngles squeeze_at(const SystemLagrangian& lagr, const ModeFunction& mode,
                                double z) {
    return squeeze_from_bogoliubov(bogoliubov_from_mode(lagr, mode.at(z)));
}

struct SqueezeFlowOptions {
    double tol = 1e-10;
    double r_min = 1e-8; // coth(2r) blows up below this
};

// Flow of (r, phi, theta):
//   r'     =  |f| sin(2 phi + eps)
//   phi'   = -h + |f| coth(2r) cos(2 phi + eps)
//   theta' =  h - |f| tanh(r) cos(2 phi + eps)
// with f = |f| e^{i eps}, all coefficients in z units. Angles evolve unwrapped.
class SqueezeFlow {
public:
    SqueezeFlow(ode::DenseSolution<3> dense) : dense_(std::move(dense)) {}

    SqueezeAngles at(double z) const {
        auto y = dense_(z);
        return SqueezeAngles{y[0], y[1], y[2], true};
    }
    const ode::DenseSolution<3>& dense() const { return dense_; }

private:
    ode::DenseSolution<3> dense_;
};

inline SqueezeFlow integrate_squeeze_flow(const SystemLagrangian& lagr,
                                          const SqueezeAngles& init, double z_begin,
                                          double z_end, SqueezeFlowOptions opt = {}) {
    if (init.r <= 0.0)
        throw ValidityError("squeeze flow requires r > 0 at the initial time");
    double r_min = opt.r_min;
    auto rhs = [lagr, r_min](double z, const ode::State<3>& y) {
        // below the floor the coth term is unusable; a NaN state makes the
        // driver shrink the step and fail cleanly if the floor is truly hit
        if (y[0] < r_min) {
            double nan = std::numeric_limits<double>::quiet_NaN();
            return ode::State<3>{nan, nan, nan};
        }
        auto [f, h] = hamiltonian_coeffs_z(lagr, z);
        double fa = std::abs(f);
        if (fa == 0.0) return ode::State<3>{0.0, -h, h};
        double eps = arg_principal(f);
        double s = std::sin(2 * y[1] + eps), c = std::cos(2 * y[1] + eps);
        return ode::State<3>{fa * s,
                             -h + fa * c / std::tanh(2 * y[0]),
                             h - fa * std::tanh(y[0]) * c};
    };
    ode::Options oopt;
    oopt.rel_tol = opt.tol;
    oopt.abs_tol = opt.tol * 1e-2;
    try {
        auto dense = ode::solve<3>(rhs, ode::State<3>{init.r, init.phi, init.theta},
                                   z_begin, z_end, oopt);
        return SqueezeFlow(std::move(dense));
    } catch (const SingularityError& e) {
        throw SingularityError("squeeze flow reached the r floor", e.last_z);
    }
}

} // namespace sqos
