// Deterministic random generators for property-style tests.

#pragma once

#include <cmath>
#include <random>

#include "sqos/lagrangian.hpp"

namespace testgen {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed50u);
    return gen;
}

inline double uniform(double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    return d(rng());
}

// Smooth, strictly positive mass and bounded cross/frequency profiles.
struct RandomLagrangian {
    double m0, m1, wm, e0, e1, we, w0, w1, ww, kappa;

    sqos::SystemLagrangian build(double t_i = 0.0) const {
        auto self = *this;
        sqos::SystemLagrangian lagr;
        lagr.mass = [self](double t) { return self.m0 + self.m1 * std::sin(self.wm * t); };
        lagr.mass_dot = [self](double t) {
            return self.m1 * self.wm * std::cos(self.wm * t);
        };
        lagr.cross = [self](double t) { return self.e0 + self.e1 * std::cos(self.we * t); };
        lagr.cross_dot = [self](double t) {
            return -self.e1 * self.we * std::sin(self.we * t);
        };
        lagr.omega_sq = [self](double t) { return self.w0 + self.w1 * std::sin(self.ww * t); };
        lagr.kappa = kappa;
        lagr.t_i = t_i;
        return lagr;
    }
};

inline RandomLagrangian random_lagrangian() {
    RandomLagrangian r;
    r.m0 = uniform(0.5, 2.0);
    r.m1 = uniform(0.0, 0.3) * r.m0;
    r.wm = uniform(0.3, 2.0);
    r.e0 = uniform(-0.5, 0.5);
    r.e1 = uniform(0.0, 0.4);
    r.we = uniform(0.3, 2.0);
    r.w0 = uniform(-2.0, 2.0);
    r.w1 = uniform(0.0, 1.0);
    r.ww = uniform(0.3, 2.0);
    r.kappa = uniform(0.5, 3.0);
    return r;
}

} // namespace testgen
