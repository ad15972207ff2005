// math.hpp — small numeric helpers used throughout

#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace sqos {

inline constexpr double pi = std::numbers::pi;

// Principal argument on (-pi, pi].
inline double arg_principal(std::complex<double> w) {
    double a = std::arg(w);
    if (a <= -pi) a += 2.0 * pi;
    return a;
}

// Reduce x into [0, period).
inline double wrap_angle(double x, double period) {
    double y = std::fmod(x, period);
    if (y < 0) y += period;
    if (y == period) y = 0.0;
    return y;
}

// Circle distance between two angles modulo `period`.
inline double angle_distance(double a, double b, double period) {
    double d = wrap_angle(a - b, period);
    return std::min(d, period - d);
}

// omega * coth(omega / (2T)), finite at omega -> 0 (limit 2T).
// T == 0 means coth == 1 exactly.
inline double omega_coth(double omega, double temperature) {
    if (temperature == 0.0) return omega;
    double x = omega / (2.0 * temperature);
    if (std::abs(x) < 1e-4) return 2.0 * temperature + omega * x / 3.0;
    if (x > 20.0) return omega;
    return omega / std::tanh(x);
}

inline bool nearly_equal(double a, double b, double tol) {
    return std::abs(a - b) <= tol;
}

} // namespace sqos
