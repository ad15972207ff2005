// ode.hpp — adaptive Dormand–Prince 5(4) with dense (continuous) output.
// State is a fixed-size array; right-hand sides are f(t, y) -> State.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sqos/errors.hpp"

namespace sqos::ode {

template <std::size_t N>
using State = std::array<double, N>;

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    double h_max = 0.0;      // 0 = span / 2
    std::size_t max_steps = 4000000;
};

namespace detail {

// Dormand–Prince 5(4) tableau.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                        a53 = 64448.0 / 6561, a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output coefficients (continuous 4th-order extension).
inline constexpr double d1 = -12715105075.0 / 11282082432.0;
inline constexpr double d3 = 87487479700.0 / 32700410799.0;
inline constexpr double d4 = -10690763975.0 / 1880347072.0;
inline constexpr double d5 = 701980252875.0 / 199316789632.0;
inline constexpr double d6 = -1453857185.0 / 822651844.0;
inline constexpr double d7 = 69997945.0 / 29380423.0;

} // namespace detail

// One accepted step with interpolation coefficients.
template <std::size_t N>
struct DenseStep {
    double t0 = 0, h = 0;
    State<N> r1{}, r2{}, r3{}, r4{}, r5{};

    State<N> eval(double t) const {
        double th = (t - t0) / h;
        double th1 = 1.0 - th;
        State<N> y;
        for (std::size_t i = 0; i < N; ++i)
            y[i] = r1[i] + th * (r2[i] + th1 * (r3[i] + th * (r4[i] + th1 * r5[i])));
        return y;
    }
};

template <std::size_t N>
class DenseSolution {
public:
    DenseSolution() = default;
    DenseSolution(std::vector<DenseStep<N>> steps, double t_begin, double t_end)
        : steps_(std::move(steps)), t_begin_(t_begin), t_end_(t_end) {}

    double t_begin() const { return t_begin_; }
    double t_end() const { return t_end_; }
    const std::vector<DenseStep<N>>& steps() const { return steps_; }

    State<N> operator()(double t) const {
        const bool fwd = t_end_ >= t_begin_;
        // binary search for the step containing t
        std::size_t lo = 0, hi = steps_.size();
        while (hi - lo > 1) {
            std::size_t mid = (lo + hi) / 2;
            bool before = fwd ? (steps_[mid].t0 <= t) : (steps_[mid].t0 >= t);
            if (before) lo = mid; else hi = mid;
        }
        return steps_[lo].eval(t);
    }

private:
    std::vector<DenseStep<N>> steps_;
    double t_begin_ = 0, t_end_ = 0;
};

// Integrate y' = f(t, y) from t0 to t1 (either direction).
// Throws SingularityError when the step size underflows before reaching t1.
template <std::size_t N, class F>
DenseSolution<N> solve(F&& f, State<N> y0, double t0, double t1, const Options& opt = {}) {
    using namespace detail;
    const double dir = (t1 >= t0) ? 1.0 : -1.0;
    const double span = std::abs(t1 - t0);
    if (span == 0.0) return DenseSolution<N>({DenseStep<N>{t0, 1.0, y0, {}, {}, {}, {}}}, t0, t1);

    const double h_max = (opt.h_max > 0 ? opt.h_max : span / 2.0);
    double h = dir * std::min(h_max, span / 100.0);
    const double h_floor = span * 1e-14;

    std::vector<DenseStep<N>> steps;
    steps.reserve(256);

    double t = t0;
    State<N> y = y0;
    State<N> k1 = f(t, y);

    auto scaled_err = [&](const State<N>& ynew, const State<N>& err) {
        double s = 0;
        for (std::size_t i = 0; i < N; ++i) {
            double sc = opt.abs_tol + opt.rel_tol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            double r = err[i] / sc;
            s += r * r;
        }
        return std::sqrt(s / double(N));
    };

    std::size_t nsteps = 0;
    while (dir * (t1 - t) > 0) {
        if (++nsteps > opt.max_steps)
            throw SingularityError("step budget exhausted", t);
        if (std::abs(h) < h_floor)
            throw SingularityError("step size underflow", t);
        if (dir * (t + h - t1) > 0) h = t1 - t;

        State<N> ytmp, k2, k3, k4, k5, k6, k7, ynew, err;
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        k2 = f(t + c2 * h, ytmp);
        for (std::size_t i = 0; i < N; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        k3 = f(t + c3 * h, ytmp);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        k4 = f(t + c4 * h, ytmp);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        k5 = f(t + c5 * h, ytmp);
        for (std::size_t i = 0; i < N; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        k6 = f(t + h, ytmp);
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        k7 = f(t + h, ynew);
        for (std::size_t i = 0; i < N; ++i)
            err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);

        bool finite = true;
        for (std::size_t i = 0; i < N; ++i)
            if (!std::isfinite(ynew[i]) || !std::isfinite(err[i])) finite = false;

        double en = finite ? scaled_err(ynew, err) : 1e10;
        if (en <= 1.0) {
            DenseStep<N> st;
            st.t0 = t;
            st.h = h;
            st.r1 = y;
            for (std::size_t i = 0; i < N; ++i) {
                double dy = ynew[i] - y[i];
                st.r2[i] = dy;
                st.r3[i] = h * k1[i] - dy;
                st.r4[i] = dy - h * k7[i] - st.r3[i];
                st.r5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                d6 * k6[i] + d7 * k7[i]);
            }
            steps.push_back(st);
            t += h;
            y = ynew;
            k1 = k7; // FSAL
        }
        double fac = 0.9 * std::pow(std::max(en, 1e-10), -0.2);
        fac = std::clamp(fac, 0.2, 5.0);
        h *= fac;
        if (std::abs(h) > h_max) h = dir * h_max;
    }
    return DenseSolution<N>(std::move(steps), t0, t1);
}

} // namespace sqos::ode
