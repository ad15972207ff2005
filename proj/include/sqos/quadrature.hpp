// quadrature.hpp — adaptive Gauss–Kronrod panels (G7,K15), scalar and
// small-vector integrands, cumulative integrals over breakpoint grids,
// and an iterated 2-D rule.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "sqos/errors.hpp"

namespace sqos::quad {

namespace detail {

// QUADPACK 15-point Kronrod abscissae (positive half) and weights.
// Odd indices are the embedded 7-point Gauss nodes.
inline constexpr std::array<double, 8> xgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> wgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

} // namespace detail

struct Options {
    double rel_tol = 1e-10;
    double abs_tol = 1e-13;
    double max_width = 0.0;   // 0 = unlimited; otherwise initial panels are split to this width
    std::size_t max_panels = 400000;
    std::vector<double> breakpoints; // forced interior split points
};

template <int K>
struct Result {
    std::array<double, K> value{};
    std::array<double, K> error{};
};

// One K15/G7 evaluation of a vector integrand on [a, b].
template <int K, class F>
Result<K> gk15(F&& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double c = 0.5 * (a + b);
    std::array<double, K> kron{}, gauss{};

    auto fc = f(c);
    for (int j = 0; j < K; ++j) {
        kron[j] = detail::wgk[7] * fc[j];
        gauss[j] = detail::wg[3] * fc[j];
    }
    for (int i = 0; i < 7; ++i) {
        auto f1 = f(c - h * detail::xgk[i]);
        auto f2 = f(c + h * detail::xgk[i]);
        for (int j = 0; j < K; ++j) {
            double s = f1[j] + f2[j];
            kron[j] += detail::wgk[i] * s;
            if (i % 2 == 1) gauss[j] += detail::wg[(i - 1) / 2] * s;
        }
    }
    Result<K> r;
    for (int j = 0; j < K; ++j) {
        r.value[j] = kron[j] * h;
        r.error[j] = std::abs((kron[j] - gauss[j]) * h);
    }
    return r;
}

namespace detail {

template <int K>
struct Panel {
    double a, b;
    Result<K> r;
    double err_max() const {
        double e = 0;
        for (int j = 0; j < K; ++j) e = std::max(e, r.error[j]);
        return e;
    }
};

template <int K>
struct PanelOrder {
    bool operator()(const Panel<K>& x, const Panel<K>& y) const {
        double ex = x.err_max(), ey = y.err_max();
        if (ex != ey) return ex < ey;
        return x.a > y.a; // deterministic tie-break
    }
};

} // namespace detail

// Adaptive integration of f : double -> std::array<double, K> over [a, b].
template <int K, class F>
Result<K> integrate_vec(F&& f, double a, double b, const Options& opt = {}) {
    Result<K> total{};
    if (a == b) return total;

    std::vector<double> edges;
    edges.push_back(a);
    for (double br : opt.breakpoints)
        if (br > std::min(a, b) && br < std::max(a, b)) edges.push_back(br);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    if (b < a) std::reverse(edges.begin(), edges.end());

    std::vector<detail::Panel<K>> heap;
    auto push_panel = [&](double lo, double hi) {
        detail::Panel<K> p{lo, hi, gk15<K>(f, lo, hi)};
        heap.push_back(p);
        std::push_heap(heap.begin(), heap.end(), detail::PanelOrder<K>{});
    };

    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        double lo = edges[i], hi = edges[i + 1];
        if (opt.max_width > 0.0 && std::abs(hi - lo) > opt.max_width) {
            auto n = static_cast<std::size_t>(std::ceil(std::abs(hi - lo) / opt.max_width));
            for (std::size_t k = 0; k < n; ++k)
                push_panel(lo + (hi - lo) * double(k) / double(n),
                           lo + (hi - lo) * double(k + 1) / double(n));
        } else {
            push_panel(lo, hi);
        }
    }

    auto accumulate = [&] {
        total = Result<K>{};
        for (const auto& p : heap)
            for (int j = 0; j < K; ++j) {
                total.value[j] += p.r.value[j];
                total.error[j] += p.r.error[j];
            }
    };
    accumulate();

    auto converged = [&] {
        for (int j = 0; j < K; ++j) {
            double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(total.value[j]));
            if (total.error[j] > tol) return false;
        }
        return true;
    };

    while (!converged()) {
        if (heap.size() >= opt.max_panels)
            throw QuadratureError("adaptive quadrature did not converge within panel budget");
        std::pop_heap(heap.begin(), heap.end(), detail::PanelOrder<K>{});
        detail::Panel<K> worst = heap.back();
        heap.pop_back();
        double mid = 0.5 * (worst.a + worst.b);
        if (mid == worst.a || mid == worst.b)
            throw QuadratureError("panel width underflow in adaptive quadrature");
        push_panel(worst.a, mid);
        push_panel(mid, worst.b);
        accumulate();
    }
    return total;
}

template <class F>
double integrate(F&& f, double a, double b, const Options& opt = {}) {
    auto wrapped = [&f](double x) { return std::array<double, 1>{f(x)}; };
    return integrate_vec<1>(wrapped, a, b, opt).value[0];
}

// Cumulative integrals at each breakpoint: result[i] = integral from breaks[0]
// to breaks[i]. Breakpoints must be monotone.
template <class F>
std::vector<double> integrate_cumulative(F&& f, const std::vector<double>& breaks,
                                         const Options& opt = {}) {
    std::vector<double> out(breaks.size(), 0.0);
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        acc += integrate(f, breaks[i], breaks[i + 1], opt);
        out[i + 1] = acc;
    }
    return out;
}

// Iterated 2-D integral of f(x, y) over [ax, bx] x [ay, by]. Reference-quality
// path for oracle comparisons; the production code never calls this.
template <class F2>
double integrate_2d(F2&& f, double ax, double bx, double ay, double by,
                    Options outer = {}, Options inner = {}) {
    auto outer_f = [&](double x) {
        auto slice = [&](double y) { return f(x, y); };
        return integrate(slice, ay, by, inner);
    };
    return integrate(outer_f, ax, bx, outer);
}

} // namespace sqos::quad
