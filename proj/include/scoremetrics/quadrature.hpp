#pragma once

// Globally adaptive Gauss-Kronrod (7/15) quadrature.
//
// The interval with the largest error estimate is bisected until the summed
// estimate drops below the absolute tolerance. Nodes never touch the interval
// endpoints, so integrands only need to be finite on the open interval.

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <span>
#include <vector>

namespace scoremetrics {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
    bool converged = false;
};

namespace detail {

struct GaussKronrodNode {
    double abscissa;
    double kronrod_weight;
    double gauss_weight;
};

// Kronrod abscissae on [0,1); odd entries are the 7-point Gauss nodes.
inline constexpr std::array<GaussKronrodNode, 8> kGk15 = {{
    {0.991455371120812639206854697526329, 0.022935322010529224963732008058970, 0.0},
    {0.949107912342758524526189684047851, 0.063092092629978553290700663189204, 0.129484966168869693270611432679082},
    {0.864864423359769072789712788640926, 0.104790010322250183839876322541518, 0.0},
    {0.741531185599394439863864773280788, 0.140653259715525918745189590510238, 0.279705391489276667901467771423780},
    {0.586087235467691130294144845693013, 0.169004726639267902826583426598550, 0.0},
    {0.405845151377397166906606412076961, 0.190350578064785409913256402421014, 0.381830050505118944950369775488975},
    {0.207784955007898467600689403773245, 0.204432940075298892414161999234649, 0.0},
    {0.000000000000000000000000000000000, 0.209482141084727828012999174891714, 0.417959183673469387755102040816327},
}};

struct Panel {
    double lo;
    double hi;
    double value;
    double error;

    bool operator<(const Panel& other) const noexcept { return error < other.error; }
};

template <class F>
Panel gauss_kronrod(const F& f, double lo, double hi)
{
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double kronrod = 0.0;
    double gauss = 0.0;
    for (const auto& node : kGk15) {
        if (node.abscissa == 0.0) {
            const double fc = f(center);
            kronrod += node.kronrod_weight * fc;
            gauss += node.gauss_weight * fc;
            continue;
        }
        const double dx = half * node.abscissa;
        const double pair = f(center - dx) + f(center + dx);
        kronrod += node.kronrod_weight * pair;
        gauss += node.gauss_weight * pair;
    }
    return {lo, hi, kronrod * half, std::abs((kronrod - gauss) * half)};
}

} // namespace detail

/// Integrates `f` over [breaks.front(), breaks.back()], starting with one panel
/// per consecutive pair of break points. Breaks must be sorted; duplicates are
/// skipped. Kinks of the integrand belong in `breaks`.
template <class F>
QuadratureResult integrate(const F& f, std::span<const double> breaks, double abs_tol, int max_panels = 20000)
{
    std::priority_queue<detail::Panel> panels;
    double value = 0.0;
    double error = 0.0;
    for (std::size_t i = 1; i < breaks.size(); ++i) {
        if (!(breaks[i] > breaks[i - 1])) {
            continue;
        }
        auto panel = detail::gauss_kronrod(f, breaks[i - 1], breaks[i]);
        value += panel.value;
        error += panel.error;
        panels.push(panel);
    }

    while (error > abs_tol && !panels.empty() && static_cast<int>(panels.size()) < max_panels) {
        const auto worst = panels.top();
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (!(mid > worst.lo && mid < worst.hi)) {
            break;
        }
        panels.pop();
        auto left = detail::gauss_kronrod(f, worst.lo, mid);
        auto right = detail::gauss_kronrod(f, mid, worst.hi);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }

    // Re-sum to shed the drift of the running totals.
    double exact_value = 0.0;
    double exact_error = 0.0;
    const int count = static_cast<int>(panels.size());
    while (!panels.empty()) {
        exact_value += panels.top().value;
        exact_error += panels.top().error;
        panels.pop();
    }
    return {exact_value, exact_error, count, exact_error <= abs_tol};
}

template <class F>
QuadratureResult integrate(const F& f, double lo, double hi, double abs_tol, int max_panels = 20000)
{
    const std::array<double, 2> breaks{lo, hi};
    return integrate(f, std::span<const double>(breaks), abs_tol, max_panels);
}

} // namespace scoremetrics
