#pragma once

#include <cmath>

namespace scoremetrics {

struct BisectionResult {
    double root = 0.0;
    double residual = 0.0;
    int iterations = 0;
};

/// Bisection for a monotone `f` whose root lies strictly inside (lo, hi).
///
/// Only interior midpoints are evaluated, so `f` may be singular at the bracket
/// ends. Stops when the midpoint no longer separates the bracket (full double
/// resolution) or after `max_iterations`.
template <class F>
BisectionResult bisect(const F& f, double lo, double hi, bool increasing, int max_iterations = 200)
{
    BisectionResult result;
    double best = 0.5 * (lo + hi);
    double best_residual = f(best);
    for (int i = 0; i < max_iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (!(mid > lo && mid < hi)) {
            break;
        }
        const double value = f(mid);
        result.iterations = i + 1;
        if (std::abs(value) <= std::abs(best_residual)) {
            best = mid;
            best_residual = value;
        }
        if (value == 0.0) {
            break;
        }
        if ((value > 0.0) == increasing) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    result.root = best;
    result.residual = best_residual;
    return result;
}

} // namespace scoremetrics
