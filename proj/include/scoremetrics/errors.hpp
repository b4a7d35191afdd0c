#pragma once

#include <stdexcept>
#include <string>

namespace scoremetrics {

/// Malformed or inconsistent input: bad CSV rows, unsorted grade tables,
/// out-of-domain arguments.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A requested metric lies outside the region where the triangular/trapezoid
/// geometry exists (e.g. LAR outside the convex-curve bounds for the given AR).
class InfeasibleMetric : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The indifference segment vanishes: A = AR·(1 + 1/(μL−1) + 1/(μR−1)) ≥ 1.
class DegenerateTrapezoid : public InfeasibleMetric {
public:
    using InfeasibleMetric::InfeasibleMetric;
};

/// Quadrature or root finding failed to reach the requested accuracy.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace scoremetrics
